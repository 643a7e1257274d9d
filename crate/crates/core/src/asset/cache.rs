//! Directory-backed mesh cache keyed by `(uri, checksum)`.
//!
//! One file per URI. Each file holds a small header (magic, checksum, URI,
//! payload length and payload MD5) followed by the payload. Anything that
//! fails validation counts as a miss and is removed. Writes go to a
//! temporary file that is then renamed into place.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use super::AssetError;

const MAGIC: &[u8; 8] = b"RLASSET1";

/// A validated cache entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CacheEntry {
    pub checksum: String,
    pub payload: Vec<u8>,
}

#[derive(Debug, Default)]
pub struct CacheStats {
    pub hits: AtomicU64,
    pub misses: AtomicU64,
    pub evictions: AtomicU64,
    pub corrupt: AtomicU64,
    pub io_errors: AtomicU64,
}

#[derive(Debug)]
pub struct AssetCache {
    dir: PathBuf,
    stats: CacheStats,
    tmp_counter: AtomicU64,
}

fn md5_hex(bytes: &[u8]) -> String {
    format!("{:x}", md5::compute(bytes))
}

fn encode(uri: &str, checksum: &str, payload: &[u8]) -> Vec<u8> {
    let mut out = Vec::with_capacity(payload.len() + uri.len() + 96);
    out.extend_from_slice(MAGIC);
    for field in [checksum.as_bytes(), uri.as_bytes()] {
        out.extend_from_slice(&(field.len() as u32).to_le_bytes());
        out.extend_from_slice(field);
    }
    out.extend_from_slice(&(payload.len() as u64).to_le_bytes());
    out.extend_from_slice(&md5::compute(payload).0);
    out.extend_from_slice(payload);
    out
}

fn decode(bytes: &[u8], uri: &str) -> Option<CacheEntry> {
    let rest = bytes.strip_prefix(MAGIC)?;
    let mut rest = rest;
    let mut field = || -> Option<&[u8]> {
        let len = u32::from_le_bytes(rest.get(..4)?.try_into().ok()?) as usize;
        let f = rest.get(4..4 + len)?;
        rest = &rest[4 + len..];
        Some(f)
    };
    let checksum = std::str::from_utf8(field()?).ok()?.to_string();
    if field()? != uri.as_bytes() {
        return None;
    }
    let len = u64::from_le_bytes(rest.get(..8)?.try_into().ok()?);
    let digest = rest.get(8..24)?;
    let payload = rest.get(24..)?;
    if payload.len() as u64 != len || md5::compute(payload).0 != digest {
        return None;
    }
    Some(CacheEntry {
        checksum,
        payload: payload.to_vec(),
    })
}

impl AssetCache {
    /// Opens (creating if needed) a cache directory.
    pub fn open(dir: impl Into<PathBuf>) -> Result<AssetCache, AssetError> {
        let dir = dir.into();
        std::fs::create_dir_all(&dir).map_err(|e| AssetError::CacheIo(format!("{}: {e}", dir.display())))?;
        Ok(AssetCache {
            dir,
            stats: CacheStats::default(),
            tmp_counter: AtomicU64::new(0),
        })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn stats(&self) -> &CacheStats {
        &self.stats
    }

    /// File holding the entry for `uri`.
    pub fn path_for(&self, uri: &str) -> PathBuf {
        self.dir.join(format!("{}.mesh", md5_hex(uri.as_bytes())))
    }

    fn io_error(&self, what: &str, e: std::io::Error) {
        self.stats.io_errors.fetch_add(1, Ordering::Relaxed);
        log::warn!("asset cache: {what}: {e}");
    }

    /// Entry for `uri`. When `checksum` is given and differs from the stored
    /// one, the stale entry is evicted and this is a miss.
    pub fn get(&self, uri: &str, checksum: Option<&str>) -> Option<CacheEntry> {
        let path = self.path_for(uri);
        let bytes = match std::fs::read(&path) {
            Ok(b) => b,
            Err(e) => {
                if e.kind() != std::io::ErrorKind::NotFound {
                    self.io_error("read", e);
                }
                self.stats.misses.fetch_add(1, Ordering::Relaxed);
                return None;
            }
        };
        let Some(entry) = decode(&bytes, uri) else {
            self.stats.corrupt.fetch_add(1, Ordering::Relaxed);
            self.stats.misses.fetch_add(1, Ordering::Relaxed);
            let _ = std::fs::remove_file(&path);
            return None;
        };
        if checksum.is_some_and(|c| c != entry.checksum) {
            self.evict(uri);
            self.stats.misses.fetch_add(1, Ordering::Relaxed);
            return None;
        }
        self.stats.hits.fetch_add(1, Ordering::Relaxed);
        Some(entry)
    }

    /// Stores `payload`, replacing any previous entry for `uri`. Failures are
    /// counted and returned but never leave a partial file behind.
    pub fn put(&self, uri: &str, checksum: &str, payload: &[u8]) -> Result<(), AssetError> {
        let path = self.path_for(uri);
        let tmp = self.dir.join(format!(
            ".{}.{}.{}.tmp",
            md5_hex(uri.as_bytes()),
            std::process::id(),
            self.tmp_counter.fetch_add(1, Ordering::Relaxed)
        ));
        let result = (|| {
            let mut f = std::fs::File::create(&tmp)?;
            f.write_all(&encode(uri, checksum, payload))?;
            f.sync_all()?;
            std::fs::rename(&tmp, &path)
        })();
        result.map_err(|e| {
            let _ = std::fs::remove_file(&tmp);
            let msg = format!("{}: {e}", path.display());
            self.io_error("write", e);
            AssetError::CacheIo(msg)
        })
    }

    pub fn evict(&self, uri: &str) -> bool {
        let removed = std::fs::remove_file(self.path_for(uri)).is_ok();
        if removed {
            self.stats.evictions.fetch_add(1, Ordering::Relaxed);
        }
        removed
    }
}
