//! The loader service and its caching client.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::msg::SchemaRegistry;
use crate::node::{Node, ServiceHandle, ServiceInfo};
use crate::wire::{deserialize, serialize, serialized_size, DynamicValue, MessageLayout};

use super::{parse_obj, parse_stl, resolve_uri, AssetCache, AssetError, Mesh};

pub const DEFAULT_SERVICE: &str = "/iviz/get_model";
pub const SERVICE_TYPE: &str = "asset_msgs/GetAsset";
/// Upper bound on one serialized response.
pub const MAX_RESPONSE_BYTES: usize = 64 * 1024 * 1024;

pub fn service_info() -> Result<ServiceInfo, AssetError> {
    ServiceInfo::resolve(&SchemaRegistry::with_corpus(), SERVICE_TYPE).map_err(|e| AssetError::Service(e.to_string()))
}

/// Decoded `GetAsset` response.
#[derive(Debug, Clone, PartialEq)]
pub struct AssetResponse {
    pub success: bool,
    pub message: String,
    pub format: String,
    pub checksum: String,
    pub mesh: Option<Mesh<f32>>,
    pub raw: Vec<u8>,
}

impl AssetResponse {
    pub fn failure(message: impl Into<String>) -> Self {
        AssetResponse {
            success: false,
            message: message.into(),
            format: String::new(),
            checksum: String::new(),
            mesh: None,
            raw: Vec::new(),
        }
    }

    pub fn to_value(&self, layout: &MessageLayout) -> DynamicValue {
        let mut v = layout.default_value();
        let mut set = |name: &str, value: DynamicValue| {
            if let Some(slot) = v.field_mut(name) {
                *slot = value;
            }
        };
        set("success", DynamicValue::Bool(self.success));
        set("message", DynamicValue::Str(self.message.clone()));
        set("format", DynamicValue::Str(self.format.clone()));
        set("checksum", DynamicValue::Str(self.checksum.clone()));
        if let Some(mesh) = &self.mesh {
            set("mesh", mesh.to_value());
        }
        set("raw", DynamicValue::Bytes(self.raw.clone()));
        v
    }

    pub fn from_value(v: &DynamicValue) -> Result<Self, AssetError> {
        let text = |n: &str| v.field(n).and_then(DynamicValue::as_str).unwrap_or_default().to_string();
        let success = matches!(v.field("success"), Some(DynamicValue::Bool(true)));
        let raw = match v.field("raw") {
            Some(DynamicValue::Bytes(b)) => b.clone(),
            _ => Vec::new(),
        };
        let mesh = match v.field("mesh") {
            Some(m) if success && raw.is_empty() => Some(Mesh::from_value(m)?),
            _ => None,
        };
        Ok(AssetResponse {
            success,
            message: text("message"),
            format: text("format"),
            checksum: text("checksum"),
            mesh,
            raw,
        })
    }
}

fn extension(path: &Path) -> String {
    path.extension()
        .and_then(|e| e.to_str())
        .unwrap_or_default()
        .to_ascii_lowercase()
}

/// Parses a file's bytes according to its format name.
pub fn parse_mesh_bytes(format: &str, bytes: &[u8]) -> Result<Mesh<f32>, AssetError> {
    match format {
        "stl" => parse_stl(bytes),
        "obj" => {
            let text = std::str::from_utf8(bytes).map_err(|e| AssetError::MalformedFile {
                at: super::Location::Offset(e.valid_up_to()),
                reason: "OBJ is not valid UTF-8".into(),
            })?;
            parse_obj(text)
        }
        other => Err(AssetError::Unsupported(other.to_string())),
    }
}

/// Resolves, reads and processes one request. Never panics outward; every
/// failure is reported in-band.
pub fn handle_request(roots: &[PathBuf], uri: &str, want_raw: bool) -> AssetResponse {
    let attempt = || -> Result<AssetResponse, AssetError> {
        let path = resolve_uri(uri, roots)?;
        let size = std::fs::metadata(&path).map_err(|e| AssetError::Io(e.to_string()))?.len();
        if size > MAX_RESPONSE_BYTES as u64 {
            return Err(AssetError::TooLarge {
                size,
                max: MAX_RESPONSE_BYTES as u64,
            });
        }
        let bytes = std::fs::read(&path).map_err(|e| AssetError::Io(e.to_string()))?;
        let format = extension(&path);
        let checksum = format!("{:x}", md5::compute(&bytes));
        let (mesh, raw) = if want_raw {
            (None, bytes)
        } else {
            (Some(parse_mesh_bytes(&format, &bytes)?), Vec::new())
        };
        Ok(AssetResponse {
            success: true,
            message: String::new(),
            format,
            checksum,
            mesh,
            raw,
        })
    };
    match catch_unwind(AssertUnwindSafe(attempt)) {
        Ok(Ok(r)) => r,
        Ok(Err(e)) => AssetResponse::failure(format!("{uri}: {e}")),
        Err(_) => AssetResponse::failure(format!("{uri}: internal error while processing")),
    }
}

/// Counters exposed by a running loader service.
#[derive(Debug, Default)]
pub struct LoaderStats {
    pub requests: AtomicU64,
    pub failures: AtomicU64,
}

/// A running loader service; dropping it unadvertises.
pub struct LoaderService {
    handle: ServiceHandle,
    stats: Arc<LoaderStats>,
}

impl LoaderService {
    pub fn start(node: &Node, roots: Vec<PathBuf>, service: &str) -> Result<LoaderService, AssetError> {
        let info = service_info()?;
        let stats = Arc::new(LoaderStats::default());
        let counters = stats.clone();
        let layout = info.response.clone();
        let handle = node.advertise_service(service, &info, move |req| {
            counters.requests.fetch_add(1, Ordering::Relaxed);
            let uri = req.field("uri").and_then(DynamicValue::as_str).unwrap_or_default();
            let want_raw = matches!(req.field("want_raw"), Some(DynamicValue::Bool(true)));
            let mut resp = handle_request(&roots, uri, want_raw);
            let mut value = resp.to_value(&layout);
            if serialized_size(&layout, &value).map_or(true, |n| n > MAX_RESPONSE_BYTES) {
                resp = AssetResponse::failure(format!(
                    "{uri}: {}",
                    AssetError::TooLarge {
                        size: serialized_size(&layout, &value).unwrap_or(usize::MAX) as u64,
                        max: MAX_RESPONSE_BYTES as u64
                    }
                ));
                value = resp.to_value(&layout);
            }
            if !resp.success {
                counters.failures.fetch_add(1, Ordering::Relaxed);
                log::info!("asset request failed: {}", resp.message);
            }
            Ok(value)
        })?;
        Ok(LoaderService { handle, stats })
    }

    pub fn name(&self) -> &str {
        self.handle.name()
    }

    pub fn stats(&self) -> &LoaderStats {
        &self.stats
    }
}

/// A mesh obtained through [`AssetClient`].
#[derive(Debug, Clone, PartialEq)]
pub struct FetchedMesh {
    pub mesh: Mesh<f32>,
    pub checksum: String,
    /// Serialized `asset_msgs/Mesh` exactly as received from the service.
    pub payload: Vec<u8>,
    pub from_cache: bool,
}

/// Unparsed file contents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawAsset {
    pub format: String,
    pub checksum: String,
    pub bytes: Vec<u8>,
}

/// Calls the loader service, consulting a local cache first.
pub struct AssetClient {
    node: Node,
    service: String,
    info: ServiceInfo,
    mesh_layout: Arc<MessageLayout>,
    cache: Option<AssetCache>,
    calls: AtomicU64,
}

impl AssetClient {
    pub fn new(node: &Node, service: &str, cache: Option<AssetCache>) -> Result<AssetClient, AssetError> {
        let info = service_info()?;
        let mesh_layout = MessageLayout::resolve(&SchemaRegistry::with_corpus(), "asset_msgs/Mesh")
            .map_err(|e| AssetError::Service(e.to_string()))?;
        Ok(AssetClient {
            node: node.clone(),
            service: service.to_string(),
            info,
            mesh_layout,
            cache,
            calls: AtomicU64::new(0),
        })
    }

    /// Number of service round trips made so far.
    pub fn service_calls(&self) -> u64 {
        self.calls.load(Ordering::Relaxed)
    }

    pub fn cache(&self) -> Option<&AssetCache> {
        self.cache.as_ref()
    }

    fn call(&self, uri: &str, want_raw: bool) -> Result<DynamicValue, AssetError> {
        let req = DynamicValue::Record(vec![
            ("uri".into(), DynamicValue::Str(uri.to_string())),
            ("want_raw".into(), DynamicValue::Bool(want_raw)),
        ]);
        self.calls.fetch_add(1, Ordering::Relaxed);
        let resp = self.node.call_service(&self.service, &self.info, &req)?;
        if !matches!(resp.field("success"), Some(DynamicValue::Bool(true))) {
            let msg = resp.field("message").and_then(DynamicValue::as_str).unwrap_or("request failed");
            return Err(AssetError::Service(msg.to_string()));
        }
        Ok(resp)
    }

    fn decode(&self, payload: &[u8]) -> Result<Mesh<f32>, AssetError> {
        let v = deserialize(&self.mesh_layout, payload).map_err(|e| AssetError::Malformed(e.to_string()))?;
        Mesh::from_value(&v)
    }

    /// Mesh for `uri`, from the cache when present.
    pub fn fetch(&self, uri: &str) -> Result<FetchedMesh, AssetError> {
        if let Some(entry) = self.cache.as_ref().and_then(|c| c.get(uri, None)) {
            match self.decode(&entry.payload) {
                Ok(mesh) => {
                    return Ok(FetchedMesh {
                        mesh,
                        checksum: entry.checksum,
                        payload: entry.payload,
                        from_cache: true,
                    })
                }
                Err(e) => {
                    log::warn!("asset cache: undecodable entry for {uri}: {e}");
                    if let Some(c) = &self.cache {
                        c.evict(uri);
                    }
                }
            }
        }
        self.refresh(uri)
    }

    /// Always asks the service; a changed checksum replaces the cached entry.
    pub fn refresh(&self, uri: &str) -> Result<FetchedMesh, AssetError> {
        let resp = self.call(uri, false)?;
        let checksum = resp.field("checksum").and_then(DynamicValue::as_str).unwrap_or_default().to_string();
        let mesh_value = resp
            .field("mesh")
            .ok_or_else(|| AssetError::Malformed("response without mesh".into()))?;
        let payload = serialize(&self.mesh_layout, mesh_value).map_err(|e| AssetError::Malformed(e.to_string()))?;
        let mesh = Mesh::from_value(mesh_value)?;
        if let Some(cache) = &self.cache {
            // Evicts an entry stored under an older checksum.
            let _ = cache.get(uri, Some(&checksum));
            let _ = cache.put(uri, &checksum, &payload);
        }
        Ok(FetchedMesh {
            mesh,
            checksum,
            payload,
            from_cache: false,
        })
    }

    /// Unparsed bytes, for formats the service cannot parse.
    pub fn fetch_raw(&self, uri: &str) -> Result<RawAsset, AssetError> {
        let resp = AssetResponse::from_value(&self.call(uri, true)?)?;
        Ok(RawAsset {
            format: resp.format,
            checksum: resp.checksum,
            bytes: resp.raw,
        })
    }
}
