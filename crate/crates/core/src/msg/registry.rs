use std::collections::{BTreeSet, HashMap};
use std::path::{Path, PathBuf};
use std::sync::{Arc, RwLock};

use super::{corpus, parse_msg, parse_srv, split_type_name, MsgSpec, SchemaError, SrvSpec};

/// Resolves full type names (`pkg/Name`) to parsed definitions.
///
/// Lookup order: explicitly inserted specs, then each resolution root in
/// order (`<root>/<pkg>/msg/<Name>.msg`), then the compiled-in corpus when
/// enabled. A type never changes once resolved, so checksum caching is sound.
#[derive(Default)]
pub struct SchemaRegistry {
    roots: Vec<PathBuf>,
    corpus: bool,
    messages: RwLock<HashMap<String, Arc<MsgSpec>>>,
    services: RwLock<HashMap<String, Arc<SrvSpec>>>,
    pub(super) md5_cache: RwLock<HashMap<String, String>>,
}

impl Clone for SchemaRegistry {
    fn clone(&self) -> Self {
        SchemaRegistry {
            roots: self.roots.clone(),
            corpus: self.corpus,
            messages: RwLock::new(self.messages.read().unwrap().clone()),
            services: RwLock::new(self.services.read().unwrap().clone()),
            md5_cache: RwLock::new(self.md5_cache.read().unwrap().clone()),
        }
    }
}

impl std::fmt::Debug for SchemaRegistry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SchemaRegistry")
            .field("roots", &self.roots)
            .field("corpus", &self.corpus)
            .field("loaded", &self.messages.read().unwrap().len())
            .finish()
    }
}

impl SchemaRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registry backed by the compiled-in standard definitions.
    pub fn with_corpus() -> Self {
        SchemaRegistry {
            corpus: true,
            ..Default::default()
        }
    }

    pub fn add_root(&mut self, root: impl Into<PathBuf>) -> &mut Self {
        self.roots.push(root.into());
        self
    }

    pub fn roots(&self) -> &[PathBuf] {
        &self.roots
    }

    pub fn insert(&mut self, spec: MsgSpec) {
        self.md5_cache.get_mut().unwrap().clear();
        self.messages
            .get_mut()
            .unwrap()
            .insert(spec.full_name(), Arc::new(spec));
    }

    pub fn insert_srv(&mut self, srv: SrvSpec) {
        self.insert(srv.request.clone());
        self.insert(srv.response.clone());
        self.services
            .get_mut()
            .unwrap()
            .insert(srv.full_name(), Arc::new(srv));
    }

    /// Copies every loaded spec from `other` that is not already present.
    pub fn merge(&mut self, other: &SchemaRegistry) {
        let theirs = other.messages.read().unwrap().clone();
        let mine = self.messages.get_mut().unwrap();
        for (k, v) in theirs {
            mine.entry(k).or_insert(v);
        }
        self.md5_cache.get_mut().unwrap().clear();
    }

    pub fn contains(&self, full_name: &str) -> bool {
        self.get(full_name).is_ok()
    }

    pub fn get(&self, full_name: &str) -> Result<Arc<MsgSpec>, SchemaError> {
        if let Some(spec) = self.messages.read().unwrap().get(full_name) {
            return Ok(spec.clone());
        }
        let (pkg, name) = split_type_name(full_name)?;
        let spec = match self.load_msg(pkg, name)? {
            Some(spec) => spec,
            None => {
                // `pkg/FooRequest` and `pkg/FooResponse` come from `Foo.srv`.
                let srv_name = name
                    .strip_suffix("Request")
                    .or_else(|| name.strip_suffix("Response"));
                match srv_name.map(|n| self.get_srv(&format!("{pkg}/{n}"))) {
                    Some(Ok(srv)) if name.ends_with("Request") => srv.request.clone(),
                    Some(Ok(srv)) => srv.response.clone(),
                    _ => return Err(SchemaError::UnresolvedType(full_name.to_string())),
                }
            }
        };
        let spec = Arc::new(spec);
        self.messages
            .write()
            .unwrap()
            .entry(full_name.to_string())
            .or_insert_with(|| spec.clone());
        Ok(spec)
    }

    pub fn get_srv(&self, full_name: &str) -> Result<Arc<SrvSpec>, SchemaError> {
        if let Some(srv) = self.services.read().unwrap().get(full_name) {
            return Ok(srv.clone());
        }
        let (pkg, name) = split_type_name(full_name)?;
        let text = self
            .find_text(pkg, name, "srv")?
            .ok_or_else(|| SchemaError::UnresolvedType(full_name.to_string()))?;
        let srv = Arc::new(parse_srv(&text, pkg, name)?);
        self.services
            .write()
            .unwrap()
            .entry(full_name.to_string())
            .or_insert_with(|| srv.clone());
        Ok(srv)
    }

    fn load_msg(&self, pkg: &str, name: &str) -> Result<Option<MsgSpec>, SchemaError> {
        match self.find_text(pkg, name, "msg")? {
            Some(text) => parse_msg(&text, pkg, name).map(Some),
            None => Ok(None),
        }
    }

    fn find_text(&self, pkg: &str, name: &str, kind: &str) -> Result<Option<String>, SchemaError> {
        for root in &self.roots {
            let path = root.join(pkg).join(kind).join(format!("{name}.{kind}"));
            if path.is_file() {
                return read_text(&path).map(Some);
            }
        }
        if self.corpus {
            let table = if kind == "msg" {
                corpus::MESSAGES
            } else {
                corpus::SERVICES
            };
            let full = format!("{pkg}/{name}");
            if let Some((_, text)) = table.iter().find(|(n, _)| *n == full) {
                return Ok(Some(text.to_string()));
            }
        }
        Ok(None)
    }

    /// Every message type name this registry can resolve without I/O errors,
    /// sorted. Scans roots and the corpus.
    pub fn message_names(&self) -> Vec<String> {
        self.names_of("msg")
    }

    pub fn service_names(&self) -> Vec<String> {
        self.names_of("srv")
    }

    fn names_of(&self, kind: &str) -> Vec<String> {
        let mut names = BTreeSet::new();
        if kind == "msg" {
            names.extend(self.messages.read().unwrap().keys().cloned());
        } else {
            names.extend(self.services.read().unwrap().keys().cloned());
        }
        for root in &self.roots {
            let Ok(pkgs) = std::fs::read_dir(root) else { continue };
            for pkg in pkgs.flatten() {
                let Ok(files) = std::fs::read_dir(pkg.path().join(kind)) else { continue };
                for file in files.flatten() {
                    let path = file.path();
                    if path.extension().and_then(|e| e.to_str()) == Some(kind) {
                        if let (Some(p), Some(stem)) = (
                            pkg.file_name().to_str().map(str::to_string),
                            path.file_stem().and_then(|s| s.to_str()),
                        ) {
                            names.insert(format!("{p}/{stem}"));
                        }
                    }
                }
            }
        }
        if self.corpus {
            let table = if kind == "msg" {
                corpus::MESSAGES
            } else {
                corpus::SERVICES
            };
            names.extend(table.iter().map(|(n, _)| n.to_string()));
        }
        names.into_iter().collect()
    }
}

fn read_text(path: &Path) -> Result<String, SchemaError> {
    std::fs::read_to_string(path).map_err(|e| SchemaError::Io {
        path: path.display().to_string(),
        reason: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_root_wins() {
        let a = tempfile::tempdir().unwrap();
        let b = tempfile::tempdir().unwrap();
        for (dir, body) in [(&a, "int32 first"), (&b, "int32 second")] {
            let p = dir.path().join("demo/msg");
            std::fs::create_dir_all(&p).unwrap();
            std::fs::write(p.join("Thing.msg"), body).unwrap();
        }
        let mut reg = SchemaRegistry::new();
        reg.add_root(a.path()).add_root(b.path());
        assert_eq!(reg.get("demo/Thing").unwrap().fields[0].name, "first");
        assert_eq!(reg.message_names(), vec!["demo/Thing".to_string()]);
    }

    #[test]
    fn corpus_lookup_and_srv_halves() {
        let reg = SchemaRegistry::with_corpus();
        assert_eq!(reg.get("std_msgs/Header").unwrap().fields.len(), 3);
        assert_eq!(reg.get("std_srvs/SetBoolRequest").unwrap().fields.len(), 1);
        assert_eq!(reg.get("std_srvs/SetBoolResponse").unwrap().fields.len(), 2);
        assert!(matches!(reg.get("nope/Nothing"), Err(SchemaError::UnresolvedType(_))));
        assert!(matches!(reg.get("bad"), Err(SchemaError::InvalidTypeName(_))));
        assert!(reg.message_names().len() >= 30);
        assert!(reg.service_names().contains(&"std_srvs/Trigger".to_string()));
    }
}
