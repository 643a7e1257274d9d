//! Asset URI resolution confined to configured package roots.

use std::path::{Component, Path, PathBuf};

use super::AssetError;

/// Environment variable listing package roots, `:`-separated.
pub const PACKAGE_PATH_ENV: &str = "ROS_PACKAGE_PATH";

/// Package roots from `ROS_PACKAGE_PATH`, skipping empty entries.
pub fn roots_from_env() -> Vec<PathBuf> {
    std::env::var_os(PACKAGE_PATH_ENV)
        .map(|v| std::env::split_paths(&v).filter(|p| !p.as_os_str().is_empty()).collect())
        .unwrap_or_default()
}

/// Joins `rel` onto nothing, resolving `.` and `..` lexically; `None` if it
/// climbs above its starting point or is absolute.
fn normalize_relative(rel: &str) -> Option<PathBuf> {
    let mut out = PathBuf::new();
    for c in Path::new(rel).components() {
        match c {
            Component::Normal(p) => out.push(p),
            Component::CurDir => {}
            Component::ParentDir => {
                if !out.pop() {
                    return None;
                }
            }
            Component::RootDir | Component::Prefix(_) => return None,
        }
    }
    Some(out)
}

fn canonical_roots(roots: &[PathBuf]) -> Vec<PathBuf> {
    roots.iter().filter_map(|r| r.canonicalize().ok()).collect()
}

fn inside(path: &Path, roots: &[PathBuf]) -> bool {
    roots.iter().any(|r| path.starts_with(r))
}

/// Maps `package://pkg/rel` or `file:///abs` to an existing file under one of
/// `roots`. Symlinks are resolved before the containment check.
pub fn resolve_uri(uri: &str, roots: &[PathBuf]) -> Result<PathBuf, AssetError> {
    let canon = canonical_roots(roots);
    if let Some(rest) = uri.strip_prefix("package://") {
        let rel = normalize_relative(rest).ok_or_else(|| AssetError::PathEscapesRoot(uri.to_string()))?;
        if rel.components().count() < 2 {
            return Err(AssetError::NotFound(format!("{uri}: no file inside the package")));
        }
        for root in &canon {
            let candidate = root.join(&rel);
            if !candidate.is_file() {
                continue;
            }
            let real = candidate.canonicalize().map_err(|e| AssetError::Io(e.to_string()))?;
            if !inside(&real, &canon) {
                return Err(AssetError::PathEscapesRoot(uri.to_string()));
            }
            return Ok(real);
        }
        return Err(AssetError::NotFound(uri.to_string()));
    }
    if uri.starts_with("file://") {
        let url = url::Url::parse(uri).map_err(|e| AssetError::NotFound(format!("{uri}: {e}")))?;
        let path = url
            .to_file_path()
            .map_err(|_| AssetError::NotFound(format!("{uri}: not a local path")))?;
        if path.components().any(|c| c == Component::ParentDir) {
            return Err(AssetError::PathEscapesRoot(uri.to_string()));
        }
        if !inside(&path, &canon) && !inside(&path, roots) {
            return Err(AssetError::PathEscapesRoot(uri.to_string()));
        }
        let real = match path.canonicalize() {
            Ok(p) if p.is_file() => p,
            _ => return Err(AssetError::NotFound(uri.to_string())),
        };
        if !inside(&real, &canon) {
            return Err(AssetError::PathEscapesRoot(uri.to_string()));
        }
        return Ok(real);
    }
    let scheme = uri.split_once("://").map_or(uri, |(s, _)| s);
    Err(AssetError::UnknownScheme(scheme.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexical_normalization() {
        assert_eq!(normalize_relative("a/./b/../c"), Some(PathBuf::from("a/c")));
        assert_eq!(normalize_relative("demo/../../etc/passwd"), None);
        assert_eq!(normalize_relative("/etc/passwd"), None);
    }

    #[test]
    fn resolution_rules() {
        let dir = tempfile::tempdir().unwrap();
        let root = dir.path().to_path_buf();
        std::fs::create_dir_all(root.join("demo/meshes")).unwrap();
        std::fs::write(root.join("demo/meshes/x.obj"), "v 0 0 0").unwrap();
        let roots = vec![root.clone()];
        let real = root.canonicalize().unwrap().join("demo/meshes/x.obj");

        assert_eq!(resolve_uri("package://demo/meshes/x.obj", &roots).unwrap(), real);
        let file_uri = url::Url::from_file_path(&real).unwrap().to_string();
        assert_eq!(resolve_uri(&file_uri, &roots).unwrap(), real);
        assert!(matches!(
            resolve_uri("package://demo/../../etc/passwd", &roots),
            Err(AssetError::PathEscapesRoot(_))
        ));
        assert!(matches!(resolve_uri("file:///etc/passwd", &roots), Err(AssetError::PathEscapesRoot(_))));
        assert!(matches!(resolve_uri("package://demo/none.stl", &roots), Err(AssetError::NotFound(_))));
        assert!(matches!(resolve_uri("http://x/y.stl", &roots), Err(AssetError::UnknownScheme(s)) if s == "http"));
    }

    #[cfg(unix)]
    #[test]
    fn symlinks_out_of_root_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let outside = tempfile::tempdir().unwrap();
        std::fs::write(outside.path().join("secret.stl"), "solid").unwrap();
        std::fs::create_dir_all(dir.path().join("demo")).unwrap();
        std::os::unix::fs::symlink(outside.path().join("secret.stl"), dir.path().join("demo/link.stl")).unwrap();
        assert!(matches!(
            resolve_uri("package://demo/link.stl", &[dir.path().to_path_buf()]),
            Err(AssetError::PathEscapesRoot(_))
        ));
    }
}
