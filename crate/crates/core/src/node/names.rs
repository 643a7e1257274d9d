//! Graph-name resolution: global names pass through, `~name` expands under
//! the node's own name, relative names resolve against the node namespace.

use super::NodeError;

fn valid_segment(seg: &str) -> bool {
    let mut chars = seg.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Checks a fully qualified name such as `/robot/cmd_vel` (or `/`).
pub fn validate_global(name: &str) -> Result<(), NodeError> {
    let invalid = || NodeError::InvalidName(name.to_string());
    let rest = name.strip_prefix('/').ok_or_else(invalid)?;
    if rest.is_empty() {
        return Ok(());
    }
    if rest.split('/').all(valid_segment) {
        Ok(())
    } else {
        Err(invalid())
    }
}

/// Namespace containing `name`: `/a/b/c` → `/a/b/`, `/a` → `/`.
pub fn namespace_of(name: &str) -> String {
    let trimmed = name.trim_end_matches('/');
    match trimmed.rfind('/') {
        Some(i) => trimmed[..=i].to_string(),
        None => "/".to_string(),
    }
}

/// Resolves `name` as seen from the node called `node_name`.
pub fn resolve(node_name: &str, name: &str) -> Result<String, NodeError> {
    if name.is_empty() {
        return Err(NodeError::InvalidName(String::new()));
    }
    let joined = if name.starts_with('/') {
        name.to_string()
    } else if let Some(private) = name.strip_prefix('~') {
        format!("{}/{}", node_name.trim_end_matches('/'), private.trim_start_matches('/'))
    } else {
        format!("{}{}", namespace_of(node_name), name)
    };
    let cleaned = if joined.len() > 1 {
        joined.trim_end_matches('/').to_string()
    } else {
        joined
    };
    validate_global(&cleaned)?;
    Ok(cleaned)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolution_rules() {
        assert_eq!(resolve("/talker", "/chatter").unwrap(), "/chatter");
        assert_eq!(resolve("/talker", "chatter").unwrap(), "/chatter");
        assert_eq!(resolve("/ns/talker", "chatter").unwrap(), "/ns/chatter");
        assert_eq!(resolve("/ns/talker", "~rate").unwrap(), "/ns/talker/rate");
        assert_eq!(resolve("/talker", "/a/b/").unwrap(), "/a/b");
        assert!(resolve("/talker", "").is_err());
        assert!(resolve("/talker", "/bad name").is_err());
        assert!(resolve("/talker", "/9lives").is_err());
    }

    #[test]
    fn namespaces() {
        assert_eq!(namespace_of("/a/b/c"), "/a/b/");
        assert_eq!(namespace_of("/a"), "/");
        assert_eq!(namespace_of("/"), "/");
    }
}
