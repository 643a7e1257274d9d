use std::collections::HashSet;

use super::{parse_msg, split_type_name, Arity, MsgSpec, SchemaError, SchemaRegistry, SrvSpec, TypeRef};

const SEPARATOR: &str = "================================================================================";

fn hex_md5(bytes: &[u8]) -> String {
    format!("{:x}", md5::compute(bytes))
}

/// Normalized text whose MD5 is the type checksum: constants first as
/// `type NAME=value`, then fields. Builtin fields keep their array suffix;
/// message fields are written as `<md5> name` with the suffix dropped.
pub fn md5_text(spec: &MsgSpec, registry: &SchemaRegistry) -> Result<String, SchemaError> {
    let mut stack = vec![spec.full_name()];
    md5_text_inner(spec, registry, &mut stack)
}

fn md5_text_inner(spec: &MsgSpec, registry: &SchemaRegistry, stack: &mut Vec<String>) -> Result<String, SchemaError> {
    let mut lines = Vec::with_capacity(spec.constants.len() + spec.fields.len());
    for c in &spec.constants {
        lines.push(format!("{} {}={}", c.spelling, c.name, c.value_text));
    }
    for f in &spec.fields {
        match &f.ty {
            TypeRef::Builtin(_) => {
                let suffix = match f.arity {
                    Arity::Scalar => String::new(),
                    Arity::Var => "[]".to_string(),
                    Arity::Fixed(n) => format!("[{n}]"),
                };
                lines.push(format!("{}{} {}", f.spelling, suffix, f.name));
            }
            TypeRef::Named { .. } => {
                let dep = md5_by_name(&f.ty.full_name(), registry, stack)?;
                lines.push(format!("{dep} {}", f.name));
            }
        }
    }
    Ok(lines.join("\n"))
}

fn md5_by_name(full: &str, registry: &SchemaRegistry, stack: &mut Vec<String>) -> Result<String, SchemaError> {
    if let Some(hit) = registry.md5_cache.read().unwrap().get(full) {
        return Ok(hit.clone());
    }
    if stack.iter().any(|s| s == full) {
        let mut path = stack.clone();
        path.push(full.to_string());
        return Err(SchemaError::CyclicDependency(path));
    }
    let spec = registry.get(full)?;
    stack.push(full.to_string());
    let text = md5_text_inner(&spec, registry, stack);
    stack.pop();
    let sum = hex_md5(text?.as_bytes());
    registry
        .md5_cache
        .write()
        .unwrap()
        .insert(full.to_string(), sum.clone());
    Ok(sum)
}

pub fn compute_md5(spec: &MsgSpec, registry: &SchemaRegistry) -> Result<String, SchemaError> {
    Ok(hex_md5(md5_text(spec, registry)?.as_bytes()))
}

/// Request and response hash texts concatenated with no separator.
pub fn compute_srv_md5(srv: &SrvSpec, registry: &SchemaRegistry) -> Result<String, SchemaError> {
    let mut text = md5_text(&srv.request, registry)?;
    text.push_str(&md5_text(&srv.response, registry)?);
    Ok(hex_md5(text.as_bytes()))
}

fn collect_deps(spec: &MsgSpec, registry: &SchemaRegistry, seen: &mut HashSet<String>, out: &mut Vec<std::sync::Arc<MsgSpec>>) -> Result<(), SchemaError> {
    for dep in spec.dependencies() {
        if seen.insert(dep.clone()) {
            let dep_spec = registry.get(&dep)?;
            out.push(dep_spec.clone());
            collect_deps(&dep_spec, registry, seen, out)?;
        }
    }
    Ok(())
}

/// The `message_definition` handshake value: the root source followed by
/// each transitive dependency (pre-order, first encounter only) under an
/// 80-character `=` rule and a `MSG: pkg/Name` line.
pub fn dependency_text(spec: &MsgSpec, registry: &SchemaRegistry) -> Result<String, SchemaError> {
    // Surfaces unresolved types and cycles before walking.
    md5_text(spec, registry)?;
    let mut seen = HashSet::new();
    seen.insert(spec.full_name());
    let mut deps = Vec::new();
    collect_deps(spec, registry, &mut seen, &mut deps)?;

    let mut out = String::with_capacity(spec.source_text.len() + 1);
    out.push_str(&spec.source_text);
    out.push('\n');
    for dep in deps {
        out.push_str(SEPARATOR);
        out.push_str("\nMSG: ");
        out.push_str(&dep.full_name());
        out.push('\n');
        out.push_str(&dep.source_text);
        out.push('\n');
    }
    out.pop();
    Ok(out)
}

/// Inverse of [`dependency_text`]: splits a handshake `message_definition`
/// into its blocks and parses each one. Checksums are not compared here.
pub fn parse_definition_bundle(text: &str, root_name: &str) -> Result<SchemaRegistry, SchemaError> {
    let (root_pkg, root_short) = split_type_name(root_name)?;
    let mut blocks: Vec<(usize, String)> = vec![(0, String::new())];
    for (idx, line) in text.split_inclusive('\n').enumerate() {
        if line.trim_end_matches(['\n', '\r']) == SEPARATOR {
            blocks.push((idx + 1, String::new()));
        } else {
            blocks.last_mut().unwrap().1.push_str(line);
        }
    }
    let last = blocks.len() - 1;
    let mut registry = SchemaRegistry::new();
    for (i, (start_line, mut body)) in blocks.into_iter().enumerate() {
        if i != last && body.ends_with('\n') {
            body.pop();
        }
        let shift = |e: SchemaError| match e {
            SchemaError::Syntax { line, reason } => SchemaError::Syntax {
                line: line + start_line + usize::from(i > 0),
                reason,
            },
            other => other,
        };
        if i == 0 {
            registry.insert(parse_msg(&body, root_pkg, root_short).map_err(shift)?);
            continue;
        }
        let (header, rest) = body.split_once('\n').unwrap_or((body.as_str(), ""));
        let dep_name = header
            .trim()
            .strip_prefix("MSG:")
            .map(str::trim)
            .ok_or_else(|| SchemaError::Syntax {
                line: start_line + 1,
                reason: format!("expected 'MSG: <type>' after separator, got {header:?}"),
            })?;
        let (pkg, name) = split_type_name(dep_name)?;
        registry.insert(parse_msg(rest, pkg, name).map_err(shift)?);
    }
    Ok(registry)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn int32_hash_text_is_field_line() {
        let reg = SchemaRegistry::with_corpus();
        let spec = reg.get("std_msgs/Int32").unwrap();
        assert_eq!(md5_text(&spec, &reg).unwrap(), "int32 data");
        assert_eq!(compute_md5(&spec, &reg).unwrap(), hex_md5(b"int32 data"));
    }

    #[test]
    fn empty_service_is_md5_of_nothing() {
        let reg = SchemaRegistry::new();
        let srv = super::super::parse_srv("---\n", "std_srvs", "Empty").unwrap();
        assert_eq!(compute_srv_md5(&srv, &reg).unwrap(), "d41d8cd98f00b204e9800998ecf8427e");
    }

    #[test]
    fn cycles_detected() {
        let mut reg = SchemaRegistry::new();
        reg.insert(parse_msg("B b", "p", "A").unwrap());
        reg.insert(parse_msg("A a", "p", "B").unwrap());
        let a = reg.get("p/A").unwrap();
        match compute_md5(&a, &reg) {
            Err(SchemaError::CyclicDependency(path)) => assert_eq!(path, vec!["p/A", "p/B", "p/A"]),
            other => panic!("{other:?}"),
        }
        assert!(dependency_text(&a, &reg).is_err());
    }

    #[test]
    fn unresolved_dependency() {
        let reg = SchemaRegistry::new();
        let spec = parse_msg("Missing m", "p", "A").unwrap();
        assert_eq!(compute_md5(&spec, &reg), Err(SchemaError::UnresolvedType("p/Missing".into())));
    }

    #[test]
    fn dependency_free_text_unchanged() {
        let reg = SchemaRegistry::with_corpus();
        let spec = reg.get("std_msgs/String").unwrap();
        assert_eq!(dependency_text(&spec, &reg).unwrap(), spec.source_text);
    }

    #[test]
    fn repeated_dependency_emitted_once() {
        let mut reg = SchemaRegistry::with_corpus();
        reg.insert(parse_msg("geometry_msgs/Vector3 a\ngeometry_msgs/Vector3 b", "p", "Two").unwrap());
        let spec = reg.get("p/Two").unwrap();
        let text = dependency_text(&spec, &reg).unwrap();
        assert_eq!(text.matches("MSG: geometry_msgs/Vector3").count(), 1);
        assert_eq!(text.matches(SEPARATOR).count(), 1);
    }

    #[test]
    fn twist_stamped_blocks_in_preorder() {
        let reg = SchemaRegistry::with_corpus();
        let spec = reg.get("geometry_msgs/TwistStamped").unwrap();
        let text = dependency_text(&spec, &reg).unwrap();
        let order: Vec<&str> = text.lines().filter(|l| l.starts_with("MSG: ")).collect();
        assert_eq!(order, ["MSG: std_msgs/Header", "MSG: geometry_msgs/Twist", "MSG: geometry_msgs/Vector3"]);
        let bundle = parse_definition_bundle(&text, "geometry_msgs/TwistStamped").unwrap();
        let root = bundle.get("geometry_msgs/TwistStamped").unwrap();
        assert_eq!(root.source_text, spec.source_text);
        assert_eq!(compute_md5(&root, &bundle).unwrap(), "98d34b0043a2093cf9d9345ab6eef12e");
        assert_eq!(bundle.message_names().len(), 4);
    }

    #[test]
    fn bundle_rejects_missing_msg_line() {
        let text = format!("int32 a\n{SEPARATOR}\nnot a header\nint32 b");
        assert!(matches!(parse_definition_bundle(&text, "p/A"), Err(SchemaError::Syntax { line: 3, .. })));
    }
}
