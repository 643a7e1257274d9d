//! Rust source generation for message and service types.
//!
//! Each type becomes one file holding a plain struct, its constants, and
//! `WireField`/`RosMessage` impls whose byte output matches the dynamic
//! codec. Nested types are referenced as `super::super::<pkg>::<Name>`, so
//! the files must be laid out the way [`emit_module_tree`] arranges them.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::{
    compute_md5, compute_srv_md5, dependency_text, Arity, ConstValue, MsgSpec, Primitive, SchemaError, SchemaRegistry,
    SrvSpec, TypeRef,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmittedFile {
    /// Path relative to the output directory, `/`-separated.
    pub path: String,
    pub contents: String,
}

const HEADER: &str = "// This file is generated by `roslite msg gen`. Do not edit.\n";

const KEYWORDS: &[&str] = &[
    "as", "async", "await", "break", "const", "continue", "dyn", "else", "enum", "extern", "false", "fn", "for", "if",
    "impl", "in", "let", "loop", "match", "mod", "move", "mut", "pub", "ref", "return", "static", "struct", "trait",
    "true", "type", "unsafe", "use", "where", "while", "abstract", "become", "box", "do", "final", "macro", "override",
    "priv", "typeof", "unsized", "virtual", "yield", "try", "gen",
];

fn field_ident(name: &str) -> String {
    match name {
        "self" | "Self" | "super" | "crate" => format!("{name}_"),
        n if KEYWORDS.contains(&n) => format!("r#{n}"),
        n => n.to_string(),
    }
}

pub(crate) fn module_name(type_name: &str, suffix: &str) -> String {
    let mut out = String::new();
    let mut prev: Option<char> = None;
    for c in type_name.chars() {
        if c.is_ascii_uppercase() {
            if matches!(prev, Some(p) if p.is_ascii_lowercase() || p.is_ascii_digit()) {
                out.push('_');
            }
            out.push(c.to_ascii_lowercase());
        } else {
            out.push(c);
        }
        prev = Some(c);
    }
    out.push('_');
    out.push_str(suffix);
    out
}

fn primitive_type(p: Primitive) -> &'static str {
    match p {
        Primitive::Bool => "bool",
        Primitive::Int8 => "i8",
        Primitive::UInt8 => "u8",
        Primitive::Int16 => "i16",
        Primitive::UInt16 => "u16",
        Primitive::Int32 => "i32",
        Primitive::UInt32 => "u32",
        Primitive::Int64 => "i64",
        Primitive::UInt64 => "u64",
        Primitive::Float32 => "f32",
        Primitive::Float64 => "f64",
        Primitive::String => "::std::string::String",
        Primitive::Time => "::roslite::wire::Time",
        Primitive::Duration => "::roslite::wire::Duration",
    }
}

fn element_type(ty: &TypeRef) -> String {
    match ty {
        TypeRef::Builtin(p) => primitive_type(*p).to_string(),
        TypeRef::Named { package, name } => format!("super::super::{package}::{name}"),
    }
}

fn field_type(ty: &TypeRef, arity: Arity) -> String {
    let elem = element_type(ty);
    match arity {
        Arity::Scalar => elem,
        Arity::Var => format!("::std::vec::Vec<{elem}>"),
        Arity::Fixed(n) => format!("[{elem}; {n}]"),
    }
}

fn min_size_expr(spec: &MsgSpec) -> String {
    let mut terms = Vec::new();
    for f in &spec.fields {
        let t = field_type(&f.ty, f.arity);
        terms.push(format!("<{t} as ::roslite::wire::WireField>::MIN_SIZE"));
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("\n        + ")
    }
}

fn const_item(c: &super::ConstantSpec) -> String {
    let name = field_ident(&c.name);
    match &c.value {
        ConstValue::Str(s) => format!("    pub const {name}: &'static str = {s:?};\n"),
        ConstValue::Bool(b) => format!("    pub const {name}: bool = {b};\n"),
        ConstValue::Int(v) => format!("    pub const {name}: {} = {v};\n", primitive_type(c.ty)),
        ConstValue::UInt(v) => format!("    pub const {name}: {} = {v};\n", primitive_type(c.ty)),
        ConstValue::Float(v) => {
            let ty = primitive_type(c.ty);
            let lit = if v.is_nan() {
                format!("{ty}::NAN")
            } else if v.is_infinite() {
                format!("{}{ty}::INFINITY", if *v < 0.0 { "-" } else { "" })
            } else if ty == "f32" {
                format!("{:?}", *v as f32)
            } else {
                format!("{v:?}")
            };
            format!("    pub const {name}: {ty} = {lit};\n")
        }
    }
}

fn raw_string(s: &str) -> String {
    let mut hashes = 1;
    while s.contains(&format!("\"{}", "#".repeat(hashes))) {
        hashes += 1;
    }
    let h = "#".repeat(hashes);
    format!("r{h}\"{s}\"{h}")
}

/// Struct, constants and wire impls for one message, without the
/// `RosMessage` impl.
fn emit_struct(spec: &MsgSpec) -> String {
    let name = &spec.name;
    let mut out = String::new();

    let _ = writeln!(out, "/// `{}`", spec.full_name());
    out.push_str("#[derive(Debug, Clone, PartialEq)]\n");
    let _ = writeln!(out, "pub struct {name} {{");
    for f in &spec.fields {
        let _ = writeln!(out, "    pub {}: {},", field_ident(&f.name), field_type(&f.ty, f.arity));
    }
    out.push_str("}\n\n");

    let _ = writeln!(out, "impl ::std::default::Default for {name} {{");
    out.push_str("    fn default() -> Self {\n");
    let _ = writeln!(out, "        {name} {{");
    for f in &spec.fields {
        let init = match f.arity {
            Arity::Fixed(_) => "::std::array::from_fn(|_| ::std::default::Default::default())",
            _ => "::std::default::Default::default()",
        };
        let _ = writeln!(out, "            {}: {init},", field_ident(&f.name));
    }
    out.push_str("        }\n    }\n}\n\n");

    if !spec.constants.is_empty() {
        let _ = writeln!(out, "impl {name} {{");
        for c in &spec.constants {
            out.push_str(&const_item(c));
        }
        out.push_str("}\n\n");
    }

    let _ = writeln!(out, "impl ::roslite::wire::WireField for {name} {{");
    let _ = writeln!(out, "    const MIN_SIZE: usize = {};\n", min_size_expr(spec));
    let out_var = if spec.fields.is_empty() { "_out" } else { "out" };
    let _ = writeln!(out, "    fn encode(&self, {out_var}: &mut ::std::vec::Vec<u8>) {{");
    for f in &spec.fields {
        let _ = writeln!(out, "        ::roslite::wire::WireField::encode(&self.{}, out);", field_ident(&f.name));
    }
    out.push_str("    }\n\n");
    let r_var = if spec.fields.is_empty() { "_r" } else { "r" };
    let _ = writeln!(
        out,
        "    fn decode({r_var}: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {{"
    );
    let _ = writeln!(out, "        ::std::result::Result::Ok({name} {{");
    for f in &spec.fields {
        let _ = writeln!(out, "            {}: ::roslite::wire::WireField::decode(r)?,", field_ident(&f.name));
    }
    out.push_str("        })\n    }\n\n");
    out.push_str("    fn encoded_len(&self) -> usize {\n        0");
    for f in &spec.fields {
        let _ = write!(out, "\n            + ::roslite::wire::WireField::encoded_len(&self.{})", field_ident(&f.name));
    }
    out.push_str("\n    }\n}\n");
    out
}

fn emit_message_impl(spec: &MsgSpec, md5: &str, definition: &str) -> String {
    format!(
        "\nimpl ::roslite::wire::RosMessage for {} {{\n    const TYPE_NAME: &'static str = {:?};\n    const MD5SUM: &'static str = {:?};\n    const DEFINITION: &'static str = {};\n}}\n",
        spec.name,
        spec.full_name(),
        md5,
        raw_string(definition)
    )
}

/// One self-contained source unit for a message type.
pub fn emit_source(spec: &MsgSpec, registry: &SchemaRegistry) -> Result<String, SchemaError> {
    let md5 = compute_md5(spec, registry)?;
    let definition = dependency_text(spec, registry)?;
    let mut out = String::from(HEADER);
    out.push('\n');
    out.push_str(&emit_struct(spec));
    out.push_str(&emit_message_impl(spec, &md5, &definition));
    Ok(out)
}

/// Request, response and the service marker type in one unit.
pub fn emit_srv_source(srv: &SrvSpec, registry: &SchemaRegistry) -> Result<String, SchemaError> {
    let md5 = compute_srv_md5(srv, registry)?;
    let mut out = String::from(HEADER);
    out.push('\n');
    for half in [&srv.request, &srv.response] {
        let half_md5 = compute_md5(half, registry)?;
        let definition = dependency_text(half, registry)?;
        out.push_str(&emit_struct(half));
        out.push_str(&emit_message_impl(half, &half_md5, &definition));
        out.push('\n');
    }
    let _ = writeln!(out, "/// `{}`", srv.full_name());
    out.push_str("#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]\n");
    let _ = writeln!(out, "pub struct {};\n", srv.name);
    let _ = writeln!(out, "impl ::roslite::wire::RosService for {} {{", srv.name);
    let _ = writeln!(out, "    type Request = {};", srv.request.name);
    let _ = writeln!(out, "    type Response = {};", srv.response.name);
    let _ = writeln!(out, "    const TYPE_NAME: &'static str = {:?};", srv.full_name());
    let _ = writeln!(out, "    const MD5SUM: &'static str = {md5:?};");
    out.push_str("}\n");
    Ok(out)
}

/// Emits every named message and service plus the `mod.rs` files that tie
/// them together. Output order and contents are deterministic.
pub fn emit_module_tree(
    messages: &[String],
    services: &[String],
    registry: &SchemaRegistry,
) -> Result<Vec<EmittedFile>, SchemaError> {
    let mut packages: BTreeMap<String, Vec<(String, Vec<String>)>> = BTreeMap::new();
    let mut files = Vec::new();

    for full in messages {
        let spec = registry.get(full)?;
        let module = module_name(&spec.name, "msg");
        files.push(EmittedFile {
            path: format!("{}/{module}.rs", spec.package),
            contents: emit_source(&spec, registry)?,
        });
        packages
            .entry(spec.package.clone())
            .or_default()
            .push((module, vec![spec.name.clone()]));
    }
    for full in services {
        let srv = registry.get_srv(full)?;
        let module = module_name(&srv.name, "srv");
        files.push(EmittedFile {
            path: format!("{}/{module}.rs", srv.package),
            contents: emit_srv_source(&srv, registry)?,
        });
        packages.entry(srv.package.clone()).or_default().push((
            module,
            vec![srv.name.clone(), srv.request.name.clone(), srv.response.name.clone()],
        ));
    }

    let mut root = String::from(HEADER);
    root.push('\n');
    for (pkg, mut modules) in packages {
        modules.sort();
        let _ = writeln!(root, "pub mod {pkg};");
        let mut body = String::from(HEADER);
        body.push('\n');
        for (module, _) in &modules {
            let _ = writeln!(body, "mod {module};");
        }
        body.push('\n');
        for (module, names) in &modules {
            let _ = writeln!(body, "pub use {module}::{{{}}};", names.join(", "));
        }
        files.push(EmittedFile {
            path: format!("{pkg}/mod.rs"),
            contents: body,
        });
    }
    files.push(EmittedFile {
        path: "mod.rs".to_string(),
        contents: root,
    });
    files.sort_by(|a, b| a.path.cmp(&b.path));
    Ok(files)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::msg::parse_msg;

    #[test]
    fn module_names() {
        assert_eq!(module_name("UInt8MultiArray", "msg"), "uint8_multi_array_msg");
        assert_eq!(module_name("Header", "msg"), "header_msg");
        assert_eq!(module_name("TFMessage", "msg"), "tfmessage_msg");
        assert_eq!(module_name("SetBool", "srv"), "set_bool_srv");
    }

    #[test]
    fn md5_constant_matches() {
        let reg = SchemaRegistry::with_corpus();
        let spec = reg.get("std_msgs/Int32").unwrap();
        let src = emit_source(&spec, &reg).unwrap();
        let md5 = compute_md5(&spec, &reg).unwrap();
        assert!(src.contains(&format!("const MD5SUM: &'static str = {md5:?};")));
        assert!(src.contains("pub data: i32,"));
    }

    #[test]
    fn fixed_arrays_and_constants() {
        let mut reg = SchemaRegistry::with_corpus();
        reg.insert(
            parse_msg("uint8 A=3\nstring S=hi \"there\"\nfloat32 F=0.5\nfloat64[36] covariance\nint32 type", "p", "K").unwrap(),
        );
        let src = emit_source(&reg.get("p/K").unwrap(), &reg).unwrap();
        assert!(src.contains("pub covariance: [f64; 36],"));
        assert!(src.contains("pub const A: u8 = 3;"));
        assert!(src.contains(r#"pub const S: &'static str = "hi \"there\"";"#));
        assert!(src.contains("pub const F: f32 = 0.5;"));
        assert!(src.contains("pub r#type: i32,"));
    }

    #[test]
    fn deterministic_tree() {
        let reg = SchemaRegistry::with_corpus();
        let msgs = reg.message_names();
        let srvs = reg.service_names();
        let a = emit_module_tree(&msgs, &srvs, &reg).unwrap();
        let b = emit_module_tree(&msgs, &srvs, &SchemaRegistry::with_corpus()).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().any(|f| f.path == "std_srvs/set_bool_srv.rs"));
    }

    #[test]
    fn raw_strings_pick_enough_hashes() {
        assert_eq!(raw_string("a"), "r#\"a\"#");
        assert_eq!(raw_string("x\"#y"), "r##\"x\"#y\"##");
    }
}
