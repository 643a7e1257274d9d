//! Message and service definitions: parsing `.msg`/`.srv` text, checksums,
//! concatenated dependency text and source generation.

mod codegen;
mod corpus;
mod hash;
mod parse;
mod registry;

pub use codegen::{emit_module_tree, emit_source, EmittedFile};
pub use hash::{compute_md5, compute_srv_md5, dependency_text, md5_text, parse_definition_bundle};
pub use parse::{parse_msg, parse_msg_bytes, parse_srv};
pub use registry::SchemaRegistry;

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SchemaError {
    #[error("syntax error on line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("constant out of range on line {line}: {reason}")]
    Range { line: usize, reason: String },
    #[error("unresolved type {0}")]
    UnresolvedType(String),
    #[error("cyclic dependency: {}", .0.join(" -> "))]
    CyclicDependency(Vec<String>),
    #[error("invalid type name {0:?}")]
    InvalidTypeName(String),
    #[error("io error reading {path}: {reason}")]
    Io { path: String, reason: String },
}

/// Wire-level primitive kinds. `byte` and `char` are folded into `Int8` and
/// `UInt8`; the spelling used in the source is kept on the field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Primitive {
    Bool,
    Int8,
    UInt8,
    Int16,
    UInt16,
    Int32,
    UInt32,
    Int64,
    UInt64,
    Float32,
    Float64,
    String,
    Time,
    Duration,
}

impl Primitive {
    pub fn from_name(name: &str) -> Option<Primitive> {
        Some(match name {
            "bool" => Primitive::Bool,
            "int8" | "byte" => Primitive::Int8,
            "uint8" | "char" => Primitive::UInt8,
            "int16" => Primitive::Int16,
            "uint16" => Primitive::UInt16,
            "int32" => Primitive::Int32,
            "uint32" => Primitive::UInt32,
            "int64" => Primitive::Int64,
            "uint64" => Primitive::UInt64,
            "float32" => Primitive::Float32,
            "float64" => Primitive::Float64,
            "string" => Primitive::String,
            "time" => Primitive::Time,
            "duration" => Primitive::Duration,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Primitive::Bool => "bool",
            Primitive::Int8 => "int8",
            Primitive::UInt8 => "uint8",
            Primitive::Int16 => "int16",
            Primitive::UInt16 => "uint16",
            Primitive::Int32 => "int32",
            Primitive::UInt32 => "uint32",
            Primitive::Int64 => "int64",
            Primitive::UInt64 => "uint64",
            Primitive::Float32 => "float32",
            Primitive::Float64 => "float64",
            Primitive::String => "string",
            Primitive::Time => "time",
            Primitive::Duration => "duration",
        }
    }

    /// Encoded size for fixed-size kinds, `None` for strings.
    pub fn fixed_size(self) -> Option<usize> {
        match self {
            Primitive::Bool | Primitive::Int8 | Primitive::UInt8 => Some(1),
            Primitive::Int16 | Primitive::UInt16 => Some(2),
            Primitive::Int32 | Primitive::UInt32 | Primitive::Float32 => Some(4),
            Primitive::Int64
            | Primitive::UInt64
            | Primitive::Float64
            | Primitive::Time
            | Primitive::Duration => Some(8),
            Primitive::String => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TypeRef {
    Builtin(Primitive),
    Named { package: String, name: String },
}

impl TypeRef {
    pub fn full_name(&self) -> String {
        match self {
            TypeRef::Builtin(p) => p.name().to_string(),
            TypeRef::Named { package, name } => format!("{package}/{name}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Arity {
    Scalar,
    Fixed(usize),
    Var,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FieldSpec {
    pub name: String,
    pub ty: TypeRef,
    pub arity: Arity,
    /// Base type token exactly as written (`byte`, `Header`, `geometry_msgs/Point`).
    pub spelling: String,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ConstValue {
    Bool(bool),
    Int(i64),
    UInt(u64),
    Float(f64),
    Str(String),
}

impl fmt::Display for ConstValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstValue::Bool(b) => write!(f, "{b}"),
            ConstValue::Int(v) => write!(f, "{v}"),
            ConstValue::UInt(v) => write!(f, "{v}"),
            ConstValue::Float(v) => write!(f, "{v}"),
            ConstValue::Str(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConstantSpec {
    pub name: String,
    pub ty: Primitive,
    pub spelling: String,
    pub value_text: String,
    pub value: ConstValue,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MsgSpec {
    pub package: String,
    pub name: String,
    pub fields: Vec<FieldSpec>,
    pub constants: Vec<ConstantSpec>,
    pub source_text: String,
}

impl MsgSpec {
    pub fn full_name(&self) -> String {
        format!("{}/{}", self.package, self.name)
    }

    /// Named types referenced by fields, in field order, duplicates kept.
    pub fn dependencies(&self) -> impl Iterator<Item = String> + '_ {
        self.fields.iter().filter_map(|f| match &f.ty {
            TypeRef::Named { .. } => Some(f.ty.full_name()),
            TypeRef::Builtin(_) => None,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SrvSpec {
    pub package: String,
    pub name: String,
    pub request: MsgSpec,
    pub response: MsgSpec,
}

impl SrvSpec {
    pub fn full_name(&self) -> String {
        format!("{}/{}", self.package, self.name)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Splits `pkg/Name` into its parts, validating both.
pub fn split_type_name(full: &str) -> Result<(&str, &str), SchemaError> {
    match full.split_once('/') {
        Some((pkg, name)) if is_identifier(pkg) && is_identifier(name) => Ok((pkg, name)),
        _ => Err(SchemaError::InvalidTypeName(full.to_string())),
    }
}
