//! ROS 1 binary wire format.
//!
//! Everything is little-endian with no padding. Strings and variable-length
//! arrays carry a `u32` length prefix, fixed-length arrays do not, nested
//! messages are written inline. Two paths produce identical bytes: the
//! schema-driven [`DynamicValue`] codec and the [`WireField`] impls used by
//! generated containers.

mod codec;
mod layout;
mod reader;
pub mod sample;

pub use codec::{deserialize, deserialize_spec, serialize, serialize_into, serialize_spec, serialized_size, serialized_size_spec};
pub use layout::{FieldKind, FieldLayout, MessageLayout, TypeInfo};
pub use reader::{RosMessage, RosService, WireField, WireReader};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum WireError {
    #[error("schema mismatch at {path}: expected {expected}, found {found}")]
    SchemaMismatch {
        path: String,
        expected: String,
        found: String,
    },
    #[error("truncated input at offset {offset}")]
    Truncated { offset: usize },
    #[error("{0} trailing bytes after message")]
    TrailingBytes(usize),
    #[error("invalid UTF-8 in {path}")]
    InvalidUtf8 { path: String },
    #[error("declared length {declared} at offset {offset} exceeds the {remaining} remaining bytes")]
    LengthOverrun {
        offset: usize,
        declared: u64,
        remaining: usize,
    },
    #[error(transparent)]
    Schema(#[from] crate::msg::SchemaError),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Time {
    pub sec: u32,
    pub nsec: u32,
}

impl Time {
    pub fn now() -> Time {
        let d = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .unwrap_or_default();
        Time {
            sec: d.as_secs() as u32,
            nsec: d.subsec_nanos(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Duration {
    pub sec: i32,
    pub nsec: i32,
}

/// A message value whose shape is only known at runtime.
///
/// `uint8`/`char` arrays decode to [`DynamicValue::Bytes`]; encoding also
/// accepts them as a `Seq` of `U8`.
#[derive(Debug, Clone, PartialEq)]
pub enum DynamicValue {
    Bool(bool),
    I8(i8),
    U8(u8),
    I16(i16),
    U16(u16),
    I32(i32),
    U32(u32),
    I64(i64),
    U64(u64),
    F32(f32),
    F64(f64),
    Str(String),
    Time(Time),
    Duration(Duration),
    Bytes(Vec<u8>),
    Seq(Vec<DynamicValue>),
    Record(Vec<(String, DynamicValue)>),
}

impl DynamicValue {
    pub fn kind_name(&self) -> &'static str {
        match self {
            DynamicValue::Bool(_) => "bool",
            DynamicValue::I8(_) => "int8",
            DynamicValue::U8(_) => "uint8",
            DynamicValue::I16(_) => "int16",
            DynamicValue::U16(_) => "uint16",
            DynamicValue::I32(_) => "int32",
            DynamicValue::U32(_) => "uint32",
            DynamicValue::I64(_) => "int64",
            DynamicValue::U64(_) => "uint64",
            DynamicValue::F32(_) => "float32",
            DynamicValue::F64(_) => "float64",
            DynamicValue::Str(_) => "string",
            DynamicValue::Time(_) => "time",
            DynamicValue::Duration(_) => "duration",
            DynamicValue::Bytes(_) => "bytes",
            DynamicValue::Seq(_) => "array",
            DynamicValue::Record(_) => "message",
        }
    }

    /// Field lookup on a `Record`.
    pub fn field(&self, name: &str) -> Option<&DynamicValue> {
        match self {
            DynamicValue::Record(fields) => fields.iter().find(|(n, _)| n == name).map(|(_, v)| v),
            _ => None,
        }
    }

    pub fn field_mut(&mut self, name: &str) -> Option<&mut DynamicValue> {
        match self {
            DynamicValue::Record(fields) => fields.iter_mut().find(|(n, _)| n == name).map(|(_, v)| v),
            _ => None,
        }
    }

    /// Dotted-path lookup, e.g. `"header.stamp"`.
    pub fn path(&self, dotted: &str) -> Option<&DynamicValue> {
        dotted.split('.').try_fold(self, |v, part| v.field(part))
    }

    pub fn as_f64(&self) -> Option<f64> {
        Some(match *self {
            DynamicValue::I8(v) => v as f64,
            DynamicValue::U8(v) => v as f64,
            DynamicValue::I16(v) => v as f64,
            DynamicValue::U16(v) => v as f64,
            DynamicValue::I32(v) => v as f64,
            DynamicValue::U32(v) => v as f64,
            DynamicValue::I64(v) => v as f64,
            DynamicValue::U64(v) => v as f64,
            DynamicValue::F32(v) => v as f64,
            DynamicValue::F64(v) => v,
            _ => return None,
        })
    }

    pub fn as_str(&self) -> Option<&str> {
        match self {
            DynamicValue::Str(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_seq(&self) -> Option<&[DynamicValue]> {
        match self {
            DynamicValue::Seq(s) => Some(s),
            _ => None,
        }
    }
}
