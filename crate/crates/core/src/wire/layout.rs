use std::collections::HashMap;
use std::sync::Arc;

use super::{DynamicValue, Duration, Time};
use crate::msg::{compute_md5, dependency_text, Arity, MsgSpec, Primitive, SchemaError, SchemaRegistry, TypeRef};

#[derive(Debug, Clone, PartialEq)]
pub enum FieldKind {
    Primitive(Primitive),
    Message(Arc<MessageLayout>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct FieldLayout {
    pub name: String,
    pub kind: FieldKind,
    pub arity: Arity,
}

/// A message definition with every nested type resolved, ready for the
/// dynamic codec.
#[derive(Debug, Clone, PartialEq)]
pub struct MessageLayout {
    pub type_name: String,
    pub fields: Vec<FieldLayout>,
    /// Smallest possible encoding; bounds array allocations on decode.
    pub min_size: usize,
}

impl MessageLayout {
    pub fn resolve(registry: &SchemaRegistry, full_name: &str) -> Result<Arc<MessageLayout>, SchemaError> {
        let spec = registry.get(full_name)?;
        Self::from_spec(&spec, registry)
    }

    pub fn from_spec(spec: &MsgSpec, registry: &SchemaRegistry) -> Result<Arc<MessageLayout>, SchemaError> {
        // Checksum computation rejects cycles and unresolved names up front.
        compute_md5(spec, registry)?;
        let mut memo = HashMap::new();
        build(spec, registry, &mut memo)
    }

    /// Zero value: numbers 0, strings empty, variable arrays empty, fixed
    /// arrays filled with element zero values.
    pub fn default_value(&self) -> DynamicValue {
        DynamicValue::Record(
            self.fields
                .iter()
                .map(|f| (f.name.clone(), f.default_value()))
                .collect(),
        )
    }
}

impl FieldLayout {
    pub fn default_value(&self) -> DynamicValue {
        match self.arity {
            Arity::Scalar => self.kind.default_element(),
            Arity::Var if self.kind.is_byte() => DynamicValue::Bytes(Vec::new()),
            Arity::Var => DynamicValue::Seq(Vec::new()),
            Arity::Fixed(n) if self.kind.is_byte() => DynamicValue::Bytes(vec![0; n]),
            Arity::Fixed(n) => DynamicValue::Seq((0..n).map(|_| self.kind.default_element()).collect()),
        }
    }

    pub fn type_label(&self) -> String {
        let base = match &self.kind {
            FieldKind::Primitive(p) => p.name().to_string(),
            FieldKind::Message(m) => m.type_name.clone(),
        };
        match self.arity {
            Arity::Scalar => base,
            Arity::Var => format!("{base}[]"),
            Arity::Fixed(n) => format!("{base}[{n}]"),
        }
    }
}

impl FieldKind {
    pub(crate) fn is_byte(&self) -> bool {
        matches!(self, FieldKind::Primitive(Primitive::UInt8))
    }

    pub fn min_size(&self) -> usize {
        match self {
            FieldKind::Primitive(p) => p.fixed_size().unwrap_or(4),
            FieldKind::Message(m) => m.min_size,
        }
    }

    pub fn default_element(&self) -> DynamicValue {
        match self {
            FieldKind::Message(m) => m.default_value(),
            FieldKind::Primitive(p) => match p {
                Primitive::Bool => DynamicValue::Bool(false),
                Primitive::Int8 => DynamicValue::I8(0),
                Primitive::UInt8 => DynamicValue::U8(0),
                Primitive::Int16 => DynamicValue::I16(0),
                Primitive::UInt16 => DynamicValue::U16(0),
                Primitive::Int32 => DynamicValue::I32(0),
                Primitive::UInt32 => DynamicValue::U32(0),
                Primitive::Int64 => DynamicValue::I64(0),
                Primitive::UInt64 => DynamicValue::U64(0),
                Primitive::Float32 => DynamicValue::F32(0.0),
                Primitive::Float64 => DynamicValue::F64(0.0),
                Primitive::String => DynamicValue::Str(String::new()),
                Primitive::Time => DynamicValue::Time(Time::default()),
                Primitive::Duration => DynamicValue::Duration(Duration::default()),
            },
        }
    }
}

fn build(
    spec: &MsgSpec,
    registry: &SchemaRegistry,
    memo: &mut HashMap<String, Arc<MessageLayout>>,
) -> Result<Arc<MessageLayout>, SchemaError> {
    let full = spec.full_name();
    if let Some(hit) = memo.get(&full) {
        return Ok(hit.clone());
    }
    let mut fields = Vec::with_capacity(spec.fields.len());
    let mut min_size = 0;
    for f in &spec.fields {
        let kind = match &f.ty {
            TypeRef::Builtin(p) => FieldKind::Primitive(*p),
            TypeRef::Named { .. } => {
                let dep = registry.get(&f.ty.full_name())?;
                FieldKind::Message(build(&dep, registry, memo)?)
            }
        };
        min_size += match f.arity {
            Arity::Scalar => kind.min_size(),
            Arity::Var => 4,
            Arity::Fixed(n) => n.saturating_mul(kind.min_size()),
        };
        fields.push(FieldLayout {
            name: f.name.clone(),
            kind,
            arity: f.arity,
        });
    }
    let layout = Arc::new(MessageLayout {
        type_name: full.clone(),
        fields,
        min_size,
    });
    memo.insert(full, layout.clone());
    Ok(layout)
}

/// Type name, checksum and definition text bundled for a handshake.
#[derive(Debug, Clone, PartialEq)]
pub struct TypeInfo {
    pub type_name: String,
    pub md5sum: String,
    pub definition: String,
    pub layout: Arc<MessageLayout>,
}

impl TypeInfo {
    pub fn resolve(registry: &SchemaRegistry, full_name: &str) -> Result<TypeInfo, SchemaError> {
        let spec = registry.get(full_name)?;
        Ok(TypeInfo {
            type_name: full_name.to_string(),
            md5sum: compute_md5(&spec, registry)?,
            definition: dependency_text(&spec, registry)?,
            layout: MessageLayout::from_spec(&spec, registry)?,
        })
    }
}
