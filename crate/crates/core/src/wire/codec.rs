use super::layout::{FieldKind, FieldLayout, MessageLayout};
use super::{DynamicValue, WireError, WireReader};
use crate::msg::{Arity, MsgSpec, Primitive, SchemaRegistry};

#[derive(Clone, Copy)]
enum Seg<'a> {
    Field(&'a str),
    Index(usize),
}

struct Path<'a>(Vec<Seg<'a>>);

impl<'a> Path<'a> {
    fn render(&self) -> String {
        let mut out = String::new();
        for seg in &self.0 {
            match seg {
                Seg::Field(name) => {
                    if !out.is_empty() {
                        out.push('.');
                    }
                    out.push_str(name);
                }
                Seg::Index(i) => out.push_str(&format!("[{i}]")),
            }
        }
        if out.is_empty() {
            out.push_str("<root>");
        }
        out
    }

    fn mismatch(&self, expected: impl Into<String>, found: &DynamicValue) -> WireError {
        WireError::SchemaMismatch {
            path: self.render(),
            expected: expected.into(),
            found: found.kind_name().to_string(),
        }
    }
}

/// Exact encoded size; also validates conformance.
pub fn serialized_size(layout: &MessageLayout, value: &DynamicValue) -> Result<usize, WireError> {
    size_message(layout, value, &mut Path(Vec::new()))
}

pub fn serialize(layout: &MessageLayout, value: &DynamicValue) -> Result<Vec<u8>, WireError> {
    let mut out = Vec::with_capacity(serialized_size(layout, value)?);
    serialize_into(layout, value, &mut out)?;
    Ok(out)
}

pub fn serialize_into(layout: &MessageLayout, value: &DynamicValue, out: &mut Vec<u8>) -> Result<(), WireError> {
    encode_message(layout, value, out, &mut Path(Vec::new()))
}

/// Decodes exactly one message body; leftover bytes are an error.
pub fn deserialize(layout: &MessageLayout, bytes: &[u8]) -> Result<DynamicValue, WireError> {
    let mut r = WireReader::new(bytes);
    let v = decode_message(layout, &mut r, &mut Path(Vec::new()))?;
    r.finish()?;
    Ok(v)
}

pub fn serialized_size_spec(spec: &MsgSpec, value: &DynamicValue, registry: &SchemaRegistry) -> Result<usize, WireError> {
    serialized_size(&*MessageLayout::from_spec(spec, registry)?, value)
}

pub fn serialize_spec(spec: &MsgSpec, value: &DynamicValue, registry: &SchemaRegistry) -> Result<Vec<u8>, WireError> {
    serialize(&*MessageLayout::from_spec(spec, registry)?, value)
}

pub fn deserialize_spec(spec: &MsgSpec, bytes: &[u8], registry: &SchemaRegistry) -> Result<DynamicValue, WireError> {
    deserialize(&*MessageLayout::from_spec(spec, registry)?, bytes)
}

fn record_fields<'v, 'p>(
    layout: &'p MessageLayout,
    value: &'v DynamicValue,
    path: &Path<'p>,
) -> Result<&'v [(String, DynamicValue)], WireError> {
    let DynamicValue::Record(fields) = value else {
        return Err(path.mismatch(layout.type_name.clone(), value));
    };
    if fields.len() != layout.fields.len()
        || fields.iter().zip(&layout.fields).any(|((n, _), f)| *n != f.name)
    {
        let got: Vec<&str> = fields.iter().map(|(n, _)| n.as_str()).collect();
        let want: Vec<&str> = layout.fields.iter().map(|f| f.name.as_str()).collect();
        return Err(WireError::SchemaMismatch {
            path: path.render(),
            expected: format!("{} fields {:?}", layout.type_name, want),
            found: format!("fields {got:?}"),
        });
    }
    Ok(fields)
}

fn size_message<'p>(layout: &'p MessageLayout, value: &DynamicValue, path: &mut Path<'p>) -> Result<usize, WireError> {
    let fields = record_fields(layout, value, path)?;
    let mut total = 0;
    for (f, (_, v)) in layout.fields.iter().zip(fields) {
        path.0.push(Seg::Field(&f.name));
        total += size_field(f, v, path)?;
        path.0.pop();
    }
    Ok(total)
}

fn array_items<'v>(field: &FieldLayout, value: &'v DynamicValue, path: &Path<'_>) -> Result<ArrayView<'v>, WireError> {
    let view = match value {
        DynamicValue::Bytes(b) if field.kind.is_byte() => ArrayView::Bytes(b),
        DynamicValue::Seq(items) => ArrayView::Items(items),
        other => return Err(path.mismatch(field.type_label(), other)),
    };
    if let Arity::Fixed(n) = field.arity {
        if view.len() != n {
            return Err(WireError::SchemaMismatch {
                path: path.render(),
                expected: field.type_label(),
                found: format!("array of length {}", view.len()),
            });
        }
    }
    Ok(view)
}

enum ArrayView<'v> {
    Bytes(&'v [u8]),
    Items(&'v [DynamicValue]),
}

impl ArrayView<'_> {
    fn len(&self) -> usize {
        match self {
            ArrayView::Bytes(b) => b.len(),
            ArrayView::Items(i) => i.len(),
        }
    }
}

fn size_field<'p>(field: &'p FieldLayout, value: &DynamicValue, path: &mut Path<'p>) -> Result<usize, WireError> {
    if field.arity == Arity::Scalar {
        return size_element(&field.kind, value, path);
    }
    let prefix = if field.arity == Arity::Var { 4 } else { 0 };
    match array_items(field, value, path)? {
        ArrayView::Bytes(b) => Ok(prefix + b.len()),
        ArrayView::Items(items) => {
            let mut total = prefix;
            if let FieldKind::Primitive(p) = &field.kind {
                if let Some(sz) = p.fixed_size() {
                    // Still type-check every element.
                    for (i, item) in items.iter().enumerate() {
                        path.0.push(Seg::Index(i));
                        check_primitive(*p, item, path)?;
                        path.0.pop();
                    }
                    return Ok(total + sz * items.len());
                }
            }
            for (i, item) in items.iter().enumerate() {
                path.0.push(Seg::Index(i));
                total += size_element(&field.kind, item, path)?;
                path.0.pop();
            }
            Ok(total)
        }
    }
}

fn size_element<'p>(kind: &'p FieldKind, value: &DynamicValue, path: &mut Path<'p>) -> Result<usize, WireError> {
    match kind {
        FieldKind::Message(m) => size_message(m, value, path),
        FieldKind::Primitive(p) => {
            check_primitive(*p, value, path)?;
            Ok(match value {
                DynamicValue::Str(s) => 4 + s.len(),
                _ => p.fixed_size().expect("non-string primitive"),
            })
        }
    }
}

fn check_primitive(p: Primitive, value: &DynamicValue, path: &Path<'_>) -> Result<(), WireError> {
    let ok = matches!(
        (p, value),
        (Primitive::Bool, DynamicValue::Bool(_))
            | (Primitive::Int8, DynamicValue::I8(_))
            | (Primitive::UInt8, DynamicValue::U8(_))
            | (Primitive::Int16, DynamicValue::I16(_))
            | (Primitive::UInt16, DynamicValue::U16(_))
            | (Primitive::Int32, DynamicValue::I32(_))
            | (Primitive::UInt32, DynamicValue::U32(_))
            | (Primitive::Int64, DynamicValue::I64(_))
            | (Primitive::UInt64, DynamicValue::U64(_))
            | (Primitive::Float32, DynamicValue::F32(_))
            | (Primitive::Float64, DynamicValue::F64(_))
            | (Primitive::String, DynamicValue::Str(_))
            | (Primitive::Time, DynamicValue::Time(_))
            | (Primitive::Duration, DynamicValue::Duration(_))
    );
    if ok {
        Ok(())
    } else {
        Err(path.mismatch(p.name(), value))
    }
}

fn encode_message<'p>(layout: &'p MessageLayout, value: &DynamicValue, out: &mut Vec<u8>, path: &mut Path<'p>) -> Result<(), WireError> {
    let fields = record_fields(layout, value, path)?;
    for (f, (_, v)) in layout.fields.iter().zip(fields) {
        path.0.push(Seg::Field(&f.name));
        encode_field(f, v, out, path)?;
        path.0.pop();
    }
    Ok(())
}

fn encode_field<'p>(field: &'p FieldLayout, value: &DynamicValue, out: &mut Vec<u8>, path: &mut Path<'p>) -> Result<(), WireError> {
    if field.arity == Arity::Scalar {
        return encode_element(&field.kind, value, out, path);
    }
    let view = array_items(field, value, path)?;
    if field.arity == Arity::Var {
        out.extend_from_slice(&(view.len() as u32).to_le_bytes());
    }
    match view {
        ArrayView::Bytes(b) => out.extend_from_slice(b),
        ArrayView::Items(items) => {
            for (i, item) in items.iter().enumerate() {
                path.0.push(Seg::Index(i));
                encode_element(&field.kind, item, out, path)?;
                path.0.pop();
            }
        }
    }
    Ok(())
}

fn encode_element<'p>(kind: &'p FieldKind, value: &DynamicValue, out: &mut Vec<u8>, path: &mut Path<'p>) -> Result<(), WireError> {
    let p = match kind {
        FieldKind::Message(m) => return encode_message(m, value, out, path),
        FieldKind::Primitive(p) => *p,
    };
    check_primitive(p, value, path)?;
    match value {
        DynamicValue::Bool(v) => out.push(u8::from(*v)),
        DynamicValue::I8(v) => out.extend_from_slice(&v.to_le_bytes()),
        DynamicValue::U8(v) => out.push(*v),
        DynamicValue::I16(v) => out.extend_from_slice(&v.to_le_bytes()),
        DynamicValue::U16(v) => out.extend_from_slice(&v.to_le_bytes()),
        DynamicValue::I32(v) => out.extend_from_slice(&v.to_le_bytes()),
        DynamicValue::U32(v) => out.extend_from_slice(&v.to_le_bytes()),
        DynamicValue::I64(v) => out.extend_from_slice(&v.to_le_bytes()),
        DynamicValue::U64(v) => out.extend_from_slice(&v.to_le_bytes()),
        DynamicValue::F32(v) => out.extend_from_slice(&v.to_le_bytes()),
        DynamicValue::F64(v) => out.extend_from_slice(&v.to_le_bytes()),
        DynamicValue::Str(s) => {
            out.extend_from_slice(&(s.len() as u32).to_le_bytes());
            out.extend_from_slice(s.as_bytes());
        }
        DynamicValue::Time(t) => {
            out.extend_from_slice(&t.sec.to_le_bytes());
            out.extend_from_slice(&t.nsec.to_le_bytes());
        }
        DynamicValue::Duration(d) => {
            out.extend_from_slice(&d.sec.to_le_bytes());
            out.extend_from_slice(&d.nsec.to_le_bytes());
        }
        DynamicValue::Bytes(_) | DynamicValue::Seq(_) | DynamicValue::Record(_) => {
            unreachable!("check_primitive rejects containers")
        }
    }
    Ok(())
}

fn decode_message<'p>(layout: &'p MessageLayout, r: &mut WireReader<'_>, path: &mut Path<'p>) -> Result<DynamicValue, WireError> {
    let mut fields = Vec::with_capacity(layout.fields.len());
    for f in &layout.fields {
        path.0.push(Seg::Field(&f.name));
        let v = decode_field(f, r, path)?;
        path.0.pop();
        fields.push((f.name.clone(), v));
    }
    Ok(DynamicValue::Record(fields))
}

fn decode_field<'p>(field: &'p FieldLayout, r: &mut WireReader<'_>, path: &mut Path<'p>) -> Result<DynamicValue, WireError> {
    let count = match field.arity {
        Arity::Scalar => return decode_element(&field.kind, r, path),
        Arity::Var => r.read_len(field.kind.min_size())?,
        Arity::Fixed(n) => {
            let needed = n.saturating_mul(field.kind.min_size().max(1));
            if needed > r.remaining() {
                return Err(WireError::Truncated { offset: r.position() });
            }
            n
        }
    };
    if field.kind.is_byte() {
        return Ok(DynamicValue::Bytes(r.take(count)?.to_vec()));
    }
    let mut items = Vec::with_capacity(count);
    for i in 0..count {
        path.0.push(Seg::Index(i));
        items.push(decode_element(&field.kind, r, path)?);
        path.0.pop();
    }
    Ok(DynamicValue::Seq(items))
}

fn decode_element<'p>(kind: &'p FieldKind, r: &mut WireReader<'_>, path: &mut Path<'p>) -> Result<DynamicValue, WireError> {
    let p = match kind {
        FieldKind::Message(m) => return decode_message(m, r, path),
        FieldKind::Primitive(p) => *p,
    };
    Ok(match p {
        Primitive::Bool => DynamicValue::Bool(r.read_bool()?),
        Primitive::Int8 => DynamicValue::I8(r.read_i8()?),
        Primitive::UInt8 => DynamicValue::U8(r.read_u8()?),
        Primitive::Int16 => DynamicValue::I16(r.read_i16()?),
        Primitive::UInt16 => DynamicValue::U16(r.read_u16()?),
        Primitive::Int32 => DynamicValue::I32(r.read_i32()?),
        Primitive::UInt32 => DynamicValue::U32(r.read_u32()?),
        Primitive::Int64 => DynamicValue::I64(r.read_i64()?),
        Primitive::UInt64 => DynamicValue::U64(r.read_u64()?),
        Primitive::Float32 => DynamicValue::F32(r.read_f32()?),
        Primitive::Float64 => DynamicValue::F64(r.read_f64()?),
        Primitive::String => DynamicValue::Str(r.read_string_at(&|| path.render())?),
        Primitive::Time => DynamicValue::Time(r.read_time()?),
        Primitive::Duration => DynamicValue::Duration(r.read_duration()?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::msg::parse_msg;

    fn layout(name: &str) -> std::sync::Arc<MessageLayout> {
        MessageLayout::resolve(&SchemaRegistry::with_corpus(), name).unwrap()
    }

    #[test]
    fn int32_bytes() {
        let l = layout("std_msgs/Int32");
        let v = DynamicValue::Record(vec![("data".into(), DynamicValue::I32(7))]);
        assert_eq!(serialized_size(&l, &v).unwrap(), 4);
        assert_eq!(serialize(&l, &v).unwrap(), [7, 0, 0, 0]);
        assert_eq!(deserialize(&l, &[7, 0, 0, 0]).unwrap(), v);
    }

    #[test]
    fn string_bytes() {
        let l = layout("std_msgs/String");
        let empty = l.default_value();
        assert_eq!(serialized_size(&l, &empty).unwrap(), 4);
        let v = DynamicValue::Record(vec![("data".into(), DynamicValue::Str("ab".into()))]);
        assert_eq!(serialize(&l, &v).unwrap(), [2, 0, 0, 0, b'a', b'b']);
    }

    #[test]
    fn fixed_array_has_no_prefix() {
        let l = layout("geometry_msgs/PoseWithCovariance");
        let v = l.default_value();
        assert_eq!(serialized_size(&l, &v).unwrap(), 7 * 8 + 36 * 8);
        let mut wrong = v.clone();
        *wrong.field_mut("covariance").unwrap() = DynamicValue::Seq(vec![DynamicValue::F64(0.0); 35]);
        assert!(matches!(serialize(&l, &wrong), Err(WireError::SchemaMismatch { path, .. }) if path == "covariance"));
    }

    #[test]
    fn mismatch_reports_nested_path() {
        let l = layout("geometry_msgs/Twist");
        let mut v = l.default_value();
        *v.field_mut("linear").unwrap().field_mut("y").unwrap() = DynamicValue::I32(1);
        match serialize(&l, &v) {
            Err(WireError::SchemaMismatch { path, expected, found }) => {
                assert_eq!(path, "linear.y");
                assert_eq!(expected, "float64");
                assert_eq!(found, "int32");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn byte_arrays_accept_seq_form() {
        let l = layout("std_msgs/UInt8MultiArray");
        let mut v = l.default_value();
        *v.field_mut("data").unwrap() = DynamicValue::Seq(vec![DynamicValue::U8(1), DynamicValue::U8(2)]);
        let bytes = serialize(&l, &v).unwrap();
        let back = deserialize(&l, &bytes).unwrap();
        assert_eq!(back.field("data"), Some(&DynamicValue::Bytes(vec![1, 2])));
    }

    #[test]
    fn decode_errors() {
        let l = layout("std_msgs/String");
        assert_eq!(deserialize(&l, &[1, 0]), Err(WireError::Truncated { offset: 0 }));
        assert!(matches!(deserialize(&l, &[9, 0, 0, 0, b'a']), Err(WireError::LengthOverrun { declared: 9, .. })));
        assert_eq!(deserialize(&l, &[0, 0, 0, 0, 1]), Err(WireError::TrailingBytes(1)));
        assert_eq!(
            deserialize(&l, &[1, 0, 0, 0, 0xff]),
            Err(WireError::InvalidUtf8 { path: "data".into() })
        );
        let js = layout("sensor_msgs/JointState");
        let mut bad = serialize(&js, &js.default_value()).unwrap();
        // name[] count = 1 with a one-byte invalid string
        let at = 4 + 8 + 4;
        bad.splice(at..at + 4, [1, 0, 0, 0, 1, 0, 0, 0, 0xfe]);
        assert_eq!(deserialize(&js, &bad), Err(WireError::InvalidUtf8 { path: "name[0]".into() }));
    }

    #[test]
    fn array_of_empty_messages_is_bounded() {
        let mut reg = SchemaRegistry::with_corpus();
        reg.insert(parse_msg("std_msgs/Empty[] items", "p", "Many").unwrap());
        let l = MessageLayout::resolve(&reg, "p/Many").unwrap();
        assert!(matches!(deserialize(&l, &[0xff, 0xff, 0xff, 0xff]), Err(WireError::LengthOverrun { .. })));
        let v = deserialize(&l, &[2, 0, 0, 0, 0, 0]);
        assert!(v.is_err(), "trailing bytes are not consumed by empty elements");
    }
}
