//! Schema-driven mapping between [`DynamicValue`] and JSON.
//!
//! - integers are JSON numbers while `|v| <= 2^53`, decimal strings beyond
//! - floats are numbers; NaN and the infinities are `"nan"`, `"inf"`, `"-inf"`
//! - `uint8` arrays (fixed or variable) are base64 strings
//! - `time` and `duration` are `{"sec": .., "nsec": ..}`
//! - records are objects with fields in definition order
//!
//! Decoding reverses the mapping against the same layout: missing fields
//! take their zero value and unknown fields are rejected by path.

use base64::engine::general_purpose::STANDARD as BASE64;
use base64::Engine;
use serde_json::{Map, Number, Value};

use super::BridgeError;
use crate::msg::{Arity, Primitive};
use crate::wire::{self, DynamicValue, Duration, FieldKind, FieldLayout, MessageLayout, Time};

/// Largest magnitude an IEEE double represents exactly as an integer.
pub const MAX_SAFE_INTEGER: u64 = 1 << 53;

fn mismatch(path: &str, reason: impl Into<String>) -> BridgeError {
    BridgeError::SchemaMismatch {
        path: if path.is_empty() { "<root>".into() } else { path.to_string() },
        reason: reason.into(),
    }
}

fn join(path: &str, field: &str) -> String {
    if path.is_empty() {
        field.to_string()
    } else {
        format!("{path}.{field}")
    }
}

// ---- encoding ----

/// Encodes `value` as JSON following `layout`.
pub fn to_json(layout: &MessageLayout, value: &DynamicValue) -> Result<Value, BridgeError> {
    encode_record(layout, value, "")
}

fn encode_record(layout: &MessageLayout, value: &DynamicValue, path: &str) -> Result<Value, BridgeError> {
    let DynamicValue::Record(fields) = value else {
        return Err(mismatch(path, format!("expected {}, found {}", layout.type_name, value.kind_name())));
    };
    let mut out = Map::with_capacity(layout.fields.len());
    for f in &layout.fields {
        let p = join(path, &f.name);
        let v = fields
            .iter()
            .find(|(n, _)| *n == f.name)
            .map(|(_, v)| v)
            .ok_or_else(|| mismatch(&p, "field missing from value"))?;
        out.insert(f.name.clone(), encode_field(f, v, &p)?);
    }
    Ok(Value::Object(out))
}

fn encode_field(field: &FieldLayout, value: &DynamicValue, path: &str) -> Result<Value, BridgeError> {
    if field.arity == Arity::Scalar {
        return encode_element(&field.kind, value, path);
    }
    if matches!(field.kind, FieldKind::Primitive(Primitive::UInt8)) {
        return match value {
            DynamicValue::Bytes(b) => Ok(Value::String(BASE64.encode(b))),
            DynamicValue::Seq(items) => {
                let bytes = items
                    .iter()
                    .enumerate()
                    .map(|(i, v)| match v {
                        DynamicValue::U8(b) => Ok(*b),
                        other => Err(mismatch(&format!("{path}[{i}]"), format!("expected uint8, found {}", other.kind_name()))),
                    })
                    .collect::<Result<Vec<u8>, _>>()?;
                Ok(Value::String(BASE64.encode(bytes)))
            }
            other => Err(mismatch(path, format!("expected uint8 array, found {}", other.kind_name()))),
        };
    }
    let DynamicValue::Seq(items) = value else {
        return Err(mismatch(path, format!("expected {}, found {}", field.type_label(), value.kind_name())));
    };
    items
        .iter()
        .enumerate()
        .map(|(i, v)| encode_element(&field.kind, v, &format!("{path}[{i}]")))
        .collect::<Result<Vec<_>, _>>()
        .map(Value::Array)
}

fn int_json(v: i128) -> Value {
    if v.unsigned_abs() <= MAX_SAFE_INTEGER as u128 {
        Value::Number(Number::from(v as i64))
    } else {
        Value::String(v.to_string())
    }
}

fn float_json(v: f64) -> Value {
    match Number::from_f64(v) {
        Some(n) => Value::Number(n),
        None if v.is_nan() => Value::String("nan".into()),
        None if v > 0.0 => Value::String("inf".into()),
        None => Value::String("-inf".into()),
    }
}

fn encode_element(kind: &FieldKind, value: &DynamicValue, path: &str) -> Result<Value, BridgeError> {
    let p = match kind {
        FieldKind::Message(m) => return encode_record(m, value, path),
        FieldKind::Primitive(p) => *p,
    };
    let ok = match (p, value) {
        (Primitive::Bool, DynamicValue::Bool(b)) => Value::Bool(*b),
        (Primitive::Int8, DynamicValue::I8(v)) => int_json(i128::from(*v)),
        (Primitive::UInt8, DynamicValue::U8(v)) => int_json(i128::from(*v)),
        (Primitive::Int16, DynamicValue::I16(v)) => int_json(i128::from(*v)),
        (Primitive::UInt16, DynamicValue::U16(v)) => int_json(i128::from(*v)),
        (Primitive::Int32, DynamicValue::I32(v)) => int_json(i128::from(*v)),
        (Primitive::UInt32, DynamicValue::U32(v)) => int_json(i128::from(*v)),
        (Primitive::Int64, DynamicValue::I64(v)) => int_json(i128::from(*v)),
        (Primitive::UInt64, DynamicValue::U64(v)) => int_json(i128::from(*v)),
        (Primitive::Float32, DynamicValue::F32(v)) => float_json(f64::from(*v)),
        (Primitive::Float64, DynamicValue::F64(v)) => float_json(*v),
        (Primitive::String, DynamicValue::Str(s)) => Value::String(s.clone()),
        (Primitive::Time, DynamicValue::Time(t)) => stamp_json(i64::from(t.sec), i64::from(t.nsec)),
        (Primitive::Duration, DynamicValue::Duration(d)) => stamp_json(i64::from(d.sec), i64::from(d.nsec)),
        (p, v) => return Err(mismatch(path, format!("expected {}, found {}", p.name(), v.kind_name()))),
    };
    Ok(ok)
}

fn stamp_json(sec: i64, nsec: i64) -> Value {
    let mut m = Map::with_capacity(2);
    m.insert("sec".into(), Value::from(sec));
    m.insert("nsec".into(), Value::from(nsec));
    Value::Object(m)
}

// ---- decoding ----

/// Rebuilds a value of `layout` from JSON.
pub fn from_json(layout: &MessageLayout, json: &Value) -> Result<DynamicValue, BridgeError> {
    decode_record(layout, json, "")
}

fn decode_record(layout: &MessageLayout, json: &Value, path: &str) -> Result<DynamicValue, BridgeError> {
    let obj = match json {
        Value::Object(obj) => obj,
        Value::Null if path.is_empty() => return Ok(layout.default_value()),
        other => return Err(mismatch(path, format!("expected an object for {}, found {}", layout.type_name, json_kind(other)))),
    };
    if let Some(unknown) = obj.keys().find(|k| !layout.fields.iter().any(|f| &f.name == *k)) {
        return Err(BridgeError::UnknownField {
            path: join(path, unknown),
            type_name: layout.type_name.clone(),
        });
    }
    layout
        .fields
        .iter()
        .map(|f| {
            let v = match obj.get(&f.name) {
                None => f.default_value(),
                Some(j) => decode_field(f, j, &join(path, &f.name))?,
            };
            Ok((f.name.clone(), v))
        })
        .collect::<Result<Vec<_>, BridgeError>>()
        .map(DynamicValue::Record)
}

fn check_len(field: &FieldLayout, n: usize, path: &str) -> Result<(), BridgeError> {
    match field.arity {
        Arity::Fixed(want) if want != n => Err(mismatch(path, format!("expected {want} elements, found {n}"))),
        _ => Ok(()),
    }
}

fn decode_field(field: &FieldLayout, json: &Value, path: &str) -> Result<DynamicValue, BridgeError> {
    if field.arity == Arity::Scalar {
        return decode_element(&field.kind, json, path);
    }
    if matches!(field.kind, FieldKind::Primitive(Primitive::UInt8)) {
        let bytes = match json {
            Value::String(s) => BASE64
                .decode(s)
                .map_err(|e| mismatch(path, format!("invalid base64: {e}")))?,
            Value::Array(items) => items
                .iter()
                .enumerate()
                .map(|(i, j)| int_in_range(j, 0, 255, &format!("{path}[{i}]")).map(|v| v as u8))
                .collect::<Result<Vec<u8>, _>>()?,
            other => return Err(mismatch(path, format!("expected a base64 string, found {}", json_kind(other)))),
        };
        check_len(field, bytes.len(), path)?;
        return Ok(DynamicValue::Bytes(bytes));
    }
    let Value::Array(items) = json else {
        return Err(mismatch(path, format!("expected an array for {}, found {}", field.type_label(), json_kind(json))));
    };
    check_len(field, items.len(), path)?;
    items
        .iter()
        .enumerate()
        .map(|(i, j)| decode_element(&field.kind, j, &format!("{path}[{i}]")))
        .collect::<Result<Vec<_>, _>>()
        .map(DynamicValue::Seq)
}

fn json_kind(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "bool",
        Value::Number(_) => "number",
        Value::String(_) => "string",
        Value::Array(_) => "array",
        Value::Object(_) => "object",
    }
}

/// Accepts integral JSON numbers and decimal strings.
fn int_in_range(json: &Value, min: i128, max: i128, path: &str) -> Result<i128, BridgeError> {
    let v: i128 = match json {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i128::from(i)
            } else if let Some(u) = n.as_u64() {
                i128::from(u)
            } else {
                let f = n.as_f64().unwrap_or(f64::NAN);
                if f.fract() != 0.0 || f.abs() > 1.8e19 {
                    return Err(mismatch(path, format!("{f} is not an integer")));
                }
                f as i128
            }
        }
        Value::String(s) => s
            .trim()
            .parse::<i128>()
            .map_err(|_| mismatch(path, format!("{s:?} is not a decimal integer")))?,
        other => return Err(mismatch(path, format!("expected an integer, found {}", json_kind(other)))),
    };
    if v < min || v > max {
        return Err(mismatch(path, format!("{v} is outside [{min}, {max}]")));
    }
    Ok(v)
}

fn float_value(json: &Value, path: &str) -> Result<f64, BridgeError> {
    match json {
        Value::Number(n) => n.as_f64().ok_or_else(|| mismatch(path, "unrepresentable number")),
        Value::String(s) => match s.to_ascii_lowercase().as_str() {
            "nan" => Ok(f64::NAN),
            "inf" | "+inf" | "infinity" => Ok(f64::INFINITY),
            "-inf" | "-infinity" => Ok(f64::NEG_INFINITY),
            _ => s
                .trim()
                .parse::<f64>()
                .map_err(|_| mismatch(path, format!("{s:?} is not a number"))),
        },
        other => Err(mismatch(path, format!("expected a number, found {}", json_kind(other)))),
    }
}

fn stamp_parts(json: &Value, sec_range: (i128, i128), nsec_range: (i128, i128), path: &str) -> Result<(i128, i128), BridgeError> {
    let Value::Object(obj) = json else {
        return Err(mismatch(path, format!("expected {{\"sec\", \"nsec\"}}, found {}", json_kind(json))));
    };
    if let Some(k) = obj.keys().find(|k| *k != "sec" && *k != "nsec") {
        return Err(BridgeError::UnknownField {
            path: join(path, k),
            type_name: "time".into(),
        });
    }
    let part = |name: &str, (lo, hi): (i128, i128)| match obj.get(name) {
        None => Ok(0),
        Some(j) => int_in_range(j, lo, hi, &join(path, name)),
    };
    Ok((part("sec", sec_range)?, part("nsec", nsec_range)?))
}

fn decode_element(kind: &FieldKind, json: &Value, path: &str) -> Result<DynamicValue, BridgeError> {
    let p = match kind {
        FieldKind::Message(m) => return decode_record(m, json, path),
        FieldKind::Primitive(p) => *p,
    };
    const U32: (i128, i128) = (0, u32::MAX as i128);
    const I32: (i128, i128) = (i32::MIN as i128, i32::MAX as i128);
    let int = |lo: i128, hi: i128| int_in_range(json, lo, hi, path);
    Ok(match p {
        Primitive::Bool => match json {
            Value::Bool(b) => DynamicValue::Bool(*b),
            other => return Err(mismatch(path, format!("expected a bool, found {}", json_kind(other)))),
        },
        Primitive::Int8 => DynamicValue::I8(int(i8::MIN.into(), i8::MAX.into())? as i8),
        Primitive::UInt8 => DynamicValue::U8(int(0, u8::MAX.into())? as u8),
        Primitive::Int16 => DynamicValue::I16(int(i16::MIN.into(), i16::MAX.into())? as i16),
        Primitive::UInt16 => DynamicValue::U16(int(0, u16::MAX.into())? as u16),
        Primitive::Int32 => DynamicValue::I32(int(I32.0, I32.1)? as i32),
        Primitive::UInt32 => DynamicValue::U32(int(U32.0, U32.1)? as u32),
        Primitive::Int64 => DynamicValue::I64(int(i64::MIN.into(), i64::MAX.into())? as i64),
        Primitive::UInt64 => DynamicValue::U64(int(0, u64::MAX.into())? as u64),
        Primitive::Float32 => DynamicValue::F32(float_value(json, path)? as f32),
        Primitive::Float64 => DynamicValue::F64(float_value(json, path)?),
        Primitive::String => match json {
            Value::String(s) => DynamicValue::Str(s.clone()),
            other => return Err(mismatch(path, format!("expected a string, found {}", json_kind(other)))),
        },
        Primitive::Time => {
            let (sec, nsec) = stamp_parts(json, U32, U32, path)?;
            DynamicValue::Time(Time {
                sec: sec as u32,
                nsec: nsec as u32,
            })
        }
        Primitive::Duration => {
            let (sec, nsec) = stamp_parts(json, I32, I32, path)?;
            DynamicValue::Duration(Duration {
                sec: sec as i32,
                nsec: nsec as i32,
            })
        }
    })
}

// ---- overhead ----

/// Size of one value on the binary and JSON paths.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EncodingOverhead {
    pub binary_bytes: usize,
    pub json_bytes: usize,
    /// `json_bytes / binary_bytes`; infinite for an empty binary encoding.
    pub ratio: f64,
}

impl EncodingOverhead {
    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "binaryBytes": self.binary_bytes,
            "jsonBytes": self.json_bytes,
            "ratio": float_json(self.ratio),
        })
    }
}

/// Encodes `value` both ways and compares the sizes. JSON is measured in
/// its compact form, without the surrounding message frame.
pub fn measure_encoding_overhead(layout: &MessageLayout, value: &DynamicValue) -> Result<EncodingOverhead, BridgeError> {
    let binary_bytes = wire::serialized_size(layout, value)?;
    let json_bytes = serde_json::to_vec(&to_json(layout, value)?)
        .map_err(|e| mismatch("", e.to_string()))?
        .len();
    let ratio = if binary_bytes == 0 {
        f64::INFINITY
    } else {
        json_bytes as f64 / binary_bytes as f64
    };
    Ok(EncodingOverhead {
        binary_bytes,
        json_bytes,
        ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::msg::SchemaRegistry;
    use serde_json::json;

    fn layout(name: &str) -> std::sync::Arc<MessageLayout> {
        MessageLayout::resolve(&SchemaRegistry::with_corpus(), name).unwrap()
    }

    #[test]
    fn large_integers_become_strings() {
        let l = layout("std_msgs/UInt64");
        let small = DynamicValue::Record(vec![("data".into(), DynamicValue::U64(MAX_SAFE_INTEGER))]);
        let big = DynamicValue::Record(vec![("data".into(), DynamicValue::U64(MAX_SAFE_INTEGER + 1))]);
        assert_eq!(to_json(&l, &small).unwrap(), json!({"data": 9007199254740992u64}));
        assert_eq!(to_json(&l, &big).unwrap(), json!({"data": "9007199254740993"}));
        assert_eq!(from_json(&l, &json!({"data": "9007199254740993"})).unwrap(), big);
        let l = layout("std_msgs/Int64");
        let neg = DynamicValue::Record(vec![("data".into(), DynamicValue::I64(i64::MIN))]);
        assert_eq!(to_json(&l, &neg).unwrap(), json!({"data": "-9223372036854775808"}));
        assert_eq!(from_json(&l, &to_json(&l, &neg).unwrap()).unwrap(), neg);
    }

    #[test]
    fn non_finite_floats_are_strings() {
        let l = layout("std_msgs/Float64");
        for (v, s) in [(f64::NAN, "nan"), (f64::INFINITY, "inf"), (f64::NEG_INFINITY, "-inf")] {
            let value = DynamicValue::Record(vec![("data".into(), DynamicValue::F64(v))]);
            let j = to_json(&l, &value).unwrap();
            assert_eq!(j, json!({ "data": s }));
            let back = from_json(&l, &j).unwrap();
            let got = back.field("data").and_then(DynamicValue::as_f64).unwrap();
            assert!(got == v || (v.is_nan() && got.is_nan()));
        }
    }

    #[test]
    fn bytes_are_base64_and_stamps_are_objects() {
        let l = layout("std_msgs/UInt8MultiArray");
        let j = json!({"data": "AQID"});
        let v = from_json(&l, &j).unwrap();
        assert_eq!(v.field("data"), Some(&DynamicValue::Bytes(vec![1, 2, 3])));
        let arr = from_json(&l, &json!({"data": [1, 2, 3]})).unwrap();
        assert_eq!(arr, v);
        assert_eq!(to_json(&l, &v).unwrap()["data"], json!("AQID"));

        let l = layout("std_msgs/Header");
        let v = from_json(&l, &json!({"stamp": {"sec": 5, "nsec": 7}, "frame_id": "map"})).unwrap();
        assert_eq!(v.field("stamp"), Some(&DynamicValue::Time(Time { sec: 5, nsec: 7 })));
        let keys: Vec<_> = to_json(&l, &v).unwrap().as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, ["seq", "stamp", "frame_id"]);
    }

    #[test]
    fn missing_fields_default_and_unknown_fields_are_named() {
        let l = layout("geometry_msgs/Twist");
        let v = from_json(&l, &json!({"linear": {"x": 0.2}, "angular": {"z": -0.5}})).unwrap();
        assert_eq!(v.path("linear.x"), Some(&DynamicValue::F64(0.2)));
        assert_eq!(v.path("linear.y"), Some(&DynamicValue::F64(0.0)));
        assert_eq!(v.path("angular.z"), Some(&DynamicValue::F64(-0.5)));

        let err = from_json(&l, &json!({"linear": {"x": 1, "foo": 2}})).unwrap_err();
        assert!(matches!(&err, BridgeError::UnknownField { path, .. } if path == "linear.foo"), "{err}");
        assert!(err.to_string().contains("foo"));
    }

    #[test]
    fn range_and_shape_errors_carry_the_path() {
        let l = layout("sensor_msgs/Imu");
        let err = from_json(&l, &json!({"orientation_covariance": [0.0, 1.0]})).unwrap_err();
        assert!(err.to_string().contains("orientation_covariance"), "{err}");
        let l = layout("std_msgs/Int8");
        let err = from_json(&l, &json!({"data": 300})).unwrap_err();
        assert!(matches!(err, BridgeError::SchemaMismatch { ref path, .. } if path == "data"));
        assert!(from_json(&l, &json!({"data": 1.5})).is_err());
        assert!(from_json(&l, &json!([1])).is_err());
    }

    #[test]
    fn overhead_of_bytes_is_at_least_a_third() {
        let l = layout("std_msgs/UInt8MultiArray");
        let mut v = l.default_value();
        *v.field_mut("data").unwrap() = DynamicValue::Bytes(vec![7; 3000]);
        let o = measure_encoding_overhead(&l, &v).unwrap();
        assert!(o.ratio >= 4.0 / 3.0, "{o:?}");
        let empty = measure_encoding_overhead(&layout("std_msgs/Empty"), &DynamicValue::Record(vec![])).unwrap();
        assert_eq!((empty.binary_bytes, empty.json_bytes), (0, 2));
    }
}
