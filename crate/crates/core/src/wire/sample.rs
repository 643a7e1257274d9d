//! Random schema-conforming values for property tests and benchmarks.

use rand::Rng;

use super::layout::{FieldKind, FieldLayout, MessageLayout};
use super::{DynamicValue, Duration, Time};
use crate::msg::{Arity, Primitive};

#[derive(Debug, Clone, Copy)]
pub struct SampleLimits {
    pub max_array: usize,
    pub max_string: usize,
}

impl Default for SampleLimits {
    fn default() -> Self {
        SampleLimits {
            max_array: 8,
            max_string: 12,
        }
    }
}

/// A random value conforming to `layout`. Floats are always finite so
/// values compare equal after a round trip.
pub fn random_value<R: Rng + ?Sized>(layout: &MessageLayout, rng: &mut R, limits: SampleLimits) -> DynamicValue {
    DynamicValue::Record(
        layout
            .fields
            .iter()
            .map(|f| (f.name.clone(), random_field(f, rng, limits)))
            .collect(),
    )
}

fn random_field<R: Rng + ?Sized>(field: &FieldLayout, rng: &mut R, limits: SampleLimits) -> DynamicValue {
    let n = match field.arity {
        Arity::Scalar => return random_element(&field.kind, rng, limits),
        Arity::Fixed(n) => n,
        Arity::Var => rng.gen_range(0..=limits.max_array),
    };
    if field.kind.is_byte() {
        return DynamicValue::Bytes((0..n).map(|_| rng.gen()).collect());
    }
    DynamicValue::Seq((0..n).map(|_| random_element(&field.kind, rng, limits)).collect())
}

fn random_element<R: Rng + ?Sized>(kind: &FieldKind, rng: &mut R, limits: SampleLimits) -> DynamicValue {
    let p = match kind {
        FieldKind::Message(m) => return random_value(m, rng, limits),
        FieldKind::Primitive(p) => *p,
    };
    match p {
        Primitive::Bool => DynamicValue::Bool(rng.gen()),
        Primitive::Int8 => DynamicValue::I8(rng.gen()),
        Primitive::UInt8 => DynamicValue::U8(rng.gen()),
        Primitive::Int16 => DynamicValue::I16(rng.gen()),
        Primitive::UInt16 => DynamicValue::U16(rng.gen()),
        Primitive::Int32 => DynamicValue::I32(rng.gen()),
        Primitive::UInt32 => DynamicValue::U32(rng.gen()),
        Primitive::Int64 => DynamicValue::I64(rng.gen()),
        Primitive::UInt64 => DynamicValue::U64(rng.gen()),
        Primitive::Float32 => DynamicValue::F32(finite_f32(rng)),
        Primitive::Float64 => DynamicValue::F64(finite_f64(rng)),
        Primitive::String => {
            let len = rng.gen_range(0..=limits.max_string);
            DynamicValue::Str((0..len).map(|_| rng.gen::<char>()).collect())
        }
        Primitive::Time => DynamicValue::Time(Time {
            sec: rng.gen(),
            nsec: rng.gen(),
        }),
        Primitive::Duration => DynamicValue::Duration(Duration {
            sec: rng.gen(),
            nsec: rng.gen(),
        }),
    }
}

fn finite_f32<R: Rng + ?Sized>(rng: &mut R) -> f32 {
    loop {
        let v = f32::from_bits(rng.gen());
        if v.is_finite() {
            return v;
        }
    }
}

fn finite_f64<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    loop {
        let v = f64::from_bits(rng.gen());
        if v.is_finite() {
            return v;
        }
    }
}
