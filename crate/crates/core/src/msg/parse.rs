use std::collections::HashSet;

use super::{
    is_identifier, Arity, ConstValue, ConstantSpec, FieldSpec, MsgSpec, Primitive, SchemaError,
    SrvSpec, TypeRef,
};

fn syntax(line: usize, reason: impl Into<String>) -> SchemaError {
    SchemaError::Syntax {
        line,
        reason: reason.into(),
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(idx) => &line[..idx],
        None => line,
    }
}

/// Parses a `.msg` body. `package` provides the context for unqualified
/// type names; `Header` always means `std_msgs/Header`.
pub fn parse_msg(text: &str, package: &str, name: &str) -> Result<MsgSpec, SchemaError> {
    if !is_identifier(package) || !is_identifier(name) {
        return Err(SchemaError::InvalidTypeName(format!("{package}/{name}")));
    }
    let mut fields = Vec::new();
    let mut constants = Vec::new();
    let mut seen = HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let clean = strip_comment(raw).trim();
        if clean.is_empty() {
            continue;
        }
        if clean.contains('=') {
            let constant = parse_constant(raw, clean, line_no)?;
            if !seen.insert(constant.name.clone()) {
                return Err(syntax(line_no, format!("duplicate name {}", constant.name)));
            }
            constants.push(constant);
        } else {
            let field = parse_field(clean, package, line_no)?;
            if !seen.insert(field.name.clone()) {
                return Err(syntax(line_no, format!("duplicate name {}", field.name)));
            }
            fields.push(field);
        }
    }

    Ok(MsgSpec {
        package: package.to_string(),
        name: name.to_string(),
        fields,
        constants,
        source_text: text.to_string(),
    })
}

/// Byte-level entry point; invalid UTF-8 is reported as a syntax error.
pub fn parse_msg_bytes(bytes: &[u8], package: &str, name: &str) -> Result<MsgSpec, SchemaError> {
    let text = std::str::from_utf8(bytes).map_err(|e| {
        let line = bytes[..e.valid_up_to()].iter().filter(|&&b| b == b'\n').count() + 1;
        syntax(line, "invalid UTF-8")
    })?;
    parse_msg(text, package, name)
}

/// Parses a `.srv` body, splitting at the first line starting with `---`.
pub fn parse_srv(text: &str, package: &str, name: &str) -> Result<SrvSpec, SchemaError> {
    let mut request = String::new();
    let mut response = String::new();
    let mut in_response = false;
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        if !in_response && line.starts_with("---") {
            in_response = true;
            offset = request.lines().count() + 1;
            continue;
        }
        if in_response {
            response.push_str(line);
        } else {
            request.push_str(line);
        }
    }
    if !in_response {
        return Err(syntax(text.lines().count().max(1), "service definition has no '---' separator"));
    }
    let request = parse_msg(&request, package, &format!("{name}Request"))?;
    let response = parse_msg(&response, package, &format!("{name}Response")).map_err(|e| match e {
        SchemaError::Syntax { line, reason } => SchemaError::Syntax {
            line: line + offset,
            reason,
        },
        SchemaError::Range { line, reason } => SchemaError::Range {
            line: line + offset,
            reason,
        },
        other => other,
    })?;
    Ok(SrvSpec {
        package: package.to_string(),
        name: name.to_string(),
        request,
        response,
    })
}

fn parse_type_token(token: &str, package: &str, line: usize) -> Result<(TypeRef, Arity, String), SchemaError> {
    let (base, arity) = match token.find('[') {
        Some(open) => {
            let inner = token[open + 1..]
                .strip_suffix(']')
                .ok_or_else(|| syntax(line, format!("malformed array type {token:?}")))?;
            let arity = if inner.is_empty() {
                Arity::Var
            } else {
                let n: usize = inner
                    .parse()
                    .map_err(|_| syntax(line, format!("bad array length {inner:?}")))?;
                if n == 0 {
                    return Err(syntax(line, "fixed array length must be positive"));
                }
                Arity::Fixed(n)
            };
            (&token[..open], arity)
        }
        None => (token, Arity::Scalar),
    };

    if let Some(p) = Primitive::from_name(base) {
        return Ok((TypeRef::Builtin(p), arity, base.to_string()));
    }
    let ty = match base.split_once('/') {
        Some((pkg, name)) => {
            if !is_identifier(pkg) || !is_identifier(name) {
                return Err(syntax(line, format!("invalid type {base:?}")));
            }
            TypeRef::Named {
                package: pkg.to_string(),
                name: name.to_string(),
            }
        }
        None if base == "Header" => TypeRef::Named {
            package: "std_msgs".to_string(),
            name: "Header".to_string(),
        },
        None if is_identifier(base) => TypeRef::Named {
            package: package.to_string(),
            name: base.to_string(),
        },
        None => return Err(syntax(line, format!("invalid type {base:?}"))),
    };
    Ok((ty, arity, base.to_string()))
}

fn parse_field(clean: &str, package: &str, line: usize) -> Result<FieldSpec, SchemaError> {
    let tokens: Vec<&str> = clean.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(syntax(line, format!("expected '<type> <name>', got {clean:?}")));
    }
    let (ty, arity, spelling) = parse_type_token(tokens[0], package, line)?;
    let name = tokens[1];
    if !is_identifier(name) {
        return Err(syntax(line, format!("invalid field name {name:?}")));
    }
    Ok(FieldSpec {
        name: name.to_string(),
        ty,
        arity,
        spelling,
    })
}

fn parse_constant(raw: &str, clean: &str, line: usize) -> Result<ConstantSpec, SchemaError> {
    let (lhs, _) = clean.split_once('=').expect("caller checked '='");
    let tokens: Vec<&str> = lhs.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(syntax(line, format!("expected '<type> <NAME>=<value>', got {clean:?}")));
    }
    let spelling = tokens[0];
    let name = tokens[1];
    let ty = match Primitive::from_name(spelling) {
        Some(Primitive::Time) | Some(Primitive::Duration) | None => {
            return Err(syntax(line, format!("constants cannot have type {spelling:?}")))
        }
        Some(p) => p,
    };
    if !is_identifier(name) {
        return Err(syntax(line, format!("invalid constant name {name:?}")));
    }

    // String values run to end of line and may contain '#'.
    let value_text = if ty == Primitive::String {
        let idx = raw.find('=').expect("raw line contains '='");
        raw[idx + 1..].trim().to_string()
    } else {
        clean.split_once('=').map(|(_, v)| v.trim().to_string()).unwrap_or_default()
    };
    let value = convert_constant(ty, &value_text, line)?;
    Ok(ConstantSpec {
        name: name.to_string(),
        ty,
        spelling: spelling.to_string(),
        value_text,
        value,
    })
}

fn convert_constant(ty: Primitive, text: &str, line: usize) -> Result<ConstValue, SchemaError> {
    let range_err = || SchemaError::Range {
        line,
        reason: format!("{text:?} does not fit {}", ty.name()),
    };
    let signed = |min: i64, max: i64| -> Result<ConstValue, SchemaError> {
        let v: i128 = text
            .parse()
            .map_err(|_| syntax(line, format!("{text:?} is not an integer")))?;
        if v < min as i128 || v > max as i128 {
            return Err(range_err());
        }
        Ok(ConstValue::Int(v as i64))
    };
    let unsigned = |max: u64| -> Result<ConstValue, SchemaError> {
        let v: i128 = text
            .parse()
            .map_err(|_| syntax(line, format!("{text:?} is not an integer")))?;
        if v < 0 || v > max as i128 {
            return Err(range_err());
        }
        Ok(ConstValue::UInt(v as u64))
    };
    match ty {
        Primitive::Bool => match text {
            "true" | "True" | "1" => Ok(ConstValue::Bool(true)),
            "false" | "False" | "0" => Ok(ConstValue::Bool(false)),
            _ => Err(syntax(line, format!("{text:?} is not a bool"))),
        },
        Primitive::Int8 => signed(i8::MIN as i64, i8::MAX as i64),
        Primitive::Int16 => signed(i16::MIN as i64, i16::MAX as i64),
        Primitive::Int32 => signed(i32::MIN as i64, i32::MAX as i64),
        Primitive::Int64 => signed(i64::MIN, i64::MAX),
        Primitive::UInt8 => unsigned(u8::MAX as u64),
        Primitive::UInt16 => unsigned(u16::MAX as u64),
        Primitive::UInt32 => unsigned(u32::MAX as u64),
        Primitive::UInt64 => unsigned(u64::MAX),
        Primitive::Float32 | Primitive::Float64 => {
            let v: f64 = text
                .parse()
                .map_err(|_| syntax(line, format!("{text:?} is not a number")))?;
            if ty == Primitive::Float32 && v.is_finite() && v.abs() > f32::MAX as f64 {
                return Err(range_err());
            }
            Ok(ConstValue::Float(v))
        }
        Primitive::String => Ok(ConstValue::Str(text.to_string())),
        Primitive::Time | Primitive::Duration => unreachable!("rejected earlier"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_field() {
        let spec = parse_msg("int32 data", "std_msgs", "Int32").unwrap();
        assert_eq!(spec.fields.len(), 1);
        assert_eq!(spec.fields[0].name, "data");
        assert_eq!(spec.fields[0].ty, TypeRef::Builtin(Primitive::Int32));
        assert_eq!(spec.fields[0].arity, Arity::Scalar);
        assert!(spec.constants.is_empty());
    }

    #[test]
    fn var_array() {
        let spec = parse_msg("uint8[] data", "p", "M").unwrap();
        assert_eq!(spec.fields[0].arity, Arity::Var);
        assert_eq!(spec.fields[0].ty, TypeRef::Builtin(Primitive::UInt8));
    }

    #[test]
    fn negative_constant_with_comment() {
        let spec = parse_msg("int32 X=-123 # comment", "p", "M").unwrap();
        assert!(spec.fields.is_empty());
        assert_eq!(spec.constants.len(), 1);
        let c = &spec.constants[0];
        assert_eq!(c.name, "X");
        assert_eq!(c.value_text, "-123");
        assert_eq!(c.value, ConstValue::Int(-123));
    }

    #[test]
    fn string_constant_keeps_hash_and_inner_spaces() {
        let spec = parse_msg("string GREETING =  hello # world  \n", "p", "M").unwrap();
        assert_eq!(spec.constants[0].value_text, "hello # world");
    }

    #[test]
    fn aliases_keep_spelling() {
        let spec = parse_msg("byte a\nchar b", "p", "M").unwrap();
        assert_eq!(spec.fields[0].ty, TypeRef::Builtin(Primitive::Int8));
        assert_eq!(spec.fields[0].spelling, "byte");
        assert_eq!(spec.fields[1].ty, TypeRef::Builtin(Primitive::UInt8));
    }

    #[test]
    fn header_and_package_resolution() {
        let spec = parse_msg("Header header\nPose p\ngeometry_msgs/Point q\nstd_msgs/Header h2", "geometry_msgs", "X").unwrap();
        assert_eq!(spec.fields[0].ty.full_name(), "std_msgs/Header");
        assert_eq!(spec.fields[1].ty.full_name(), "geometry_msgs/Pose");
        assert_eq!(spec.fields[2].ty.full_name(), "geometry_msgs/Point");
        assert_eq!(spec.fields[3].ty.full_name(), "std_msgs/Header");
    }

    #[test]
    fn range_errors() {
        assert!(matches!(parse_msg("uint8 X=256", "p", "M"), Err(SchemaError::Range { line: 1, .. })));
        assert!(matches!(parse_msg("int8 X=-129", "p", "M"), Err(SchemaError::Range { .. })));
        assert!(matches!(parse_msg("uint32 X=-1", "p", "M"), Err(SchemaError::Range { .. })));
        assert!(parse_msg("int64 X=-9223372036854775808", "p", "M").is_ok());
    }

    #[test]
    fn syntax_errors() {
        for bad in [
            "int32",
            "int32 a b",
            "int32[0] a",
            "int32[x] a",
            "int32 1a",
            "time T=3",
            "int32 a\nint32 a",
            "foo/ bar",
            "int32[ a",
        ] {
            assert!(matches!(parse_msg(bad, "p", "M"), Err(SchemaError::Syntax { .. })), "{bad}");
        }
        match parse_msg("int32 a\n\n bogus", "p", "M") {
            Err(SchemaError::Syntax { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn srv_split() {
        let srv = parse_srv("int64 a\nint64 b\n---\nint64 sum\n", "roscpp_tutorials", "TwoInts").unwrap();
        assert_eq!(srv.request.fields.len(), 2);
        assert_eq!(srv.response.fields.len(), 1);
        assert_eq!(srv.request.name, "TwoIntsRequest");
        let empty = parse_srv("---\n", "std_srvs", "Empty").unwrap();
        assert!(empty.request.fields.is_empty() && empty.response.fields.is_empty());
        assert!(parse_srv("int32 a\n", "p", "S").is_err());
        match parse_srv("int32 a\n---\nbogus", "p", "S") {
            Err(SchemaError::Syntax { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn invalid_utf8_is_syntax_error() {
        assert!(matches!(parse_msg_bytes(b"int32 a\n\xff\xfe", "p", "M"), Err(SchemaError::Syntax { line: 2, .. })));
    }

    proptest::proptest! {
        #[test]
        fn parser_is_total(bytes in proptest::collection::vec(proptest::num::u8::ANY, 0..512)) {
            let _ = parse_msg_bytes(&bytes, "p", "M");
        }

        #[test]
        fn parser_total_on_token_soup(parts in proptest::collection::vec(
            proptest::sample::select(vec!["int32", " ", "a", "[", "]", "3", "=", "#", "\n", "string", "/", "Header", "-", "x"]), 0..64)) {
            let text: String = parts.concat();
            let _ = parse_msg(&text, "p", "M");
        }
    }
}
