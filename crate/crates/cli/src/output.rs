//! Human and JSON renderings. JSON mode prints exactly one document per
//! successful invocation; human mode prints whatever reads best.

use std::io::Write;

use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputMode {
    Human,
    Json,
}

#[derive(Debug, Clone, Copy)]
pub struct Output {
    pub mode: OutputMode,
}

impl Output {
    pub fn is_json(&self) -> bool {
        self.mode == OutputMode::Json
    }

    /// Prints `doc` in JSON mode, `human()` otherwise.
    pub fn emit(&self, doc: &Value, human: impl FnOnce() -> String) {
        let text = if self.is_json() { doc.to_string() } else { human() };
        line(&text);
    }
}

/// Writes one line to stdout and flushes, ignoring a closed pipe.
pub fn line(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
    let _ = out.flush();
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(Value::String(s.clone()).to_string()),
        Value::Array(a) if a.is_empty() => Some("[]".into()),
        Value::Object(o) if o.is_empty() => Some("{}".into()),
        _ => None,
    }
}

/// Indented `key: value` text in the style of ROS echo output. Arrays of
/// scalars stay on one line; arrays of records become `-` items.
pub fn format_message(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out.trim_end().to_string()
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(fields) => {
            for (k, fv) in fields {
                write_entry(out, &pad, k, fv, indent);
            }
        }
        other => {
            out.push_str(&pad);
            out.push_str(&scalar(other).unwrap_or_else(|| other.to_string()));
            out.push('\n');
        }
    }
}

fn write_entry(out: &mut String, pad: &str, key: &str, v: &Value, indent: usize) {
    if let Some(s) = scalar(v) {
        out.push_str(&format!("{pad}{key}: {s}\n"));
        return;
    }
    match v {
        Value::Array(items) if items.iter().all(|i| scalar(i).is_some()) => {
            let parts: Vec<_> = items.iter().filter_map(scalar).collect();
            out.push_str(&format!("{pad}{key}: [{}]\n", parts.join(", ")));
        }
        Value::Array(items) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for item in items {
                let mut nested = String::new();
                write_value(&mut nested, item, indent + 2);
                // Turn the first line's indentation into the item marker.
                let marker = format!("{pad}  - ");
                let body = nested.trim_start_matches(' ');
                out.push_str(&marker);
                out.push_str(body);
            }
        }
        Value::Object(_) => {
            out.push_str(&format!("{pad}{key}:\n"));
            write_value(out, v, indent + 1);
        }
        _ => unreachable!("scalars handled above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn nested_records_are_indented() {
        let v = json!({"header": {"seq": 1, "frame_id": "map"}, "data": [1, 2], "points": [{"x": 1.0}, {"x": 2.0}]});
        assert_eq!(
            format_message(&v),
            "header:\n  seq: 1\n  frame_id: \"map\"\ndata: [1, 2]\npoints:\n  - x: 1.0\n  - x: 2.0"
        );
        assert_eq!(format_message(&json!({"data": 7})), "data: 7");
    }
}
