use base64::engine::general_purpose::STANDARD as BASE64;
use base64::Engine;
use clap::Subcommand;
use roslite::node::NodeError;
use roslite::xmlrpc::XrValue;
use serde_json::{json, Map, Number, Value};

use super::parse_json_arg;
use crate::error::{CliError, CliResult, Exit};
use crate::Ctx;

#[derive(Subcommand, Debug)]
pub enum ParamCmd {
    /// Print a parameter (or a whole namespace) as JSON.
    Get { key: String },
    /// Set a parameter from a JSON literal.
    Set { key: String, value: String },
    /// List parameter names.
    List,
    /// Delete a parameter or namespace.
    Delete { key: String },
}

fn global(key: &str) -> String {
    if key.starts_with('/') {
        key.to_string()
    } else {
        format!("/{key}")
    }
}

/// XML-RPC value → JSON. Binary becomes base64 text.
pub fn xr_to_json(v: &XrValue) -> Value {
    match v {
        XrValue::Int(i) => json!(i),
        XrValue::Bool(b) => json!(b),
        XrValue::Str(s) => json!(s),
        XrValue::Double(d) => Number::from_f64(*d).map_or_else(|| json!(d.to_string()), Value::Number),
        XrValue::Seq(items) => Value::Array(items.iter().map(xr_to_json).collect()),
        XrValue::Record(fields) => Value::Object(fields.iter().map(|(k, v)| (k.clone(), xr_to_json(v))).collect::<Map<_, _>>()),
        XrValue::Binary(b) => json!(BASE64.encode(b)),
    }
}

/// JSON → XML-RPC value. Integers outside `i32` become doubles, as the
/// protocol has no wider integer type.
pub fn json_to_xr(v: &Value) -> CliResult<XrValue> {
    Ok(match v {
        Value::Null => return Err(CliError::usage("null cannot be stored on the parameter server")),
        Value::Bool(b) => XrValue::Bool(*b),
        Value::Number(n) => match n.as_i64().and_then(|i| i32::try_from(i).ok()) {
            Some(i) => XrValue::Int(i),
            None => XrValue::Double(n.as_f64().unwrap_or(f64::NAN)),
        },
        Value::String(s) => XrValue::Str(s.clone()),
        Value::Array(items) => XrValue::Seq(items.iter().map(json_to_xr).collect::<CliResult<_>>()?),
        Value::Object(fields) => XrValue::Record(
            fields
                .iter()
                .map(|(k, v)| Ok((k.clone(), json_to_xr(v)?)))
                .collect::<CliResult<_>>()?,
        ),
    })
}

fn param_error(e: NodeError) -> CliError {
    match e {
        NodeError::ParamNotFound(k) => CliError::new(Exit::Param, format!("parameter {k} is not set")),
        NodeError::Master { method, status, .. } => CliError::new(Exit::Param, format!("{method}: {status}")),
        e => e.into(),
    }
}

pub fn run(ctx: &Ctx, cmd: ParamCmd) -> CliResult {
    let master = ctx.master()?;
    match cmd {
        ParamCmd::Get { key } => {
            let key = global(&key);
            let value = xr_to_json(&master.get_param(&key).map_err(param_error)?);
            ctx.out().emit(&json!({"key": key, "value": value}), || match &value {
                Value::String(s) => s.clone(),
                v => serde_json::to_string_pretty(v).unwrap_or_default(),
            });
        }
        ParamCmd::Set { key, value } => {
            let key = global(&key);
            // Bare words are taken as strings, like most shells users expect.
            let json = parse_json_arg("parameter value", &value).unwrap_or(Value::String(value));
            master.set_param(&key, json_to_xr(&json)?).map_err(param_error)?;
            ctx.out()
                .emit(&json!({"key": key, "value": json}), || format!("set {key}"));
        }
        ParamCmd::List => {
            let mut names = master.get_param_names().map_err(param_error)?;
            names.sort();
            ctx.out().emit(&json!({ "params": names }), || names.join("\n"));
        }
        ParamCmd::Delete { key } => {
            let key = global(&key);
            master.delete_param(&key).map_err(param_error)?;
            ctx.out()
                .emit(&json!({"key": key, "deleted": true}), || format!("deleted {key}"));
        }
    }
    Ok(())
}
