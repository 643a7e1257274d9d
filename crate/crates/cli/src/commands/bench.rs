use clap::Subcommand;
use roslite::bridge::measure_encoding_overhead;
use roslite::wire::{DynamicValue, MessageLayout};
use serde_json::{json, Value};

use crate::error::CliResult;
use crate::Ctx;

/// Named payloads for `bench overhead`.
const PRESETS: &[&str] = &["bytes3mb", "float64x1000", "empty"];

#[derive(Subcommand, Debug)]
pub enum BenchCmd {
    /// Compare binary and JSON encoded sizes of a message.
    ///
    /// `--type` is a preset (`bytes3mb`, `float64x1000`, `empty`), `all`
    /// for every preset, or a message type measured at its zero value.
    Overhead {
        #[arg(long = "type", default_value = "all")]
        type_name: String,
    },
}

fn sample(ctx: &Ctx, name: &str) -> CliResult<(String, std::sync::Arc<MessageLayout>, DynamicValue)> {
    let registry = ctx.registry();
    let (type_name, data) = match name {
        "bytes3mb" => (
            "std_msgs/UInt8MultiArray",
            Some(DynamicValue::Bytes((0..3_000_000u32).map(|i| (i * 31) as u8).collect())),
        ),
        "float64x1000" => (
            "std_msgs/Float64MultiArray",
            Some(DynamicValue::Seq((0..1000).map(|i| DynamicValue::F64((i as f64).sin())).collect())),
        ),
        "empty" => ("std_msgs/Empty", None),
        other => (other, None),
    };
    let layout = MessageLayout::resolve(&registry, type_name)?;
    let mut value = layout.default_value();
    if let (Some(data), Some(slot)) = (data, value.field_mut("data")) {
        *slot = data;
    }
    Ok((type_name.to_string(), layout, value))
}

fn measure(ctx: &Ctx, name: &str) -> CliResult<Value> {
    let (type_name, layout, value) = sample(ctx, name)?;
    let o = measure_encoding_overhead(&layout, &value)?;
    let mut doc = json!({"name": name, "type": type_name});
    if let (Value::Object(doc), Value::Object(sizes)) = (&mut doc, o.to_json()) {
        doc.extend(sizes);
    }
    Ok(doc)
}

fn human(doc: &Value) -> String {
    format!(
        "{:<14} {:<28} binary {:>9} B  json {:>9} B  ratio {}",
        doc["name"].as_str().unwrap_or_default(),
        doc["type"].as_str().unwrap_or_default(),
        doc["binaryBytes"],
        doc["jsonBytes"],
        doc["ratio"].as_f64().map_or_else(|| doc["ratio"].to_string(), |r| format!("{r:.4}")),
    )
}

pub fn run(ctx: &Ctx, cmd: BenchCmd) -> CliResult {
    match cmd {
        BenchCmd::Overhead { type_name } => {
            if type_name == "all" {
                let results = PRESETS.iter().map(|p| measure(ctx, p)).collect::<CliResult<Vec<_>>>()?;
                ctx.out().emit(&json!({ "results": results }), || {
                    results.iter().map(human).collect::<Vec<_>>().join("\n")
                });
            } else {
                let doc = measure(ctx, &type_name)?;
                ctx.out().emit(&doc, || human(&doc));
            }
        }
    }
    Ok(())
}
