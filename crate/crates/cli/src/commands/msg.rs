use std::path::PathBuf;

use clap::Subcommand;
use roslite::msg::{compute_md5, compute_srv_md5, dependency_text, emit_module_tree, SchemaRegistry};
use serde_json::json;

use crate::error::{CliError, CliResult, Exit};
use crate::Ctx;

#[derive(Subcommand, Debug)]
pub enum MsgCmd {
    /// Print the checksum of message or service types.
    Md5 {
        #[arg(required = true)]
        types: Vec<String>,
    },
    /// Print a message's full definition text as sent in connection headers.
    Deps {
        #[arg(value_name = "TYPE")]
        type_name: String,
    },
    /// Generate Rust bindings. With no types, every known type is emitted.
    Gen {
        /// Output directory; files are listed but not written when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        types: Vec<String>,
    },
}

/// The checksum of `name`, and whether it named a service.
fn md5_of(registry: &SchemaRegistry, name: &str) -> CliResult<(String, &'static str)> {
    match registry.get(name) {
        Ok(spec) => Ok((compute_md5(&spec, registry)?, "msg")),
        Err(msg_err) => match registry.get_srv(name) {
            Ok(srv) => Ok((compute_srv_md5(&srv, registry)?, "srv")),
            Err(_) => Err(CliError::from(msg_err)),
        },
    }
}

pub fn run(ctx: &Ctx, cmd: MsgCmd) -> CliResult {
    let registry = ctx.registry();
    match cmd {
        MsgCmd::Md5 { types } => {
            let mut rows = Vec::new();
            for t in &types {
                let (md5, kind) = md5_of(&registry, t)?;
                rows.push((t.clone(), md5, kind));
            }
            let doc = json!({
                "types": rows
                    .iter()
                    .map(|(t, md5, kind)| json!({"type": t, "kind": kind, "md5": md5}))
                    .collect::<Vec<_>>()
            });
            ctx.out().emit(&doc, || {
                if rows.len() == 1 {
                    rows[0].1.clone()
                } else {
                    rows.iter().map(|(t, md5, _)| format!("{md5}  {t}")).collect::<Vec<_>>().join("\n")
                }
            });
        }
        MsgCmd::Deps { type_name } => {
            let spec = registry.get(&type_name)?;
            let md5 = compute_md5(&spec, &registry)?;
            let text = dependency_text(&spec, &registry)?;
            let doc = json!({"type": type_name, "md5": md5, "definition": text});
            ctx.out().emit(&doc, || text.clone());
        }
        MsgCmd::Gen { out, types } => {
            let (messages, services) = if types.is_empty() {
                (registry.message_names(), registry.service_names())
            } else {
                let mut messages = Vec::new();
                let mut services = Vec::new();
                for t in types {
                    match md5_of(&registry, &t)?.1 {
                        "srv" => services.push(t),
                        _ => messages.push(t),
                    }
                }
                (messages, services)
            };
            let files = emit_module_tree(&messages, &services, &registry)?;
            if let Some(dir) = &out {
                for f in &files {
                    let path = dir.join(&f.path);
                    let write = || -> std::io::Result<()> {
                        if let Some(parent) = path.parent() {
                            std::fs::create_dir_all(parent)?;
                        }
                        std::fs::write(&path, &f.contents)
                    };
                    write().map_err(|e| CliError::new(Exit::Failure, format!("{}: {e}", path.display())))?;
                }
            }
            let paths: Vec<&str> = files.iter().map(|f| f.path.as_str()).collect();
            let doc = json!({
                "out": out.as_ref().map(|d| d.display().to_string()),
                "messages": messages.len(),
                "services": services.len(),
                "files": paths,
            });
            ctx.out().emit(&doc, || paths.join("\n"));
        }
    }
    Ok(())
}
