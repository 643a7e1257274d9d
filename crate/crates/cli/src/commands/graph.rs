use clap::Subcommand;
use roslite::bridge::{from_json, to_json};
use roslite::node::ServiceInfo;
use serde_json::json;

use super::parse_json_arg;
use crate::error::{CliError, CliResult, Exit};
use crate::output::format_message;
use crate::Ctx;

#[derive(Subcommand, Debug)]
pub enum NodeCmd {
    /// List nodes with registered publications, subscriptions or services.
    List,
    /// Show a node's URI and registrations.
    Info { node: String },
}

#[derive(Subcommand, Debug)]
pub enum ServiceCmd {
    /// List registered services.
    List,
    /// Print a service's type, asked from its provider.
    Type { service: String },
    /// Call a service with JSON arguments and print the response.
    Call {
        service: String,
        /// Request as JSON; missing fields take their zero value.
        #[arg(default_value = "{}")]
        args: String,
        /// Service type; asked from the provider when omitted.
        #[arg(long = "type")]
        type_name: Option<String>,
    },
}

fn global(name: &str) -> String {
    if name.starts_with('/') {
        name.to_string()
    } else {
        format!("/{name}")
    }
}

pub fn run_node(ctx: &Ctx, cmd: NodeCmd) -> CliResult {
    let master = ctx.master()?;
    match cmd {
        NodeCmd::List => {
            let nodes = master.get_system_state()?.nodes();
            ctx.out().emit(&json!({ "nodes": nodes }), || nodes.join("\n"));
        }
        NodeCmd::Info { node } => {
            let node = global(&node);
            let uri = master
                .lookup_node(&node)
                .map_err(|e| CliError::new(Exit::Failure, format!("unknown node {node}: {e}")))?;
            let state = master.get_system_state()?;
            let involving = |section: &[(String, Vec<String>)]| -> Vec<String> {
                section
                    .iter()
                    .filter(|(_, nodes)| nodes.contains(&node))
                    .map(|(name, _)| name.clone())
                    .collect()
            };
            let (pubs, subs, srvs) = (
                involving(&state.publishers),
                involving(&state.subscribers),
                involving(&state.services),
            );
            let doc = json!({
                "node": node,
                "uri": uri,
                "publications": pubs,
                "subscriptions": subs,
                "services": srvs,
            });
            ctx.out().emit(&doc, || {
                let section = |title: &str, items: &[String]| {
                    let body = if items.is_empty() {
                        "  (none)".to_string()
                    } else {
                        items.iter().map(|i| format!("  * {i}")).collect::<Vec<_>>().join("\n")
                    };
                    format!("{title}:\n{body}")
                };
                format!(
                    "Node [{node}]\nURI: {uri}\n\n{}\n\n{}\n\n{}",
                    section("Publications", &pubs),
                    section("Subscriptions", &subs),
                    section("Services", &srvs)
                )
            });
        }
    }
    Ok(())
}

pub fn run_service(ctx: &Ctx, cmd: ServiceCmd) -> CliResult {
    match cmd {
        ServiceCmd::List => {
            let state = ctx.master()?.get_system_state()?;
            let names: Vec<String> = state.services.into_iter().map(|(s, _)| s).collect();
            ctx.out().emit(&json!({ "services": names }), || names.join("\n"));
        }
        ServiceCmd::Type { service } => {
            let node = ctx.node()?;
            let result = node.service_type(&service);
            node.shutdown();
            let ty = result.map_err(|e| CliError::from(e).in_service())?;
            ctx.out()
                .emit(&json!({"service": global(&service), "type": ty}), || ty.clone());
        }
        ServiceCmd::Call {
            service,
            args,
            type_name,
        } => {
            let args = parse_json_arg("service arguments", &args)?;
            let node = ctx.node()?;
            let call = || -> CliResult<(String, serde_json::Value)> {
                let ty = match &type_name {
                    Some(t) => t.clone(),
                    None => node.service_type(&service).map_err(|e| CliError::from(e).in_service())?,
                };
                let info = ServiceInfo::resolve(&ctx.registry(), &ty)?;
                let request = from_json(&info.request, &args)?;
                let response = node
                    .call_service(&service, &info, &request)
                    .map_err(|e| CliError::from(e).in_service())?;
                Ok((ty, to_json(&info.response, &response)?))
            };
            let result = call();
            node.shutdown();
            let (ty, response) = result?;
            let doc = json!({"service": global(&service), "type": ty, "response": response});
            ctx.out().emit(&doc, || format_message(&response));
        }
    }
    Ok(())
}
