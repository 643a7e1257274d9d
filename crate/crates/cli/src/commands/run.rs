use std::path::PathBuf;
use std::sync::Arc;
use std::time::Duration;

use clap::Subcommand;
use roslite::asset::{roots_from_env, LoaderService, DEFAULT_SERVICE};
use roslite::bridge::{BridgeConfig, BridgeServer, BridgeError, DEFAULT_PORT};
use roslite::node::{Master, Node};
use serde_json::json;

use crate::error::{CliError, CliResult, Exit};
use crate::Ctx;

#[derive(Subcommand, Debug)]
pub enum RunCmd {
    /// Run a master (XML-RPC name service and parameter server).
    Master {
        #[arg(long, default_value_t = 11311)]
        port: u16,
        /// Interface to listen on.
        #[arg(long, default_value = "0.0.0.0")]
        bind: String,
    },
    /// Serve meshes and textures to viewers over `asset_msgs/GetAsset`.
    LoaderService {
        /// Service name to advertise.
        #[arg(long, default_value = DEFAULT_SERVICE)]
        name: String,
        /// Package roots searched for `package://` URIs; defaults to
        /// `ROS_PACKAGE_PATH`.
        #[arg(long = "root")]
        roots: Vec<PathBuf>,
        #[arg(long, default_value = "/roslite_loader")]
        node_name: String,
    },
    /// Bridge WebSocket clients (JSON) into the graph.
    Bridge {
        /// Port to listen on; 0 picks a free one.
        #[arg(long, default_value_t = DEFAULT_PORT)]
        port: u16,
        /// Interface to listen on. Anything but loopback needs a token.
        #[arg(long, default_value = "127.0.0.1")]
        bind: String,
        /// Shared secret clients must present with an `auth` op.
        #[arg(long, env = "ROSLITE_BRIDGE_TOKEN")]
        token: Option<String>,
        /// Message frames buffered per client before dropping.
        #[arg(long, default_value_t = 1024)]
        queue: usize,
        #[arg(long, default_value = "/roslite_bridge")]
        node_name: String,
    },
}

/// Blocks until interrupted or until the master asks `node` to shut down.
fn wait(ctx: &Ctx, node: Option<&Node>) {
    let tick = Duration::from_millis(50);
    while !ctx.interrupted() {
        match node {
            Some(node) => {
                if let Some(reason) = node.wait_shutdown_request(Some(tick)) {
                    log::info!("shutdown requested: {reason}");
                    return;
                }
            }
            None => std::thread::sleep(tick),
        }
    }
}

fn announce(ctx: &Ctx, doc: serde_json::Value, human: String) {
    ctx.out().emit(&doc, || human);
}

pub fn run(ctx: &Ctx, cmd: RunCmd) -> CliResult {
    match cmd {
        RunCmd::Master { port, bind } => {
            let host = ctx.config.advertised_host.clone().unwrap_or_else(|| {
                if bind == "0.0.0.0" || bind == "::" {
                    "localhost".to_string()
                } else {
                    bind.clone()
                }
            });
            let addr = if bind.contains(':') { format!("[{bind}]:{port}") } else { format!("{bind}:{port}") };
            let mut master = Master::start(&addr, &host)
                .map_err(|e| CliError::new(Exit::Failure, format!("cannot start master on {addr}: {e}")))?;
            announce(
                ctx,
                json!({"uri": master.uri(), "port": master.port()}),
                format!("master listening on {}", master.uri()),
            );
            wait(ctx, None);
            master.shutdown();
        }
        RunCmd::LoaderService { name, roots, node_name } => {
            let roots = if roots.is_empty() { roots_from_env() } else { roots };
            let node = Node::start(ctx.node_config(&node_name))?;
            let service = match LoaderService::start(&node, roots.clone(), &name) {
                Ok(s) => s,
                Err(e) => {
                    node.shutdown();
                    return Err(e.into());
                }
            };
            announce(
                ctx,
                json!({"service": service.name(), "node": node.name(), "roots": roots}),
                format!("serving {} from {} root(s)", service.name(), roots.len()),
            );
            wait(ctx, Some(&node));
            drop(service);
            node.shutdown();
        }
        RunCmd::Bridge {
            port,
            bind,
            token,
            queue,
            node_name,
        } => {
            let ip = bind
                .parse()
                .map_err(|_| CliError::usage(format!("--bind {bind:?} is not an IP address")))?;
            let config = BridgeConfig {
                bind: std::net::SocketAddr::new(ip, port),
                token: token.filter(|t| !t.is_empty()),
                registry: Arc::new(ctx.registry()),
                queue_capacity: queue.max(1),
                ..BridgeConfig::default()
            };
            let node = Node::start(ctx.node_config(&node_name))?;
            let mut server = match BridgeServer::start(&node, config) {
                Ok(s) => s,
                Err(e) => {
                    node.shutdown();
                    return Err(match e {
                        e @ BridgeError::TokenRequired(_) => CliError::usage(e.to_string()),
                        e => e.into(),
                    });
                }
            };
            let addr = server.local_addr();
            announce(
                ctx,
                json!({"url": server.url(), "port": addr.port()}),
                format!("listening on {}", server.url()),
            );
            wait(ctx, Some(&node));
            server.shutdown();
            node.shutdown();
        }
    }
    Ok(())
}
