//! `roslite`: command-line access to a ROS 1 graph.

mod commands;
mod error;
mod output;

use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use roslite::msg::SchemaRegistry;
use roslite::node::{MasterClient, Node, NodeConfig, DEFAULT_MASTER_URI};

use error::{CliError, CliResult, Exit};
use output::{Output, OutputMode};

#[derive(Parser, Debug)]
#[command(name = "roslite", version, about = "Inspect and drive a ROS 1 graph", propagate_version = true)]
struct Cli {
    /// Master XML-RPC URI.
    #[arg(long, global = true, env = "ROS_MASTER_URI", default_value = DEFAULT_MASTER_URI)]
    master_uri: String,
    /// Host name other nodes use to reach this process.
    #[arg(long = "host", global = true, env = "ROS_HOSTNAME")]
    advertised_host: Option<String>,
    /// Print one JSON document instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,
    /// Seconds to wait for master, parameter and service calls.
    #[arg(long, global = true, default_value_t = 5.0)]
    timeout: f64,
    /// Extra message search roots (`<root>/<pkg>/msg/<Name>.msg`).
    #[arg(long = "msg-root", global = true)]
    msg_roots: Vec<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Topics: list, type, echo, pub, hz, bw.
    #[command(subcommand)]
    Topic(commands::topic::TopicCmd),
    /// Nodes: list, info.
    #[command(subcommand)]
    Node(commands::graph::NodeCmd),
    /// Services: list, type, call.
    #[command(subcommand)]
    Service(commands::graph::ServiceCmd),
    /// Parameter server: get, set, list, delete.
    #[command(subcommand)]
    Param(commands::param::ParamCmd),
    /// Long-running components: master, loader-service, bridge.
    #[command(subcommand)]
    Run(commands::run::RunCmd),
    /// Message definitions: md5, deps, gen.
    #[command(subcommand)]
    Msg(commands::msg::MsgCmd),
    /// Measurements.
    #[command(subcommand)]
    Bench(commands::bench::BenchCmd),
}

/// Settings shared by every command.
#[derive(Debug, Clone)]
pub struct CliConfig {
    pub master_uri: String,
    pub advertised_host: Option<String>,
    pub output: Output,
    pub timeout: Duration,
    pub msg_roots: Vec<PathBuf>,
}

/// Everything a command needs: configuration plus the interrupt flag.
pub struct Ctx {
    pub config: CliConfig,
    interrupted: Arc<AtomicBool>,
}

impl Ctx {
    pub fn out(&self) -> Output {
        self.config.output
    }

    pub fn interrupted(&self) -> bool {
        self.interrupted.load(Ordering::SeqCst)
    }

    /// Sleeps up to `d`, returning early (and `true`) on interrupt.
    pub fn sleep(&self, d: Duration) -> bool {
        let step = Duration::from_millis(20);
        let deadline = std::time::Instant::now() + d;
        while std::time::Instant::now() < deadline {
            if self.interrupted() {
                return true;
            }
            std::thread::sleep(step.min(deadline.saturating_duration_since(std::time::Instant::now())));
        }
        self.interrupted()
    }

    pub fn node_config(&self, name: &str) -> NodeConfig {
        let mut cfg = NodeConfig::new(name, &self.config.master_uri);
        if let Some(host) = &self.config.advertised_host {
            cfg.advertised_host = host.clone();
        }
        cfg.call_timeout = self.config.timeout;
        cfg
    }

    /// Starts an anonymous node for one command.
    pub fn node(&self) -> CliResult<Node> {
        let name = format!("/roslite_{}", std::process::id());
        Ok(Node::start(self.node_config(&name))?)
    }

    pub fn master(&self) -> CliResult<MasterClient> {
        Ok(MasterClient::new(&self.config.master_uri, "/roslite", self.config.timeout)?)
    }

    pub fn registry(&self) -> SchemaRegistry {
        let mut r = SchemaRegistry::with_corpus();
        for root in &self.config.msg_roots {
            r.add_root(root);
        }
        r
    }
}

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .format_timestamp(None)
        .init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Exit::Ok,
                _ => Exit::Usage,
            };
            let _ = e.print();
            std::process::exit(code as i32);
        }
    };
    if !(cli.timeout.is_finite() && cli.timeout > 0.0) {
        eprintln!("error: --timeout must be a positive number of seconds");
        std::process::exit(Exit::Usage as i32);
    }
    let interrupted = Arc::new(AtomicBool::new(false));
    {
        let flag = interrupted.clone();
        if let Err(e) = ctrlc::set_handler(move || flag.store(true, Ordering::SeqCst)) {
            log::warn!("cannot install the interrupt handler: {e}");
        }
    }
    let ctx = Ctx {
        config: CliConfig {
            master_uri: cli.master_uri,
            advertised_host: cli.advertised_host.filter(|h| !h.is_empty()),
            output: Output {
                mode: if cli.json { OutputMode::Json } else { OutputMode::Human },
            },
            timeout: Duration::from_secs_f64(cli.timeout),
            msg_roots: cli.msg_roots,
        },
        interrupted,
    };
    let result = match cli.command {
        Command::Topic(c) => commands::topic::run(&ctx, c),
        Command::Node(c) => commands::graph::run_node(&ctx, c),
        Command::Service(c) => commands::graph::run_service(&ctx, c),
        Command::Param(c) => commands::param::run(&ctx, c),
        Command::Run(c) => commands::run::run(&ctx, c),
        Command::Msg(c) => commands::msg::run(&ctx, c),
        Command::Bench(c) => commands::bench::run(&ctx, c),
    };
    if let Err(CliError { exit, message }) = result {
        eprintln!("error: {message}");
        std::process::exit(exit as i32);
    }
}

/// Shared argument groups.
#[derive(Args, Debug, Clone)]
pub struct WaitArgs {
    /// Give up (exit 4) when nothing arrives within this many seconds.
    #[arg(long)]
    pub wait: Option<f64>,
}
