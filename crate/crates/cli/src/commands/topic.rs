use std::collections::{BTreeMap, VecDeque};
use std::path::PathBuf;
use std::sync::mpsc;
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use clap::Subcommand;
use roslite::bridge::{from_json, to_json};
use roslite::msg::parse_definition_bundle;
use roslite::node::{MessageEvent, Node, Subscription};
use roslite::wire::TypeInfo;
use serde_json::{json, Value};

use super::{parse_json_arg, seconds};
use crate::error::{CliError, CliResult, Exit};
use crate::output::{format_message, line};
use crate::{Ctx, WaitArgs};

#[derive(Subcommand, Debug)]
pub enum TopicCmd {
    /// List topics known to the master.
    List {
        /// Include publishing and subscribing nodes.
        #[arg(short, long)]
        verbose: bool,
    },
    /// Print the message type of a topic.
    Type { topic: String },
    /// Print messages as they arrive; works for any type.
    Echo {
        topic: String,
        /// Exit after this many messages.
        #[arg(short = 'n', long)]
        count: Option<usize>,
        /// Require this type instead of accepting whatever is published.
        #[arg(long = "type")]
        type_name: Option<String>,
        #[command(flatten)]
        wait: WaitArgs,
    },
    /// Publish a JSON value once (latched) or at a fixed rate.
    Pub {
        topic: String,
        #[arg(value_name = "TYPE")]
        type_name: String,
        /// Message as JSON; missing fields take their zero value.
        #[arg(default_value = "{}")]
        value: String,
        /// Publish repeatedly at this many Hz until interrupted.
        #[arg(short, long)]
        rate: Option<f64>,
        /// Latch in rate mode (once mode latches unless --no-latch).
        #[arg(long)]
        latch: bool,
        #[arg(long, conflicts_with = "latch")]
        no_latch: bool,
        /// `.msg` text or a full dependency bundle defining TYPE.
        #[arg(long)]
        definition_file: Option<PathBuf>,
        /// Stop after this many seconds.
        #[arg(long)]
        duration: Option<f64>,
        /// In once mode, seconds to stay up so subscribers can connect.
        #[arg(long, default_value_t = 3.0)]
        linger: f64,
    },
    /// Report the publishing rate.
    Hz(RateArgs),
    /// Report the bandwidth used.
    Bw(RateArgs),
}

#[derive(clap::Args, Debug)]
pub struct RateArgs {
    topic: String,
    /// Sliding window in seconds.
    #[arg(long, default_value_t = 5.0)]
    window: f64,
    /// Stop after this many seconds and print a final report.
    #[arg(long)]
    duration: Option<f64>,
    #[command(flatten)]
    wait: WaitArgs,
}

pub fn run(ctx: &Ctx, cmd: TopicCmd) -> CliResult {
    match cmd {
        TopicCmd::List { verbose } => list(ctx, verbose),
        TopicCmd::Type { topic } => topic_type(ctx, &topic),
        TopicCmd::Echo {
            topic,
            count,
            type_name,
            wait,
        } => echo(ctx, &topic, count, type_name.as_deref(), wait.wait),
        TopicCmd::Pub {
            topic,
            type_name,
            value,
            rate,
            latch,
            no_latch,
            definition_file,
            duration,
            linger,
        } => {
            let latching = if rate.is_some() { latch } else { !no_latch };
            publish(
                ctx,
                &topic,
                &type_name,
                &value,
                rate,
                latching,
                definition_file,
                duration,
                linger,
            )
        }
        TopicCmd::Hz(args) => rate(ctx, args, Metric::Hz),
        TopicCmd::Bw(args) => rate(ctx, args, Metric::Bw),
    }
}

#[derive(Default)]
struct TopicRow {
    type_name: Option<String>,
    publishers: Vec<String>,
    subscribers: Vec<String>,
}

fn list(ctx: &Ctx, verbose: bool) -> CliResult {
    let master = ctx.master()?;
    let state = master.get_system_state()?;
    let types = master.get_topic_types()?;
    let mut rows: BTreeMap<String, TopicRow> = BTreeMap::new();
    for (t, ty) in types {
        rows.entry(t).or_default().type_name = Some(ty);
    }
    for (t, nodes) in &state.publishers {
        rows.entry(t.clone()).or_default().publishers = nodes.clone();
    }
    for (t, nodes) in &state.subscribers {
        rows.entry(t.clone()).or_default().subscribers = nodes.clone();
    }
    let doc = json!({
        "topics": rows.iter().map(|(t, r)| json!({
            "topic": t,
            "type": r.type_name,
            "publishers": r.publishers,
            "subscribers": r.subscribers,
        })).collect::<Vec<_>>(),
    });
    ctx.out().emit(&doc, || {
        rows.iter()
            .map(|(t, r)| {
                if verbose {
                    format!(
                        "{t} [{}] {} publisher(s), {} subscriber(s)",
                        r.type_name.as_deref().unwrap_or("?"),
                        r.publishers.len(),
                        r.subscribers.len()
                    )
                } else {
                    t.clone()
                }
            })
            .collect::<Vec<_>>()
            .join("\n")
    });
    Ok(())
}

fn resolve_topic(topic: &str) -> String {
    if topic.starts_with('/') {
        topic.to_string()
    } else {
        format!("/{topic}")
    }
}

fn topic_type(ctx: &Ctx, topic: &str) -> CliResult {
    let topic = resolve_topic(topic);
    let ty = ctx
        .master()?
        .get_topic_types()?
        .into_iter()
        .find(|(t, _)| *t == topic)
        .map(|(_, ty)| ty)
        .ok_or_else(|| CliError::new(Exit::Failure, format!("unknown topic {topic}")))?;
    ctx.out().emit(&json!({"topic": topic, "type": ty}), || ty.clone());
    Ok(())
}

fn subscribe(
    ctx: &Ctx,
    node: &Node,
    topic: &str,
    type_name: Option<&str>,
    cb: impl FnMut(&MessageEvent) + Send + 'static,
) -> CliResult<Subscription> {
    let registry = ctx.registry();
    Ok(match type_name {
        Some(t) if registry.get(t).is_ok() => node.subscribe(topic, &TypeInfo::resolve(&registry, t)?, cb)?,
        Some(t) => node.subscribe_raw(topic, t, "*", cb)?,
        None => node.subscribe_any(topic, cb)?,
    })
}

/// Fails with exit 3 once every known publisher refused the handshake.
fn check_handshakes(sub: &Subscription) -> CliResult {
    let links = sub.links();
    if !links.is_empty() && links.iter().all(|l| l.handshake_rejected() && !l.is_connected()) {
        let reason = links.iter().filter_map(|l| l.last_error()).collect::<Vec<_>>().join("; ");
        return Err(CliError::new(Exit::Handshake, format!("{}: {reason}", sub.topic())));
    }
    Ok(())
}

fn echo(ctx: &Ctx, topic: &str, count: Option<usize>, type_name: Option<&str>, wait: Option<f64>) -> CliResult {
    let deadline = wait.map(|w| seconds("--wait", w)).transpose()?.map(|d| Instant::now() + d);
    let node = ctx.node()?;
    let (tx, rx) = mpsc::channel();
    let sub = subscribe(ctx, &node, topic, type_name, move |ev| {
        let _ = tx.send(ev.clone());
    })?;
    let mut messages = Vec::new();
    let mut seen_type = None;
    let mut received = 0usize;
    let json_mode = ctx.out().is_json();
    let outcome = loop {
        if count.is_some_and(|n| received >= n) || ctx.interrupted() {
            break Ok(());
        }
        if deadline.is_some_and(|d| Instant::now() >= d) {
            break if count.is_some() || received == 0 {
                Err(CliError::timeout(format!(
                    "{}: received {received} message(s) before the wait expired",
                    sub.topic()
                )))
            } else {
                Ok(())
            };
        }
        if let Err(e) = check_handshakes(&sub) {
            break Err(e);
        }
        let Ok(ev) = rx.recv_timeout(Duration::from_millis(50)) else { continue };
        let Some(info) = ev.type_info.clone() else {
            log::warn!("{}: publisher sent no usable definition; skipping", ev.topic);
            continue;
        };
        let msg = match ev.decode().map_err(CliError::from).and_then(|v| Ok(to_json(&info.layout, &v)?)) {
            Ok(m) => m,
            Err(e) => {
                log::warn!("{}: undecodable message: {e}", ev.topic);
                continue;
            }
        };
        received += 1;
        seen_type.get_or_insert_with(|| info.type_name.clone());
        if json_mode {
            messages.push(msg);
        } else {
            line(&format!("{}\n---", format_message(&msg)));
        }
    };
    drop(sub);
    node.shutdown();
    outcome?;
    if json_mode {
        line(
            &json!({
                "topic": resolve_topic(topic),
                "type": seen_type,
                "count": messages.len(),
                "messages": messages,
            })
            .to_string(),
        );
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn publish(
    ctx: &Ctx,
    topic: &str,
    type_name: &str,
    value: &str,
    rate: Option<f64>,
    latching: bool,
    definition_file: Option<PathBuf>,
    duration: Option<f64>,
    linger: f64,
) -> CliResult {
    let mut registry = ctx.registry();
    if let Some(path) = definition_file {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
        registry.merge(&parse_definition_bundle(&text, type_name)?);
    }
    let info = TypeInfo::resolve(&registry, type_name)?;
    let msg = from_json(&info.layout, &parse_json_arg("message value", value)?)?;
    let period = match rate {
        Some(r) if r.is_finite() && r > 0.0 => Some(Duration::from_secs_f64(1.0 / r)),
        Some(_) => return Err(CliError::usage("--rate must be a positive number of Hz")),
        None => None,
    };
    let duration = duration.map(|d| seconds("--duration", d)).transpose()?;
    let linger = seconds("--linger", linger)?;

    let node = ctx.node()?;
    let publisher = node.advertise(topic, &info, latching)?;
    let start = Instant::now();
    let mut published = 0u64;
    match period {
        Some(period) => loop {
            if ctx.interrupted() || duration.is_some_and(|d| start.elapsed() >= d) {
                break;
            }
            publisher.publish(&msg)?;
            published += 1;
            let next = start + period.mul_f64(published as f64);
            let wait = next.saturating_duration_since(Instant::now());
            let wait = match duration {
                Some(d) => wait.min((start + d).saturating_duration_since(Instant::now())),
                None => wait,
            };
            ctx.sleep(wait);
        },
        None => {
            publisher.publish(&msg)?;
            published = 1;
            ctx.sleep(duration.map_or(linger, |d| d.min(linger)));
        }
    }
    let topic = publisher.topic().to_string();
    drop(publisher);
    node.shutdown();
    ctx.out().emit(
        &json!({"topic": topic, "type": info.type_name, "published": published}),
        || format!("published {published} message(s) on {topic}"),
    );
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Metric {
    Hz,
    Bw,
}

/// Arrival times and sizes inside the sliding window.
struct Window {
    span: Duration,
    samples: VecDeque<(Instant, usize)>,
    total: u64,
}

impl Window {
    fn prune(&mut self, now: Instant) {
        while self.samples.front().is_some_and(|(t, _)| now.duration_since(*t) > self.span) {
            self.samples.pop_front();
        }
    }

    fn report(&self, topic: &str, metric: Metric) -> Value {
        let n = self.samples.len();
        let elapsed = match (self.samples.front(), self.samples.back()) {
            (Some((a, _)), Some((b, _))) if n >= 2 => Some(b.duration_since(*a).as_secs_f64()),
            _ => None,
        }
        .filter(|e| *e > 0.0);
        let base = json!({
            "topic": topic,
            "count": self.total,
            "windowCount": n,
            "windowSeconds": self.span.as_secs_f64(),
        });
        let mut doc = base.as_object().cloned().unwrap_or_default();
        match metric {
            Metric::Hz => {
                let deltas: Vec<f64> = self
                    .samples
                    .iter()
                    .zip(self.samples.iter().skip(1))
                    .map(|((a, _), (b, _))| b.duration_since(*a).as_secs_f64())
                    .collect();
                let rate = elapsed.map(|e| (n - 1) as f64 / e);
                let mean = (!deltas.is_empty()).then(|| deltas.iter().sum::<f64>() / deltas.len() as f64);
                let std_dev =
                    mean.map(|m| (deltas.iter().map(|d| (d - m).powi(2)).sum::<f64>() / deltas.len() as f64).sqrt());
                doc.insert("rate".into(), json!(rate));
                doc.insert("minInterval".into(), json!(deltas.iter().copied().reduce(f64::min)));
                doc.insert("maxInterval".into(), json!(deltas.iter().copied().reduce(f64::max)));
                doc.insert("stdDev".into(), json!(std_dev));
            }
            Metric::Bw => {
                let sizes: Vec<usize> = self.samples.iter().map(|(_, s)| *s).collect();
                // The first sample opens the interval; its bytes arrived before it.
                let bps = elapsed.map(|e| sizes.iter().skip(1).sum::<usize>() as f64 / e);
                let mean = (!sizes.is_empty()).then(|| sizes.iter().sum::<usize>() as f64 / sizes.len() as f64);
                doc.insert("bytesPerSec".into(), json!(bps));
                doc.insert("meanBytes".into(), json!(mean));
                doc.insert("minBytes".into(), json!(sizes.iter().min()));
                doc.insert("maxBytes".into(), json!(sizes.iter().max()));
            }
        }
        Value::Object(doc)
    }
}

fn human_report(doc: &Value, metric: Metric) -> String {
    let count = doc["count"].as_u64().unwrap_or(0);
    let n = doc["windowCount"].as_u64().unwrap_or(0);
    match metric {
        Metric::Hz => match doc["rate"].as_f64() {
            Some(rate) => format!(
                "average rate: {rate:.3}\n\tmin: {:.3}s max: {:.3}s std dev: {:.5}s window: {n}",
                doc["minInterval"].as_f64().unwrap_or(0.0),
                doc["maxInterval"].as_f64().unwrap_or(0.0),
                doc["stdDev"].as_f64().unwrap_or(0.0),
            ),
            None => format!("no rate yet: {count} message(s) received"),
        },
        Metric::Bw => match doc["bytesPerSec"].as_f64() {
            Some(bps) => format!(
                "average: {}/s\n\tmean: {} min: {} max: {} window: {n}",
                human_bytes(bps),
                human_bytes(doc["meanBytes"].as_f64().unwrap_or(0.0)),
                human_bytes(doc["minBytes"].as_f64().unwrap_or(0.0)),
                human_bytes(doc["maxBytes"].as_f64().unwrap_or(0.0)),
            ),
            None => format!("no bandwidth yet: {count} message(s) received"),
        },
    }
}

fn human_bytes(b: f64) -> String {
    if b >= 1024.0 * 1024.0 {
        format!("{:.2}MB", b / (1024.0 * 1024.0))
    } else if b >= 1024.0 {
        format!("{:.2}KB", b / 1024.0)
    } else {
        format!("{b:.0}B")
    }
}

fn rate(ctx: &Ctx, args: RateArgs, metric: Metric) -> CliResult {
    let span = seconds("--window", args.window)?;
    if span.is_zero() {
        return Err(CliError::usage("--window must be positive"));
    }
    let duration = args.duration.map(|d| seconds("--duration", d)).transpose()?;
    let wait = args.wait.wait.map(|w| seconds("--wait", w)).transpose()?;
    let node = ctx.node()?;
    let window = Arc::new(Mutex::new(Window {
        span,
        samples: VecDeque::new(),
        total: 0,
    }));
    let w = window.clone();
    let sub = node.subscribe_any(&args.topic, move |ev| {
        let mut w = w.lock().expect("window lock");
        w.samples.push_back((ev.received, ev.bytes.len()));
        w.total += 1;
    })?;
    let topic = sub.topic().to_string();
    let start = Instant::now();
    let mut next_print = start + Duration::from_secs(1);
    let outcome = loop {
        if ctx.interrupted() || duration.is_some_and(|d| start.elapsed() >= d) {
            break Ok(());
        }
        let total = window.lock().expect("window lock").total;
        if total == 0 {
            if let Err(e) = check_handshakes(&sub) {
                break Err(e);
            }
            if wait.is_some_and(|w| start.elapsed() >= w) {
                break Err(CliError::timeout(format!("{topic}: no message received")));
            }
        }
        if !ctx.out().is_json() && Instant::now() >= next_print {
            next_print += Duration::from_secs(1);
            let mut w = window.lock().expect("window lock");
            w.prune(Instant::now());
            if w.total > 0 {
                line(&human_report(&w.report(&topic, metric), metric));
            }
        }
        ctx.sleep(Duration::from_millis(50));
    };
    drop(sub);
    node.shutdown();
    outcome?;
    let mut w = window.lock().expect("window lock");
    w.prune(Instant::now());
    let doc = w.report(&topic, metric);
    if ctx.out().is_json() {
        line(&doc.to_string());
    } else if duration.is_some() {
        line(&human_report(&doc, metric));
    }
    Ok(())
}
