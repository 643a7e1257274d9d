//! The websocket server and per-connection op handling.
//!
//! Ops (client → bridge):
//!
//! | op             | fields                                              |
//! |----------------|-----------------------------------------------------|
//! | `auth`         | `token`                                             |
//! | `subscribe`    | `topic`, `type`?, `throttle_ms`?                    |
//! | `unsubscribe`  | `topic`                                             |
//! | `advertise`    | `topic`, `type`, `latch`?                           |
//! | `publish`      | `topic`, `msg`, `type`?                             |
//! | `call_service` | `service`, `args`?, `type`?                         |
//! | `topics`       |                                                     |
//! | `tf_lookup`    | `target`, `source`                                  |
//! | `status`       |                                                     |
//!
//! Frames sent back: `message` (`topic`, `msg`, `recvStampMs`), `status`
//! (`level`, `text`, `id`?), `topics`, `service_response` and `tf`.
//!
//! Each connection runs on one thread that reads ops in arrival order and
//! is the only writer to its socket. Node delivery lanes hand messages to
//! it through a bounded queue and never wait: when the queue is full the
//! message is dropped and counted.

use std::collections::{HashMap, VecDeque};
use std::net::{IpAddr, Ipv4Addr, SocketAddr, TcpListener, TcpStream, ToSocketAddrs};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::mpsc::{self, Receiver, SyncSender, TrySendError};
use std::sync::{Arc, Mutex};
use std::thread::{self, JoinHandle};
use std::time::{Duration, Instant, SystemTime, UNIX_EPOCH};

use serde_json::{json, Map, Value};
use tungstenite::{Message, WebSocket};

use super::json::{from_json, to_json};
use super::BridgeError;
use crate::msg::SchemaRegistry;
use crate::node::{MessageEvent, Node, NodeError, Publisher, ServiceInfo, Subscription};
use crate::tf::TfListener;
use crate::wire::TypeInfo;

pub const DEFAULT_PORT: u16 = 9090;

/// How long a connection thread waits for an inbound frame before
/// servicing its outbound queue.
const POLL: Duration = Duration::from_millis(2);
const HANDSHAKE_TIMEOUT: Duration = Duration::from_secs(5);
/// A client that cannot take a frame for this long is disconnected.
const WRITE_TIMEOUT: Duration = Duration::from_secs(10);

#[derive(Clone)]
pub struct BridgeConfig {
    pub bind: SocketAddr,
    /// When set, the first frame of every connection must be
    /// `{"op": "auth", "token": ...}`. Required for non-loopback binds.
    pub token: Option<String>,
    /// Types available to `advertise`, `publish` and `call_service`.
    pub registry: Arc<SchemaRegistry>,
    /// Message frames buffered per connection before dropping.
    pub queue_capacity: usize,
    /// Keep a transform tree from `/tf` and `/tf_static` for `tf_lookup`.
    pub tf: bool,
}

impl Default for BridgeConfig {
    fn default() -> Self {
        BridgeConfig {
            bind: SocketAddr::new(IpAddr::V4(Ipv4Addr::LOCALHOST), DEFAULT_PORT),
            token: None,
            registry: Arc::new(SchemaRegistry::with_corpus()),
            queue_capacity: 1024,
            tf: true,
        }
    }
}

#[derive(Debug, Default)]
struct Counters {
    frames_sent: AtomicU64,
    frames_dropped: AtomicU64,
    frames_throttled: AtomicU64,
    ops: AtomicU64,
    errors: AtomicU64,
}

/// Server-wide totals.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BridgeStats {
    pub connections_open: u64,
    pub connections_total: u64,
    pub frames_sent: u64,
    /// Message frames dropped because a client's queue was full.
    pub frames_dropped: u64,
    /// Message frames superseded by a newer one inside a throttle window.
    pub frames_throttled: u64,
    pub ops: u64,
    pub errors: u64,
}

struct ServerShared {
    node: Node,
    config: BridgeConfig,
    stop: AtomicBool,
    counters: Counters,
    connections_open: AtomicU64,
    connections_total: AtomicU64,
    tf: Option<TfListener>,
    workers: Mutex<Vec<JoinHandle<()>>>,
}

impl ServerShared {
    fn stats(&self) -> BridgeStats {
        let c = &self.counters;
        BridgeStats {
            connections_open: self.connections_open.load(Ordering::SeqCst),
            connections_total: self.connections_total.load(Ordering::SeqCst),
            frames_sent: c.frames_sent.load(Ordering::Relaxed),
            frames_dropped: c.frames_dropped.load(Ordering::Relaxed),
            frames_throttled: c.frames_throttled.load(Ordering::Relaxed),
            ops: c.ops.load(Ordering::Relaxed),
            errors: c.errors.load(Ordering::Relaxed),
        }
    }
}

/// A running bridge; stops when dropped.
pub struct BridgeServer {
    shared: Arc<ServerShared>,
    addr: SocketAddr,
    acceptor: Option<JoinHandle<()>>,
}

/// Starts a bridge for `node` on `bind` (e.g. `"127.0.0.1:9090"`, port 0
/// for an ephemeral port).
pub fn serve_bridge(node: &Node, bind: &str, token: Option<&str>) -> Result<BridgeServer, BridgeError> {
    let addr = bind
        .to_socket_addrs()
        .map_err(|e| BridgeError::Bind {
            addr: bind.to_string(),
            reason: e.to_string(),
        })?
        .next()
        .ok_or_else(|| BridgeError::Bind {
            addr: bind.to_string(),
            reason: "address resolved to nothing".into(),
        })?;
    BridgeServer::start(
        node,
        BridgeConfig {
            bind: addr,
            token: token.map(str::to_string),
            ..BridgeConfig::default()
        },
    )
}

impl BridgeServer {
    pub fn start(node: &Node, config: BridgeConfig) -> Result<BridgeServer, BridgeError> {
        if !config.bind.ip().is_loopback() && config.token.as_deref().is_none_or(str::is_empty) {
            return Err(BridgeError::TokenRequired(config.bind.to_string()));
        }
        let bind_addr = config.bind.to_string();
        let bind_err = |e: std::io::Error| BridgeError::Bind {
            addr: bind_addr.clone(),
            reason: e.to_string(),
        };
        let listener = TcpListener::bind(config.bind).map_err(bind_err)?;
        let addr = listener.local_addr().map_err(bind_err)?;
        listener.set_nonblocking(true).map_err(bind_err)?;
        let tf = if config.tf { Some(TfListener::start(node)?) } else { None };
        let shared = Arc::new(ServerShared {
            node: node.clone(),
            config,
            stop: AtomicBool::new(false),
            counters: Counters::default(),
            connections_open: AtomicU64::new(0),
            connections_total: AtomicU64::new(0),
            tf,
            workers: Mutex::new(Vec::new()),
        });
        let s = shared.clone();
        let acceptor = thread::Builder::new()
            .name(format!("bridge-accept-{}", addr.port()))
            .spawn(move || accept_loop(&s, listener))
            .map_err(bind_err)?;
        log::info!("bridge listening on ws://{addr}");
        Ok(BridgeServer {
            shared,
            addr,
            acceptor: Some(acceptor),
        })
    }

    pub fn local_addr(&self) -> SocketAddr {
        self.addr
    }

    pub fn url(&self) -> String {
        format!("ws://{}", self.addr)
    }

    pub fn stats(&self) -> BridgeStats {
        self.shared.stats()
    }

    /// Stops accepting, closes every connection and tears down their
    /// subscriptions and advertisements. Idempotent.
    pub fn shutdown(&mut self) {
        self.shared.stop.store(true, Ordering::SeqCst);
        if let Some(h) = self.acceptor.take() {
            let _ = h.join();
        }
        let workers = std::mem::take(&mut *self.shared.workers.lock().expect("workers lock"));
        for w in workers {
            let _ = w.join();
        }
    }
}

impl Drop for BridgeServer {
    fn drop(&mut self) {
        self.shutdown();
    }
}

fn accept_loop(shared: &Arc<ServerShared>, listener: TcpListener) {
    while !shared.stop.load(Ordering::SeqCst) {
        match listener.accept() {
            Ok((stream, peer)) => {
                let s = shared.clone();
                let spawned = thread::Builder::new()
                    .name(format!("bridge-conn-{peer}"))
                    .spawn(move || {
                        s.connections_open.fetch_add(1, Ordering::SeqCst);
                        s.connections_total.fetch_add(1, Ordering::SeqCst);
                        if let Err(e) = serve_connection(&s, stream) {
                            log::debug!("bridge connection {peer}: {e}");
                        }
                        s.connections_open.fetch_sub(1, Ordering::SeqCst);
                    });
                match spawned {
                    Ok(h) => {
                        let mut workers = shared.workers.lock().expect("workers lock");
                        workers.retain(|w| !w.is_finished());
                        workers.push(h);
                    }
                    Err(e) => log::warn!("bridge: cannot spawn connection thread: {e}"),
                }
            }
            Err(e) if e.kind() == std::io::ErrorKind::WouldBlock => thread::sleep(Duration::from_millis(10)),
            Err(e) => {
                log::warn!("bridge accept: {e}");
                thread::sleep(Duration::from_millis(10));
            }
        }
    }
}

fn is_timeout(e: &tungstenite::Error) -> bool {
    matches!(e, tungstenite::Error::Io(io) if matches!(io.kind(), std::io::ErrorKind::WouldBlock | std::io::ErrorKind::TimedOut))
}

#[allow(clippy::result_large_err)]
fn serve_connection(shared: &Arc<ServerShared>, stream: TcpStream) -> Result<(), tungstenite::Error> {
    stream.set_nonblocking(false)?;
    let _ = stream.set_nodelay(true);
    stream.set_read_timeout(Some(HANDSHAKE_TIMEOUT))?;
    stream.set_write_timeout(Some(WRITE_TIMEOUT))?;
    let mut ws = tungstenite::accept(stream).map_err(|e| match e {
        tungstenite::HandshakeError::Failure(e) => e,
        tungstenite::HandshakeError::Interrupted(_) => tungstenite::Error::Io(std::io::ErrorKind::TimedOut.into()),
    })?;
    ws.get_ref().set_read_timeout(Some(POLL))?;
    let mut conn = Connection::new(shared.clone());
    let result = conn.run(&mut ws);
    // Subscriptions and advertisements go before the socket is closed so a
    // client that sees the close can rely on the teardown having happened.
    drop(conn);
    let _ = ws.close(None);
    let _ = ws.flush();
    result
}

/// A message handed over from a node delivery lane.
struct Delivery {
    topic: String,
    generation: u64,
    event: MessageEvent,
    stamp_ms: u64,
}

struct ClientSub {
    generation: u64,
    throttle: Option<Duration>,
    /// Latest message waiting for the throttle window (throttled only).
    slot: Arc<Mutex<Option<Delivery>>>,
    last_sent: Option<Instant>,
    _handle: Subscription,
}

#[derive(Debug, Default)]
struct ConnCounters {
    frames_sent: AtomicU64,
    frames_dropped: AtomicU64,
    frames_throttled: AtomicU64,
}

struct Connection {
    shared: Arc<ServerShared>,
    authenticated: bool,
    subs: HashMap<String, ClientSub>,
    pubs: HashMap<String, Publisher>,
    next_generation: u64,
    tx: SyncSender<Delivery>,
    rx: Receiver<Delivery>,
    counters: Arc<ConnCounters>,
    outbox: VecDeque<String>,
}

enum Flow {
    Continue,
    Close,
}

fn now_ms() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_millis() as u64)
        .unwrap_or_default()
}

fn field_str<'a>(op: &'a Map<String, Value>, names: &[&str]) -> Option<&'a str> {
    names.iter().find_map(|n| op.get(*n).and_then(Value::as_str))
}

fn required<'a>(op: &'a Map<String, Value>, names: &[&str]) -> Result<&'a str, BridgeError> {
    field_str(op, names).ok_or_else(|| BridgeError::BadRequest(format!("missing string field {:?}", names[0])))
}

impl Connection {
    fn new(shared: Arc<ServerShared>) -> Connection {
        let (tx, rx) = mpsc::sync_channel(shared.config.queue_capacity.max(1));
        Connection {
            authenticated: shared.config.token.is_none(),
            shared,
            subs: HashMap::new(),
            pubs: HashMap::new(),
            next_generation: 0,
            tx,
            rx,
            counters: Arc::new(ConnCounters::default()),
            outbox: VecDeque::new(),
        }
    }

    #[allow(clippy::result_large_err)]
    fn run(&mut self, ws: &mut WebSocket<TcpStream>) -> Result<(), tungstenite::Error> {
        loop {
            if self.shared.stop.load(Ordering::SeqCst) {
                return Ok(());
            }
            let mut flow = Flow::Continue;
            match ws.read() {
                Ok(Message::Text(text)) => flow = self.handle_text(&text),
                Ok(Message::Binary(_)) => self.error(None, "binary frames are not supported; send JSON text"),
                Ok(Message::Close(_)) => flow = Flow::Close,
                Ok(_) => {}
                Err(e) if is_timeout(&e) => {}
                Err(tungstenite::Error::ConnectionClosed | tungstenite::Error::AlreadyClosed) => return Ok(()),
                Err(e) => return Err(e),
            }
            self.collect_deliveries();
            while let Some(frame) = self.outbox.pop_front() {
                ws.write(Message::Text(frame))?;
            }
            ws.flush()?;
            if let Flow::Close = flow {
                return Ok(());
            }
        }
    }

    fn push(&mut self, frame: Value) {
        self.outbox.push_back(frame.to_string());
    }

    fn status(&mut self, id: Option<&str>, level: &str, text: impl Into<String>) {
        let mut frame = Map::new();
        frame.insert("op".into(), "status".into());
        frame.insert("level".into(), level.into());
        if let Some(id) = id {
            frame.insert("id".into(), id.into());
        }
        frame.insert("text".into(), text.into().into());
        self.push(Value::Object(frame));
    }

    fn error(&mut self, id: Option<&str>, text: impl Into<String>) {
        self.shared.counters.errors.fetch_add(1, Ordering::Relaxed);
        self.status(id, "error", text);
    }

    fn handle_text(&mut self, text: &str) -> Flow {
        self.shared.counters.ops.fetch_add(1, Ordering::Relaxed);
        let op = match serde_json::from_str::<Value>(text) {
            Ok(Value::Object(op)) => op,
            Ok(_) => {
                self.error(None, "expected a JSON object");
                return self.unauthenticated_close();
            }
            Err(e) => {
                self.error(None, format!("invalid JSON: {e}"));
                return self.unauthenticated_close();
            }
        };
        let id = op.get("id").and_then(|v| match v {
            Value::String(s) => Some(s.clone()),
            Value::Number(n) => Some(n.to_string()),
            _ => None,
        });
        let name = op.get("op").and_then(Value::as_str).unwrap_or_default().to_string();
        if !self.authenticated {
            let expected = self.shared.config.token.as_deref().unwrap_or_default();
            let given = field_str(&op, &["token"]).unwrap_or_default();
            if name == "auth" && constant_time_eq(expected.as_bytes(), given.as_bytes()) {
                self.authenticated = true;
                self.status(id.as_deref(), "info", "authenticated");
                return Flow::Continue;
            }
            self.error(id.as_deref(), "unauthorized: the first frame must be {\"op\":\"auth\",\"token\":...}");
            return Flow::Close;
        }
        if let Err(e) = self.dispatch(&name, &op, id.as_deref()) {
            self.error(id.as_deref(), format!("{name}: {e}"));
        }
        Flow::Continue
    }

    fn unauthenticated_close(&self) -> Flow {
        if self.authenticated {
            Flow::Continue
        } else {
            Flow::Close
        }
    }

    fn dispatch(&mut self, name: &str, op: &Map<String, Value>, id: Option<&str>) -> Result<(), BridgeError> {
        match name {
            "auth" => self.status(id, "info", "authenticated"),
            "subscribe" => self.subscribe(op, id)?,
            "unsubscribe" => {
                let topic = self.shared.node.resolve(required(op, &["topic"])?)?;
                if self.subs.remove(&topic).is_some() {
                    self.status(id, "info", format!("unsubscribed {topic}"));
                } else {
                    return Err(BridgeError::BadRequest(format!("not subscribed to {topic}")));
                }
            }
            "advertise" => {
                let topic = self.shared.node.resolve(required(op, &["topic"])?)?;
                let type_name = required(op, &["type"])?.to_string();
                let latch = op.get("latch").and_then(Value::as_bool).unwrap_or(false);
                self.advertise(&topic, &type_name, latch)?;
                self.status(id, "info", format!("advertised {topic} as {type_name}"));
            }
            "unadvertise" => {
                let topic = self.shared.node.resolve(required(op, &["topic"])?)?;
                self.pubs.remove(&topic);
                self.status(id, "info", format!("unadvertised {topic}"));
            }
            "publish" => self.publish(op, id)?,
            "call_service" => self.call_service(op, id)?,
            "topics" => {
                let topics = self.topics()?;
                let mut frame = Map::new();
                frame.insert("op".into(), "topics".into());
                if let Some(id) = id {
                    frame.insert("id".into(), id.into());
                }
                frame.insert(
                    "topics".into(),
                    topics
                        .into_iter()
                        .map(|(topic, ty)| json!({"topic": topic, "type": ty}))
                        .collect(),
                );
                self.push(Value::Object(frame));
            }
            "tf_lookup" => self.tf_lookup(op, id)?,
            "status" => {
                let stats = self.stats_json();
                let mut frame = Map::new();
                frame.insert("op".into(), "status".into());
                frame.insert("level".into(), "info".into());
                if let Some(id) = id {
                    frame.insert("id".into(), id.into());
                }
                frame.insert("text".into(), "ok".into());
                frame.insert("stats".into(), stats);
                self.push(Value::Object(frame));
            }
            "" => return Err(BridgeError::BadRequest("missing \"op\"".into())),
            other => return Err(BridgeError::BadRequest(format!("unknown op {other:?}"))),
        }
        Ok(())
    }

    fn stats_json(&self) -> Value {
        let c = &self.counters;
        let s = self.shared.stats();
        json!({
            "connection": {
                "framesSent": c.frames_sent.load(Ordering::Relaxed),
                "framesDropped": c.frames_dropped.load(Ordering::Relaxed),
                "framesThrottled": c.frames_throttled.load(Ordering::Relaxed),
                "queued": self.outbox.len(),
                "subscriptions": self.subs.keys().collect::<Vec<_>>(),
                "publications": self.pubs.keys().collect::<Vec<_>>(),
            },
            "server": {
                "connectionsOpen": s.connections_open,
                "connectionsTotal": s.connections_total,
                "framesSent": s.frames_sent,
                "framesDropped": s.frames_dropped,
                "framesThrottled": s.frames_throttled,
                "ops": s.ops,
                "errors": s.errors,
            },
        })
    }

    fn subscribe(&mut self, op: &Map<String, Value>, id: Option<&str>) -> Result<(), BridgeError> {
        let node = self.shared.node.clone();
        let topic = node.resolve(required(op, &["topic"])?)?;
        let type_name = field_str(op, &["type"]).filter(|t| !t.is_empty() && *t != "*");
        let throttle_ms = match op.get("throttle_ms").or_else(|| op.get("throttle_rate")) {
            None | Some(Value::Null) => 0,
            Some(v) => v
                .as_u64()
                .ok_or_else(|| BridgeError::BadRequest("throttle_ms must be a non-negative integer".into()))?,
        };
        let throttle = (throttle_ms > 0).then(|| Duration::from_millis(throttle_ms));

        self.next_generation += 1;
        let generation = self.next_generation;
        let slot: Arc<Mutex<Option<Delivery>>> = Arc::new(Mutex::new(None));
        let callback = {
            let tx = self.tx.clone();
            let slot = slot.clone();
            let counters = self.counters.clone();
            let shared = Arc::downgrade(&self.shared);
            let topic = topic.clone();
            move |ev: &MessageEvent| {
                let d = Delivery {
                    topic: topic.clone(),
                    generation,
                    event: ev.clone(),
                    stamp_ms: now_ms(),
                };
                let Some(shared) = shared.upgrade() else { return };
                if throttle.is_some() {
                    if slot.lock().expect("slot lock").replace(d).is_some() {
                        counters.frames_throttled.fetch_add(1, Ordering::Relaxed);
                        shared.counters.frames_throttled.fetch_add(1, Ordering::Relaxed);
                    }
                } else if let Err(TrySendError::Full(_) | TrySendError::Disconnected(_)) = tx.try_send(d) {
                    counters.frames_dropped.fetch_add(1, Ordering::Relaxed);
                    shared.counters.frames_dropped.fetch_add(1, Ordering::Relaxed);
                }
            }
        };
        let handle = match type_name {
            None => node.subscribe_any(&topic, callback)?,
            Some(t) if self.shared.config.registry.contains(t) || self.shared.config.registry.get(t).is_ok() => {
                let info = TypeInfo::resolve(&self.shared.config.registry, t)?;
                node.subscribe(&topic, &info, callback)?
            }
            // Not known locally: accept any checksum and learn the schema
            // from the publisher's handshake.
            Some(t) => node.subscribe_raw(&topic, t, "*", callback)?,
        };
        // Replacing an existing subscription drops the old callback only
        // after the new one is registered, so the topic stays subscribed.
        self.subs.insert(
            topic.clone(),
            ClientSub {
                generation,
                throttle,
                slot,
                last_sent: None,
                _handle: handle,
            },
        );
        self.status(id, "info", format!("subscribed {topic}"));
        Ok(())
    }

    fn collect_deliveries(&mut self) {
        let mut ready = Vec::new();
        while let Ok(d) = self.rx.try_recv() {
            if self.subs.get(&d.topic).is_some_and(|s| s.generation == d.generation) {
                ready.push(d);
            }
        }
        let now = Instant::now();
        for sub in self.subs.values_mut() {
            let Some(period) = sub.throttle else { continue };
            if sub.last_sent.is_some_and(|t| now.duration_since(t) < period) {
                continue;
            }
            if let Some(d) = sub.slot.lock().expect("slot lock").take() {
                sub.last_sent = Some(now);
                ready.push(d);
            }
        }
        for d in ready {
            self.push_message(d);
        }
    }

    fn push_message(&mut self, d: Delivery) {
        let encoded = d
            .event
            .type_info
            .as_deref()
            .ok_or_else(|| BridgeError::BadRequest(format!("no schema known for {}", d.topic)))
            .and_then(|info| {
                let value = d.event.decode()?;
                to_json(&info.layout, &value)
            });
        match encoded {
            Ok(msg) => {
                let frame = json!({"op": "message", "topic": d.topic, "msg": msg, "recvStampMs": d.stamp_ms});
                self.push(frame);
                self.counters.frames_sent.fetch_add(1, Ordering::Relaxed);
                self.shared.counters.frames_sent.fetch_add(1, Ordering::Relaxed);
            }
            Err(e) => self.error(None, format!("{}: cannot encode message: {e}", d.topic)),
        }
    }

    fn advertise(&mut self, topic: &str, type_name: &str, latch: bool) -> Result<&Publisher, BridgeError> {
        if let Some(p) = self.pubs.get(topic) {
            if p.type_name() != type_name {
                return Err(BridgeError::BadRequest(format!(
                    "{topic} is already advertised as {} on this connection",
                    p.type_name()
                )));
            }
        } else {
            let info = TypeInfo::resolve(&self.shared.config.registry, type_name)?;
            let p = self.shared.node.advertise(topic, &info, latch)?;
            self.pubs.insert(topic.to_string(), p);
        }
        Ok(&self.pubs[topic])
    }

    /// Type for a first publish without `type`: whatever this node or the
    /// master already knows for the topic.
    fn known_topic_type(&self, topic: &str) -> Option<String> {
        let node = &self.shared.node;
        node.published_topics()
            .into_iter()
            .chain(node.subscribed_topics())
            .find(|(t, ty)| t == topic && ty != "*")
            .map(|(_, ty)| ty)
            .or_else(|| {
                node.master()?
                    .get_topic_types()
                    .ok()?
                    .into_iter()
                    .find(|(t, ty)| t == topic && ty != "*")
                    .map(|(_, ty)| ty)
            })
    }

    fn publish(&mut self, op: &Map<String, Value>, id: Option<&str>) -> Result<(), BridgeError> {
        let topic = self.shared.node.resolve(required(op, &["topic"])?)?;
        let msg = op.get("msg").cloned().unwrap_or(Value::Null);
        let type_name = match (field_str(op, &["type"]), self.pubs.get(&topic)) {
            (Some(t), _) => t.to_string(),
            (None, Some(p)) => p.type_name().to_string(),
            (None, None) => self
                .known_topic_type(&topic)
                .ok_or_else(|| BridgeError::BadRequest(format!("type of {topic} is unknown; add \"type\"")))?,
        };
        let latch = op.get("latch").and_then(Value::as_bool).unwrap_or(false);
        let publisher = self.advertise(&topic, &type_name, latch)?.clone();
        let layout = TypeInfo::resolve(&self.shared.config.registry, &type_name)?.layout;
        let value = from_json(&layout, &msg)?;
        publisher.publish(&value)?;
        if id.is_some() {
            self.status(id, "info", format!("published on {topic}"));
        }
        Ok(())
    }

    fn call_service(&mut self, op: &Map<String, Value>, id: Option<&str>) -> Result<(), BridgeError> {
        let node = self.shared.node.clone();
        let service = node.resolve(required(op, &["service"])?)?;
        let type_name = match field_str(op, &["type"]) {
            Some(t) => t.to_string(),
            None => node.service_type(&service)?,
        };
        let info = ServiceInfo::resolve(&self.shared.config.registry, &type_name)?;
        let args = op.get("args").cloned().unwrap_or(Value::Null);
        let request = from_json(&info.request, &args)?;
        let response = match node.call_service(&service, &info, &request) {
            Ok(r) => r,
            Err(NodeError::ServiceNotFound(s)) => return Err(BridgeError::Node(NodeError::ServiceNotFound(s))),
            Err(e) => return Err(e.into()),
        };
        let values = to_json(&info.response, &response)?;
        let mut frame = Map::new();
        frame.insert("op".into(), "service_response".into());
        if let Some(id) = id {
            frame.insert("id".into(), id.into());
        }
        frame.insert("service".into(), service.into());
        frame.insert("result".into(), true.into());
        frame.insert("values".into(), values);
        self.push(Value::Object(frame));
        Ok(())
    }

    fn topics(&self) -> Result<Vec<(String, String)>, BridgeError> {
        let node = &self.shared.node;
        let mut all = node.published_topics();
        if let Some(m) = node.master() {
            all.extend(m.get_topic_types()?);
        }
        all.sort();
        all.dedup();
        Ok(all)
    }

    fn tf_lookup(&mut self, op: &Map<String, Value>, id: Option<&str>) -> Result<(), BridgeError> {
        let target = required(op, &["target", "target_frame"])?.to_string();
        let source = required(op, &["source", "source_frame"])?.to_string();
        let tf = self
            .shared
            .tf
            .as_ref()
            .ok_or_else(|| BridgeError::BadRequest("transform lookups are disabled on this bridge".into()))?;
        let t = tf.lookup(&target, &source)?;
        let mut frame = Map::new();
        frame.insert("op".into(), "tf".into());
        if let Some(id) = id {
            frame.insert("id".into(), id.into());
        }
        frame.insert("target".into(), target.into());
        frame.insert("source".into(), source.into());
        frame.insert(
            "translation".into(),
            json!({"x": t.translation.x, "y": t.translation.y, "z": t.translation.z}),
        );
        frame.insert(
            "rotation".into(),
            json!({"x": t.rotation.x, "y": t.rotation.y, "z": t.rotation.z, "w": t.rotation.w}),
        );
        self.push(Value::Object(frame));
        Ok(())
    }
}

fn constant_time_eq(a: &[u8], b: &[u8]) -> bool {
    a.len() == b.len() && a.iter().zip(b).fold(0u8, |acc, (x, y)| acc | (x ^ y)) == 0
}
