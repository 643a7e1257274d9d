use std::collections::{BTreeSet, HashMap};
use std::net::{TcpStream, ToSocketAddrs};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::mpsc::{sync_channel, Receiver, SyncSender};
use std::sync::{Arc, Condvar, Mutex, OnceLock};
use std::thread::JoinHandle;
use std::time::{Duration, Instant};

use crate::msg::parse_definition_bundle;
use crate::tcpros::{
    read_frame, subscriber_handshake, ConnectionHeader, LinkCounters, SubscribeParams, TcprosError, DEFAULT_MAX_FRAME,
};
use crate::wire::{deserialize, DynamicValue, RosMessage, TypeInfo};
use crate::xmlrpc::{RosRpcReply, XmlRpcClient, XrValue};

use super::NodeError;

/// First retry delay after a publisher link fails.
pub const BACKOFF_MIN: Duration = Duration::from_millis(500);
/// Retry delays double up to this cap.
pub const BACKOFF_MAX: Duration = Duration::from_secs(8);
/// Messages buffered between link readers and the delivery lane.
const LANE_CAPACITY: usize = 256;

/// One received message and where it came from.
#[derive(Debug, Clone)]
pub struct MessageEvent {
    pub topic: String,
    pub bytes: Vec<u8>,
    /// Slave URI of the publishing node.
    pub publisher_uri: String,
    pub publisher_caller_id: String,
    pub link_id: u64,
    /// Schema, when known locally or rebuilt from the publisher's definition.
    pub type_info: Option<Arc<TypeInfo>>,
    pub received: Instant,
}

impl MessageEvent {
    pub fn type_name(&self) -> Option<&str> {
        self.type_info.as_deref().map(|t| t.type_name.as_str())
    }

    pub fn decode(&self) -> Result<DynamicValue, NodeError> {
        let info = self
            .type_info
            .as_deref()
            .ok_or_else(|| NodeError::Protocol(format!("no schema known for {}", self.topic)))?;
        Ok(deserialize(&info.layout, &self.bytes)?)
    }

    pub fn decode_as<M: RosMessage>(&self) -> Result<M, NodeError> {
        Ok(M::from_bytes(&self.bytes)?)
    }
}

pub(crate) type Callback = Box<dyn FnMut(&MessageEvent) + Send>;

/// The subscriber's end of one publisher connection.
pub struct PublisherLink {
    pub id: u64,
    pub uri: String,
    pub counters: LinkCounters,
    connected: AtomicBool,
    cancelled: AtomicBool,
    stream: Mutex<Option<TcpStream>>,
    header: Mutex<Option<ConnectionHeader>>,
    last_error: Mutex<Option<String>>,
    handshake_rejected: AtomicBool,
    wake: (Mutex<()>, Condvar),
}

impl PublisherLink {
    pub fn is_connected(&self) -> bool {
        self.connected.load(Ordering::SeqCst)
    }

    pub fn header(&self) -> Option<ConnectionHeader> {
        self.header.lock().expect("link lock").clone()
    }

    pub fn last_error(&self) -> Option<String> {
        self.last_error.lock().expect("link lock").clone()
    }

    /// True when the latest connection attempt was refused during the
    /// handshake (checksum mismatch or an explicit `error` header).
    pub fn handshake_rejected(&self) -> bool {
        self.handshake_rejected.load(Ordering::SeqCst)
    }

    fn cancel(&self) {
        self.cancelled.store(true, Ordering::SeqCst);
        if let Some(s) = self.stream.lock().expect("link lock").as_ref() {
            let _ = s.shutdown(std::net::Shutdown::Both);
        }
        let _guard = self.wake.0.lock().expect("link lock");
        self.wake.1.notify_all();
    }

    fn is_cancelled(&self) -> bool {
        self.cancelled.load(Ordering::SeqCst)
    }

    fn sleep(&self, d: Duration) {
        let deadline = Instant::now() + d;
        let mut guard = self.wake.0.lock().expect("link lock");
        while !self.is_cancelled() {
            let now = Instant::now();
            if now >= deadline {
                break;
            }
            guard = self.wake.1.wait_timeout(guard, deadline - now).expect("link lock").0;
        }
    }
}

/// State shared by every handle subscribed to one topic on this node.
pub(crate) struct SubscriptionShared {
    pub topic: String,
    pub type_name: String,
    pub md5sum: String,
    pub caller_id: String,
    pub known_type: Option<Arc<TypeInfo>>,
    pub discovered_type: OnceLock<Arc<TypeInfo>>,
    pub call_timeout: Duration,
    pub handshake_timeout: Duration,
    links: Mutex<HashMap<String, Arc<PublisherLink>>>,
    next_link_id: AtomicU64,
    callbacks: Arc<Mutex<Vec<(u64, Callback)>>>,
    next_callback: AtomicU64,
    tx: Mutex<Option<SyncSender<MessageEvent>>>,
    lane: Mutex<Option<JoinHandle<()>>>,
    closed: AtomicBool,
    pub delivered: Arc<AtomicU64>,
}

impl SubscriptionShared {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        topic: &str,
        type_name: &str,
        md5sum: &str,
        caller_id: &str,
        known_type: Option<Arc<TypeInfo>>,
        call_timeout: Duration,
        handshake_timeout: Duration,
    ) -> Arc<Self> {
        let (tx, rx) = sync_channel::<MessageEvent>(LANE_CAPACITY);
        let callbacks: Arc<Mutex<Vec<(u64, Callback)>>> = Arc::default();
        let delivered = Arc::new(AtomicU64::new(0));
        let lane = {
            let callbacks = callbacks.clone();
            let delivered = delivered.clone();
            std::thread::Builder::new()
                .name(format!("sub{topic}"))
                .spawn(move || delivery_lane(rx, callbacks, delivered))
                .ok()
        };
        Arc::new(SubscriptionShared {
            topic: topic.to_string(),
            type_name: type_name.to_string(),
            md5sum: md5sum.to_string(),
            caller_id: caller_id.to_string(),
            known_type,
            discovered_type: OnceLock::new(),
            call_timeout,
            handshake_timeout,
            links: Mutex::new(HashMap::new()),
            next_link_id: AtomicU64::new(1),
            callbacks,
            next_callback: AtomicU64::new(1),
            tx: Mutex::new(Some(tx)),
            lane: Mutex::new(lane),
            closed: AtomicBool::new(false),
            delivered,
        })
    }

    pub fn add_callback(&self, cb: Callback) -> u64 {
        let id = self.next_callback.fetch_add(1, Ordering::Relaxed);
        self.callbacks.lock().expect("callbacks lock").push((id, cb));
        id
    }

    /// Removes a callback; returns how many remain.
    pub fn remove_callback(&self, id: u64) -> usize {
        let mut cbs = self.callbacks.lock().expect("callbacks lock");
        cbs.retain(|(i, _)| *i != id);
        cbs.len()
    }

    pub fn type_info(&self) -> Option<Arc<TypeInfo>> {
        self.known_type.clone().or_else(|| self.discovered_type.get().cloned())
    }

    pub fn links(&self) -> Vec<Arc<PublisherLink>> {
        self.links.lock().expect("links lock").values().cloned().collect()
    }

    pub fn publisher_uris(&self) -> BTreeSet<String> {
        self.links.lock().expect("links lock").keys().cloned().collect()
    }

    /// Makes the link set equal `uris`: new publishers are connected, links
    /// to publishers no longer listed are closed.
    pub fn reconcile(self: &Arc<Self>, uris: &[String]) {
        if self.closed.load(Ordering::SeqCst) {
            return;
        }
        let wanted: BTreeSet<&String> = uris.iter().collect();
        let Some(tx) = self.tx.lock().expect("tx lock").clone() else {
            return;
        };
        let mut links = self.links.lock().expect("links lock");
        links.retain(|uri, link| {
            let keep = wanted.contains(uri);
            if !keep {
                link.cancel();
            }
            keep
        });
        for uri in wanted {
            if links.contains_key(uri) {
                continue;
            }
            let link = Arc::new(PublisherLink {
                id: self.next_link_id.fetch_add(1, Ordering::Relaxed),
                uri: uri.clone(),
                counters: LinkCounters::default(),
                connected: AtomicBool::new(false),
                cancelled: AtomicBool::new(false),
                stream: Mutex::new(None),
                header: Mutex::new(None),
                last_error: Mutex::new(None),
                handshake_rejected: AtomicBool::new(false),
                wake: (Mutex::new(()), Condvar::new()),
            });
            links.insert(uri.clone(), link.clone());
            let sub = self.clone();
            let tx = tx.clone();
            let spawned = std::thread::Builder::new()
                .name(format!("link{}", self.topic))
                .spawn(move || run_link(sub, link, tx));
            if let Err(e) = spawned {
                log::warn!("{}: cannot start link thread: {e}", self.topic);
            }
        }
    }

    /// Closes every link and stops the delivery lane.
    pub fn close(&self) {
        if self.closed.swap(true, Ordering::SeqCst) {
            return;
        }
        for (_, link) in self.links.lock().expect("links lock").drain() {
            link.cancel();
        }
        // The lane ends once the link threads drop their senders; nothing is
        // delivered after this point because the callbacks are gone.
        self.tx.lock().expect("tx lock").take();
        self.callbacks.lock().expect("callbacks lock").clear();
        self.lane.lock().expect("lane lock").take();
    }
}

fn delivery_lane(rx: Receiver<MessageEvent>, callbacks: Arc<Mutex<Vec<(u64, Callback)>>>, delivered: Arc<AtomicU64>) {
    for event in rx {
        let mut cbs = callbacks.lock().expect("callbacks lock");
        for (_, cb) in cbs.iter_mut() {
            cb(&event);
        }
        delivered.fetch_add(1, Ordering::Relaxed);
    }
}

fn connect_once(
    sub: &SubscriptionShared,
    link: &PublisherLink,
) -> Result<(TcpStream, ConnectionHeader, Option<Arc<TypeInfo>>), NodeError> {
    let reply = XmlRpcClient::new(&link.uri)?
        .with_timeout(sub.call_timeout)
        .call_ros(
            "requestTopic",
            &[
                XrValue::str(&sub.caller_id),
                XrValue::str(&sub.topic),
                XrValue::Seq(vec![XrValue::Seq(vec![XrValue::str("TCPROS")])]),
            ],
        )?;
    if reply.code != RosRpcReply::SUCCESS {
        return Err(NodeError::Protocol(format!("requestTopic refused: {}", reply.status)));
    }
    let (host, port) = match reply.payload.as_seq() {
        Some([proto, XrValue::Str(host), XrValue::Int(port)]) if proto.as_str() == Some("TCPROS") => {
            (host.clone(), *port)
        }
        _ => return Err(NodeError::Protocol(format!("unexpected requestTopic reply {:?}", reply.payload))),
    };
    let port = u16::try_from(port).map_err(|_| NodeError::Protocol(format!("invalid port {port}")))?;
    let addr = (host.as_str(), port)
        .to_socket_addrs()
        .map_err(|e| NodeError::Protocol(format!("resolving {host}: {e}")))?
        .next()
        .ok_or_else(|| NodeError::Protocol(format!("no address for {host}")))?;
    let mut stream = TcpStream::connect_timeout(&addr, sub.handshake_timeout)
        .map_err(|e| NodeError::Tcpros(e.into()))?;
    *link.stream.lock().expect("link lock") = stream.try_clone().ok();
    if link.is_cancelled() {
        return Err(NodeError::Shutdown);
    }
    let params = SubscribeParams {
        topic: sub.topic.clone(),
        type_name: sub.type_name.clone(),
        md5sum: sub.md5sum.clone(),
        caller_id: sub.caller_id.clone(),
        tcp_nodelay: true,
    };
    let header = subscriber_handshake(&mut stream, &params, sub.handshake_timeout)?;
    let info = match &sub.known_type {
        Some(t) => Some(t.clone()),
        None => header
            .get("message_definition")
            .zip(header.get("type"))
            .and_then(|(def, ty)| {
                let registry = parse_definition_bundle(def, ty).ok()?;
                TypeInfo::resolve(&registry, ty).ok()
            })
            .map(|mut t| {
                // Trust the publisher's checksum over our reconstruction.
                if let Some(md5) = header.get("md5sum") {
                    t.md5sum = md5.to_string();
                }
                Arc::new(t)
            }),
    };
    if let Some(t) = &info {
        let _ = sub.discovered_type.set(t.clone());
    }
    Ok((stream, header, info))
}

fn run_link(sub: Arc<SubscriptionShared>, link: Arc<PublisherLink>, tx: SyncSender<MessageEvent>) {
    let mut backoff = BACKOFF_MIN;
    while !link.is_cancelled() {
        match connect_once(&sub, &link) {
            Ok((mut stream, header, info)) => {
                backoff = BACKOFF_MIN;
                link.handshake_rejected.store(false, Ordering::SeqCst);
                let caller = header.get("callerid").unwrap_or_default().to_string();
                *link.header.lock().expect("link lock") = Some(header);
                link.connected.store(true, Ordering::SeqCst);
                loop {
                    match read_frame(&mut stream, DEFAULT_MAX_FRAME) {
                        Ok(bytes) => {
                            link.counters.messages.fetch_add(1, Ordering::Relaxed);
                            link.counters.bytes.fetch_add(bytes.len() as u64 + 4, Ordering::Relaxed);
                            let event = MessageEvent {
                                topic: sub.topic.clone(),
                                bytes,
                                publisher_uri: link.uri.clone(),
                                publisher_caller_id: caller.clone(),
                                link_id: link.id,
                                type_info: info.clone(),
                                received: Instant::now(),
                            };
                            if tx.send(event).is_err() {
                                link.connected.store(false, Ordering::SeqCst);
                                return;
                            }
                        }
                        Err(e) => {
                            if !link.is_cancelled() {
                                log::debug!("{}: link to {} ended: {e}", sub.topic, link.uri);
                                *link.last_error.lock().expect("link lock") = Some(e.to_string());
                            }
                            break;
                        }
                    }
                }
                link.connected.store(false, Ordering::SeqCst);
            }
            Err(e) => {
                if !link.is_cancelled() {
                    log::debug!("{}: connecting to {} failed: {e}", sub.topic, link.uri);
                    let rejected = matches!(
                        e,
                        NodeError::Tcpros(TcprosError::HandshakeRejected(_) | TcprosError::Md5Mismatch { .. })
                    );
                    link.handshake_rejected.store(rejected, Ordering::SeqCst);
                    *link.last_error.lock().expect("link lock") = Some(e.to_string());
                }
            }
        }
        if link.is_cancelled() {
            break;
        }
        link.sleep(backoff);
        backoff = (backoff * 2).min(BACKOFF_MAX);
    }
}
