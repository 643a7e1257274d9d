//! Node runtime: master registration, the slave XML-RPC API, publishers,
//! subscribers with publisher-set reconciliation, services and parameters.

mod master;
mod master_client;
pub mod names;
mod slave;
mod subscriber;

pub use master::{Master, ParamTree};
pub use master_client::{MasterClient, SystemState};
pub use subscriber::{MessageEvent, PublisherLink, BACKOFF_MAX, BACKOFF_MIN};

use std::collections::HashMap;
use std::net::{SocketAddr, ToSocketAddrs};
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::{Arc, Condvar, Mutex, OnceLock};
use std::time::Duration;

use thiserror::Error;

use crate::msg::{compute_srv_md5, SchemaError, SchemaRegistry};
use crate::tcpros::{
    QueuePolicy, ServiceClient, ServiceHandler, ServiceServer, TcprosError, TcprosRegistry, TcprosServer,
    TopicPublisher, DEFAULT_HANDSHAKE_TIMEOUT,
};
use crate::wire::{deserialize, serialize, DynamicValue, MessageLayout, RosMessage, RosService, TypeInfo, WireError};
use crate::xmlrpc::{XmlRpcError, XmlRpcServer, XrValue};

use subscriber::SubscriptionShared;

/// Parameter values are XML-RPC values.
pub type ParamValue = XrValue;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NodeError {
    #[error("master unreachable: {0}")]
    MasterUnreachable(String),
    #[error("master rejected {method} (code {code}): {status}")]
    Master { method: String, code: i32, status: String },
    #[error("protocol error: {0}")]
    Protocol(String),
    #[error("cannot bind {0}")]
    Bind(String),
    #[error("topic {topic} is already advertised as {existing}, not {requested}")]
    TypeConflict {
        topic: String,
        existing: String,
        requested: String,
    },
    #[error("service {0} not found")]
    ServiceNotFound(String),
    #[error("service call failed: {0}")]
    RemoteFailure(String),
    #[error("timed out")]
    Timeout,
    #[error("parameter {0} not found")]
    ParamNotFound(String),
    #[error("invalid graph name {0:?}")]
    InvalidName(String),
    #[error("node is shut down")]
    Shutdown,
    #[error(transparent)]
    Wire(#[from] WireError),
    #[error(transparent)]
    Schema(#[from] SchemaError),
    #[error(transparent)]
    Tcpros(#[from] TcprosError),
    #[error(transparent)]
    XmlRpc(#[from] XmlRpcError),
}

/// Node settings. Names are global; URIs are built from `advertised_host`.
#[derive(Debug, Clone)]
pub struct NodeConfig {
    pub name: String,
    pub master_uri: String,
    pub advertised_host: String,
    /// Host the XML-RPC and TCPROS listeners bind to.
    pub bind_host: String,
    pub xmlrpc_port: u16,
    pub tcpros_port: u16,
    /// Master, parameter and slave call timeout.
    pub call_timeout: Duration,
    pub handshake_timeout: Duration,
    /// Run without a master: no registration, direct publisher URIs only.
    pub offline: bool,
    pub queue: QueuePolicy,
}

pub const DEFAULT_MASTER_URI: &str = "http://localhost:11311/";

impl NodeConfig {
    pub fn new(name: &str, master_uri: &str) -> Self {
        let name = if name.starts_with('/') {
            name.to_string()
        } else {
            format!("/{name}")
        };
        NodeConfig {
            name,
            master_uri: master_uri.to_string(),
            advertised_host: "127.0.0.1".into(),
            bind_host: "0.0.0.0".into(),
            xmlrpc_port: 0,
            tcpros_port: 0,
            call_timeout: Duration::from_secs(3),
            handshake_timeout: DEFAULT_HANDSHAKE_TIMEOUT,
            offline: false,
            queue: QueuePolicy::default(),
        }
    }

    /// Reads `ROS_MASTER_URI` and `ROS_HOSTNAME`/`ROS_IP`.
    pub fn from_env(name: &str) -> Self {
        let master = std::env::var("ROS_MASTER_URI").unwrap_or_else(|_| DEFAULT_MASTER_URI.to_string());
        let mut cfg = NodeConfig::new(name, &master);
        if let Ok(host) = std::env::var("ROS_HOSTNAME").or_else(|_| std::env::var("ROS_IP")) {
            if !host.is_empty() {
                cfg.advertised_host = host;
            }
        }
        cfg
    }

    /// Loopback-only node for tests and local tools.
    pub fn local(name: &str, master_uri: &str) -> Self {
        let mut cfg = NodeConfig::new(name, master_uri);
        cfg.bind_host = "127.0.0.1".into();
        cfg
    }

    pub fn offline(name: &str) -> Self {
        let mut cfg = NodeConfig::local(name, DEFAULT_MASTER_URI);
        cfg.offline = true;
        cfg
    }

    fn bind_addr(&self, port: u16) -> String {
        if self.bind_host.contains(':') {
            format!("[{}]:{port}", self.bind_host)
        } else {
            format!("{}:{port}", self.bind_host)
        }
    }
}

struct PubEntry {
    publisher: Arc<TopicPublisher>,
    layout: Option<Arc<MessageLayout>>,
    handles: AtomicUsize,
}

#[derive(Default)]
struct Graph {
    publications: HashMap<String, Arc<PubEntry>>,
    subscriptions: HashMap<String, Arc<SubscriptionShared>>,
    services: HashMap<String, Arc<ServiceServer>>,
}

/// State reachable from the slave API, TCPROS listener and handles.
pub(crate) struct Shared {
    config: NodeConfig,
    master: Option<MasterClient>,
    slave_uri: OnceLock<String>,
    tcpros_port: OnceLock<u16>,
    graph: Mutex<Graph>,
    shut_down: AtomicBool,
    shutdown_request: (Mutex<Option<String>>, Condvar),
}

impl TcprosRegistry for Shared {
    fn publisher(&self, topic: &str) -> Option<Arc<TopicPublisher>> {
        let g = self.graph.lock().expect("graph lock");
        g.publications.get(topic).map(|e| e.publisher.clone())
    }

    fn service(&self, name: &str) -> Option<Arc<ServiceServer>> {
        self.graph.lock().expect("graph lock").services.get(name).cloned()
    }
}

impl Shared {
    fn slave_uri(&self) -> &str {
        self.slave_uri.get().map(String::as_str).unwrap_or_default()
    }

    fn name(&self) -> &str {
        &self.config.name
    }

    fn service_uri(&self) -> String {
        format!(
            "rosrpc://{}:{}",
            self.config.advertised_host,
            self.tcpros_port.get().copied().unwrap_or_default()
        )
    }

    fn unadvertise(&self, topic: &str) {
        let entry = self.graph.lock().expect("graph lock").publications.remove(topic);
        if let Some(entry) = entry {
            entry.publisher.close();
            if let Some(m) = &self.master {
                if let Err(e) = m.unregister_publisher(topic, self.slave_uri()) {
                    log::warn!("unregisterPublisher {topic}: {e}");
                }
            }
        }
    }

    fn unsubscribe(&self, topic: &str) {
        let sub = self.graph.lock().expect("graph lock").subscriptions.remove(topic);
        if let Some(sub) = sub {
            sub.close();
            if let Some(m) = &self.master {
                if let Err(e) = m.unregister_subscriber(topic, self.slave_uri()) {
                    log::warn!("unregisterSubscriber {topic}: {e}");
                }
            }
        }
    }

    fn unadvertise_service(&self, name: &str) {
        let server = self.graph.lock().expect("graph lock").services.remove(name);
        if server.is_some() {
            if let Some(m) = &self.master {
                if let Err(e) = m.unregister_service(name, &self.service_uri()) {
                    log::warn!("unregisterService {name}: {e}");
                }
            }
        }
    }
}

struct NodeInner {
    shared: Arc<Shared>,
    servers: Mutex<Option<(XmlRpcServer, TcprosServer)>>,
}

impl Drop for NodeInner {
    fn drop(&mut self) {
        shutdown_inner(&self.shared, &self.servers);
    }
}

fn shutdown_inner(shared: &Arc<Shared>, servers: &Mutex<Option<(XmlRpcServer, TcprosServer)>>) {
    if shared.shut_down.swap(true, Ordering::SeqCst) {
        return;
    }
    let graph = std::mem::take(&mut *shared.graph.lock().expect("graph lock"));
    let uri = shared.slave_uri().to_string();
    // Best effort: after the first transport failure the master is
    // considered gone, which bounds shutdown time when it is down.
    let mut master = shared.master.as_ref();
    let mut attempt = |what: &str, f: &dyn Fn(&MasterClient) -> Result<(), NodeError>| {
        if let Some(m) = master {
            match f(m) {
                Ok(()) => {}
                Err(e @ NodeError::MasterUnreachable(_)) => {
                    log::warn!("{what}: {e}; skipping remaining unregistrations");
                    master = None;
                }
                Err(e) => log::warn!("{what}: {e}"),
            }
        }
    };
    for (topic, entry) in &graph.publications {
        entry.publisher.close();
        attempt("unregisterPublisher", &|m| m.unregister_publisher(topic, &uri));
    }
    for (topic, sub) in &graph.subscriptions {
        sub.close();
        attempt("unregisterSubscriber", &|m| m.unregister_subscriber(topic, &uri));
    }
    let service_uri = shared.service_uri();
    for name in graph.services.keys() {
        attempt("unregisterService", &|m| m.unregister_service(name, &service_uri));
    }
    if let Some((mut xmlrpc, mut tcpros)) = servers.lock().expect("servers lock").take() {
        xmlrpc.shutdown();
        tcpros.shutdown();
    }
    let (lock, cv) = &shared.shutdown_request;
    lock.lock().expect("shutdown lock").get_or_insert_with(|| "node shut down".into());
    cv.notify_all();
}

/// A running node. Cheap to clone; all clones share one runtime.
#[derive(Clone)]
pub struct Node {
    inner: Arc<NodeInner>,
}

/// Per-service type metadata: combined checksum plus both layouts.
#[derive(Debug, Clone)]
pub struct ServiceInfo {
    pub type_name: String,
    pub md5sum: String,
    pub request: Arc<MessageLayout>,
    pub response: Arc<MessageLayout>,
}

impl ServiceInfo {
    pub fn resolve(registry: &SchemaRegistry, full_name: &str) -> Result<ServiceInfo, SchemaError> {
        let srv = registry.get_srv(full_name)?;
        Ok(ServiceInfo {
            type_name: full_name.to_string(),
            md5sum: compute_srv_md5(&srv, registry)?,
            request: MessageLayout::from_spec(&srv.request, registry)?,
            response: MessageLayout::from_spec(&srv.response, registry)?,
        })
    }
}

impl Node {
    /// Binds the slave and TCPROS listeners and, unless offline, checks
    /// that the master answers.
    pub fn start(config: NodeConfig) -> Result<Node, NodeError> {
        names::validate_global(&config.name)?;
        let master = if config.offline {
            None
        } else {
            Some(MasterClient::new(&config.master_uri, &config.name, config.call_timeout)?)
        };
        let shared = Arc::new(Shared {
            config: config.clone(),
            master,
            slave_uri: OnceLock::new(),
            tcpros_port: OnceLock::new(),
            graph: Mutex::new(Graph::default()),
            shut_down: AtomicBool::new(false),
            shutdown_request: (Mutex::new(None), Condvar::new()),
        });
        let registry: Arc<dyn TcprosRegistry> = shared.clone();
        let tcpros = TcprosServer::bind_with_timeout(&config.bind_addr(config.tcpros_port), registry, config.handshake_timeout)
            .map_err(|e| NodeError::Bind(format!("TCPROS listener: {e}")))?;
        let _ = shared.tcpros_port.set(tcpros.port());
        let xmlrpc = XmlRpcServer::serve(&config.bind_addr(config.xmlrpc_port), slave::methods(&shared))
            .map_err(|e| NodeError::Bind(format!("slave API: {e}")))?;
        let _ = shared.slave_uri.set(xmlrpc.uri(&config.advertised_host));
        if let Some(m) = &shared.master {
            m.call_raw("getUri", &[])?;
        }
        Ok(Node {
            inner: Arc::new(NodeInner {
                shared,
                servers: Mutex::new(Some((xmlrpc, tcpros))),
            }),
        })
    }

    fn shared(&self) -> &Arc<Shared> {
        &self.inner.shared
    }

    fn check_live(&self) -> Result<(), NodeError> {
        if self.shared().shut_down.load(Ordering::SeqCst) {
            Err(NodeError::Shutdown)
        } else {
            Ok(())
        }
    }

    pub fn name(&self) -> &str {
        self.shared().name()
    }

    pub fn config(&self) -> &NodeConfig {
        &self.shared().config
    }

    /// Slave API URI.
    pub fn uri(&self) -> &str {
        self.shared().slave_uri()
    }

    pub fn tcpros_port(&self) -> u16 {
        self.shared().tcpros_port.get().copied().unwrap_or_default()
    }

    /// `rosrpc://` URI under which this node's services are reachable.
    pub fn service_uri(&self) -> String {
        self.shared().service_uri()
    }

    pub fn master(&self) -> Option<&MasterClient> {
        self.shared().master.as_ref()
    }

    fn require_master(&self) -> Result<&MasterClient, NodeError> {
        self.master()
            .ok_or_else(|| NodeError::MasterUnreachable("node runs in offline mode".into()))
    }

    pub fn resolve(&self, name: &str) -> Result<String, NodeError> {
        names::resolve(self.name(), name)
    }

    // ---- publishing ----

    /// Advertises `topic` with the given type metadata. Re-advertising the
    /// same topic and type returns a handle to the same publisher.
    pub fn advertise_raw(
        &self,
        topic: &str,
        type_name: &str,
        md5sum: &str,
        definition: &str,
        latching: bool,
        layout: Option<Arc<MessageLayout>>,
    ) -> Result<Publisher, NodeError> {
        self.check_live()?;
        let topic = self.resolve(topic)?;
        let shared = self.shared();
        let mut g = shared.graph.lock().expect("graph lock");
        if let Some(entry) = g.publications.get(&topic) {
            if entry.publisher.md5sum != md5sum {
                return Err(NodeError::TypeConflict {
                    topic,
                    existing: format!("{}/{}", entry.publisher.type_name, entry.publisher.md5sum),
                    requested: format!("{type_name}/{md5sum}"),
                });
            }
            entry.handles.fetch_add(1, Ordering::SeqCst);
            return Ok(Publisher {
                entry: entry.clone(),
                shared: shared.clone(),
            });
        }
        let entry = Arc::new(PubEntry {
            publisher: Arc::new(TopicPublisher::new(
                &topic,
                type_name,
                md5sum,
                definition,
                self.name(),
                latching,
                shared.config.queue,
            )),
            layout,
            handles: AtomicUsize::new(1),
        });
        g.publications.insert(topic.clone(), entry.clone());
        drop(g);
        if let Some(m) = &shared.master {
            if let Err(e) = m.register_publisher(&topic, type_name, shared.slave_uri()) {
                shared.graph.lock().expect("graph lock").publications.remove(&topic);
                return Err(e);
            }
        }
        Ok(Publisher {
            entry,
            shared: shared.clone(),
        })
    }

    /// Advertises a topic whose schema is known dynamically.
    pub fn advertise(&self, topic: &str, info: &TypeInfo, latching: bool) -> Result<Publisher, NodeError> {
        self.advertise_raw(
            topic,
            &info.type_name,
            &info.md5sum,
            &info.definition,
            latching,
            Some(info.layout.clone()),
        )
    }

    /// Advertises a topic for a generated message type.
    pub fn advertise_msg<M: RosMessage>(&self, topic: &str, latching: bool) -> Result<Publisher, NodeError> {
        self.advertise_raw(topic, M::TYPE_NAME, M::MD5SUM, M::DEFINITION, latching, None)
    }

    // ---- subscribing ----

    fn subscribe_inner(
        &self,
        topic: &str,
        type_name: &str,
        md5sum: &str,
        known_type: Option<Arc<TypeInfo>>,
        callback: subscriber::Callback,
    ) -> Result<Subscription, NodeError> {
        self.check_live()?;
        let topic = self.resolve(topic)?;
        let shared = self.shared();
        let mut g = shared.graph.lock().expect("graph lock");
        if let Some(sub) = g.subscriptions.get(&topic) {
            if md5sum != "*" && sub.md5sum != "*" && sub.md5sum != md5sum {
                return Err(NodeError::TypeConflict {
                    topic,
                    existing: format!("{}/{}", sub.type_name, sub.md5sum),
                    requested: format!("{type_name}/{md5sum}"),
                });
            }
            let id = sub.add_callback(callback);
            return Ok(Subscription {
                sub: sub.clone(),
                shared: shared.clone(),
                callback_id: id,
            });
        }
        let sub = SubscriptionShared::new(
            &topic,
            type_name,
            md5sum,
            self.name(),
            known_type,
            shared.config.call_timeout,
            shared.config.handshake_timeout,
        );
        let id = sub.add_callback(callback);
        g.subscriptions.insert(topic.clone(), sub.clone());
        drop(g);
        if let Some(m) = &shared.master {
            match m.register_subscriber(&topic, type_name, shared.slave_uri()) {
                Ok(publishers) => sub.reconcile(&publishers),
                Err(e) => {
                    shared.graph.lock().expect("graph lock").subscriptions.remove(&topic);
                    sub.close();
                    return Err(e);
                }
            }
        }
        Ok(Subscription {
            sub,
            shared: shared.clone(),
            callback_id: id,
        })
    }

    /// Subscribes with explicit type metadata; `md5sum` may be `*`.
    pub fn subscribe_raw(
        &self,
        topic: &str,
        type_name: &str,
        md5sum: &str,
        callback: impl FnMut(&MessageEvent) + Send + 'static,
    ) -> Result<Subscription, NodeError> {
        self.subscribe_inner(topic, type_name, md5sum, None, Box::new(callback))
    }

    /// Schema-free subscription: accepts any publisher and rebuilds the
    /// schema from its `message_definition`.
    pub fn subscribe_any(
        &self,
        topic: &str,
        callback: impl FnMut(&MessageEvent) + Send + 'static,
    ) -> Result<Subscription, NodeError> {
        self.subscribe_inner(topic, "*", "*", None, Box::new(callback))
    }

    pub fn subscribe(
        &self,
        topic: &str,
        info: &TypeInfo,
        callback: impl FnMut(&MessageEvent) + Send + 'static,
    ) -> Result<Subscription, NodeError> {
        self.subscribe_inner(
            topic,
            &info.type_name,
            &info.md5sum,
            Some(Arc::new(info.clone())),
            Box::new(callback),
        )
    }

    /// Typed subscription; undecodable messages are logged and skipped.
    pub fn subscribe_msg<M: RosMessage>(
        &self,
        topic: &str,
        mut callback: impl FnMut(M) + Send + 'static,
    ) -> Result<Subscription, NodeError> {
        self.subscribe_inner(
            topic,
            M::TYPE_NAME,
            M::MD5SUM,
            None,
            Box::new(move |ev: &MessageEvent| match M::from_bytes(&ev.bytes) {
                Ok(m) => callback(m),
                Err(e) => log::warn!("{}: dropping undecodable {}: {e}", ev.topic, M::TYPE_NAME),
            }),
        )
    }

    // ---- services ----

    pub fn advertise_service_raw(
        &self,
        name: &str,
        type_name: &str,
        md5sum: &str,
        handler: ServiceHandler,
    ) -> Result<ServiceHandle, NodeError> {
        self.check_live()?;
        let name = self.resolve(name)?;
        let shared = self.shared();
        let server = Arc::new(ServiceServer::new(&name, type_name, md5sum, self.name(), handler));
        {
            let mut g = shared.graph.lock().expect("graph lock");
            if g.services.contains_key(&name) {
                return Err(NodeError::Protocol(format!("service {name} is already provided by this node")));
            }
            g.services.insert(name.clone(), server.clone());
        }
        if let Some(m) = &shared.master {
            if let Err(e) = m.register_service(&name, &shared.service_uri(), shared.slave_uri()) {
                shared.graph.lock().expect("graph lock").services.remove(&name);
                return Err(e);
            }
        }
        Ok(ServiceHandle {
            server,
            shared: shared.clone(),
        })
    }

    /// Service over dynamic values.
    pub fn advertise_service(
        &self,
        name: &str,
        info: &ServiceInfo,
        handler: impl Fn(DynamicValue) -> Result<DynamicValue, String> + Send + Sync + 'static,
    ) -> Result<ServiceHandle, NodeError> {
        let (req, resp) = (info.request.clone(), info.response.clone());
        self.advertise_service_raw(
            name,
            &info.type_name,
            &info.md5sum,
            Arc::new(move |bytes: &[u8]| {
                let request = deserialize(&req, bytes).map_err(|e| format!("bad request: {e}"))?;
                let response = handler(request)?;
                serialize(&resp, &response).map_err(|e| format!("bad response: {e}"))
            }),
        )
    }

    /// Service for a generated service type.
    pub fn advertise_service_typed<S: RosService>(
        &self,
        name: &str,
        handler: impl Fn(S::Request) -> Result<S::Response, String> + Send + Sync + 'static,
    ) -> Result<ServiceHandle, NodeError> {
        self.advertise_service_raw(
            name,
            S::TYPE_NAME,
            S::MD5SUM,
            Arc::new(move |bytes: &[u8]| {
                let request = S::Request::from_bytes(bytes).map_err(|e| format!("bad request: {e}"))?;
                Ok(handler(request)?.to_bytes())
            }),
        )
    }

    /// Looks the service up and performs one non-persistent call.
    pub fn call_service_raw(&self, name: &str, md5sum: &str, request: &[u8]) -> Result<Vec<u8>, NodeError> {
        self.check_live()?;
        let name = self.resolve(name)?;
        let uri = self.require_master()?.lookup_service(&name)?;
        self.call_service_at(&uri, &name, md5sum, request)
    }

    /// Calls a service at a known `rosrpc://host:port` URI.
    pub fn call_service_at(&self, uri: &str, name: &str, md5sum: &str, request: &[u8]) -> Result<Vec<u8>, NodeError> {
        let addr = parse_rosrpc(uri)?;
        let timeout = self.config().call_timeout;
        let mut client = ServiceClient::connect(addr, name, md5sum, self.name(), false, timeout).map_err(|e| match e {
            TcprosError::Timeout => NodeError::Timeout,
            e => e.into(),
        })?;
        match client.call(request) {
            Ok((true, body)) => Ok(body),
            Ok((false, text)) => Err(NodeError::RemoteFailure(String::from_utf8_lossy(&text).into_owned())),
            Err(TcprosError::Timeout) => Err(NodeError::Timeout),
            Err(e) => Err(e.into()),
        }
    }

    /// Asks the provider of `name` for its service type with a wildcard
    /// handshake; no request is sent.
    pub fn service_type(&self, name: &str) -> Result<String, NodeError> {
        self.check_live()?;
        let name = self.resolve(name)?;
        let uri = self.require_master()?.lookup_service(&name)?;
        let addr = parse_rosrpc(&uri)?;
        let timeout = self.config().call_timeout;
        let client = ServiceClient::connect(addr, &name, "*", self.name(), false, timeout).map_err(|e| match e {
            TcprosError::Timeout => NodeError::Timeout,
            e => e.into(),
        })?;
        client
            .reply
            .get("type")
            .map(str::to_string)
            .ok_or_else(|| NodeError::Protocol(format!("{name}: provider did not report a type")))
    }

    pub fn call_service(&self, name: &str, info: &ServiceInfo, request: &DynamicValue) -> Result<DynamicValue, NodeError> {
        let bytes = serialize(&info.request, request)?;
        let reply = self.call_service_raw(name, &info.md5sum, &bytes)?;
        Ok(deserialize(&info.response, &reply)?)
    }

    pub fn call_service_typed<S: RosService>(&self, name: &str, request: &S::Request) -> Result<S::Response, NodeError> {
        let reply = self.call_service_raw(name, S::MD5SUM, &request.to_bytes())?;
        Ok(S::Response::from_bytes(&reply)?)
    }

    // ---- parameters ----

    pub fn get_param(&self, key: &str) -> Result<ParamValue, NodeError> {
        self.require_master()?.get_param(&self.resolve(key)?)
    }

    pub fn set_param(&self, key: &str, value: ParamValue) -> Result<(), NodeError> {
        self.require_master()?.set_param(&self.resolve(key)?, value)
    }

    pub fn has_param(&self, key: &str) -> Result<bool, NodeError> {
        self.require_master()?.has_param(&self.resolve(key)?)
    }

    pub fn delete_param(&self, key: &str) -> Result<(), NodeError> {
        self.require_master()?.delete_param(&self.resolve(key)?)
    }

    /// Searches upward from this node's namespace; relative keys only.
    pub fn search_param(&self, key: &str) -> Result<String, NodeError> {
        self.require_master()?.search_param(key)
    }

    pub fn param_names(&self) -> Result<Vec<String>, NodeError> {
        self.require_master()?.get_param_names()
    }

    // ---- introspection and lifecycle ----

    pub fn published_topics(&self) -> Vec<(String, String)> {
        let g = self.shared().graph.lock().expect("graph lock");
        let mut v: Vec<_> = g
            .publications
            .iter()
            .map(|(t, e)| (t.clone(), e.publisher.type_name.clone()))
            .collect();
        v.sort();
        v
    }

    pub fn subscribed_topics(&self) -> Vec<(String, String)> {
        let g = self.shared().graph.lock().expect("graph lock");
        let mut v: Vec<_> = g
            .subscriptions
            .iter()
            .map(|(t, s)| {
                let ty = s.type_info().map(|t| t.type_name.clone()).unwrap_or_else(|| s.type_name.clone());
                (t.clone(), ty)
            })
            .collect();
        v.sort();
        v
    }

    pub fn provided_services(&self) -> Vec<String> {
        let g = self.shared().graph.lock().expect("graph lock");
        let mut v: Vec<_> = g.services.keys().cloned().collect();
        v.sort();
        v
    }

    pub fn is_shut_down(&self) -> bool {
        self.shared().shut_down.load(Ordering::SeqCst)
    }

    /// Blocks until the slave `shutdown` method is called, the node shuts
    /// down, or `timeout` passes. Returns the reason when one arrived.
    pub fn wait_shutdown_request(&self, timeout: Option<Duration>) -> Option<String> {
        let (lock, cv) = &self.shared().shutdown_request;
        let guard = lock.lock().expect("shutdown lock");
        match timeout {
            None => cv.wait_while(guard, |r| r.is_none()).expect("shutdown lock").clone(),
            Some(t) => cv.wait_timeout_while(guard, t, |r| r.is_none()).expect("shutdown lock").0.clone(),
        }
    }

    /// Unregisters everything, closes links and stops the servers. Idempotent.
    pub fn shutdown(&self) {
        shutdown_inner(&self.inner.shared, &self.inner.servers);
    }
}

fn parse_rosrpc(uri: &str) -> Result<SocketAddr, NodeError> {
    let invalid = || NodeError::Protocol(format!("invalid service URI {uri:?}"));
    let rest = uri.strip_prefix("rosrpc://").ok_or_else(invalid)?;
    let hostport = rest.trim_end_matches('/');
    hostport
        .to_socket_addrs()
        .map_err(|_| invalid())?
        .next()
        .ok_or_else(invalid)
}

/// Handle to an advertised topic; the topic is unadvertised when the last
/// handle is dropped.
pub struct Publisher {
    entry: Arc<PubEntry>,
    shared: Arc<Shared>,
}

impl Publisher {
    pub fn topic(&self) -> &str {
        &self.entry.publisher.topic
    }

    pub fn type_name(&self) -> &str {
        &self.entry.publisher.type_name
    }

    pub fn md5sum(&self) -> &str {
        &self.entry.publisher.md5sum
    }

    /// Publishes pre-serialized bytes; returns how many links accepted them.
    pub fn publish_bytes(&self, bytes: Vec<u8>) -> usize {
        self.entry.publisher.publish(bytes)
    }

    /// Publishes a dynamic value checked against the advertised schema.
    pub fn publish(&self, value: &DynamicValue) -> Result<usize, NodeError> {
        let layout = self.entry.layout.as_ref().ok_or_else(|| {
            NodeError::Protocol(format!("{} was advertised without a schema", self.topic()))
        })?;
        Ok(self.publish_bytes(serialize(layout, value)?))
    }

    /// Publishes a generated message; the type must match the advertisement.
    pub fn send<M: RosMessage>(&self, msg: &M) -> Result<usize, NodeError> {
        if M::MD5SUM != self.md5sum() {
            return Err(NodeError::TypeConflict {
                topic: self.topic().to_string(),
                existing: format!("{}/{}", self.type_name(), self.md5sum()),
                requested: format!("{}/{}", M::TYPE_NAME, M::MD5SUM),
            });
        }
        Ok(self.publish_bytes(msg.to_bytes()))
    }

    pub fn num_subscribers(&self) -> usize {
        self.entry.publisher.num_subscribers()
    }

    pub fn links(&self) -> Vec<Arc<crate::tcpros::SubscriberLink>> {
        self.entry.publisher.links()
    }
}

impl Clone for Publisher {
    fn clone(&self) -> Self {
        self.entry.handles.fetch_add(1, Ordering::SeqCst);
        Publisher {
            entry: self.entry.clone(),
            shared: self.shared.clone(),
        }
    }
}

impl Drop for Publisher {
    fn drop(&mut self) {
        if self.entry.handles.fetch_sub(1, Ordering::SeqCst) == 1 && !self.shared.shut_down.load(Ordering::SeqCst) {
            self.shared.unadvertise(&self.entry.publisher.topic);
        }
    }
}

/// Handle to a subscription callback; the topic is unsubscribed when the
/// last callback for it is dropped.
pub struct Subscription {
    sub: Arc<SubscriptionShared>,
    shared: Arc<Shared>,
    callback_id: u64,
}

impl Subscription {
    pub fn topic(&self) -> &str {
        &self.sub.topic
    }

    /// Schema in use, once known.
    pub fn type_info(&self) -> Option<Arc<TypeInfo>> {
        self.sub.type_info()
    }

    pub fn links(&self) -> Vec<Arc<PublisherLink>> {
        self.sub.links()
    }

    pub fn connected_publishers(&self) -> usize {
        self.sub.links().iter().filter(|l| l.is_connected()).count()
    }

    pub fn publisher_uris(&self) -> Vec<String> {
        self.sub.publisher_uris().into_iter().collect()
    }

    /// Replaces the publisher set directly (offline mode, tests).
    pub fn set_publishers(&self, uris: &[String]) {
        self.sub.reconcile(uris);
    }

    /// Number of messages handed to callbacks so far.
    pub fn delivered(&self) -> u64 {
        self.sub.delivered.load(Ordering::Relaxed)
    }
}

impl Drop for Subscription {
    fn drop(&mut self) {
        if self.sub.remove_callback(self.callback_id) == 0 && !self.shared.shut_down.load(Ordering::SeqCst) {
            let current = {
                let g = self.shared.graph.lock().expect("graph lock");
                g.subscriptions.get(&self.sub.topic).is_some_and(|s| Arc::ptr_eq(s, &self.sub))
            };
            if current {
                self.shared.unsubscribe(&self.sub.topic);
            } else {
                self.sub.close();
            }
        }
    }
}

/// Handle to a provided service; unregistered on drop.
pub struct ServiceHandle {
    server: Arc<ServiceServer>,
    shared: Arc<Shared>,
}

impl ServiceHandle {
    pub fn name(&self) -> &str {
        &self.server.name
    }

    /// Requests handled so far.
    pub fn call_count(&self) -> u64 {
        self.server.calls.load(Ordering::Relaxed)
    }
}

impl Drop for ServiceHandle {
    fn drop(&mut self) {
        if !self.shared.shut_down.load(Ordering::SeqCst) {
            self.shared.unadvertise_service(&self.server.name);
        }
    }
}
