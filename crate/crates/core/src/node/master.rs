//! A small in-process ROS master: name registration, publisher-update
//! notifications, service lookup and the parameter server. Used by tests,
//! offline demos and `roslite run master`.

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::mpsc::{channel, Sender};
use std::sync::{Arc, Mutex};
use std::thread::JoinHandle;
use std::time::Duration;

use crate::xmlrpc::{Handler, RosRpcReply, XmlRpcClient, XmlRpcError, XmlRpcServer, XrValue};

use super::master_client::SystemState;
use super::names::{namespace_of, resolve};

/// Hierarchical parameter store; namespaces are `Record`s.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ParamTree {
    root: Vec<(String, XrValue)>,
}

fn segments(key: &str) -> Vec<&str> {
    key.split('/').filter(|s| !s.is_empty()).collect()
}

impl ParamTree {
    pub fn new() -> Self {
        Self::default()
    }

    fn members_mut<'a>(members: &'a mut [(String, XrValue)], name: &str) -> Option<&'a mut XrValue> {
        members.iter_mut().find(|(k, _)| k == name).map(|(_, v)| v)
    }

    pub fn set(&mut self, key: &str, value: XrValue) {
        let segs = segments(key);
        let Some((last, parents)) = segs.split_last() else {
            if let XrValue::Record(m) = value {
                self.root = m;
            }
            return;
        };
        let mut members = &mut self.root;
        for seg in parents {
            let needs_ns = !matches!(Self::members_mut(members, seg), Some(XrValue::Record(_)));
            if needs_ns {
                members.retain(|(k, _)| k != seg);
                members.push((seg.to_string(), XrValue::Record(Vec::new())));
            }
            members = match Self::members_mut(members, seg) {
                Some(XrValue::Record(m)) => m,
                _ => unreachable!("namespace just ensured"),
            };
        }
        match Self::members_mut(members, last) {
            Some(slot) => *slot = value,
            None => members.push((last.to_string(), value)),
        }
    }

    pub fn get(&self, key: &str) -> Option<XrValue> {
        let mut current = XrValue::Record(self.root.clone());
        for seg in segments(key) {
            current = current.member(seg)?.clone();
        }
        Some(current)
    }

    pub fn has(&self, key: &str) -> bool {
        self.get(key).is_some()
    }

    pub fn delete(&mut self, key: &str) -> bool {
        let segs = segments(key);
        let Some((last, parents)) = segs.split_last() else {
            return false;
        };
        let mut members = &mut self.root;
        for seg in parents {
            members = match Self::members_mut(members, seg) {
                Some(XrValue::Record(m)) => m,
                _ => return false,
            };
        }
        let before = members.len();
        members.retain(|(k, _)| k != last);
        members.len() != before
    }

    /// Full names of every leaf value.
    pub fn names(&self) -> Vec<String> {
        fn walk(prefix: &str, members: &[(String, XrValue)], out: &mut Vec<String>) {
            for (k, v) in members {
                let full = format!("{prefix}/{k}");
                match v {
                    XrValue::Record(m) if !m.is_empty() => walk(&full, m, out),
                    _ => out.push(full),
                }
            }
        }
        let mut out = Vec::new();
        walk("", &self.root, &mut out);
        out
    }

    /// Searches `key` upward from `namespace`; returns the first existing full name.
    pub fn search(&self, namespace: &str, key: &str) -> Option<String> {
        let key = key.trim_start_matches('~');
        if key.starts_with('/') {
            return self.has(key).then(|| key.to_string());
        }
        // The first segment decides the match, as in the reference server.
        let head = key.split('/').next().unwrap_or(key);
        let mut ns = namespace.to_string();
        loop {
            let candidate = format!("{}{}", ns, head);
            if self.has(&candidate) {
                let rest = &key[head.len()..];
                return Some(format!("{candidate}{rest}"));
            }
            if ns == "/" {
                return None;
            }
            ns = namespace_of(ns.trim_end_matches('/'));
        }
    }
}

#[derive(Default)]
struct Registrations {
    /// topic → [(caller_id, caller_api)]
    publishers: BTreeMap<String, Vec<(String, String)>>,
    subscribers: BTreeMap<String, Vec<(String, String)>>,
    /// service → (caller_id, service_api, caller_api)
    services: BTreeMap<String, (String, String, String)>,
    topic_types: BTreeMap<String, String>,
    nodes: HashMap<String, String>,
    params: ParamTree,
}

impl Registrations {
    fn publisher_apis(&self, topic: &str) -> Vec<String> {
        self.publishers
            .get(topic)
            .map(|v| v.iter().map(|(_, api)| api.clone()).collect())
            .unwrap_or_default()
    }

    fn subscriber_apis(&self, topic: &str) -> Vec<String> {
        self.subscribers
            .get(topic)
            .map(|v| v.iter().map(|(_, api)| api.clone()).collect())
            .unwrap_or_default()
    }

    fn system_state(&self) -> SystemState {
        fn section(m: &BTreeMap<String, Vec<(String, String)>>) -> Vec<(String, Vec<String>)> {
            m.iter()
                .filter(|(_, v)| !v.is_empty())
                .map(|(t, v)| (t.clone(), v.iter().map(|(c, _)| c.clone()).collect()))
                .collect()
        }
        SystemState {
            publishers: section(&self.publishers),
            subscribers: section(&self.subscribers),
            services: self
                .services
                .iter()
                .map(|(s, (c, _, _))| (s.clone(), vec![c.clone()]))
                .collect(),
        }
    }

    fn forget_node_if_idle(&mut self, caller_id: &str) {
        let used = self.publishers.values().chain(self.subscribers.values()).any(|v| v.iter().any(|(c, _)| c == caller_id))
            || self.services.values().any(|(c, _, _)| c == caller_id);
        if !used {
            self.nodes.remove(caller_id);
        }
    }
}

struct Update {
    topic: String,
    subscribers: Vec<String>,
    publishers: Vec<String>,
}

/// A running master.
pub struct Master {
    server: XmlRpcServer,
    uri: String,
    state: Arc<Mutex<Registrations>>,
    calls: Arc<Mutex<HashMap<String, u64>>>,
    notifier: Option<(Sender<Update>, JoinHandle<()>)>,
    updates_sent: Arc<AtomicU64>,
}

type Reply = Result<XrValue, String>;
type Method = dyn Fn(&mut Registrations, &[XrValue]) -> Reply + Send + Sync;

fn ok(status: &str, v: impl Into<XrValue>) -> Reply {
    Ok(RosRpcReply::success(status, v).into_value())
}

fn fail(code: i32, status: impl Into<String>) -> Reply {
    Ok(RosRpcReply {
        code,
        status: status.into(),
        payload: XrValue::Int(0),
    }
    .into_value())
}

fn arg_str(params: &[XrValue], i: usize) -> Result<String, String> {
    params
        .get(i)
        .and_then(XrValue::as_str)
        .map(str::to_string)
        .ok_or_else(|| format!("parameter {i} must be a string"))
}

impl Master {
    /// Starts a master on `bind` (e.g. `127.0.0.1:0`); `advertised_host`
    /// forms the URI handed to nodes.
    pub fn start(bind: &str, advertised_host: &str) -> Result<Master, XmlRpcError> {
        let state: Arc<Mutex<Registrations>> = Arc::default();
        let calls: Arc<Mutex<HashMap<String, u64>>> = Arc::default();
        let updates_sent = Arc::new(AtomicU64::new(0));
        let (tx, rx) = channel::<Update>();
        let notifier = {
            let updates_sent = updates_sent.clone();
            std::thread::Builder::new().name("master-notify".into()).spawn(move || {
                // One lane keeps notifications for a topic in order.
                for update in rx {
                    for api in &update.subscribers {
                        let params = [
                            XrValue::str("/master"),
                            XrValue::str(&update.topic),
                            XrValue::Seq(update.publishers.iter().map(XrValue::str).collect()),
                        ];
                        let result = XmlRpcClient::new(api)
                            .map(|c| c.with_timeout(Duration::from_secs(2)))
                            .and_then(|c| c.call("publisherUpdate", &params));
                        if let Err(e) = result {
                            log::debug!("master: publisherUpdate to {api} failed: {e}");
                        }
                        updates_sent.fetch_add(1, Ordering::Relaxed);
                    }
                }
            })?
        };

        // Filled in once the server knows its port.
        let uri_cell: Arc<Mutex<String>> = Arc::default();
        let mut methods: HashMap<String, Handler> = HashMap::new();
        let mut add = |name: &'static str, f: Box<Method>| {
            let state = state.clone();
            let calls = calls.clone();
            let f: Arc<Method> = Arc::from(f);
            methods.insert(
                name.to_string(),
                Arc::new(move |params: &[XrValue]| {
                    *calls.lock().expect("calls lock").entry(name.to_string()).or_default() += 1;
                    let mut st = state.lock().expect("master lock");
                    f(&mut st, params)
                }),
            );
        };

        let notify = Arc::new(Mutex::new(tx.clone()));
        let publish_update = {
            let notify = notify.clone();
            move |st: &Registrations, topic: &str| {
                let update = Update {
                    topic: topic.to_string(),
                    subscribers: st.subscriber_apis(topic),
                    publishers: st.publisher_apis(topic),
                };
                if !update.subscribers.is_empty() {
                    let _ = notify.lock().expect("notify lock").send(update);
                }
            }
        };

        {
            let publish_update = publish_update.clone();
            add(
                "registerPublisher",
                Box::new(move |st, p| {
                    let (caller, topic, ty, api) = (arg_str(p, 0)?, arg_str(p, 1)?, arg_str(p, 2)?, arg_str(p, 3)?);
                    let list = st.publishers.entry(topic.clone()).or_default();
                    list.retain(|(c, _)| *c != caller);
                    list.push((caller.clone(), api.clone()));
                    if ty != "*" {
                        st.topic_types.insert(topic.clone(), ty);
                    }
                    st.nodes.insert(caller, api);
                    publish_update(st, &topic);
                    ok(&format!("Registered as publisher of [{topic}]"), XrValue::from(st.subscriber_apis(&topic)))
                }),
            );
        }
        {
            let publish_update = publish_update.clone();
            add(
                "unregisterPublisher",
                Box::new(move |st, p| {
                    let (caller, topic, api) = (arg_str(p, 0)?, arg_str(p, 1)?, arg_str(p, 2)?);
                    let Some(list) = st.publishers.get_mut(&topic) else {
                        return ok("not a publisher", 0);
                    };
                    let before = list.len();
                    list.retain(|(c, a)| !(*c == caller && *a == api));
                    let removed = before - list.len();
                    st.forget_node_if_idle(&caller);
                    if removed > 0 {
                        publish_update(st, &topic);
                    }
                    ok(&format!("Unregistered [{caller}] as publisher of [{topic}]"), removed as i32)
                }),
            );
        }
        add(
            "registerSubscriber",
            Box::new(|st, p| {
                let (caller, topic, ty, api) = (arg_str(p, 0)?, arg_str(p, 1)?, arg_str(p, 2)?, arg_str(p, 3)?);
                let list = st.subscribers.entry(topic.clone()).or_default();
                list.retain(|(c, _)| *c != caller);
                list.push((caller.clone(), api.clone()));
                if ty != "*" {
                    st.topic_types.entry(topic.clone()).or_insert(ty);
                }
                st.nodes.insert(caller, api);
                ok(&format!("Subscribed to [{topic}]"), XrValue::from(st.publisher_apis(&topic)))
            }),
        );
        add(
            "unregisterSubscriber",
            Box::new(|st, p| {
                let (caller, topic, api) = (arg_str(p, 0)?, arg_str(p, 1)?, arg_str(p, 2)?);
                let Some(list) = st.subscribers.get_mut(&topic) else {
                    return ok("not a subscriber", 0);
                };
                let before = list.len();
                list.retain(|(c, a)| !(*c == caller && *a == api));
                let removed = before - list.len();
                st.forget_node_if_idle(&caller);
                ok(&format!("Unregistered [{caller}] as subscriber of [{topic}]"), removed as i32)
            }),
        );
        add(
            "registerService",
            Box::new(|st, p| {
                let (caller, service, service_api, api) =
                    (arg_str(p, 0)?, arg_str(p, 1)?, arg_str(p, 2)?, arg_str(p, 3)?);
                st.services.insert(service.clone(), (caller.clone(), service_api, api.clone()));
                st.nodes.insert(caller, api);
                ok(&format!("Registered [{service}]"), 1)
            }),
        );
        add(
            "unregisterService",
            Box::new(|st, p| {
                let (caller, service, service_api) = (arg_str(p, 0)?, arg_str(p, 1)?, arg_str(p, 2)?);
                let matches = st
                    .services
                    .get(&service)
                    .is_some_and(|(_, s, _)| *s == service_api);
                if matches {
                    st.services.remove(&service);
                    st.forget_node_if_idle(&caller);
                }
                ok(&format!("Unregistered [{service}]"), i32::from(matches))
            }),
        );
        add(
            "lookupService",
            Box::new(|st, p| {
                let service = arg_str(p, 1)?;
                match st.services.get(&service) {
                    Some((_, api, _)) => ok("rosrpc URI", api.as_str()),
                    None => fail(-1, format!("no provider for [{service}]")),
                }
            }),
        );
        add(
            "lookupNode",
            Box::new(|st, p| {
                let node = arg_str(p, 1)?;
                match st.nodes.get(&node) {
                    Some(api) => ok("node api", api.as_str()),
                    None => fail(-1, format!("unknown node [{node}]")),
                }
            }),
        );
        add(
            "getSystemState",
            Box::new(|st, _| ok("current system state", st.system_state().to_value())),
        );
        add(
            "getTopicTypes",
            Box::new(|st, _| {
                let pairs: Vec<XrValue> = st
                    .topic_types
                    .iter()
                    .map(|(t, ty)| XrValue::Seq(vec![XrValue::str(t), XrValue::str(ty)]))
                    .collect();
                ok("current topics", XrValue::Seq(pairs))
            }),
        );
        add(
            "getPublishedTopics",
            Box::new(|st, p| {
                let prefix = p.get(1).and_then(XrValue::as_str).unwrap_or("").to_string();
                let pairs: Vec<XrValue> = st
                    .publishers
                    .iter()
                    .filter(|(t, v)| !v.is_empty() && t.starts_with(&prefix))
                    .map(|(t, _)| {
                        let ty = st.topic_types.get(t).cloned().unwrap_or_else(|| "*".into());
                        XrValue::Seq(vec![XrValue::str(t), XrValue::str(ty)])
                    })
                    .collect();
                ok("current topics", XrValue::Seq(pairs))
            }),
        );
        {
            let uri_cell = uri_cell.clone();
            add(
                "getUri",
                Box::new(move |_, _| ok("", uri_cell.lock().expect("uri lock").as_str())),
            );
        }
        add("getPid", Box::new(|_, _| ok("", std::process::id() as i32)));

        fn param_key(p: &[XrValue]) -> Result<String, String> {
            let caller = arg_str(p, 0)?;
            let key = arg_str(p, 1)?;
            resolve(&caller, &key).map_err(|e| e.to_string())
        }
        add(
            "setParam",
            Box::new(|st, p| {
                let key = param_key(p)?;
                let value = p.get(2).cloned().ok_or("missing value")?;
                st.params.set(&key, value);
                ok(&format!("parameter {key} set"), 0)
            }),
        );
        add(
            "getParam",
            Box::new(|st, p| {
                let key = param_key(p)?;
                match st.params.get(&key) {
                    Some(v) => ok(&format!("Parameter [{key}]"), v),
                    None => fail(-1, format!("Parameter [{key}] is not set")),
                }
            }),
        );
        add(
            "hasParam",
            Box::new(|st, p| {
                let key = param_key(p)?;
                ok(&key.clone(), st.params.has(&key))
            }),
        );
        add(
            "deleteParam",
            Box::new(|st, p| {
                let key = param_key(p)?;
                if st.params.delete(&key) {
                    ok(&format!("parameter {key} deleted"), 0)
                } else {
                    fail(-1, format!("parameter [{key}] is not set"))
                }
            }),
        );
        add(
            "searchParam",
            Box::new(|st, p| {
                let caller = arg_str(p, 0)?;
                let key = arg_str(p, 1)?;
                match st.params.search(&namespace_of(&caller), &key) {
                    Some(found) => ok(&format!("Found [{found}]"), found.as_str()),
                    None => fail(-1, format!("Cannot find parameter [{key}] in an upwards search")),
                }
            }),
        );
        add(
            "getParamNames",
            Box::new(|st, _| ok("Parameter names", XrValue::from(st.params.names()))),
        );
        add(
            "subscribeParam",
            Box::new(|st, p| {
                let key = param_key(p)?;
                ok("Subscribed", st.params.get(&key).unwrap_or(XrValue::Record(Vec::new())))
            }),
        );
        add("unsubscribeParam", Box::new(|_, _| ok("Unsubscribed", 1)));

        let server = XmlRpcServer::serve(bind, methods)?;
        let uri = server.uri(advertised_host);
        *uri_cell.lock().expect("uri lock") = uri.clone();
        drop(tx);
        // The notifier exits once every handler (holding a sender) is gone.
        let own_tx = notify.lock().expect("notify lock").clone();
        Ok(Master {
            server,
            uri,
            state,
            calls,
            notifier: Some((own_tx, notifier)),
            updates_sent,
        })
    }

    /// Loopback master on an ephemeral port.
    pub fn start_local() -> Result<Master, XmlRpcError> {
        Master::start("127.0.0.1:0", "127.0.0.1")
    }

    pub fn uri(&self) -> &str {
        &self.uri
    }

    pub fn port(&self) -> u16 {
        self.server.port()
    }

    /// Number of times `method` has been called.
    pub fn call_count(&self, method: &str) -> u64 {
        self.calls.lock().expect("calls lock").get(method).copied().unwrap_or(0)
    }

    pub fn publisher_updates_sent(&self) -> u64 {
        self.updates_sent.load(Ordering::Relaxed)
    }

    pub fn system_state(&self) -> SystemState {
        self.state.lock().expect("master lock").system_state()
    }

    pub fn params(&self) -> ParamTree {
        self.state.lock().expect("master lock").params.clone()
    }

    pub fn shutdown(&mut self) {
        self.server.shutdown();
        // Handlers are gone with the server; dropping our sender ends the lane.
        if let Some((tx, thread)) = self.notifier.take() {
            drop(tx);
            let _ = thread.join();
        }
    }
}

impl Drop for Master {
    fn drop(&mut self) {
        self.shutdown();
    }
}
