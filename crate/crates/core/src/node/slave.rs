//! The slave XML-RPC API every node serves to the master and its peers.

use std::collections::HashMap;
use std::sync::atomic::Ordering;
use std::sync::Arc;

use crate::xmlrpc::{Handler, RosRpcReply, XrValue};

use super::Shared;

type Reply = Result<XrValue, String>;

fn ok(payload: impl Into<XrValue>) -> Reply {
    Ok(RosRpcReply::success("", payload).into_value())
}

fn arg_str(params: &[XrValue], i: usize) -> Result<&str, String> {
    params
        .get(i)
        .and_then(XrValue::as_str)
        .ok_or_else(|| format!("parameter {i} must be a string"))
}

fn pairs(list: Vec<(String, String)>) -> XrValue {
    XrValue::Seq(
        list.into_iter()
            .map(|(a, b)| XrValue::Seq(vec![XrValue::Str(a), XrValue::Str(b)]))
            .collect(),
    )
}

fn get_bus_stats(shared: &Shared) -> Reply {
    let g = shared.graph.lock().expect("graph lock");
    let publish = g
        .publications
        .iter()
        .map(|(topic, e)| {
            let links = e
                .publisher
                .links()
                .iter()
                .map(|l| {
                    let (msgs, bytes, _) = l.counters.snapshot();
                    XrValue::Seq(vec![
                        XrValue::Int(l.id() as i32),
                        XrValue::Int(bytes as i32),
                        XrValue::Int(msgs as i32),
                        XrValue::Bool(l.is_live()),
                    ])
                })
                .collect();
            XrValue::Seq(vec![XrValue::str(topic), XrValue::Seq(links)])
        })
        .collect();
    let subscribe = g
        .subscriptions
        .iter()
        .map(|(topic, s)| {
            let links = s
                .links()
                .iter()
                .map(|l| {
                    let (_, bytes, drops) = l.counters.snapshot();
                    XrValue::Seq(vec![
                        XrValue::Int(l.id as i32),
                        XrValue::Int(bytes as i32),
                        XrValue::Int(drops as i32),
                        XrValue::Bool(l.is_connected()),
                    ])
                })
                .collect();
            XrValue::Seq(vec![XrValue::str(topic), XrValue::Seq(links)])
        })
        .collect();
    ok(XrValue::Seq(vec![
        XrValue::Seq(publish),
        XrValue::Seq(subscribe),
        XrValue::Seq(vec![XrValue::Int(0), XrValue::Int(0), XrValue::Int(0)]),
    ]))
}

fn get_bus_info(shared: &Shared) -> Reply {
    let g = shared.graph.lock().expect("graph lock");
    let mut rows = Vec::new();
    for (topic, e) in &g.publications {
        for l in e.publisher.links() {
            rows.push(XrValue::Seq(vec![
                XrValue::Int(l.id() as i32),
                XrValue::str(&l.remote_caller_id),
                XrValue::str("o"),
                XrValue::str("TCPROS"),
                XrValue::str(topic),
                XrValue::Bool(l.is_live()),
                XrValue::str(""),
            ]));
        }
    }
    for (topic, s) in &g.subscriptions {
        for l in s.links() {
            rows.push(XrValue::Seq(vec![
                XrValue::Int(l.id as i32),
                XrValue::str(&l.uri),
                XrValue::str("i"),
                XrValue::str("TCPROS"),
                XrValue::str(topic),
                XrValue::Bool(l.is_connected()),
                XrValue::str(""),
            ]));
        }
    }
    ok(XrValue::Seq(rows))
}

fn request_topic(shared: &Shared, params: &[XrValue]) -> Reply {
    let topic = arg_str(params, 1)?;
    let advertised = shared.graph.lock().expect("graph lock").publications.contains_key(topic);
    if !advertised {
        return Ok(RosRpcReply::error(format!("Not a publisher of [{topic}]")).into_value());
    }
    let wants_tcpros = params
        .get(2)
        .and_then(XrValue::as_seq)
        .is_some_and(|protos| {
            protos
                .iter()
                .any(|p| p.as_seq().and_then(|p| p.first()).and_then(XrValue::as_str) == Some("TCPROS"))
        });
    if !wants_tcpros {
        return Ok(RosRpcReply::failure("no supported protocol implementations").into_value());
    }
    let port = shared.tcpros_port.get().copied().unwrap_or_default();
    Ok(RosRpcReply::success(
        "ready",
        XrValue::Seq(vec![
            XrValue::str("TCPROS"),
            XrValue::str(&shared.config.advertised_host),
            XrValue::Int(i32::from(port)),
        ]),
    )
    .into_value())
}

fn publisher_update(shared: &Shared, params: &[XrValue]) -> Reply {
    let topic = arg_str(params, 1)?;
    let uris = params
        .get(2)
        .and_then(XrValue::as_str_list)
        .ok_or("publishers must be a list of URIs")?;
    let sub = shared.graph.lock().expect("graph lock").subscriptions.get(topic).cloned();
    if let Some(sub) = sub {
        sub.reconcile(&uris);
    }
    ok(0)
}

pub(super) fn methods(shared: &Arc<Shared>) -> HashMap<String, Handler> {
    let mut m: HashMap<String, Handler> = HashMap::new();
    let mut add = |name: &str, f: fn(&Shared, &[XrValue]) -> Reply| {
        let shared = Arc::downgrade(shared);
        m.insert(
            name.to_string(),
            Arc::new(move |params: &[XrValue]| {
                let shared = shared.upgrade().ok_or("node is gone")?;
                f(&shared, params)
            }),
        );
    };
    add("getPid", |_, _| ok(std::process::id() as i32));
    add("getMasterUri", |s, _| ok(s.config.master_uri.as_str()));
    add("getBusStats", |s, _| get_bus_stats(s));
    add("getBusInfo", |s, _| get_bus_info(s));
    add("getSubscriptions", |s, _| {
        let g = s.graph.lock().expect("graph lock");
        let list = g
            .subscriptions
            .iter()
            .map(|(t, sub)| {
                let ty = sub.type_info().map(|i| i.type_name.clone()).unwrap_or_else(|| sub.type_name.clone());
                (t.clone(), ty)
            })
            .collect();
        ok(pairs(list))
    });
    add("getPublications", |s, _| {
        let g = s.graph.lock().expect("graph lock");
        let list = g
            .publications
            .iter()
            .map(|(t, e)| (t.clone(), e.publisher.type_name.clone()))
            .collect();
        ok(pairs(list))
    });
    add("publisherUpdate", publisher_update);
    add("paramUpdate", |_, _| ok(0));
    add("requestTopic", request_topic);
    add("shutdown", |s, params| {
        let reason = params.get(1).and_then(XrValue::as_str).unwrap_or("").to_string();
        log::info!("{}: shutdown requested: {reason}", s.name());
        if !s.shut_down.load(Ordering::SeqCst) {
            let (lock, cv) = &s.shutdown_request;
            *lock.lock().expect("shutdown lock") = Some(if reason.is_empty() { "remote shutdown".into() } else { reason });
            cv.notify_all();
        }
        ok(0)
    });
    m
}
