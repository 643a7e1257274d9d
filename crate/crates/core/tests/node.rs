use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{mpsc, Arc, Mutex};
use std::time::{Duration, Instant};

use roslite::msg::SchemaRegistry;
use roslite::node::{Master, Node, NodeConfig, NodeError, ServiceInfo};
use roslite::tcpros::QueuePolicy;
use roslite::wire::{DynamicValue, TypeInfo};
use roslite::xmlrpc::{call_ros, XrValue};

fn int32(reg: &SchemaRegistry) -> TypeInfo {
    TypeInfo::resolve(reg, "std_msgs/Int32").unwrap()
}

fn int_msg(n: i32) -> DynamicValue {
    DynamicValue::Record(vec![("data".into(), DynamicValue::I32(n))])
}

fn wait_until(timeout: Duration, mut cond: impl FnMut() -> bool) -> bool {
    let deadline = Instant::now() + timeout;
    while Instant::now() < deadline {
        if cond() {
            return true;
        }
        std::thread::sleep(Duration::from_millis(10));
    }
    cond()
}

fn node(master: &Master, name: &str) -> Node {
    Node::start(NodeConfig::local(name, master.uri())).unwrap()
}

#[test]
fn pubsub_delivers_in_order() {
    let reg = SchemaRegistry::with_corpus();
    let info = int32(&reg);
    let master = Master::start_local().unwrap();
    // Room for the whole burst: the default queue drops the oldest messages
    // when the writer falls behind, which a loaded machine can provoke.
    let mut cfg = NodeConfig::local("/talker", master.uri());
    cfg.queue = QueuePolicy {
        max_messages: 4096,
        max_bytes: 4 << 20,
    };
    let talker = Node::start(cfg).unwrap();
    let listener = node(&master, "/listener");

    let publisher = talker.advertise("/chatter", &info, false).unwrap();
    let got = Arc::new(Mutex::new(Vec::new()));
    let sink = got.clone();
    let sub = listener
        .subscribe("/chatter", &info, move |ev| {
            let v = ev.decode().unwrap();
            if let Some(DynamicValue::I32(n)) = v.field("data") {
                sink.lock().unwrap().push(*n);
            }
        })
        .unwrap();
    assert!(wait_until(Duration::from_secs(5), || publisher.num_subscribers() == 1));
    assert_eq!(sub.connected_publishers(), 1);

    for i in 0..2000 {
        publisher.publish(&int_msg(i)).unwrap();
        if i % 10 == 0 {
            std::thread::sleep(Duration::from_micros(200));
        }
    }
    assert!(wait_until(Duration::from_secs(10), || got.lock().unwrap().len() == 2000));
    let got = got.lock().unwrap();
    assert!(got.iter().copied().eq(0..2000));
}

#[test]
fn latched_message_delivered_once_to_late_subscriber() {
    let reg = SchemaRegistry::with_corpus();
    let info = int32(&reg);
    let master = Master::start_local().unwrap();
    let talker = node(&master, "/latcher");
    let listener = node(&master, "/late");

    let publisher = talker.advertise("/latched", &info, true).unwrap();
    publisher.publish(&int_msg(7)).unwrap();

    let count = Arc::new(AtomicUsize::new(0));
    let c = count.clone();
    let _sub = listener
        .subscribe("/latched", &info, move |ev| {
            assert_eq!(ev.decode().unwrap().field("data"), Some(&DynamicValue::I32(7)));
            c.fetch_add(1, Ordering::SeqCst);
        })
        .unwrap();
    assert!(wait_until(Duration::from_secs(5), || count.load(Ordering::SeqCst) == 1));
    std::thread::sleep(Duration::from_millis(300));
    assert_eq!(count.load(Ordering::SeqCst), 1);
}

#[test]
fn schema_free_subscription_discovers_type() {
    let reg = SchemaRegistry::with_corpus();
    let info = TypeInfo::resolve(&reg, "geometry_msgs/Twist").unwrap();
    let master = Master::start_local().unwrap();
    let talker = node(&master, "/twister");
    let listener = node(&master, "/echo");

    let publisher = talker.advertise("/cmd_vel", &info, true).unwrap();
    let mut twist = info.layout.default_value();
    if let Some(DynamicValue::Record(lin)) = twist.field_mut("linear") {
        lin[0].1 = DynamicValue::F64(1.5);
    }
    publisher.publish(&twist).unwrap();

    let (tx, rx) = mpsc::channel();
    let _sub = listener
        .subscribe_any("/cmd_vel", move |ev| {
            tx.send((ev.type_name().map(str::to_string), ev.decode().unwrap())).ok();
        })
        .unwrap();
    let (ty, value) = rx.recv_timeout(Duration::from_secs(5)).unwrap();
    assert_eq!(ty.as_deref(), Some("geometry_msgs/Twist"));
    assert_eq!(value.path("linear.x"), Some(&DynamicValue::F64(1.5)));
}

#[test]
fn publisher_update_reconciles_links() {
    let reg = SchemaRegistry::with_corpus();
    let info = int32(&reg);
    let master = Master::start_local().unwrap();
    let a = node(&master, "/pub_a");
    let b = node(&master, "/pub_b");
    let listener = node(&master, "/multi");

    let sub = listener.subscribe("/shared", &info, |_| {}).unwrap();
    let pa = a.advertise("/shared", &info, false).unwrap();
    let pb = b.advertise("/shared", &info, false).unwrap();
    assert!(wait_until(Duration::from_secs(5), || sub.connected_publishers() == 2));
    assert!(pa.num_subscribers() == 1 && pb.num_subscribers() == 1);

    drop(pa);
    assert!(wait_until(Duration::from_secs(5), || sub.publisher_uris().len() == 1));

    let reply = call_ros(
        listener.uri(),
        "publisherUpdate",
        &[XrValue::str("/master"), XrValue::str("/shared"), XrValue::Seq(vec![])],
    )
    .unwrap();
    assert_eq!(reply.code, 1);
    assert!(wait_until(Duration::from_secs(5), || sub.connected_publishers() == 0));
}

#[test]
fn slave_api_replies() {
    let reg = SchemaRegistry::with_corpus();
    let master = Master::start_local().unwrap();
    let n = node(&master, "/slave");
    let _p = n.advertise("/here", &int32(&reg), false).unwrap();

    let pid = call_ros(n.uri(), "getPid", &[XrValue::str("/probe")]).unwrap();
    assert_eq!(pid.code, 1);
    assert_eq!(pid.payload.as_int(), Some(std::process::id() as i32));

    let tcpros = XrValue::Seq(vec![XrValue::Seq(vec![XrValue::str("TCPROS")])]);
    let missing = call_ros(n.uri(), "requestTopic", &[XrValue::str("/probe"), XrValue::str("/nope"), tcpros.clone()]).unwrap();
    assert_eq!(missing.code, -1);

    let udp = XrValue::Seq(vec![XrValue::Seq(vec![XrValue::str("UDPROS")])]);
    let unsupported = call_ros(n.uri(), "requestTopic", &[XrValue::str("/probe"), XrValue::str("/here"), udp]).unwrap();
    assert_eq!(unsupported.code, 0);

    let ready = call_ros(n.uri(), "requestTopic", &[XrValue::str("/probe"), XrValue::str("/here"), tcpros]).unwrap();
    assert_eq!(ready.code, 1);
    let proto = ready.payload.as_seq().unwrap();
    assert_eq!(proto[0].as_str(), Some("TCPROS"));
    assert_eq!(proto[2].as_int(), Some(i32::from(n.tcpros_port())));

    let pubs = call_ros(n.uri(), "getPublications", &[XrValue::str("/probe")]).unwrap();
    assert_eq!(pubs.payload.as_seq().unwrap().len(), 1);
}

#[test]
fn advertise_twice_shares_or_conflicts() {
    let reg = SchemaRegistry::with_corpus();
    let master = Master::start_local().unwrap();
    let n = node(&master, "/dup");
    let p1 = n.advertise("/t", &int32(&reg), false).unwrap();
    let p2 = n.advertise("/t", &int32(&reg), false).unwrap();
    assert_eq!(p1.md5sum(), p2.md5sum());
    let other = TypeInfo::resolve(&reg, "std_msgs/String").unwrap();
    assert!(matches!(n.advertise("/t", &other, false), Err(NodeError::TypeConflict { .. })));
    assert_eq!(master.system_state().publishers.len(), 1);
    drop(p1);
    assert_eq!(master.system_state().publishers.len(), 1);
    drop(p2);
    assert!(master.system_state().publishers.is_empty());
}

#[test]
fn services_round_trip() {
    let reg = SchemaRegistry::with_corpus();
    let info = ServiceInfo::resolve(&reg, "roscpp_tutorials/TwoInts").unwrap();
    let master = Master::start_local().unwrap();
    let server = node(&master, "/adder");
    let client = node(&master, "/caller");

    let handle = server
        .advertise_service("/add", &info, |req| {
            let a = req.field("a").and_then(DynamicValue::as_f64).unwrap() as i64;
            let b = req.field("b").and_then(DynamicValue::as_f64).unwrap() as i64;
            if a < 0 {
                return Err("negative operand".into());
            }
            Ok(DynamicValue::Record(vec![("sum".into(), DynamicValue::I64(a + b))]))
        })
        .unwrap();

    for i in 0..50i64 {
        let req = DynamicValue::Record(vec![("a".into(), DynamicValue::I64(i)), ("b".into(), DynamicValue::I64(2))]);
        let resp = client.call_service("/add", &info, &req).unwrap();
        assert_eq!(resp.field("sum"), Some(&DynamicValue::I64(i + 2)));
    }
    assert_eq!(handle.call_count(), 50);

    let bad = DynamicValue::Record(vec![("a".into(), DynamicValue::I64(-1)), ("b".into(), DynamicValue::I64(0))]);
    match client.call_service("/add", &info, &bad) {
        Err(NodeError::RemoteFailure(text)) => assert!(text.contains("negative")),
        other => panic!("expected remote failure, got {other:?}"),
    }

    // Self-call on the providing node.
    let req = DynamicValue::Record(vec![("a".into(), DynamicValue::I64(1)), ("b".into(), DynamicValue::I64(1))]);
    assert_eq!(server.call_service("/add", &info, &req).unwrap().field("sum"), Some(&DynamicValue::I64(2)));

    assert!(matches!(client.call_service("/missing", &info, &req), Err(NodeError::ServiceNotFound(_))));
    drop(handle);
    assert!(matches!(client.call_service("/add", &info, &req), Err(NodeError::ServiceNotFound(_))));
}

#[test]
fn parameters_round_trip() {
    let master = Master::start_local().unwrap();
    let n = node(&master, "/ns/params");
    n.set_param("/robot/name", XrValue::str("r2")).unwrap();
    n.set_param("rate", XrValue::Double(10.0)).unwrap();
    n.set_param("~private", XrValue::Int(3)).unwrap();

    assert_eq!(n.get_param("/robot/name").unwrap(), XrValue::str("r2"));
    assert_eq!(n.get_param("/ns/rate").unwrap(), XrValue::Double(10.0));
    assert_eq!(n.get_param("/ns/params/private").unwrap(), XrValue::Int(3));
    assert!(n.has_param("rate").unwrap());

    let names = n.param_names().unwrap();
    assert!(names.contains(&"/robot/name".to_string()));

    let subtree = n.get_param("/robot").unwrap();
    assert_eq!(subtree.member("name"), Some(&XrValue::str("r2")));

    n.delete_param("/robot/name").unwrap();
    assert!(matches!(n.get_param("/robot/name"), Err(NodeError::ParamNotFound(_))));
    assert!(matches!(n.delete_param("/robot/name"), Err(NodeError::ParamNotFound(_))));
}

#[test]
fn shutdown_is_idempotent_and_tolerates_dead_master() {
    let reg = SchemaRegistry::with_corpus();
    let mut master = Master::start_local().unwrap();
    let n = node(&master, "/mortal");
    let _p = n.advertise("/x", &int32(&reg), false).unwrap();
    n.shutdown();
    n.shutdown();
    assert!(n.is_shut_down());
    assert!(master.system_state().publishers.is_empty());
    assert!(matches!(n.advertise("/y", &int32(&reg), false), Err(NodeError::Shutdown)));

    let n2 = node(&master, "/orphan");
    let _p2 = n2.advertise("/z", &int32(&reg), false).unwrap();
    master.shutdown();
    let start = Instant::now();
    n2.shutdown();
    assert!(start.elapsed() < Duration::from_secs(10));
}

#[test]
fn remote_shutdown_request_is_observed() {
    let master = Master::start_local().unwrap();
    let n = node(&master, "/victim");
    let reply = call_ros(n.uri(), "shutdown", &[XrValue::str("/killer"), XrValue::str("bye")]).unwrap();
    assert_eq!(reply.code, 1);
    assert_eq!(n.wait_shutdown_request(Some(Duration::from_secs(2))).as_deref(), Some("bye"));
}

#[test]
fn unreachable_master_is_reported() {
    let listener = std::net::TcpListener::bind("127.0.0.1:0").unwrap();
    let port = listener.local_addr().unwrap().port();
    drop(listener);
    let mut config = NodeConfig::local("/lonely", &format!("http://127.0.0.1:{port}/"));
    config.call_timeout = Duration::from_millis(500);
    assert!(matches!(Node::start(config), Err(NodeError::MasterUnreachable(_))));
}
