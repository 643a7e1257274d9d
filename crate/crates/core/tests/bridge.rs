use std::net::TcpStream;
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};
use std::thread;
use std::time::{Duration, Instant};

use base64::engine::general_purpose::STANDARD as BASE64;
use base64::Engine;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use roslite::asset::{LoaderService, DEFAULT_SERVICE};
use roslite::bridge::{
    from_json, measure_encoding_overhead, serve_bridge, to_json, BridgeConfig, BridgeError, BridgeServer,
};
use roslite::msg::SchemaRegistry;
use roslite::node::{Master, Node, NodeConfig, ServiceInfo};
use roslite::tf::tf_message;
use roslite::wire::sample::{random_value, SampleLimits};
use roslite::wire::{DynamicValue, MessageLayout, Time, TypeInfo};
use roslite::{Quat, Transform, Vec3};
use serde_json::{json, Value};
use tungstenite::stream::MaybeTlsStream;
use tungstenite::{Message, WebSocket};

struct Client {
    ws: WebSocket<MaybeTlsStream<TcpStream>>,
}

impl Client {
    fn connect(server: &BridgeServer) -> Client {
        let (ws, _) = tungstenite::connect(server.url()).unwrap();
        if let MaybeTlsStream::Plain(s) = ws.get_ref() {
            s.set_read_timeout(Some(Duration::from_millis(20))).unwrap();
        }
        Client { ws }
    }

    fn send(&mut self, v: Value) {
        self.ws.send(Message::Text(v.to_string())).unwrap();
    }

    /// Next JSON frame, or `None` on timeout or close.
    fn recv(&mut self, timeout: Duration) -> Option<Value> {
        let deadline = Instant::now() + timeout;
        while Instant::now() < deadline {
            match self.ws.read() {
                Ok(Message::Text(t)) => return Some(serde_json::from_str(&t).unwrap()),
                Ok(_) => {}
                Err(tungstenite::Error::Io(e))
                    if matches!(e.kind(), std::io::ErrorKind::WouldBlock | std::io::ErrorKind::TimedOut) => {}
                Err(_) => return None,
            }
        }
        None
    }

    fn recv_where(&mut self, timeout: Duration, pred: impl Fn(&Value) -> bool) -> Option<Value> {
        let deadline = Instant::now() + timeout;
        while let Some(v) = self.recv(deadline.saturating_duration_since(Instant::now())) {
            if pred(&v) {
                return Some(v);
            }
        }
        None
    }

    fn reply(&mut self, id: &str) -> Value {
        self.recv_where(Duration::from_secs(5), |v| v["id"] == id)
            .unwrap_or_else(|| panic!("no reply for {id}"))
    }

    fn request(&mut self, v: Value) -> Value {
        let id = v["id"].as_str().unwrap().to_string();
        self.send(v);
        self.reply(&id)
    }
}

struct Graph {
    server: BridgeServer,
    node: Node,
    _master: Master,
}

fn graph() -> Graph {
    let master = Master::start_local().unwrap();
    let node = Node::start(NodeConfig::local("/bridge", master.uri())).unwrap();
    let server = serve_bridge(&node, "127.0.0.1:0", None).unwrap();
    Graph {
        server,
        node,
        _master: master,
    }
}

fn peer(g: &Graph, name: &str) -> Node {
    Node::start(NodeConfig::local(name, g._master.uri())).unwrap()
}

fn info(name: &str) -> TypeInfo {
    TypeInfo::resolve(&SchemaRegistry::with_corpus(), name).unwrap()
}

fn string_msg(s: &str) -> DynamicValue {
    DynamicValue::Record(vec![("data".into(), DynamicValue::Str(s.into()))])
}

fn wait_until(timeout: Duration, mut f: impl FnMut() -> bool) -> bool {
    let deadline = Instant::now() + timeout;
    while Instant::now() < deadline {
        if f() {
            return true;
        }
        thread::sleep(Duration::from_millis(10));
    }
    f()
}

#[test]
fn every_op_with_an_id_is_answered() {
    let g = graph();
    let talker = peer(&g, "/talker");
    let _p = talker.advertise("/chatter", &info("std_msgs/String"), false).unwrap();
    let mut c = Client::connect(&g.server);

    let topics = c.request(json!({"op": "topics", "id": "t1"}));
    assert_eq!(topics["op"], "topics");
    assert!(topics["topics"]
        .as_array()
        .unwrap()
        .contains(&json!({"topic": "/chatter", "type": "std_msgs/String"})));

    for (id, op) in [
        ("e1", json!({"op": "bogus", "id": "e1"})),
        ("e2", json!({"id": "e2"})),
        ("e3", json!({"op": "subscribe", "id": "e3"})),
        ("e4", json!({"op": "unsubscribe", "id": "e4", "topic": "/never"})),
        ("e5", json!({"op": "advertise", "id": "e5", "topic": "/x", "type": "no_pkg/Nothing"})),
        ("e6", json!({"op": "call_service", "id": "e6", "service": "/missing", "type": "std_srvs/Trigger"})),
        ("e7", json!({"op": "tf_lookup", "id": "e7", "target": "a", "source": "b"})),
        ("e8", json!({"op": "publish", "id": "e8", "topic": "/untyped", "msg": {}})),
    ] {
        c.send(op);
        let r = c.reply(id);
        assert_eq!((r["op"].as_str(), r["level"].as_str()), (Some("status"), Some("error")), "{r}");
    }
    let missing = c.request(json!({"op": "call_service", "id": "e9", "service": "/missing"}));
    assert!(missing["text"].as_str().unwrap().contains("not found"), "{missing}");

    let status = c.request(json!({"op": "status", "id": "s1"}));
    assert_eq!(status["level"], "info");
    assert!(status["stats"]["server"]["errors"].as_u64().unwrap() >= 9);
    assert_eq!(status["stats"]["connection"]["framesDropped"], 0);

    // Frames that are not even JSON still get a status back.
    c.ws.send(Message::Text("{not json".into())).unwrap();
    let r = c.recv(Duration::from_secs(2)).unwrap();
    assert_eq!(r["level"], "error");
}

#[test]
fn two_clients_each_receive_the_stream() {
    let g = graph();
    let talker = peer(&g, "/talker");
    let publisher = talker.advertise("/chatter", &info("std_msgs/String"), false).unwrap();
    let mut a = Client::connect(&g.server);
    let mut b = Client::connect(&g.server);
    // Typed on one client, schema-free on the other.
    a.request(json!({"op": "subscribe", "id": "a", "topic": "/chatter", "type": "std_msgs/String"}));
    b.request(json!({"op": "subscribe", "id": "b", "topic": "/chatter"}));
    assert!(wait_until(Duration::from_secs(5), || publisher.num_subscribers() == 1));

    let n = 50;
    for i in 0..n {
        publisher.publish(&string_msg(&format!("hello {i}"))).unwrap();
        thread::sleep(Duration::from_millis(2));
    }
    for client in [&mut a, &mut b] {
        let mut got = Vec::new();
        while got.len() < n {
            let frame = client
                .recv_where(Duration::from_secs(5), |v| v["op"] == "message")
                .expect("message frame");
            assert_eq!(frame["topic"], "/chatter");
            assert!(frame["recvStampMs"].as_u64().unwrap() > 1_600_000_000_000);
            got.push(frame["msg"]["data"].as_str().unwrap().to_string());
        }
        let want: Vec<_> = (0..n).map(|i| format!("hello {i}")).collect();
        assert_eq!(got, want);
    }

    // Unsubscribing stops the stream for that client only.
    a.request(json!({"op": "unsubscribe", "id": "u", "topic": "/chatter"}));
    publisher.publish(&string_msg("after")).unwrap();
    let b_frame = b.recv_where(Duration::from_secs(5), |v| v["op"] == "message").unwrap();
    assert_eq!(b_frame["msg"]["data"], "after");
    assert!(a.recv_where(Duration::from_millis(300), |v| v["op"] == "message").is_none());
}

#[test]
fn disconnect_tears_down_subscriptions_and_advertisements() {
    let g = graph();
    // The bridge's own transform listener stays subscribed throughout.
    let baseline = g.node.subscribed_topics();
    let mut c = Client::connect(&g.server);
    for (i, topic) in ["/a", "/b", "/c"].iter().enumerate() {
        c.request(json!({"op": "subscribe", "id": format!("s{i}"), "topic": topic, "type": "std_msgs/Int32"}));
    }
    c.request(json!({"op": "advertise", "id": "adv", "topic": "/out", "type": "std_msgs/Int32"}));
    assert_eq!(g.node.subscribed_topics().len(), baseline.len() + 3);
    assert_eq!(g.node.published_topics().len(), 1);

    let dropped_at = Instant::now();
    drop(c);
    assert!(wait_until(Duration::from_secs(1), || g.node.subscribed_topics() == baseline
        && g.node.published_topics().is_empty()));
    assert!(dropped_at.elapsed() < Duration::from_secs(1));
    assert!(wait_until(Duration::from_secs(1), || g.server.stats().connections_open == 0));
}

#[test]
fn throttle_bounds_the_frame_rate_and_keeps_the_latest() {
    let g = graph();
    let talker = peer(&g, "/talker");
    let publisher = talker.advertise("/fast", &info("std_msgs/Int32"), false).unwrap();
    let mut c = Client::connect(&g.server);
    c.request(json!({"op": "subscribe", "id": "s", "topic": "/fast", "type": "std_msgs/Int32", "throttle_ms": 100}));
    assert!(wait_until(Duration::from_secs(5), || publisher.num_subscribers() == 1));

    let running = Arc::new(AtomicUsize::new(1));
    let pump = {
        let running = running.clone();
        let publisher = publisher.clone();
        thread::spawn(move || {
            let mut i = 0i32;
            let start = Instant::now();
            while running.load(Ordering::SeqCst) == 1 {
                i += 1;
                publisher
                    .publish(&DynamicValue::Record(vec![("data".into(), DynamicValue::I32(i))]))
                    .unwrap();
                // 1 kHz schedule
                let next = start + Duration::from_millis(i as u64);
                thread::sleep(next.saturating_duration_since(Instant::now()));
            }
            i
        })
    };
    // Skip the warm-up, then count over a two-second window.
    thread::sleep(Duration::from_millis(300));
    while c.recv(Duration::from_millis(1)).is_some() {}
    let start = Instant::now();
    let mut frames = Vec::new();
    while start.elapsed() < Duration::from_secs(2) {
        if let Some(v) = c.recv(Duration::from_millis(50)) {
            if v["op"] == "message" {
                frames.push(v["msg"]["data"].as_i64().unwrap());
            }
        }
    }
    running.store(0, Ordering::SeqCst);
    let published = pump.join().unwrap();
    println!("throttled frames in 2 s: {} (published {published})", frames.len());
    assert!(frames.len() <= 22, "{} frames in 2 s", frames.len());
    assert!(frames.len() >= 10, "{} frames in 2 s", frames.len());
    // Latest-wins: consecutive frames skip roughly a throttle window of messages.
    assert!(frames.windows(2).all(|w| w[1] > w[0] + 20), "{frames:?}");
    assert!(g.server.stats().frames_throttled > 1000);
}

#[test]
fn publish_reverses_json_with_defaults_and_rejects_unknown_fields() {
    let g = graph();
    let listener = peer(&g, "/listener");
    let received = Arc::new(Mutex::new(Vec::new()));
    let r = received.clone();
    let sub = listener
        .subscribe("/cmd_vel", &info("geometry_msgs/Twist"), move |ev| {
            r.lock().unwrap().push(ev.decode().unwrap())
        })
        .unwrap();
    let mut c = Client::connect(&g.server);
    let ack = c.request(json!({
        "op": "publish", "id": "p1", "topic": "/cmd_vel", "type": "geometry_msgs/Twist",
        "msg": {"linear": {"x": 0.2}, "angular": {"z": -0.5}},
    }));
    assert_eq!(ack["level"], "info", "{ack}");
    assert!(wait_until(Duration::from_secs(5), || sub.connected_publishers() == 1));
    // The first publish may race the subscriber's connection; publish
    // again without the type now that the topic is advertised.
    c.request(json!({"op": "publish", "id": "p2", "topic": "/cmd_vel",
        "msg": {"linear": {"x": 0.2}, "angular": {"z": -0.5}}}));
    assert!(wait_until(Duration::from_secs(5), || !received.lock().unwrap().is_empty()));
    let msg = received.lock().unwrap().last().cloned().unwrap();
    let expect = |path: &str, v: f64| assert_eq!(msg.path(path), Some(&DynamicValue::F64(v)), "{path}");
    expect("linear.x", 0.2);
    expect("linear.y", 0.0);
    expect("linear.z", 0.0);
    expect("angular.x", 0.0);
    expect("angular.y", 0.0);
    expect("angular.z", -0.5);

    let err = c.request(json!({"op": "publish", "id": "p3", "topic": "/cmd_vel", "msg": {"foo": 1}}));
    assert_eq!(err["level"], "error");
    assert!(err["text"].as_str().unwrap().contains("\"foo\""), "{err}");
    let err = c.request(json!({"op": "publish", "id": "p4", "topic": "/cmd_vel", "msg": {"linear": {"x": "fast"}}}));
    assert!(err["text"].as_str().unwrap().contains("linear.x"), "{err}");
    let err = c.request(json!({"op": "publish", "id": "p5", "topic": "/cmd_vel", "type": "std_msgs/String", "msg": {}}));
    assert_eq!(err["level"], "error", "type change on an advertised topic");
}

#[test]
fn get_model_round_trips_through_json_with_base64_bytes() {
    let g = graph();
    let loader_node = peer(&g, "/iviz_loader");
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("assets");
    let _svc = LoaderService::start(&loader_node, vec![root.clone()], DEFAULT_SERVICE).unwrap();
    let mut c = Client::connect(&g.server);

    let uri = "package://demo/meshes/cube.stl";
    // No type given: the bridge asks the provider.
    let raw = c.request(json!({"op": "call_service", "id": "raw", "service": DEFAULT_SERVICE,
        "args": {"uri": uri, "want_raw": true}}));
    assert_eq!(raw["op"], "service_response", "{raw}");
    let values = &raw["values"];
    assert_eq!(values["success"], true);
    assert_eq!(values["format"], "stl");
    let bytes = BASE64.decode(values["raw"].as_str().unwrap()).unwrap();
    assert_eq!(bytes, std::fs::read(root.join("demo/meshes/cube.stl")).unwrap());
    assert_eq!(values["checksum"], format!("{:x}", md5::compute(&bytes)));

    let parsed = c.request(json!({"op": "call_service", "id": "mesh", "service": DEFAULT_SERVICE,
        "type": "asset_msgs/GetAsset", "args": {"uri": uri}}));
    let mesh = &parsed["values"]["mesh"];
    assert_eq!(mesh["triangles"].as_array().unwrap().len(), 3 * 12, "{mesh}");

    // The JSON reply decodes back to the binary response bit for bit.
    let info = ServiceInfo::resolve(&SchemaRegistry::with_corpus(), "asset_msgs/GetAsset").unwrap();
    let direct = g
        .node
        .call_service(
            DEFAULT_SERVICE,
            &info,
            &from_json(&info.request, &json!({"uri": uri, "want_raw": true})).unwrap(),
        )
        .unwrap();
    assert_eq!(from_json(&info.response, values).unwrap(), direct);

    let missing = c.request(json!({"op": "call_service", "id": "nf", "service": DEFAULT_SERVICE,
        "args": {"uri": "package://demo/meshes/nope.stl"}}));
    assert_eq!(missing["values"]["success"], false);
}

#[test]
fn tf_lookup_answers_from_the_transform_tree() {
    let g = graph();
    let broadcaster = peer(&g, "/broadcaster");
    let p = broadcaster
        .advertise("/tf_static", &info("tf2_msgs/TFMessage"), true)
        .unwrap();
    let quarter = Quat::from_axis_angle(Vec3::new(0.0, 0.0, 1.0), std::f64::consts::FRAC_PI_2);
    let edges = [
        ("map", "base", Transform::new(Vec3::new(1.0, 2.0, 0.0), quarter)),
        ("base", "camera", Transform::from_translation(Vec3::new(0.5, 0.0, 1.0))),
    ];
    p.publish(&tf_message(Time { sec: 1, nsec: 0 }, &edges)).unwrap();
    let mut c = Client::connect(&g.server);
    let mut reply = Value::Null;
    assert!(wait_until(Duration::from_secs(5), || {
        reply = c.request(json!({"op": "tf_lookup", "id": "tf", "target": "map", "source": "camera"}));
        reply["op"] == "tf"
    }));
    let t = &reply["translation"];
    // camera origin in map: (1, 2, 0) + Rz(90°)·(0.5, 0, 1) = (1, 2.5, 1)
    for (axis, want) in [("x", 1.0), ("y", 2.5), ("z", 1.0)] {
        assert!((t[axis].as_f64().unwrap() - want).abs() < 1e-12, "{reply}");
    }
    let r = &reply["rotation"];
    let h = std::f64::consts::FRAC_1_SQRT_2;
    for (axis, want) in [("x", 0.0), ("y", 0.0), ("z", h), ("w", h)] {
        assert!((r[axis].as_f64().unwrap() - want).abs() < 1e-12, "{reply}");
    }
}

#[test]
fn auth_token_gates_the_connection() {
    let master = Master::start_local().unwrap();
    let node = Node::start(NodeConfig::local("/bridge", master.uri())).unwrap();
    assert!(matches!(
        serve_bridge(&node, "0.0.0.0:0", None),
        Err(BridgeError::TokenRequired(_))
    ));
    let open = serve_bridge(&node, "0.0.0.0:0", Some("s3cret")).unwrap();
    drop(open);
    let server = serve_bridge(&node, "127.0.0.1:0", Some("s3cret")).unwrap();

    let mut intruder = Client::connect(&server);
    let r = intruder.request(json!({"op": "topics", "id": "x"}));
    assert_eq!(r["level"], "error");
    assert!(intruder.recv(Duration::from_secs(2)).is_none(), "connection must be closed");

    let mut wrong = Client::connect(&server);
    let r = wrong.request(json!({"op": "auth", "id": "a", "token": "guess"}));
    assert_eq!(r["level"], "error");

    let mut friend = Client::connect(&server);
    let r = friend.request(json!({"op": "auth", "id": "a", "token": "s3cret"}));
    assert_eq!(r["level"], "info");
    let r = friend.request(json!({"op": "topics", "id": "t"}));
    assert_eq!(r["op"], "topics");
}

#[test]
fn slow_client_never_blocks_node_delivery() {
    let g = graph();
    let talker = peer(&g, "/talker");
    let publisher = talker.advertise("/blob", &info("std_msgs/UInt8MultiArray"), false).unwrap();

    // An in-process subscriber on the bridge node itself shares the topic.
    let local = Arc::new(AtomicUsize::new(0));
    let l = local.clone();
    let _local_sub = g
        .node
        .subscribe("/blob", &info("std_msgs/UInt8MultiArray"), move |_| {
            l.fetch_add(1, Ordering::SeqCst);
        })
        .unwrap();

    let config = BridgeConfig {
        bind: "127.0.0.1:0".parse().unwrap(),
        queue_capacity: 8,
        tf: false,
        ..BridgeConfig::default()
    };
    let server = BridgeServer::start(&g.node, config).unwrap();
    let mut slow = Client::connect(&server);
    slow.request(json!({"op": "subscribe", "id": "s", "topic": "/blob"}));
    // From here on the slow client never reads.
    assert!(wait_until(Duration::from_secs(5), || publisher.num_subscribers() == 1));

    let mut msg = info("std_msgs/UInt8MultiArray").layout.default_value();
    *msg.field_mut("data").unwrap() = DynamicValue::Bytes(vec![0xAB; 256 * 1024]);
    let n = 400;
    let start = Instant::now();
    for _ in 0..n {
        publisher.publish(&msg).unwrap();
        thread::sleep(Duration::from_millis(1));
    }
    assert!(
        wait_until(Duration::from_secs(10), || local.load(Ordering::SeqCst) == n),
        "local subscriber got {} of {n}",
        local.load(Ordering::SeqCst)
    );
    println!("{n} × 256 KiB delivered locally in {:?}", start.elapsed());

    let stats = server.stats();
    assert!(stats.frames_dropped > 0, "{stats:?}");
    let mut probe = Client::connect(&server);
    let status = probe.request(json!({"op": "status", "id": "st"}));
    assert!(status["stats"]["server"]["framesDropped"].as_u64().unwrap() > 0, "{status}");
    drop(slow);
}

#[test]
fn encoding_overhead_matches_the_base64_bound() {
    let registry = SchemaRegistry::with_corpus();
    let layout = MessageLayout::resolve(&registry, "std_msgs/UInt8MultiArray").unwrap();
    let mut v = layout.default_value();
    *v.field_mut("data").unwrap() = DynamicValue::Bytes((0..3_000_000u32).map(|i| (i * 31) as u8).collect());
    let o = measure_encoding_overhead(&layout, &v).unwrap();
    println!("uint8[3e6]: {o:?}");
    assert!(o.ratio >= 1.33, "{o:?}");
    // 3e6 bytes → 4e6 base64 characters plus the fixed envelope
    assert!(o.json_bytes >= 4_000_000);

    let layout = MessageLayout::resolve(&registry, "std_msgs/Float64MultiArray").unwrap();
    let mut v = layout.default_value();
    *v.field_mut("data").unwrap() = DynamicValue::Seq((0..1000).map(|i| DynamicValue::F64((i as f64).sin())).collect());
    let o = measure_encoding_overhead(&layout, &v).unwrap();
    println!("float64[1000]: {o:?}");
    // empty dim[] + data_offset + length prefix + 1000 doubles
    assert_eq!(o.binary_bytes, 4 + 4 + 4 + 8000);
}

fn assert_reversible(layout: &MessageLayout, value: &DynamicValue) {
    let text = serde_json::to_string(&to_json(layout, value).unwrap()).unwrap();
    let back = from_json(layout, &serde_json::from_str(&text).unwrap()).unwrap();
    assert_eq!(&back, value, "{} via {text}", layout.type_name);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn json_mapping_is_reversible_for_every_corpus_type(seed in any::<u64>()) {
        let registry = SchemaRegistry::with_corpus();
        let mut rng = StdRng::seed_from_u64(seed);
        let limits = SampleLimits::default();
        for name in registry.message_names() {
            let layout = MessageLayout::resolve(&registry, &name).unwrap();
            assert_reversible(&layout, &random_value(&layout, &mut rng, limits));
        }
        for name in registry.service_names() {
            let srv = ServiceInfo::resolve(&registry, &name).unwrap();
            for layout in [&srv.request, &srv.response] {
                assert_reversible(layout, &random_value(layout, &mut rng, limits));
            }
        }
    }
}
