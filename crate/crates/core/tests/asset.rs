use std::path::{Path, PathBuf};
use std::sync::atomic::Ordering;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use roslite::asset::{
    handle_request, parse_obj, parse_stl, AssetCache, AssetClient, AssetError, LoaderService, DEFAULT_SERVICE,
};
use roslite::node::{Master, Node, NodeConfig};
use roslite::tf::parse_urdf;
use roslite::Mesh;

fn assets_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("assets")
}

fn data(name: &str) -> Vec<u8> {
    std::fs::read(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)).unwrap()
}

fn checked(m: Mesh) -> Mesh {
    m.validate().unwrap();
    m
}

#[test]
fn vendored_cube_in_both_stl_encodings() {
    let dir = assets_root().join("demo/meshes");
    let binary = checked(parse_stl(&std::fs::read(dir.join("cube.stl")).unwrap()).unwrap());
    let ascii = checked(parse_stl(&std::fs::read(dir.join("cube_ascii.stl")).unwrap()).unwrap());
    assert_eq!(binary.triangle_count(), 12);
    assert_eq!(ascii.triangle_count(), 12);
    assert_eq!(binary.vertices.len(), 8);
    assert_eq!(binary.vertices, ascii.vertices);
    assert_eq!(binary.triangles, ascii.triangles);
}

// Expected counts come from trimesh (OBJ loaded unprocessed, STL with
// identical vertices merged).
#[test]
fn reference_models_match_external_tool_counts() {
    let bunny = checked(parse_obj(std::str::from_utf8(&data("bunny.obj")).unwrap()).unwrap());
    assert_eq!((bunny.vertices.len(), bunny.triangle_count()), (453, 902));
    let cube = checked(parse_obj(std::str::from_utf8(&data("cube_normals.obj")).unwrap()).unwrap());
    assert_eq!((cube.vertices.len(), cube.triangle_count()), (24, 12));
    let finger = checked(parse_stl(&data("l_finger.stl")).unwrap());
    assert_eq!((finger.vertices.len(), finger.triangle_count()), (981, 1863));
}

#[test]
fn fuzzed_meshes_never_crash() {
    let mut rng = StdRng::seed_from_u64(42);
    let seeds = [
        std::fs::read(assets_root().join("demo/meshes/cube.stl")).unwrap(),
        std::fs::read(assets_root().join("demo/meshes/cube_ascii.stl")).unwrap(),
        data("bunny.obj"),
    ];
    for i in 0..6000 {
        let mut bytes = seeds[i % seeds.len()].clone();
        for _ in 0..rng.gen_range(1..16) {
            let at = rng.gen_range(0..bytes.len().max(1));
            match rng.gen_range(0..4) {
                0 if !bytes.is_empty() => bytes[at] = rng.gen(),
                1 if !bytes.is_empty() => bytes.truncate(at),
                2 => bytes.insert(at.min(bytes.len()), *b"-/ 0e9\nfv".get(rng.gen_range(0..9)).unwrap()),
                _ => bytes.extend((0..rng.gen_range(0..64)).map(|_| rng.gen::<u8>())),
            }
        }
        if let Ok(m) = parse_stl::<f32>(&bytes) {
            m.validate().unwrap();
        }
        if let Ok(m) = parse_obj::<f32>(&String::from_utf8_lossy(&bytes)) {
            m.validate().unwrap();
        }
    }
    // Large random input near the size bound.
    let big: Vec<u8> = (0..8 << 20).map(|_| rng.gen()).collect();
    let _ = parse_stl::<f32>(&big);
    let _ = parse_obj::<f32>(&String::from_utf8_lossy(&big));
}

#[test]
fn in_band_failures() {
    let roots = vec![assets_root()];
    let missing = handle_request(&roots, "package://demo/meshes/none.stl", false);
    assert!(!missing.success);
    assert!(missing.message.contains("not found"));
    assert!(missing.mesh.is_none() && missing.raw.is_empty());
    let escape = handle_request(&roots, "package://demo/../../../etc/passwd", false);
    assert!(!escape.success && !escape.message.is_empty());

    let dir = tempfile::tempdir().unwrap();
    std::fs::create_dir_all(dir.path().join("big")).unwrap();
    let f = std::fs::File::create(dir.path().join("big/huge.stl")).unwrap();
    f.set_len(65 << 20).unwrap();
    let huge = handle_request(&[dir.path().to_path_buf()], "package://big/huge.stl", true);
    assert!(!huge.success);
    assert!(huge.message.contains("exceeds"));

    std::fs::write(dir.path().join("big/scene.dae"), "<COLLADA/>").unwrap();
    let dae = handle_request(&[dir.path().to_path_buf()], "package://big/scene.dae", false);
    assert!(!dae.success && dae.message.contains("unsupported"));
    let raw = handle_request(&[dir.path().to_path_buf()], "package://big/scene.dae", true);
    assert!(raw.success);
    assert_eq!((raw.format.as_str(), raw.raw.as_slice()), ("dae", &b"<COLLADA/>"[..]));
}

struct Graph {
    _master: Master,
    _server_node: Node,
    service: LoaderService,
    client_node: Node,
}

fn graph(roots: Vec<PathBuf>) -> Graph {
    let master = Master::start_local().unwrap();
    let server_node = Node::start(NodeConfig::local("/iviz_loader", master.uri())).unwrap();
    let service = LoaderService::start(&server_node, roots, DEFAULT_SERVICE).unwrap();
    let client_node = Node::start(NodeConfig::local("/viewer", master.uri())).unwrap();
    Graph {
        _master: master,
        _server_node: server_node,
        service,
        client_node,
    }
}

#[test]
fn robot_mesh_uri_served_then_cached() {
    let g = graph(vec![assets_root()]);
    let urdf = r#"<robot name="boxy"><link name="base"><visual><geometry>
        <mesh filename="package://demo/meshes/cube.stl"/></geometry></visual></link></robot>"#;
    let uris = parse_urdf::<f64>(urdf).unwrap().mesh_uris();
    assert_eq!(uris, ["package://demo/meshes/cube.stl"]);

    let cache_dir = tempfile::tempdir().unwrap();
    let client = AssetClient::new(&g.client_node, DEFAULT_SERVICE, Some(AssetCache::open(cache_dir.path()).unwrap())).unwrap();
    let first = client.fetch(&uris[0]).unwrap();
    assert!(!first.from_cache);
    assert_eq!(first.mesh.triangle_count(), 12);
    assert_eq!(client.service_calls(), 1);

    let second = client.fetch(&uris[0]).unwrap();
    assert!(second.from_cache);
    assert_eq!(client.service_calls(), 1, "second fetch must not call the service");
    assert_eq!(second.payload, first.payload);
    assert_eq!(g.service.stats().requests.load(Ordering::Relaxed), 1);

    // Caching is transparent: an uncached client sees the same bytes.
    let plain = AssetClient::new(&g.client_node, DEFAULT_SERVICE, None).unwrap();
    assert_eq!(plain.fetch(&uris[0]).unwrap().payload, first.payload);

    // A corrupted entry is a miss.
    let path = client.cache().unwrap().path_for(&uris[0]);
    std::fs::write(&path, b"garbage").unwrap();
    assert!(!client.fetch(&uris[0]).unwrap().from_cache);
    assert_eq!(client.service_calls(), 2);

    let missing = client.fetch("package://demo/meshes/none.stl");
    assert!(matches!(missing, Err(AssetError::Service(m)) if m.contains("not found")));
}

#[test]
fn changed_file_replaces_cached_entry() {
    let root = tempfile::tempdir().unwrap();
    let dir = root.path().join("pkg");
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("m.obj"), "v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 3\n").unwrap();
    let g = graph(vec![root.path().to_path_buf()]);
    let cache_dir = tempfile::tempdir().unwrap();
    let client = AssetClient::new(&g.client_node, DEFAULT_SERVICE, Some(AssetCache::open(cache_dir.path()).unwrap())).unwrap();

    let a = client.fetch("package://pkg/m.obj").unwrap();
    std::fs::write(dir.join("m.obj"), "v 0 0 0\nv 1 0 0\nv 0 1 0\nv 1 1 0\nf 1 2 4 3\n").unwrap();
    let b = client.refresh("package://pkg/m.obj").unwrap();
    assert_ne!(a.checksum, b.checksum);
    assert_eq!(b.mesh.triangle_count(), 2);
    assert_eq!(client.cache().unwrap().stats().evictions.load(Ordering::Relaxed), 1);
    let c = client.fetch("package://pkg/m.obj").unwrap();
    assert!(c.from_cache);
    assert_eq!(c.checksum, b.checksum);

    let raw = client.fetch_raw("package://pkg/m.obj").unwrap();
    assert_eq!(raw.checksum, format!("{:x}", md5::compute(&raw.bytes)));
}
