//! STL and OBJ parsing into indexed triangle meshes with per-vertex normals.
//!
//! Pre-processing is fixed: polygons are fan-triangulated, zero-area
//! triangles are dropped (and counted), and missing normals are generated
//! per face and then area-weighted per vertex.

use std::collections::HashMap;

use crate::tf::{Real, Vec3};
use crate::wire::DynamicValue;

use super::{AssetError, Location};

/// Indexed triangle mesh as delivered to clients.
#[derive(Debug, Clone, PartialEq)]
pub struct Mesh<T: Real> {
    pub vertices: Vec<Vec3<T>>,
    /// One unit normal per vertex.
    pub normals: Vec<Vec3<T>>,
    pub triangles: Vec<[u32; 3]>,
    pub diffuse_color: [f32; 4],
    /// Zero-area triangles removed while parsing.
    pub dropped_degenerate: usize,
}

pub const DEFAULT_COLOR: [f32; 4] = [1.0, 1.0, 1.0, 1.0];

impl<T: Real> Mesh<T> {
    pub fn triangle_count(&self) -> usize {
        self.triangles.len()
    }

    /// Checks that indices are in range and normals are unit length.
    pub fn validate(&self) -> Result<(), String> {
        if self.normals.len() != self.vertices.len() {
            return Err(format!("{} normals for {} vertices", self.normals.len(), self.vertices.len()));
        }
        let n = self.vertices.len() as u64;
        if let Some(t) = self.triangles.iter().find(|t| t.iter().any(|&i| u64::from(i) >= n)) {
            return Err(format!("triangle {t:?} indexes past {n} vertices"));
        }
        let tol = T::of(1e-4);
        if let Some((i, v)) = self.normals.iter().enumerate().find(|(_, v)| (v.norm() - T::one()).abs() > tol) {
            return Err(format!("normal {i} has length {:?}", v.norm()));
        }
        Ok(())
    }

    /// `asset_msgs/Mesh` value: packed xyz triples and index triples.
    pub fn to_value(&self) -> DynamicValue {
        let pack = |vs: &[Vec3<T>]| {
            DynamicValue::Seq(
                vs.iter()
                    .flat_map(|v| v.to_array())
                    .map(|c| DynamicValue::F32(c.to_f32().unwrap_or(f32::NAN)))
                    .collect(),
            )
        };
        let [r, g, b, a] = self.diffuse_color;
        DynamicValue::Record(vec![
            ("vertices".into(), pack(&self.vertices)),
            ("normals".into(), pack(&self.normals)),
            (
                "triangles".into(),
                DynamicValue::Seq(self.triangles.iter().flatten().map(|&i| DynamicValue::U32(i)).collect()),
            ),
            (
                "diffuse_color".into(),
                DynamicValue::Record(vec![
                    ("r".into(), DynamicValue::F32(r)),
                    ("g".into(), DynamicValue::F32(g)),
                    ("b".into(), DynamicValue::F32(b)),
                    ("a".into(), DynamicValue::F32(a)),
                ]),
            ),
        ])
    }

    /// Inverse of [`Mesh::to_value`].
    pub fn from_value(v: &DynamicValue) -> Result<Self, AssetError> {
        let bad = |what: &str| AssetError::Malformed(format!("mesh message: {what}"));
        let floats = |name: &str| -> Result<Vec<f64>, AssetError> {
            v.field(name)
                .and_then(DynamicValue::as_seq)
                .ok_or_else(|| bad(name))?
                .iter()
                .map(|x| x.as_f64().ok_or_else(|| bad(name)))
                .collect()
        };
        let triples = |flat: Vec<f64>, name: &str| -> Result<Vec<Vec3<T>>, AssetError> {
            if !flat.len().is_multiple_of(3) {
                return Err(bad(&format!("{name} length is not a multiple of 3")));
            }
            Ok(flat.chunks(3).map(|c| Vec3::new(T::of(c[0]), T::of(c[1]), T::of(c[2]))).collect())
        };
        let indices: Vec<u32> = v
            .field("triangles")
            .and_then(DynamicValue::as_seq)
            .ok_or_else(|| bad("triangles"))?
            .iter()
            .map(|x| match x {
                DynamicValue::U32(i) => Ok(*i),
                _ => Err(bad("triangles")),
            })
            .collect::<Result<_, _>>()?;
        if !indices.len().is_multiple_of(3) {
            return Err(bad("triangles length is not a multiple of 3"));
        }
        let c = |n: &str| v.path(&format!("diffuse_color.{n}")).and_then(DynamicValue::as_f64).unwrap_or(1.0) as f32;
        Ok(Mesh {
            vertices: triples(floats("vertices")?, "vertices")?,
            normals: triples(floats("normals")?, "normals")?,
            triangles: indices.chunks(3).map(|t| [t[0], t[1], t[2]]).collect(),
            diffuse_color: [c("r"), c("g"), c("b"), c("a")],
            dropped_degenerate: 0,
        })
    }

    pub fn cast<U: Real>(&self) -> Mesh<U> {
        let c = |v: &Vec3<T>| {
            let f = |x: T| U::of(x.to_f64().unwrap_or(f64::NAN));
            Vec3::new(f(v.x), f(v.y), f(v.z))
        };
        Mesh {
            vertices: self.vertices.iter().map(c).collect(),
            normals: self.normals.iter().map(c).collect(),
            triangles: self.triangles.clone(),
            diffuse_color: self.diffuse_color,
            dropped_degenerate: self.dropped_degenerate,
        }
    }
}

type P = [f64; 3];

fn sub(a: P, b: P) -> P {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: P, b: P) -> P {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn dot(a: P, b: P) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn unit(a: P) -> Option<P> {
    let n = dot(a, a).sqrt();
    (n.is_finite() && n > 0.0).then(|| [a[0] / n, a[1] / n, a[2] / n])
}

/// Accumulates geometry in `f64` and produces the final mesh.
#[derive(Default)]
struct Builder {
    positions: Vec<P>,
    /// Supplied per-vertex normals, when the source format has them.
    given: Vec<Option<P>>,
    triangles: Vec<[u32; 3]>,
}

impl Builder {
    fn finish<T: Real>(self) -> Result<Mesh<T>, AssetError> {
        let mut accum = vec![[0.0; 3]; self.positions.len()];
        let mut kept = Vec::with_capacity(self.triangles.len());
        let mut dropped = 0;
        for t in self.triangles {
            let [a, b, c] = t.map(|i| self.positions[i as usize]);
            // Twice the area; relative to the longest edge so scale does not matter.
            let n = cross(sub(b, a), sub(c, a));
            let longest = dot(sub(b, a), sub(b, a))
                .max(dot(sub(c, a), sub(c, a)))
                .max(dot(sub(c, b), sub(c, b)));
            let area2 = dot(n, n).sqrt();
            if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] || area2.partial_cmp(&(longest * 1e-12)) != Some(std::cmp::Ordering::Greater) {
                dropped += 1;
                continue;
            }
            for &i in &t {
                let acc = &mut accum[i as usize];
                for k in 0..3 {
                    acc[k] += n[k];
                }
            }
            kept.push(t);
        }
        if kept.is_empty() {
            return Err(AssetError::EmptyMesh);
        }
        let to_t = |p: P| Vec3::new(T::of(p[0]), T::of(p[1]), T::of(p[2]));
        let normals = accum
            .iter()
            .enumerate()
            .map(|(i, acc)| {
                let given = self.given.get(i).copied().flatten().and_then(unit);
                to_t(given.or_else(|| unit(*acc)).unwrap_or([0.0, 0.0, 1.0]))
            })
            .collect();
        Ok(Mesh {
            vertices: self.positions.into_iter().map(to_t).collect(),
            normals,
            triangles: kept,
            diffuse_color: DEFAULT_COLOR,
            dropped_degenerate: dropped,
        })
    }
}

/// Welds bit-identical positions so STL triangle soups become indexed meshes.
#[derive(Default)]
struct Welder {
    index: HashMap<[u32; 3], u32>,
    builder: Builder,
}

impl Welder {
    fn vertex(&mut self, p: [f32; 3]) -> u32 {
        // +0.0 and −0.0 are the same point.
        let key = p.map(|c| if c == 0.0 { 0 } else { c.to_bits() });
        let b = &mut self.builder;
        *self.index.entry(key).or_insert_with(|| {
            b.positions.push(p.map(f64::from));
            (b.positions.len() - 1) as u32
        })
    }

    fn triangle(&mut self, t: [[f32; 3]; 3]) {
        let idx = t.map(|p| self.vertex(p));
        self.builder.triangles.push(idx);
    }
}

const STL_HEADER: usize = 80;
const STL_RECORD: usize = 50;

fn binary_stl_len(bytes: &[u8]) -> Option<u64> {
    let n = u32::from_le_bytes(bytes.get(STL_HEADER..STL_HEADER + 4)?.try_into().ok()?);
    Some((STL_HEADER + 4) as u64 + u64::from(n) * STL_RECORD as u64)
}

/// Binary when the declared triangle count matches the file size, or when
/// the file does not start with `solid`.
pub fn stl_is_binary(bytes: &[u8]) -> bool {
    if binary_stl_len(bytes) == Some(bytes.len() as u64) {
        return true;
    }
    let start = bytes.iter().position(|b| !b.is_ascii_whitespace()).unwrap_or(bytes.len());
    !bytes[start..].starts_with(b"solid")
}

/// Parses binary or ASCII STL, auto-detected.
pub fn parse_stl<T: Real>(bytes: &[u8]) -> Result<Mesh<T>, AssetError> {
    if stl_is_binary(bytes) {
        parse_binary_stl(bytes)
    } else {
        parse_ascii_stl(bytes)
    }
}

fn malformed(at: Location, reason: impl Into<String>) -> AssetError {
    AssetError::MalformedFile {
        at,
        reason: reason.into(),
    }
}

fn parse_binary_stl<T: Real>(bytes: &[u8]) -> Result<Mesh<T>, AssetError> {
    let Some(need) = binary_stl_len(bytes) else {
        return Err(malformed(Location::Offset(bytes.len()), "truncated binary STL header"));
    };
    if (bytes.len() as u64) < need {
        return Err(malformed(
            Location::Offset(bytes.len()),
            format!("binary STL declares {need} bytes of triangles but the file ends early"),
        ));
    }
    let count = (need as usize - STL_HEADER - 4) / STL_RECORD;
    let mut w = Welder::default();
    w.builder.triangles.reserve(count);
    for i in 0..count {
        let off = STL_HEADER + 4 + i * STL_RECORD;
        let rec = &bytes[off..off + STL_RECORD];
        let f = |k: usize| f32::from_le_bytes(rec[k * 4..k * 4 + 4].try_into().expect("4 bytes"));
        // Skip the stored facet normal (floats 0..3); it is regenerated.
        let t = [[f(3), f(4), f(5)], [f(6), f(7), f(8)], [f(9), f(10), f(11)]];
        if t.iter().flatten().any(|c| !c.is_finite()) {
            return Err(malformed(Location::Offset(off), "non-finite vertex coordinate"));
        }
        w.triangle(t);
    }
    w.builder.finish()
}

fn parse_coords<const N: usize>(tokens: &mut std::str::SplitWhitespace, at: Location) -> Result<[f64; N], AssetError> {
    let mut out = [0.0; N];
    for slot in out.iter_mut() {
        let tok = tokens.next().ok_or_else(|| malformed(at, format!("expected {N} coordinates")))?;
        let v: f64 = tok.parse().map_err(|_| malformed(at, format!("invalid number {tok:?}")))?;
        if !v.is_finite() {
            return Err(malformed(at, format!("non-finite number {tok:?}")));
        }
        *slot = v;
    }
    Ok(out)
}

fn parse_ascii_stl<T: Real>(bytes: &[u8]) -> Result<Mesh<T>, AssetError> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| malformed(Location::Offset(e.valid_up_to()), "ASCII STL is not valid UTF-8"))?;
    let mut w = Welder::default();
    let mut facet: Option<Vec<[f32; 3]>> = None;
    for (n, line) in text.lines().enumerate() {
        let at = Location::Line(n + 1);
        let mut tok = line.split_whitespace();
        match tok.next() {
            None | Some("solid" | "endsolid" | "outer" | "endloop") => {}
            Some("facet") => {
                if facet.is_some() {
                    return Err(malformed(at, "facet inside facet"));
                }
                facet = Some(Vec::with_capacity(3));
            }
            Some("vertex") => {
                let p = parse_coords::<3>(&mut tok, at)?;
                facet
                    .as_mut()
                    .ok_or_else(|| malformed(at, "vertex outside a facet"))?
                    .push(p.map(|c| c as f32));
            }
            Some("endfacet") => {
                let vs = facet.take().ok_or_else(|| malformed(at, "endfacet without facet"))?;
                if vs.len() < 3 {
                    return Err(malformed(at, format!("facet has {} vertices", vs.len())));
                }
                for i in 1..vs.len() - 1 {
                    w.triangle([vs[0], vs[i], vs[i + 1]]);
                }
            }
            Some(other) => return Err(malformed(at, format!("unexpected keyword {other:?}"))),
        }
    }
    if facet.is_some() {
        return Err(malformed(Location::Line(text.lines().count()), "unterminated facet"));
    }
    w.builder.finish()
}

/// Resolves a 1-based or negative (relative) OBJ index against `len` entries.
fn obj_index(tok: &str, len: usize, at: Location) -> Result<usize, AssetError> {
    let i: i64 = tok.parse().map_err(|_| malformed(at, format!("invalid index {tok:?}")))?;
    let resolved = match i {
        0 => return Err(malformed(at, "index 0 is invalid")),
        i if i > 0 => i - 1,
        i => len as i64 + i,
    };
    if resolved < 0 || resolved >= len as i64 {
        return Err(malformed(at, format!("index {i} out of range for {len} entries")));
    }
    Ok(resolved as usize)
}

/// A face corner: position index and optional normal index.
type Corner = (usize, Option<usize>);

/// Parses Wavefront OBJ geometry (`v`, `vn`, `f`); other statements are ignored.
pub fn parse_obj<T: Real>(text: &str) -> Result<Mesh<T>, AssetError> {
    let mut positions: Vec<P> = Vec::new();
    let mut normals: Vec<P> = Vec::new();
    // Each face corner as (position index, normal index).
    let mut faces: Vec<(Location, Vec<Corner>)> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let at = Location::Line(n + 1);
        let line = raw.split('#').next().unwrap_or_default();
        let mut tok = line.split_whitespace();
        match tok.next() {
            Some("v") => positions.push(parse_coords::<3>(&mut tok, at)?),
            Some("vn") => normals.push(parse_coords::<3>(&mut tok, at)?),
            Some("f") => {
                let mut corners = Vec::new();
                for c in tok {
                    let mut parts = c.split('/');
                    let v = obj_index(parts.next().unwrap_or_default(), positions.len(), at)?;
                    let _texcoord = parts.next();
                    let vn = match parts.next() {
                        Some(s) if !s.is_empty() => Some(obj_index(s, normals.len(), at)?),
                        _ => None,
                    };
                    corners.push((v, vn));
                }
                if corners.len() < 3 {
                    return Err(malformed(at, format!("face has {} vertices", corners.len())));
                }
                faces.push((at, corners));
            }
            _ => {}
        }
    }

    let mut b = Builder::default();
    let fan = |corners: &[u32], out: &mut Vec<[u32; 3]>| {
        for i in 1..corners.len() - 1 {
            out.push([corners[0], corners[i], corners[i + 1]]);
        }
    };
    if faces.iter().all(|(_, f)| f.iter().all(|c| c.1.is_none())) {
        // No normals: keep the file's vertex list as-is.
        b.positions = positions;
        for (_, f) in &faces {
            let idx: Vec<u32> = f.iter().map(|c| c.0 as u32).collect();
            fan(&idx, &mut b.triangles);
        }
    } else {
        // Split vertices by (position, normal) pair.
        let mut index: HashMap<(usize, Option<usize>), u32> = HashMap::new();
        for (_, f) in &faces {
            let idx: Vec<u32> = f
                .iter()
                .map(|&(v, vn)| {
                    *index.entry((v, vn)).or_insert_with(|| {
                        b.positions.push(positions[v]);
                        b.given.push(vn.map(|i| normals[i]));
                        (b.positions.len() - 1) as u32
                    })
                })
                .collect();
            fan(&idx, &mut b.triangles);
        }
    }
    if b.positions.len() > u32::MAX as usize {
        return Err(malformed(Location::Line(0), "too many vertices"));
    }
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binary(tris: &[[[f32; 3]; 3]]) -> Vec<u8> {
        let mut out = vec![0u8; 80];
        out.extend_from_slice(&(tris.len() as u32).to_le_bytes());
        for t in tris {
            out.extend_from_slice(&[0u8; 12]);
            for c in t.iter().flatten() {
                out.extend_from_slice(&c.to_le_bytes());
            }
            out.extend_from_slice(&[0, 0]);
        }
        out
    }

    #[test]
    fn single_binary_triangle() {
        let m: Mesh<f32> = parse_stl(&binary(&[[[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]])).unwrap();
        assert_eq!((m.vertices.len(), m.triangles.len()), (3, 1));
        for n in &m.normals {
            assert_eq!(*n, Vec3::new(0.0, 0.0, 1.0));
        }
        m.validate().unwrap();
    }

    #[test]
    fn binary_header_starting_with_solid_is_still_binary() {
        let mut b = binary(&[[[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]]);
        b[..5].copy_from_slice(b"solid");
        assert!(stl_is_binary(&b));
        assert_eq!(parse_stl::<f64>(&b).unwrap().triangles.len(), 1);
    }

    #[test]
    fn truncated_and_degenerate_input() {
        let b = binary(&[[[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]]);
        assert!(matches!(parse_stl::<f32>(&b[..100]), Err(AssetError::MalformedFile { .. })));
        let flat = binary(&[[[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [2.0, 0.0, 0.0]]]);
        assert!(matches!(parse_stl::<f32>(&flat), Err(AssetError::EmptyMesh)));
        let mixed = binary(&[
            [[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]],
            [[0.0, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 1.0, 0.0]],
        ]);
        assert_eq!(parse_stl::<f32>(&mixed).unwrap().dropped_degenerate, 1);
    }

    #[test]
    fn ascii_stl_with_errors_reports_lines() {
        let ok = "solid t\nfacet normal 0 0 1\nouter loop\nvertex 0 0 0\nvertex 1 0 0\nvertex 0 1 0\nendloop\nendfacet\nendsolid t\n";
        assert_eq!(parse_stl::<f32>(ok.as_bytes()).unwrap().triangles.len(), 1);
        let bad = ok.replace("vertex 1 0 0", "vertex 1 zero 0");
        match parse_stl::<f32>(bad.as_bytes()) {
            Err(AssetError::MalformedFile { at: Location::Line(5), .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_stl::<f32>(b"solid empty\nendsolid empty\n"), Err(AssetError::EmptyMesh)));
    }

    #[test]
    fn obj_fans_polygons_and_resolves_negative_indices() {
        let text = "v 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\nf -4 -3 -2 -1\n";
        let m: Mesh<f64> = parse_obj(text).unwrap();
        assert_eq!(m.triangles, [[0, 1, 2], [0, 2, 3]]);
        assert!(m.normals.iter().all(|n| (*n - Vec3::new(0.0, 0.0, 1.0)).norm() < 1e-12));
        assert!(matches!(parse_obj::<f64>("v 0 0 0\nf 1 2 3\n"), Err(AssetError::MalformedFile { .. })));
        assert!(matches!(parse_obj::<f64>("v 0 0 0\nf 0 1 1\n"), Err(AssetError::MalformedFile { .. })));
    }

    #[test]
    fn obj_supplied_normals_split_vertices() {
        let text = "v 0 0 0\nv 1 0 0\nv 0 1 0\nvn 0 0 2\nvn 0 0 -1\nf 1//1 2//1 3//1\nf 1//2 3//2 2//2\n";
        let m: Mesh<f32> = parse_obj(text).unwrap();
        assert_eq!((m.vertices.len(), m.triangles.len()), (6, 2));
        assert_eq!(m.normals[0], Vec3::new(0.0, 0.0, 1.0));
        assert_eq!(m.normals[3], Vec3::new(0.0, 0.0, -1.0));
        m.validate().unwrap();
    }

    #[test]
    fn value_round_trip() {
        let m: Mesh<f32> = parse_obj("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 3\n").unwrap();
        let back = Mesh::<f32>::from_value(&m.to_value()).unwrap();
        assert_eq!(back.vertices, m.vertices);
        assert_eq!(back.triangles, m.triangles);
        assert_eq!(back.normals, m.normals);
    }
}
