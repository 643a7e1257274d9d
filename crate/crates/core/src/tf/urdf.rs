//! URDF robot descriptions: links with visual geometry and the joint tree.

use std::collections::{BTreeMap, HashMap};

use roxmltree::{Document, Node as XmlNode};

use super::{Quat, Real, TfError, Transform, Vec3};

#[derive(Debug, Clone, PartialEq)]
pub enum Geometry<T: Real> {
    Box { size: Vec3<T> },
    Cylinder { radius: T, length: T },
    Sphere { radius: T },
    Mesh { uri: String, scale: Vec3<T> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Visual<T: Real> {
    pub origin: Transform<T>,
    pub geometry: Geometry<T>,
    /// RGBA in `[0, 1]`, from an inline or robot-level material.
    pub color: Option<[f32; 4]>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Link<T: Real> {
    pub name: String,
    pub visuals: Vec<Visual<T>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum JointKind {
    Fixed,
    Revolute,
    Continuous,
    Prismatic,
}

impl JointKind {
    pub fn is_movable(self) -> bool {
        self != JointKind::Fixed
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JointLimits<T> {
    pub lower: T,
    pub upper: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Joint<T: Real> {
    pub name: String,
    pub kind: JointKind,
    pub parent: String,
    pub child: String,
    pub origin: Transform<T>,
    /// Unit vector in the joint frame.
    pub axis: Vec3<T>,
    pub limits: Option<JointLimits<T>>,
}

/// A parsed robot; immutable once built.
#[derive(Debug, Clone, PartialEq)]
pub struct RobotModel<T: Real> {
    pub name: String,
    pub links: BTreeMap<String, Link<T>>,
    pub joints: BTreeMap<String, Joint<T>>,
    pub root: String,
    /// Non-fatal issues, e.g. joint kinds downgraded to fixed.
    pub warnings: Vec<String>,
    children: BTreeMap<String, Vec<String>>,
}

impl<T: Real> RobotModel<T> {
    /// Joints whose parent is `link`, by name.
    pub fn child_joints(&self, link: &str) -> impl Iterator<Item = &Joint<T>> {
        self.children
            .get(link)
            .into_iter()
            .flatten()
            .filter_map(|j| self.joints.get(j))
    }

    pub fn movable_joints(&self) -> impl Iterator<Item = &Joint<T>> {
        self.joints.values().filter(|j| j.kind.is_movable())
    }

    /// Every mesh URI referenced by a visual, deduplicated and sorted.
    pub fn mesh_uris(&self) -> Vec<String> {
        let mut uris: Vec<String> = self
            .links
            .values()
            .flat_map(|l| &l.visuals)
            .filter_map(|v| match &v.geometry {
                Geometry::Mesh { uri, .. } => Some(uri.clone()),
                _ => None,
            })
            .collect();
        uris.sort();
        uris.dedup();
        uris
    }
}

fn malformed(msg: impl Into<String>) -> TfError {
    TfError::Malformed(msg.into())
}

fn numbers<T: Real>(node: XmlNode, attr: &str, count: usize) -> Result<Option<Vec<T>>, TfError> {
    let Some(text) = node.attribute(attr) else {
        return Ok(None);
    };
    let values = text
        .split_whitespace()
        .map(|t| t.parse::<f64>().map(T::of))
        .collect::<Result<Vec<T>, _>>()
        .map_err(|_| malformed(format!("<{}> {attr}={text:?} is not a list of numbers", node.tag_name().name())))?;
    if values.len() != count || values.iter().any(|v| !v.is_finite()) {
        return Err(malformed(format!(
            "<{}> {attr}={text:?} needs {count} finite numbers",
            node.tag_name().name()
        )));
    }
    Ok(Some(values))
}

fn vec3<T: Real>(node: XmlNode, attr: &str) -> Result<Option<Vec3<T>>, TfError> {
    Ok(numbers::<T>(node, attr, 3)?.map(|v| Vec3::new(v[0], v[1], v[2])))
}

fn scalar<T: Real>(node: XmlNode, attr: &str) -> Result<Option<T>, TfError> {
    Ok(numbers::<T>(node, attr, 1)?.map(|v| v[0]))
}

fn required<T: Real>(node: XmlNode, attr: &str) -> Result<T, TfError> {
    scalar(node, attr)?.ok_or_else(|| malformed(format!("<{}> is missing `{attr}`", node.tag_name().name())))
}

fn child<'a, 'i>(node: XmlNode<'a, 'i>, name: &str) -> Option<XmlNode<'a, 'i>> {
    node.children().find(|c| c.is_element() && c.has_tag_name(name))
}

fn children<'a, 'i: 'a>(node: XmlNode<'a, 'i>, name: &'a str) -> impl Iterator<Item = XmlNode<'a, 'i>> + 'a {
    node.children().filter(move |c| c.is_element() && c.has_tag_name(name))
}

/// `<origin xyz rpy>`; a missing element or attribute means zero.
fn origin<T: Real>(parent: XmlNode) -> Result<Transform<T>, TfError> {
    let Some(o) = child(parent, "origin") else {
        return Ok(Transform::identity());
    };
    let xyz = vec3(o, "xyz")?.unwrap_or_else(Vec3::zero);
    let rpy = vec3(o, "rpy")?.unwrap_or_else(Vec3::zero);
    Ok(Transform::new(xyz, Quat::from_rpy(rpy.x, rpy.y, rpy.z)))
}

fn rgba(node: XmlNode) -> Result<Option<[f32; 4]>, TfError> {
    let Some(color) = child(node, "color") else {
        return Ok(None);
    };
    Ok(numbers::<f64>(color, "rgba", 4)?.map(|v| [v[0] as f32, v[1] as f32, v[2] as f32, v[3] as f32]))
}

fn geometry<T: Real>(visual: XmlNode, warnings: &mut Vec<String>, link: &str) -> Result<Option<Geometry<T>>, TfError> {
    let Some(g) = child(visual, "geometry") else {
        warnings.push(format!("link {link}: <visual> without <geometry> ignored"));
        return Ok(None);
    };
    let Some(shape) = g.children().find(|c| c.is_element()) else {
        warnings.push(format!("link {link}: empty <geometry> ignored"));
        return Ok(None);
    };
    Ok(Some(match shape.tag_name().name() {
        "box" => Geometry::Box {
            size: vec3(shape, "size")?.ok_or_else(|| malformed(format!("link {link}: <box> without size")))?,
        },
        "cylinder" => Geometry::Cylinder {
            radius: required(shape, "radius")?,
            length: required(shape, "length")?,
        },
        "sphere" => Geometry::Sphere {
            radius: required(shape, "radius")?,
        },
        "mesh" => Geometry::Mesh {
            uri: shape
                .attribute("filename")
                .ok_or_else(|| malformed(format!("link {link}: <mesh> without filename")))?
                .to_string(),
            scale: vec3(shape, "scale")?.unwrap_or(Vec3::new(T::one(), T::one(), T::one())),
        },
        other => {
            warnings.push(format!("link {link}: unsupported geometry <{other}> ignored"));
            return Ok(None);
        }
    }))
}

fn parse_link<T: Real>(
    node: XmlNode,
    materials: &HashMap<String, [f32; 4]>,
    warnings: &mut Vec<String>,
) -> Result<Link<T>, TfError> {
    let name = node
        .attribute("name")
        .ok_or_else(|| malformed("<link> without name"))?
        .to_string();
    let mut visuals = Vec::new();
    for v in children(node, "visual") {
        let Some(geometry) = geometry(v, warnings, &name)? else {
            continue;
        };
        let color = match child(v, "material") {
            Some(m) => match rgba(m)? {
                Some(c) => Some(c),
                None => m.attribute("name").and_then(|n| materials.get(n)).copied(),
            },
            None => None,
        };
        visuals.push(Visual {
            origin: origin(v)?,
            geometry,
            color,
        });
    }
    Ok(Link { name, visuals })
}

fn parse_joint<T: Real>(node: XmlNode, warnings: &mut Vec<String>) -> Result<Joint<T>, TfError> {
    let name = node
        .attribute("name")
        .ok_or_else(|| malformed("<joint> without name"))?
        .to_string();
    let kind = match node.attribute("type") {
        Some("fixed") => JointKind::Fixed,
        Some("revolute") => JointKind::Revolute,
        Some("continuous") => JointKind::Continuous,
        Some("prismatic") => JointKind::Prismatic,
        Some(k @ ("planar" | "floating")) => {
            warnings.push(format!("joint {name}: unsupported type {k:?} treated as fixed"));
            JointKind::Fixed
        }
        Some(other) => return Err(malformed(format!("joint {name}: unknown type {other:?}"))),
        None => return Err(malformed(format!("joint {name}: missing type"))),
    };
    let link_ref = |tag: &str| {
        child(node, tag)
            .and_then(|c| c.attribute("link"))
            .map(str::to_string)
            .ok_or_else(|| malformed(format!("joint {name}: missing <{tag} link=...>")))
    };
    // Fixed joints often carry a placeholder `0 0 0` axis; it is never used.
    let axis = match child(node, "axis").filter(|_| kind.is_movable()) {
        Some(a) => vec3(a, "xyz")?
            .unwrap_or_else(Vec3::unit_x)
            .normalized()
            .ok_or_else(|| malformed(format!("joint {name}: zero axis")))?,
        None => Vec3::unit_x(),
    };
    let limits = match (kind, child(node, "limit")) {
        (JointKind::Revolute | JointKind::Prismatic, Some(l)) => Some(JointLimits {
            lower: scalar(l, "lower")?.unwrap_or_else(T::zero),
            upper: scalar(l, "upper")?.unwrap_or_else(T::zero),
        }),
        _ => None,
    };
    Ok(Joint {
        parent: link_ref("parent")?,
        child: link_ref("child")?,
        origin: origin(node)?,
        name,
        kind,
        axis,
        limits,
    })
}

/// Parses a URDF document. Collision, inertial, transmission and other
/// elements are skipped.
pub fn parse_urdf<T: Real>(xml: &str) -> Result<RobotModel<T>, TfError> {
    let doc = Document::parse(xml).map_err(|e| TfError::XmlSyntax(e.to_string()))?;
    let robot = doc.root_element();
    if !robot.has_tag_name("robot") {
        return Err(malformed(format!("root element is <{}>, expected <robot>", robot.tag_name().name())));
    }
    let mut warnings = Vec::new();
    let mut materials = HashMap::new();
    for m in children(robot, "material") {
        if let (Some(name), Some(c)) = (m.attribute("name"), rgba(m)?) {
            materials.insert(name.to_string(), c);
        }
    }

    let mut links = BTreeMap::new();
    for node in children(robot, "link") {
        let link = parse_link::<T>(node, &materials, &mut warnings)?;
        if links.contains_key(&link.name) {
            return Err(malformed(format!("duplicate link {}", link.name)));
        }
        links.insert(link.name.clone(), link);
    }
    let mut joints = BTreeMap::new();
    for node in children(robot, "joint") {
        let joint = parse_joint::<T>(node, &mut warnings)?;
        if joints.contains_key(&joint.name) {
            return Err(malformed(format!("duplicate joint {}", joint.name)));
        }
        joints.insert(joint.name.clone(), joint);
    }
    for w in &warnings {
        log::warn!("urdf: {w}");
    }

    // Tree checks: known links, one parent per child, one root, all reachable.
    let mut parent_of: HashMap<&str, &str> = HashMap::new();
    let mut children_of: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for j in joints.values() {
        for l in [&j.parent, &j.child] {
            if !links.contains_key(l) {
                return Err(TfError::JointGraphNotTree(format!("joint {} references unknown link {l}", j.name)));
            }
        }
        if let Some(prev) = parent_of.insert(&j.child, &j.parent) {
            return Err(TfError::JointGraphNotTree(format!(
                "link {} has two parents ({prev} and {})",
                j.child, j.parent
            )));
        }
        children_of.entry(j.parent.clone()).or_default().push(j.name.clone());
    }
    let roots: Vec<&String> = links.keys().filter(|l| !parent_of.contains_key(l.as_str())).collect();
    let root = match roots.as_slice() {
        [root] => (*root).clone(),
        [] if links.is_empty() => return Err(malformed("robot has no links")),
        [] => return Err(TfError::JointGraphNotTree("every link has a parent (cycle)".into())),
        many => return Err(TfError::MultipleRoots(many.iter().map(|s| s.to_string()).collect())),
    };
    let mut seen = 1usize;
    let mut stack = vec![root.as_str()];
    while let Some(l) = stack.pop() {
        for j in children_of.get(l).into_iter().flatten() {
            seen += 1;
            stack.push(&joints[j].child);
        }
    }
    if seen != links.len() {
        return Err(TfError::JointGraphNotTree("joint graph contains a cycle".into()));
    }

    Ok(RobotModel {
        name: robot.attribute("name").unwrap_or_default().to_string(),
        links,
        joints,
        root,
        warnings,
        children: children_of,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_robot() {
        let m = parse_urdf::<f64>(r#"<robot name="r"><link name="base"/></robot>"#).unwrap();
        assert_eq!((m.links.len(), m.joints.len()), (1, 0));
        assert_eq!(m.root, "base");
    }

    #[test]
    fn revolute_pair_and_defaults() {
        let m = parse_urdf::<f64>(
            r#"<robot name="r">
                 <link name="a"/><link name="b"/>
                 <joint name="j" type="revolute">
                   <parent link="a"/><child link="b"/>
                   <origin xyz="0 0 1"/><axis xyz="0 0 2"/>
                   <limit lower="-1" upper="1" effort="1" velocity="1"/>
                 </joint>
               </robot>"#,
        )
        .unwrap();
        assert_eq!(m.root, "a");
        let j = &m.joints["j"];
        assert_eq!(j.axis, Vec3::new(0.0, 0.0, 1.0));
        assert_eq!(j.limits, Some(JointLimits { lower: -1.0, upper: 1.0 }));
        assert_eq!(j.origin.translation, Vec3::new(0.0, 0.0, 1.0));
        let f = parse_urdf::<f64>(
            r#"<robot name="r"><link name="a"/><link name="b"/>
               <joint name="j" type="floating"><parent link="a"/><child link="b"/></joint></robot>"#,
        )
        .unwrap();
        assert_eq!(f.joints["j"].kind, JointKind::Fixed);
        assert_eq!(f.joints["j"].axis, Vec3::unit_x());
        assert_eq!(f.warnings.len(), 1);
    }

    #[test]
    fn geometry_and_materials() {
        let m = parse_urdf::<f64>(
            r#"<robot name="r">
                 <material name="blue"><color rgba="0 0 1 1"/></material>
                 <link name="a">
                   <visual><origin xyz="1 2 3" rpy="0 0 0"/><geometry><box size="1 2 3"/></geometry><material name="blue"/></visual>
                   <visual><geometry><mesh filename="package://p/m.stl" scale="2 2 2"/></geometry></visual>
                   <visual><geometry><cylinder radius="0.5" length="2"/></geometry><material name="x"><color rgba="1 0 0 0.5"/></material></visual>
                   <collision><geometry><sphere radius="9"/></geometry></collision>
                 </link>
               </robot>"#,
        )
        .unwrap();
        let v = &m.links["a"].visuals;
        assert_eq!(v.len(), 3);
        assert_eq!(v[0].color, Some([0.0, 0.0, 1.0, 1.0]));
        assert_eq!(v[0].origin.translation, Vec3::new(1.0, 2.0, 3.0));
        assert!(matches!(&v[1].geometry, Geometry::Mesh { uri, scale } if uri == "package://p/m.stl" && scale.x == 2.0));
        assert_eq!(v[2].color, Some([1.0, 0.0, 0.0, 0.5]));
        assert_eq!(m.mesh_uris(), ["package://p/m.stl"]);
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(parse_urdf::<f64>("<robot"), Err(TfError::XmlSyntax(_))));
        assert!(matches!(
            parse_urdf::<f64>(r#"<robot name="r"><link name="a"/><link name="b"/></robot>"#),
            Err(TfError::MultipleRoots(_))
        ));
        let two_parents = r#"<robot name="r"><link name="a"/><link name="b"/><link name="c"/>
            <joint name="j1" type="fixed"><parent link="a"/><child link="c"/></joint>
            <joint name="j2" type="fixed"><parent link="b"/><child link="c"/></joint></robot>"#;
        assert!(matches!(parse_urdf::<f64>(two_parents), Err(TfError::JointGraphNotTree(_))));
        let cycle = r#"<robot name="r"><link name="r"/><link name="a"/><link name="b"/>
            <joint name="j0" type="fixed"><parent link="r"/><child link="r"/></joint>
            <joint name="j1" type="fixed"><parent link="a"/><child link="b"/></joint>
            <joint name="j2" type="fixed"><parent link="b"/><child link="a"/></joint></robot>"#;
        assert!(matches!(parse_urdf::<f64>(cycle), Err(TfError::JointGraphNotTree(_))));
        let dangling = r#"<robot name="r"><link name="a"/>
            <joint name="j" type="fixed"><parent link="a"/><child link="ghost"/></joint></robot>"#;
        assert!(matches!(parse_urdf::<f64>(dangling), Err(TfError::JointGraphNotTree(_))));
    }
}
