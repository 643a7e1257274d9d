//! Transform tree, URDF robot models and forward kinematics.
//!
//! The math is generic over the scalar ([`Real`]: `f32` or `f64`); the
//! crate root re-exports `f64` aliases for everyday use.

mod frames;
mod kinematics;
mod math;
mod urdf;

use std::sync::{Arc, RwLock};

use thiserror::Error;

use crate::msg::SchemaRegistry;
use crate::node::{Node, NodeError, Subscription};
use crate::wire::{DynamicValue, Time, TypeInfo};

pub use frames::{canonical_frame, FrameEntry, FrameTree, IngestReport};
pub use kinematics::{forward_kinematics, joint_motion, joint_state_apply, JointConfiguration, LinkPoses};
pub use math::{Quat, Real, Transform, Vec3};
pub use urdf::{parse_urdf, Geometry, Joint, JointKind, JointLimits, Link, RobotModel, Visual};

/// Parameter holding the URDF text by default.
pub const ROBOT_DESCRIPTION_PARAM: &str = "/robot_description";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TfError {
    #[error("edge {parent} → {child} would create a cycle")]
    CycleRejected { child: String, parent: String },
    #[error("frames {target_frame} and {source_frame} are not connected")]
    FramesDisconnected { target_frame: String, source_frame: String },
    #[error("unknown frame {0}")]
    UnknownFrame(String),
    #[error("invalid transform: {0}")]
    InvalidTransform(String),
    #[error("URDF is not well-formed XML: {0}")]
    XmlSyntax(String),
    #[error("URDF has several root links: {0:?}")]
    MultipleRoots(Vec<String>),
    #[error("URDF joint graph is not a tree: {0}")]
    JointGraphNotTree(String),
    #[error("malformed URDF: {0}")]
    Malformed(String),
    #[error("schema mismatch: {0}")]
    SchemaMismatch(String),
    #[error("robot description unavailable: {0}")]
    Unavailable(String),
}

/// Encodes a transform as the `geometry_msgs/Transform` record shape.
pub fn transform_to_value(t: &Transform<f64>) -> DynamicValue {
    let v3 = |v: Vec3<f64>| {
        DynamicValue::Record(vec![
            ("x".into(), DynamicValue::F64(v.x)),
            ("y".into(), DynamicValue::F64(v.y)),
            ("z".into(), DynamicValue::F64(v.z)),
        ])
    };
    let q = t.rotation;
    DynamicValue::Record(vec![
        ("translation".into(), v3(t.translation)),
        (
            "rotation".into(),
            DynamicValue::Record(vec![
                ("x".into(), DynamicValue::F64(q.x)),
                ("y".into(), DynamicValue::F64(q.y)),
                ("z".into(), DynamicValue::F64(q.z)),
                ("w".into(), DynamicValue::F64(q.w)),
            ]),
        ),
    ])
}

/// Builds a `tf2_msgs/TFMessage` value from `(parent, child, transform)` triples.
pub fn tf_message(stamp: Time, edges: &[(&str, &str, Transform<f64>)]) -> DynamicValue {
    let transforms = edges
        .iter()
        .map(|(parent, child, t)| {
            DynamicValue::Record(vec![
                (
                    "header".into(),
                    DynamicValue::Record(vec![
                        ("seq".into(), DynamicValue::U32(0)),
                        ("stamp".into(), DynamicValue::Time(stamp)),
                        ("frame_id".into(), DynamicValue::Str(parent.to_string())),
                    ]),
                ),
                ("child_frame_id".into(), DynamicValue::Str(child.to_string())),
                ("transform".into(), transform_to_value(t)),
            ])
        })
        .collect();
    DynamicValue::Record(vec![("transforms".into(), DynamicValue::Seq(transforms))])
}

/// Frame tree kept current from `/tf` and `/tf_static`. Readers take a
/// shared lock; the subscription lane is the only writer.
pub struct TfListener {
    tree: Arc<RwLock<FrameTree<f64>>>,
    _subscriptions: Vec<Subscription>,
}

impl TfListener {
    pub fn start(node: &Node) -> Result<TfListener, NodeError> {
        let info = TypeInfo::resolve(&SchemaRegistry::with_corpus(), "tf2_msgs/TFMessage")?;
        let tree = Arc::new(RwLock::new(FrameTree::new()));
        let mut subs = Vec::new();
        for (topic, is_static) in [("/tf", false), ("/tf_static", true)] {
            let t = tree.clone();
            subs.push(node.subscribe(topic, &info, move |ev| match ev.decode() {
                Ok(msg) => {
                    if let Err(e) = t.write().expect("tf lock").ingest(&msg, is_static) {
                        log::warn!("{topic}: {e}");
                    }
                }
                Err(e) => log::warn!("{topic}: undecodable message: {e}"),
            })?);
        }
        Ok(TfListener {
            tree,
            _subscriptions: subs,
        })
    }

    pub fn lookup(&self, target: &str, source: &str) -> Result<Transform<f64>, TfError> {
        self.tree.read().expect("tf lock").lookup(target, source)
    }

    /// Copy of the current tree.
    pub fn snapshot(&self) -> FrameTree<f64> {
        self.tree.read().expect("tf lock").clone()
    }

    pub fn tree(&self) -> Arc<RwLock<FrameTree<f64>>> {
        self.tree.clone()
    }
}

/// Fetches and parses the URDF stored at `param` on the parameter server.
pub fn load_robot_description(node: &Node, param: &str) -> Result<RobotModel<f64>, TfError> {
    let value = node.get_param(param).map_err(|e| TfError::Unavailable(e.to_string()))?;
    let xml = value
        .as_str()
        .ok_or_else(|| TfError::Unavailable(format!("{param} is not a string")))?;
    parse_urdf(xml)
}
