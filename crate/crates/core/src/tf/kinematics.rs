//! Forward kinematics over a parsed robot model.

use std::collections::BTreeMap;

use crate::wire::DynamicValue;

use super::{JointKind, Quat, Real, RobotModel, TfError, Transform};

/// Joint name → position (radians or meters).
pub type JointConfiguration<T> = BTreeMap<String, T>;

/// Root-relative link poses plus bookkeeping about the input configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct LinkPoses<T: Real> {
    pub poses: BTreeMap<String, Transform<T>>,
    /// Revolute positions pulled back inside their limits.
    pub clamped: usize,
    /// Configuration entries naming no joint of the model.
    pub unknown_joints: usize,
}

impl<T: Real> LinkPoses<T> {
    pub fn get(&self, link: &str) -> Option<&Transform<T>> {
        self.poses.get(link)
    }
}

/// Motion contributed by one joint at `position`.
pub fn joint_motion<T: Real>(kind: JointKind, axis: super::Vec3<T>, position: T) -> Transform<T> {
    match kind {
        JointKind::Fixed => Transform::identity(),
        JointKind::Revolute | JointKind::Continuous => Transform::from_rotation(Quat::from_axis_angle(axis, position)),
        JointKind::Prismatic => Transform::from_translation(axis.scale(position)),
    }
}

/// `child = parent ∘ origin ∘ motion` for every link, starting from an
/// identity root. Missing movable joints sit at zero.
pub fn forward_kinematics<T: Real>(model: &RobotModel<T>, config: &JointConfiguration<T>) -> LinkPoses<T> {
    let unknown_joints = config.keys().filter(|k| !model.joints.contains_key(*k)).count();
    let mut clamped = 0;
    let mut poses = BTreeMap::new();
    poses.insert(model.root.clone(), Transform::identity());
    let mut stack = vec![model.root.as_str()];
    while let Some(link) = stack.pop() {
        let parent_pose = poses[link];
        for joint in model.child_joints(link) {
            let mut q = config.get(&joint.name).copied().unwrap_or_else(T::zero);
            if !q.is_finite() {
                q = T::zero();
            }
            if let (JointKind::Revolute, Some(lim)) = (joint.kind, joint.limits) {
                if lim.lower <= lim.upper && (q < lim.lower || q > lim.upper) {
                    q = q.max(lim.lower).min(lim.upper);
                    clamped += 1;
                }
            }
            let pose = parent_pose
                .compose(&joint.origin)
                .compose(&joint_motion(joint.kind, joint.axis, q));
            poses.insert(joint.child.clone(), pose);
            stack.push(&joint.child);
        }
    }
    LinkPoses {
        poses,
        clamped,
        unknown_joints,
    }
}

/// Pairs `name[i]` with `position[i]` from a `sensor_msgs/JointState` value,
/// up to the shorter of the two; names unknown to `model` are skipped.
pub fn joint_state_apply<T: Real>(model: &RobotModel<T>, msg: &DynamicValue) -> Result<JointConfiguration<T>, TfError> {
    let names = msg
        .field("name")
        .and_then(DynamicValue::as_seq)
        .ok_or_else(|| TfError::SchemaMismatch("JointState needs a `name` string array".into()))?;
    let positions = match msg.field("position") {
        Some(DynamicValue::Seq(p)) => p,
        _ => return Err(TfError::SchemaMismatch("JointState needs a `position` float64 array".into())),
    };
    let mut config = JointConfiguration::new();
    for (name, pos) in names.iter().zip(positions) {
        let name = name
            .as_str()
            .ok_or_else(|| TfError::SchemaMismatch("JointState `name` holds a non-string".into()))?;
        let pos = pos
            .as_f64()
            .ok_or_else(|| TfError::SchemaMismatch("JointState `position` holds a non-number".into()))?;
        if model.joints.contains_key(name) {
            config.insert(name.to_string(), T::of(pos));
        }
    }
    Ok(config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tf::{parse_urdf, Vec3};
    use std::f64::consts::FRAC_PI_2;

    const ARM: &str = r#"<robot name="arm">
        <link name="base"/><link name="upper"/><link name="tool"/>
        <joint name="shoulder" type="revolute">
          <parent link="base"/><child link="upper"/>
          <origin xyz="0 0 1"/><axis xyz="0 0 1"/><limit lower="-1" upper="1"/>
        </joint>
        <joint name="wrist" type="fixed">
          <parent link="upper"/><child link="tool"/><origin xyz="1 0 0"/>
        </joint>
      </robot>"#;

    #[test]
    fn zero_configuration_composes_origins() {
        let m = parse_urdf::<f64>(ARM).unwrap();
        let fk = forward_kinematics(&m, &JointConfiguration::new());
        assert_eq!(fk.get("base"), Some(&Transform::identity()));
        assert!((fk.get("tool").unwrap().translation - Vec3::new(1.0, 0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn quarter_turn_and_clamping() {
        let m = parse_urdf::<f64>(&ARM.replace(r#"lower="-1" upper="1""#, r#"lower="-2" upper="2""#)).unwrap();
        let config = JointConfiguration::from([("shoulder".to_string(), FRAC_PI_2), ("extra".to_string(), 3.0)]);
        let fk = forward_kinematics(&m, &config);
        assert!((fk.get("tool").unwrap().translation - Vec3::new(0.0, 1.0, 1.0)).norm() < 1e-12);
        assert_eq!((fk.clamped, fk.unknown_joints), (0, 1));

        let m = parse_urdf::<f64>(ARM).unwrap();
        let fk = forward_kinematics(&m, &JointConfiguration::from([("shoulder".to_string(), 5.0)]));
        assert_eq!(fk.clamped, 1);
        let expect = Vec3::new(1f64.cos(), 1f64.sin(), 1.0);
        assert!((fk.get("tool").unwrap().translation - expect).norm() < 1e-12);
    }

    #[test]
    fn joint_state_pairs_shortest() {
        let m = parse_urdf::<f64>(ARM).unwrap();
        let msg = DynamicValue::Record(vec![
            ("name".into(), DynamicValue::Seq(vec![DynamicValue::Str("shoulder".into()), DynamicValue::Str("wrist".into())])),
            ("position".into(), DynamicValue::Seq(vec![DynamicValue::F64(0.5)])),
        ]);
        assert_eq!(joint_state_apply(&m, &msg).unwrap(), JointConfiguration::from([("shoulder".to_string(), 0.5)]));
        let empty = DynamicValue::Record(vec![
            ("name".into(), DynamicValue::Seq(vec![])),
            ("position".into(), DynamicValue::Seq(vec![])),
        ]);
        assert!(joint_state_apply(&m, &empty).unwrap().is_empty());
        assert!(matches!(
            joint_state_apply(&m, &DynamicValue::Record(vec![])),
            Err(TfError::SchemaMismatch(_))
        ));
    }
}
