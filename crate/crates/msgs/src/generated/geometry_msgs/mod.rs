// This file is generated by `roslite msg gen`. Do not edit.

mod point32_msg;
mod point_msg;
mod pose_msg;
mod pose_stamped_msg;
mod pose_with_covariance_msg;
mod quaternion_msg;
mod transform_msg;
mod transform_stamped_msg;
mod twist_msg;
mod twist_stamped_msg;
mod twist_with_covariance_msg;
mod vector3_msg;

pub use point32_msg::{Point32};
pub use point_msg::{Point};
pub use pose_msg::{Pose};
pub use pose_stamped_msg::{PoseStamped};
pub use pose_with_covariance_msg::{PoseWithCovariance};
pub use quaternion_msg::{Quaternion};
pub use transform_msg::{Transform};
pub use transform_stamped_msg::{TransformStamped};
pub use twist_msg::{Twist};
pub use twist_stamped_msg::{TwistStamped};
pub use twist_with_covariance_msg::{TwistWithCovariance};
pub use vector3_msg::{Vector3};
