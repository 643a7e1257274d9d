// This file is generated by `roslite msg gen`. Do not edit.

/// `geometry_msgs/PoseWithCovariance`
#[derive(Debug, Clone, PartialEq)]
pub struct PoseWithCovariance {
    pub pose: super::super::geometry_msgs::Pose,
    pub covariance: [f64; 36],
}

impl ::std::default::Default for PoseWithCovariance {
    fn default() -> Self {
        PoseWithCovariance {
            pose: ::std::default::Default::default(),
            covariance: ::std::array::from_fn(|_| ::std::default::Default::default()),
        }
    }
}

impl ::roslite::wire::WireField for PoseWithCovariance {
    const MIN_SIZE: usize = <super::super::geometry_msgs::Pose as ::roslite::wire::WireField>::MIN_SIZE
        + <[f64; 36] as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.pose, out);
        ::roslite::wire::WireField::encode(&self.covariance, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(PoseWithCovariance {
            pose: ::roslite::wire::WireField::decode(r)?,
            covariance: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.pose)
            + ::roslite::wire::WireField::encoded_len(&self.covariance)
    }
}

impl ::roslite::wire::RosMessage for PoseWithCovariance {
    const TYPE_NAME: &'static str = "geometry_msgs/PoseWithCovariance";
    const MD5SUM: &'static str = "c23e848cf1b7533a8d7c259073a97e6f";
    const DEFINITION: &'static str = r#"# This represents a pose in free space with uncertainty.

Pose pose

# Row-major representation of the 6x6 covariance matrix
float64[36] covariance

================================================================================
MSG: geometry_msgs/Pose
# A representation of pose in free space, composed of position and orientation. 
Point position
Quaternion orientation

================================================================================
MSG: geometry_msgs/Point
# This contains the position of a point in free space
float64 x
float64 y
float64 z

================================================================================
MSG: geometry_msgs/Quaternion
# This represents an orientation in free space in quaternion form.

float64 x
float64 y
float64 z
float64 w
"#;
}
