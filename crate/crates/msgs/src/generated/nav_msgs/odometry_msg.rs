// This file is generated by `roslite msg gen`. Do not edit.

/// `nav_msgs/Odometry`
#[derive(Debug, Clone, PartialEq)]
pub struct Odometry {
    pub header: super::super::std_msgs::Header,
    pub child_frame_id: ::std::string::String,
    pub pose: super::super::geometry_msgs::PoseWithCovariance,
    pub twist: super::super::geometry_msgs::TwistWithCovariance,
}

impl ::std::default::Default for Odometry {
    fn default() -> Self {
        Odometry {
            header: ::std::default::Default::default(),
            child_frame_id: ::std::default::Default::default(),
            pose: ::std::default::Default::default(),
            twist: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for Odometry {
    const MIN_SIZE: usize = <super::super::std_msgs::Header as ::roslite::wire::WireField>::MIN_SIZE
        + <::std::string::String as ::roslite::wire::WireField>::MIN_SIZE
        + <super::super::geometry_msgs::PoseWithCovariance as ::roslite::wire::WireField>::MIN_SIZE
        + <super::super::geometry_msgs::TwistWithCovariance as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.header, out);
        ::roslite::wire::WireField::encode(&self.child_frame_id, out);
        ::roslite::wire::WireField::encode(&self.pose, out);
        ::roslite::wire::WireField::encode(&self.twist, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(Odometry {
            header: ::roslite::wire::WireField::decode(r)?,
            child_frame_id: ::roslite::wire::WireField::decode(r)?,
            pose: ::roslite::wire::WireField::decode(r)?,
            twist: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.header)
            + ::roslite::wire::WireField::encoded_len(&self.child_frame_id)
            + ::roslite::wire::WireField::encoded_len(&self.pose)
            + ::roslite::wire::WireField::encoded_len(&self.twist)
    }
}

impl ::roslite::wire::RosMessage for Odometry {
    const TYPE_NAME: &'static str = "nav_msgs/Odometry";
    const MD5SUM: &'static str = "cd5e73d190d741a2f92e81eda573aca7";
    const DEFINITION: &'static str = r#"# This represents an estimate of a position and velocity in free space.  
Header header
string child_frame_id
geometry_msgs/PoseWithCovariance pose
geometry_msgs/TwistWithCovariance twist

================================================================================
MSG: std_msgs/Header
# Standard metadata for higher-level stamped data types.
# sequence ID: consecutively increasing ID
uint32 seq
# Two-integer timestamp: stamp.sec (seconds since epoch), stamp.nsec
time stamp
# Frame this data is associated with
string frame_id

================================================================================
MSG: geometry_msgs/PoseWithCovariance
# This represents a pose in free space with uncertainty.

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

================================================================================
MSG: geometry_msgs/TwistWithCovariance
# This expresses velocity in free space with uncertainty.

Twist twist

# Row-major representation of the 6x6 covariance matrix
float64[36] covariance

================================================================================
MSG: geometry_msgs/Twist
# This expresses velocity in free space broken into its linear and angular parts.
Vector3  linear
Vector3  angular

================================================================================
MSG: geometry_msgs/Vector3
# This represents a vector in free space.
float64 x
float64 y
float64 z
"#;
}
