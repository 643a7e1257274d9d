// This file is generated by `roslite msg gen`. Do not edit.

/// `geometry_msgs/PoseStamped`
#[derive(Debug, Clone, PartialEq)]
pub struct PoseStamped {
    pub header: super::super::std_msgs::Header,
    pub pose: super::super::geometry_msgs::Pose,
}

impl ::std::default::Default for PoseStamped {
    fn default() -> Self {
        PoseStamped {
            header: ::std::default::Default::default(),
            pose: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for PoseStamped {
    const MIN_SIZE: usize = <super::super::std_msgs::Header as ::roslite::wire::WireField>::MIN_SIZE
        + <super::super::geometry_msgs::Pose as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.header, out);
        ::roslite::wire::WireField::encode(&self.pose, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(PoseStamped {
            header: ::roslite::wire::WireField::decode(r)?,
            pose: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.header)
            + ::roslite::wire::WireField::encoded_len(&self.pose)
    }
}

impl ::roslite::wire::RosMessage for PoseStamped {
    const TYPE_NAME: &'static str = "geometry_msgs/PoseStamped";
    const MD5SUM: &'static str = "d3812c3cbc69362b77dc0b19b345f8f5";
    const DEFINITION: &'static str = r#"# A Pose with reference coordinate frame and timestamp
Header header
Pose pose

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
