// This file is generated by `roslite msg gen`. Do not edit.

/// `tf2_msgs/TFMessage`
#[derive(Debug, Clone, PartialEq)]
pub struct TFMessage {
    pub transforms: ::std::vec::Vec<super::super::geometry_msgs::TransformStamped>,
}

impl ::std::default::Default for TFMessage {
    fn default() -> Self {
        TFMessage {
            transforms: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for TFMessage {
    const MIN_SIZE: usize = <::std::vec::Vec<super::super::geometry_msgs::TransformStamped> as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.transforms, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(TFMessage {
            transforms: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.transforms)
    }
}

impl ::roslite::wire::RosMessage for TFMessage {
    const TYPE_NAME: &'static str = "tf2_msgs/TFMessage";
    const MD5SUM: &'static str = "94810edda583a504dfda3829e70d7eec";
    const DEFINITION: &'static str = r#"geometry_msgs/TransformStamped[] transforms

================================================================================
MSG: geometry_msgs/TransformStamped
# This expresses a transform from coordinate frame header.frame_id
# to the coordinate frame child_frame_id
Header header
string child_frame_id # the frame id of the child frame
Transform transform

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
MSG: geometry_msgs/Transform
# This represents the transform between two coordinate frames in free space.

Vector3 translation
Quaternion rotation

================================================================================
MSG: geometry_msgs/Vector3
# This represents a vector in free space.
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
