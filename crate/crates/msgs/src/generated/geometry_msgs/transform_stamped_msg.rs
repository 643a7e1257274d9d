// This file is generated by `roslite msg gen`. Do not edit.

/// `geometry_msgs/TransformStamped`
#[derive(Debug, Clone, PartialEq)]
pub struct TransformStamped {
    pub header: super::super::std_msgs::Header,
    pub child_frame_id: ::std::string::String,
    pub transform: super::super::geometry_msgs::Transform,
}

impl ::std::default::Default for TransformStamped {
    fn default() -> Self {
        TransformStamped {
            header: ::std::default::Default::default(),
            child_frame_id: ::std::default::Default::default(),
            transform: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for TransformStamped {
    const MIN_SIZE: usize = <super::super::std_msgs::Header as ::roslite::wire::WireField>::MIN_SIZE
        + <::std::string::String as ::roslite::wire::WireField>::MIN_SIZE
        + <super::super::geometry_msgs::Transform as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.header, out);
        ::roslite::wire::WireField::encode(&self.child_frame_id, out);
        ::roslite::wire::WireField::encode(&self.transform, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(TransformStamped {
            header: ::roslite::wire::WireField::decode(r)?,
            child_frame_id: ::roslite::wire::WireField::decode(r)?,
            transform: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.header)
            + ::roslite::wire::WireField::encoded_len(&self.child_frame_id)
            + ::roslite::wire::WireField::encoded_len(&self.transform)
    }
}

impl ::roslite::wire::RosMessage for TransformStamped {
    const TYPE_NAME: &'static str = "geometry_msgs/TransformStamped";
    const MD5SUM: &'static str = "b5764a33bfeb3588febc2682852579b0";
    const DEFINITION: &'static str = r#"# This expresses a transform from coordinate frame header.frame_id
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
