// This file is generated by `roslite msg gen`. Do not edit.

/// `geometry_msgs/TwistStamped`
#[derive(Debug, Clone, PartialEq)]
pub struct TwistStamped {
    pub header: super::super::std_msgs::Header,
    pub twist: super::super::geometry_msgs::Twist,
}

impl ::std::default::Default for TwistStamped {
    fn default() -> Self {
        TwistStamped {
            header: ::std::default::Default::default(),
            twist: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for TwistStamped {
    const MIN_SIZE: usize = <super::super::std_msgs::Header as ::roslite::wire::WireField>::MIN_SIZE
        + <super::super::geometry_msgs::Twist as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.header, out);
        ::roslite::wire::WireField::encode(&self.twist, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(TwistStamped {
            header: ::roslite::wire::WireField::decode(r)?,
            twist: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.header)
            + ::roslite::wire::WireField::encoded_len(&self.twist)
    }
}

impl ::roslite::wire::RosMessage for TwistStamped {
    const TYPE_NAME: &'static str = "geometry_msgs/TwistStamped";
    const MD5SUM: &'static str = "98d34b0043a2093cf9d9345ab6eef12e";
    const DEFINITION: &'static str = r#"# A twist with reference coordinate frame and timestamp
Header header
Twist twist

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
