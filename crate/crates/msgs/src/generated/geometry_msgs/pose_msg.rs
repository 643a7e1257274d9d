// This file is generated by `roslite msg gen`. Do not edit.

/// `geometry_msgs/Pose`
#[derive(Debug, Clone, PartialEq)]
pub struct Pose {
    pub position: super::super::geometry_msgs::Point,
    pub orientation: super::super::geometry_msgs::Quaternion,
}

impl ::std::default::Default for Pose {
    fn default() -> Self {
        Pose {
            position: ::std::default::Default::default(),
            orientation: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for Pose {
    const MIN_SIZE: usize = <super::super::geometry_msgs::Point as ::roslite::wire::WireField>::MIN_SIZE
        + <super::super::geometry_msgs::Quaternion as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.position, out);
        ::roslite::wire::WireField::encode(&self.orientation, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(Pose {
            position: ::roslite::wire::WireField::decode(r)?,
            orientation: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.position)
            + ::roslite::wire::WireField::encoded_len(&self.orientation)
    }
}

impl ::roslite::wire::RosMessage for Pose {
    const TYPE_NAME: &'static str = "geometry_msgs/Pose";
    const MD5SUM: &'static str = "e45d45a5a1ce597b249e23fb30fc871f";
    const DEFINITION: &'static str = r#"# A representation of pose in free space, composed of position and orientation. 
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
