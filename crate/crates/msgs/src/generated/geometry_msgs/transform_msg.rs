// This file is generated by `roslite msg gen`. Do not edit.

/// `geometry_msgs/Transform`
#[derive(Debug, Clone, PartialEq)]
pub struct Transform {
    pub translation: super::super::geometry_msgs::Vector3,
    pub rotation: super::super::geometry_msgs::Quaternion,
}

impl ::std::default::Default for Transform {
    fn default() -> Self {
        Transform {
            translation: ::std::default::Default::default(),
            rotation: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for Transform {
    const MIN_SIZE: usize = <super::super::geometry_msgs::Vector3 as ::roslite::wire::WireField>::MIN_SIZE
        + <super::super::geometry_msgs::Quaternion as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.translation, out);
        ::roslite::wire::WireField::encode(&self.rotation, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(Transform {
            translation: ::roslite::wire::WireField::decode(r)?,
            rotation: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.translation)
            + ::roslite::wire::WireField::encoded_len(&self.rotation)
    }
}

impl ::roslite::wire::RosMessage for Transform {
    const TYPE_NAME: &'static str = "geometry_msgs/Transform";
    const MD5SUM: &'static str = "ac9eff44abf714214112b05d54a3cf9b";
    const DEFINITION: &'static str = r#"# This represents the transform between two coordinate frames in free space.

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
