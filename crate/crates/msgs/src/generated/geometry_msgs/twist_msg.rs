// This file is generated by `roslite msg gen`. Do not edit.

/// `geometry_msgs/Twist`
#[derive(Debug, Clone, PartialEq)]
pub struct Twist {
    pub linear: super::super::geometry_msgs::Vector3,
    pub angular: super::super::geometry_msgs::Vector3,
}

impl ::std::default::Default for Twist {
    fn default() -> Self {
        Twist {
            linear: ::std::default::Default::default(),
            angular: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for Twist {
    const MIN_SIZE: usize = <super::super::geometry_msgs::Vector3 as ::roslite::wire::WireField>::MIN_SIZE
        + <super::super::geometry_msgs::Vector3 as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.linear, out);
        ::roslite::wire::WireField::encode(&self.angular, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(Twist {
            linear: ::roslite::wire::WireField::decode(r)?,
            angular: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.linear)
            + ::roslite::wire::WireField::encoded_len(&self.angular)
    }
}

impl ::roslite::wire::RosMessage for Twist {
    const TYPE_NAME: &'static str = "geometry_msgs/Twist";
    const MD5SUM: &'static str = "9f195f881246fdfa2798d1d3eebca84a";
    const DEFINITION: &'static str = r#"# This expresses velocity in free space broken into its linear and angular parts.
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
