// This file is generated by `roslite msg gen`. Do not edit.

/// `geometry_msgs/TwistWithCovariance`
#[derive(Debug, Clone, PartialEq)]
pub struct TwistWithCovariance {
    pub twist: super::super::geometry_msgs::Twist,
    pub covariance: [f64; 36],
}

impl ::std::default::Default for TwistWithCovariance {
    fn default() -> Self {
        TwistWithCovariance {
            twist: ::std::default::Default::default(),
            covariance: ::std::array::from_fn(|_| ::std::default::Default::default()),
        }
    }
}

impl ::roslite::wire::WireField for TwistWithCovariance {
    const MIN_SIZE: usize = <super::super::geometry_msgs::Twist as ::roslite::wire::WireField>::MIN_SIZE
        + <[f64; 36] as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.twist, out);
        ::roslite::wire::WireField::encode(&self.covariance, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(TwistWithCovariance {
            twist: ::roslite::wire::WireField::decode(r)?,
            covariance: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.twist)
            + ::roslite::wire::WireField::encoded_len(&self.covariance)
    }
}

impl ::roslite::wire::RosMessage for TwistWithCovariance {
    const TYPE_NAME: &'static str = "geometry_msgs/TwistWithCovariance";
    const MD5SUM: &'static str = "1fe8a28e6890a4cc3ae4c3ca5c7d82e6";
    const DEFINITION: &'static str = r#"# This expresses velocity in free space with uncertainty.

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
