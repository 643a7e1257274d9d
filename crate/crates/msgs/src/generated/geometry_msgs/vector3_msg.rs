// This file is generated by `roslite msg gen`. Do not edit.

/// `geometry_msgs/Vector3`
#[derive(Debug, Clone, PartialEq)]
pub struct Vector3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl ::std::default::Default for Vector3 {
    fn default() -> Self {
        Vector3 {
            x: ::std::default::Default::default(),
            y: ::std::default::Default::default(),
            z: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for Vector3 {
    const MIN_SIZE: usize = <f64 as ::roslite::wire::WireField>::MIN_SIZE
        + <f64 as ::roslite::wire::WireField>::MIN_SIZE
        + <f64 as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.x, out);
        ::roslite::wire::WireField::encode(&self.y, out);
        ::roslite::wire::WireField::encode(&self.z, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(Vector3 {
            x: ::roslite::wire::WireField::decode(r)?,
            y: ::roslite::wire::WireField::decode(r)?,
            z: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.x)
            + ::roslite::wire::WireField::encoded_len(&self.y)
            + ::roslite::wire::WireField::encoded_len(&self.z)
    }
}

impl ::roslite::wire::RosMessage for Vector3 {
    const TYPE_NAME: &'static str = "geometry_msgs/Vector3";
    const MD5SUM: &'static str = "4a842b65f413084dc2b10fb484ea7f17";
    const DEFINITION: &'static str = r#"# This represents a vector in free space.
float64 x
float64 y
float64 z
"#;
}
