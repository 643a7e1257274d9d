// This file is generated by `roslite msg gen`. Do not edit.

/// `geometry_msgs/Point32`
#[derive(Debug, Clone, PartialEq)]
pub struct Point32 {
    pub x: f32,
    pub y: f32,
    pub z: f32,
}

impl ::std::default::Default for Point32 {
    fn default() -> Self {
        Point32 {
            x: ::std::default::Default::default(),
            y: ::std::default::Default::default(),
            z: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for Point32 {
    const MIN_SIZE: usize = <f32 as ::roslite::wire::WireField>::MIN_SIZE
        + <f32 as ::roslite::wire::WireField>::MIN_SIZE
        + <f32 as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.x, out);
        ::roslite::wire::WireField::encode(&self.y, out);
        ::roslite::wire::WireField::encode(&self.z, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(Point32 {
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

impl ::roslite::wire::RosMessage for Point32 {
    const TYPE_NAME: &'static str = "geometry_msgs/Point32";
    const MD5SUM: &'static str = "cc153912f1453b708d221682bc23d9ac";
    const DEFINITION: &'static str = r#"# This contains the position of a point in free space(with 32 bits of precision).
float32 x
float32 y
float32 z
"#;
}
