// This file is generated by `roslite msg gen`. Do not edit.

/// `geometry_msgs/Quaternion`
#[derive(Debug, Clone, PartialEq)]
pub struct Quaternion {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub w: f64,
}

impl ::std::default::Default for Quaternion {
    fn default() -> Self {
        Quaternion {
            x: ::std::default::Default::default(),
            y: ::std::default::Default::default(),
            z: ::std::default::Default::default(),
            w: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for Quaternion {
    const MIN_SIZE: usize = <f64 as ::roslite::wire::WireField>::MIN_SIZE
        + <f64 as ::roslite::wire::WireField>::MIN_SIZE
        + <f64 as ::roslite::wire::WireField>::MIN_SIZE
        + <f64 as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.x, out);
        ::roslite::wire::WireField::encode(&self.y, out);
        ::roslite::wire::WireField::encode(&self.z, out);
        ::roslite::wire::WireField::encode(&self.w, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(Quaternion {
            x: ::roslite::wire::WireField::decode(r)?,
            y: ::roslite::wire::WireField::decode(r)?,
            z: ::roslite::wire::WireField::decode(r)?,
            w: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.x)
            + ::roslite::wire::WireField::encoded_len(&self.y)
            + ::roslite::wire::WireField::encoded_len(&self.z)
            + ::roslite::wire::WireField::encoded_len(&self.w)
    }
}

impl ::roslite::wire::RosMessage for Quaternion {
    const TYPE_NAME: &'static str = "geometry_msgs/Quaternion";
    const MD5SUM: &'static str = "a779879fadf0160734f906b8c19c7004";
    const DEFINITION: &'static str = r#"# This represents an orientation in free space in quaternion form.

float64 x
float64 y
float64 z
float64 w
"#;
}
