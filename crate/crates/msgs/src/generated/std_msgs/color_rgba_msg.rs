// This file is generated by `roslite msg gen`. Do not edit.

/// `std_msgs/ColorRGBA`
#[derive(Debug, Clone, PartialEq)]
pub struct ColorRGBA {
    pub r: f32,
    pub g: f32,
    pub b: f32,
    pub a: f32,
}

impl ::std::default::Default for ColorRGBA {
    fn default() -> Self {
        ColorRGBA {
            r: ::std::default::Default::default(),
            g: ::std::default::Default::default(),
            b: ::std::default::Default::default(),
            a: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for ColorRGBA {
    const MIN_SIZE: usize = <f32 as ::roslite::wire::WireField>::MIN_SIZE
        + <f32 as ::roslite::wire::WireField>::MIN_SIZE
        + <f32 as ::roslite::wire::WireField>::MIN_SIZE
        + <f32 as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.r, out);
        ::roslite::wire::WireField::encode(&self.g, out);
        ::roslite::wire::WireField::encode(&self.b, out);
        ::roslite::wire::WireField::encode(&self.a, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(ColorRGBA {
            r: ::roslite::wire::WireField::decode(r)?,
            g: ::roslite::wire::WireField::decode(r)?,
            b: ::roslite::wire::WireField::decode(r)?,
            a: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.r)
            + ::roslite::wire::WireField::encoded_len(&self.g)
            + ::roslite::wire::WireField::encoded_len(&self.b)
            + ::roslite::wire::WireField::encoded_len(&self.a)
    }
}

impl ::roslite::wire::RosMessage for ColorRGBA {
    const TYPE_NAME: &'static str = "std_msgs/ColorRGBA";
    const MD5SUM: &'static str = "a29a96539573343b1310c73607334b00";
    const DEFINITION: &'static str = r#"float32 r
float32 g
float32 b
float32 a
"#;
}
