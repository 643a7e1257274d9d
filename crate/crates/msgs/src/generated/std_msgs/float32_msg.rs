// This file is generated by `roslite msg gen`. Do not edit.

/// `std_msgs/Float32`
#[derive(Debug, Clone, PartialEq)]
pub struct Float32 {
    pub data: f32,
}

impl ::std::default::Default for Float32 {
    fn default() -> Self {
        Float32 {
            data: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for Float32 {
    const MIN_SIZE: usize = <f32 as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.data, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(Float32 {
            data: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.data)
    }
}

impl ::roslite::wire::RosMessage for Float32 {
    const TYPE_NAME: &'static str = "std_msgs/Float32";
    const MD5SUM: &'static str = "73fcbf46b49191e672908e50842a83d4";
    const DEFINITION: &'static str = r#"float32 data
"#;
}
