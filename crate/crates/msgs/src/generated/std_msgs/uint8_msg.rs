// This file is generated by `roslite msg gen`. Do not edit.

/// `std_msgs/UInt8`
#[derive(Debug, Clone, PartialEq)]
pub struct UInt8 {
    pub data: u8,
}

impl ::std::default::Default for UInt8 {
    fn default() -> Self {
        UInt8 {
            data: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for UInt8 {
    const MIN_SIZE: usize = <u8 as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.data, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(UInt8 {
            data: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.data)
    }
}

impl ::roslite::wire::RosMessage for UInt8 {
    const TYPE_NAME: &'static str = "std_msgs/UInt8";
    const MD5SUM: &'static str = "7c8164229e7d2c17eb95e9231617fdee";
    const DEFINITION: &'static str = r#"uint8 data
"#;
}
