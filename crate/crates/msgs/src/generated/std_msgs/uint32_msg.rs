// This file is generated by `roslite msg gen`. Do not edit.

/// `std_msgs/UInt32`
#[derive(Debug, Clone, PartialEq)]
pub struct UInt32 {
    pub data: u32,
}

impl ::std::default::Default for UInt32 {
    fn default() -> Self {
        UInt32 {
            data: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for UInt32 {
    const MIN_SIZE: usize = <u32 as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.data, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(UInt32 {
            data: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.data)
    }
}

impl ::roslite::wire::RosMessage for UInt32 {
    const TYPE_NAME: &'static str = "std_msgs/UInt32";
    const MD5SUM: &'static str = "304a39449588c7f8ce2df6e8001c5fce";
    const DEFINITION: &'static str = r#"uint32 data
"#;
}
