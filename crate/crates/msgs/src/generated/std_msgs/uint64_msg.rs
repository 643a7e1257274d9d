// This file is generated by `roslite msg gen`. Do not edit.

/// `std_msgs/UInt64`
#[derive(Debug, Clone, PartialEq)]
pub struct UInt64 {
    pub data: u64,
}

impl ::std::default::Default for UInt64 {
    fn default() -> Self {
        UInt64 {
            data: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for UInt64 {
    const MIN_SIZE: usize = <u64 as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.data, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(UInt64 {
            data: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.data)
    }
}

impl ::roslite::wire::RosMessage for UInt64 {
    const TYPE_NAME: &'static str = "std_msgs/UInt64";
    const MD5SUM: &'static str = "1b2a79973e8bf53d7b53acb71299cb57";
    const DEFINITION: &'static str = r#"uint64 data
"#;
}
