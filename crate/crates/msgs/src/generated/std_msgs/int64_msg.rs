// This file is generated by `roslite msg gen`. Do not edit.

/// `std_msgs/Int64`
#[derive(Debug, Clone, PartialEq)]
pub struct Int64 {
    pub data: i64,
}

impl ::std::default::Default for Int64 {
    fn default() -> Self {
        Int64 {
            data: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for Int64 {
    const MIN_SIZE: usize = <i64 as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.data, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(Int64 {
            data: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.data)
    }
}

impl ::roslite::wire::RosMessage for Int64 {
    const TYPE_NAME: &'static str = "std_msgs/Int64";
    const MD5SUM: &'static str = "34add168574510e6e17f5d23ecc077ef";
    const DEFINITION: &'static str = r#"int64 data
"#;
}
