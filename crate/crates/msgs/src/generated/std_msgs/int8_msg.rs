// This file is generated by `roslite msg gen`. Do not edit.

/// `std_msgs/Int8`
#[derive(Debug, Clone, PartialEq)]
pub struct Int8 {
    pub data: i8,
}

impl ::std::default::Default for Int8 {
    fn default() -> Self {
        Int8 {
            data: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for Int8 {
    const MIN_SIZE: usize = <i8 as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.data, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(Int8 {
            data: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.data)
    }
}

impl ::roslite::wire::RosMessage for Int8 {
    const TYPE_NAME: &'static str = "std_msgs/Int8";
    const MD5SUM: &'static str = "27ffa0c9c4b8fb8492252bcad9e5c57b";
    const DEFINITION: &'static str = r#"int8 data
"#;
}
