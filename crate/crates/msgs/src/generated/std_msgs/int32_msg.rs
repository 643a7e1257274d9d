// This file is generated by `roslite msg gen`. Do not edit.

/// `std_msgs/Int32`
#[derive(Debug, Clone, PartialEq)]
pub struct Int32 {
    pub data: i32,
}

impl ::std::default::Default for Int32 {
    fn default() -> Self {
        Int32 {
            data: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for Int32 {
    const MIN_SIZE: usize = <i32 as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.data, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(Int32 {
            data: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.data)
    }
}

impl ::roslite::wire::RosMessage for Int32 {
    const TYPE_NAME: &'static str = "std_msgs/Int32";
    const MD5SUM: &'static str = "da5909fbe378aeaf85e547e830cc1bb7";
    const DEFINITION: &'static str = r#"int32 data
"#;
}
