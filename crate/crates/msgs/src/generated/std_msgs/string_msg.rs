// This file is generated by `roslite msg gen`. Do not edit.

/// `std_msgs/String`
#[derive(Debug, Clone, PartialEq)]
pub struct String {
    pub data: ::std::string::String,
}

impl ::std::default::Default for String {
    fn default() -> Self {
        String {
            data: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for String {
    const MIN_SIZE: usize = <::std::string::String as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.data, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(String {
            data: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.data)
    }
}

impl ::roslite::wire::RosMessage for String {
    const TYPE_NAME: &'static str = "std_msgs/String";
    const MD5SUM: &'static str = "992ce8a1687cec8c8bd883ec73ca41d1";
    const DEFINITION: &'static str = r#"string data
"#;
}
