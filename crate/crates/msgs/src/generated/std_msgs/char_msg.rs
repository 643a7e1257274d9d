// This file is generated by `roslite msg gen`. Do not edit.

/// `std_msgs/Char`
#[derive(Debug, Clone, PartialEq)]
pub struct Char {
    pub data: u8,
}

impl ::std::default::Default for Char {
    fn default() -> Self {
        Char {
            data: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for Char {
    const MIN_SIZE: usize = <u8 as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.data, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(Char {
            data: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.data)
    }
}

impl ::roslite::wire::RosMessage for Char {
    const TYPE_NAME: &'static str = "std_msgs/Char";
    const MD5SUM: &'static str = "1bf77f25acecdedba0e224b162199717";
    const DEFINITION: &'static str = r#"char data
"#;
}
