// This file is generated by `roslite msg gen`. Do not edit.

/// `std_msgs/Byte`
#[derive(Debug, Clone, PartialEq)]
pub struct Byte {
    pub data: i8,
}

impl ::std::default::Default for Byte {
    fn default() -> Self {
        Byte {
            data: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for Byte {
    const MIN_SIZE: usize = <i8 as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.data, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(Byte {
            data: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.data)
    }
}

impl ::roslite::wire::RosMessage for Byte {
    const TYPE_NAME: &'static str = "std_msgs/Byte";
    const MD5SUM: &'static str = "ad736a2e8818154c487bb80fe42ce43b";
    const DEFINITION: &'static str = r#"byte data
"#;
}
