// This file is generated by `roslite msg gen`. Do not edit.

/// `std_msgs/Bool`
#[derive(Debug, Clone, PartialEq)]
pub struct Bool {
    pub data: bool,
}

impl ::std::default::Default for Bool {
    fn default() -> Self {
        Bool {
            data: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for Bool {
    const MIN_SIZE: usize = <bool as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.data, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(Bool {
            data: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.data)
    }
}

impl ::roslite::wire::RosMessage for Bool {
    const TYPE_NAME: &'static str = "std_msgs/Bool";
    const MD5SUM: &'static str = "8b94c1b53db61fb6aed406028ad6332a";
    const DEFINITION: &'static str = r#"bool data
"#;
}
