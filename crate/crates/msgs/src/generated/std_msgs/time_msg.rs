// This file is generated by `roslite msg gen`. Do not edit.

/// `std_msgs/Time`
#[derive(Debug, Clone, PartialEq)]
pub struct Time {
    pub data: ::roslite::wire::Time,
}

impl ::std::default::Default for Time {
    fn default() -> Self {
        Time {
            data: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for Time {
    const MIN_SIZE: usize = <::roslite::wire::Time as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.data, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(Time {
            data: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.data)
    }
}

impl ::roslite::wire::RosMessage for Time {
    const TYPE_NAME: &'static str = "std_msgs/Time";
    const MD5SUM: &'static str = "cd7166c74c552c311fbcc2fe5a7bc289";
    const DEFINITION: &'static str = r#"time data
"#;
}
