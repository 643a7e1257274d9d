// This file is generated by `roslite msg gen`. Do not edit.

/// `std_msgs/Duration`
#[derive(Debug, Clone, PartialEq)]
pub struct Duration {
    pub data: ::roslite::wire::Duration,
}

impl ::std::default::Default for Duration {
    fn default() -> Self {
        Duration {
            data: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for Duration {
    const MIN_SIZE: usize = <::roslite::wire::Duration as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.data, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(Duration {
            data: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.data)
    }
}

impl ::roslite::wire::RosMessage for Duration {
    const TYPE_NAME: &'static str = "std_msgs/Duration";
    const MD5SUM: &'static str = "3e286caf4241d664e55f3ad380e2ae46";
    const DEFINITION: &'static str = r#"duration data
"#;
}
