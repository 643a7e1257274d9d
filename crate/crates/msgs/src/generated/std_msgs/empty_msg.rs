// This file is generated by `roslite msg gen`. Do not edit.

/// `std_msgs/Empty`
#[derive(Debug, Clone, PartialEq)]
pub struct Empty {
}

impl ::std::default::Default for Empty {
    fn default() -> Self {
        Empty {
        }
    }
}

impl ::roslite::wire::WireField for Empty {
    const MIN_SIZE: usize = 0;

    fn encode(&self, _out: &mut ::std::vec::Vec<u8>) {
    }

    fn decode(_r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(Empty {
        })
    }

    fn encoded_len(&self) -> usize {
        0
    }
}

impl ::roslite::wire::RosMessage for Empty {
    const TYPE_NAME: &'static str = "std_msgs/Empty";
    const MD5SUM: &'static str = "d41d8cd98f00b204e9800998ecf8427e";
    const DEFINITION: &'static str = r#""#;
}
