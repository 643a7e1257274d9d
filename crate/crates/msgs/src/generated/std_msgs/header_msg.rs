// This file is generated by `roslite msg gen`. Do not edit.

/// `std_msgs/Header`
#[derive(Debug, Clone, PartialEq)]
pub struct Header {
    pub seq: u32,
    pub stamp: ::roslite::wire::Time,
    pub frame_id: ::std::string::String,
}

impl ::std::default::Default for Header {
    fn default() -> Self {
        Header {
            seq: ::std::default::Default::default(),
            stamp: ::std::default::Default::default(),
            frame_id: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for Header {
    const MIN_SIZE: usize = <u32 as ::roslite::wire::WireField>::MIN_SIZE
        + <::roslite::wire::Time as ::roslite::wire::WireField>::MIN_SIZE
        + <::std::string::String as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.seq, out);
        ::roslite::wire::WireField::encode(&self.stamp, out);
        ::roslite::wire::WireField::encode(&self.frame_id, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(Header {
            seq: ::roslite::wire::WireField::decode(r)?,
            stamp: ::roslite::wire::WireField::decode(r)?,
            frame_id: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.seq)
            + ::roslite::wire::WireField::encoded_len(&self.stamp)
            + ::roslite::wire::WireField::encoded_len(&self.frame_id)
    }
}

impl ::roslite::wire::RosMessage for Header {
    const TYPE_NAME: &'static str = "std_msgs/Header";
    const MD5SUM: &'static str = "2176decaecbce78abc3b96ef049fabed";
    const DEFINITION: &'static str = r#"# Standard metadata for higher-level stamped data types.
# sequence ID: consecutively increasing ID
uint32 seq
# Two-integer timestamp: stamp.sec (seconds since epoch), stamp.nsec
time stamp
# Frame this data is associated with
string frame_id
"#;
}
