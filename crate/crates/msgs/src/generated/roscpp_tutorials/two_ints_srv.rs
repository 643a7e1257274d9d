// This file is generated by `roslite msg gen`. Do not edit.

/// `roscpp_tutorials/TwoIntsRequest`
#[derive(Debug, Clone, PartialEq)]
pub struct TwoIntsRequest {
    pub a: i64,
    pub b: i64,
}

impl ::std::default::Default for TwoIntsRequest {
    fn default() -> Self {
        TwoIntsRequest {
            a: ::std::default::Default::default(),
            b: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for TwoIntsRequest {
    const MIN_SIZE: usize = <i64 as ::roslite::wire::WireField>::MIN_SIZE
        + <i64 as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.a, out);
        ::roslite::wire::WireField::encode(&self.b, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(TwoIntsRequest {
            a: ::roslite::wire::WireField::decode(r)?,
            b: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.a)
            + ::roslite::wire::WireField::encoded_len(&self.b)
    }
}

impl ::roslite::wire::RosMessage for TwoIntsRequest {
    const TYPE_NAME: &'static str = "roscpp_tutorials/TwoIntsRequest";
    const MD5SUM: &'static str = "36d09b846be0b371c5f190354dd3153e";
    const DEFINITION: &'static str = r#"int64 a
int64 b
"#;
}

/// `roscpp_tutorials/TwoIntsResponse`
#[derive(Debug, Clone, PartialEq)]
pub struct TwoIntsResponse {
    pub sum: i64,
}

impl ::std::default::Default for TwoIntsResponse {
    fn default() -> Self {
        TwoIntsResponse {
            sum: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for TwoIntsResponse {
    const MIN_SIZE: usize = <i64 as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.sum, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(TwoIntsResponse {
            sum: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.sum)
    }
}

impl ::roslite::wire::RosMessage for TwoIntsResponse {
    const TYPE_NAME: &'static str = "roscpp_tutorials/TwoIntsResponse";
    const MD5SUM: &'static str = "b88405221c77b1878a3cbbfff53428d7";
    const DEFINITION: &'static str = r#"int64 sum
"#;
}

/// `roscpp_tutorials/TwoInts`
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TwoInts;

impl ::roslite::wire::RosService for TwoInts {
    type Request = TwoIntsRequest;
    type Response = TwoIntsResponse;
    const TYPE_NAME: &'static str = "roscpp_tutorials/TwoInts";
    const MD5SUM: &'static str = "6a2e34150c00229791cc89ff309fff21";
}
