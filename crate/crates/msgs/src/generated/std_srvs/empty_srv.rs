// This file is generated by `roslite msg gen`. Do not edit.

/// `std_srvs/EmptyRequest`
#[derive(Debug, Clone, PartialEq)]
pub struct EmptyRequest {
}

impl ::std::default::Default for EmptyRequest {
    fn default() -> Self {
        EmptyRequest {
        }
    }
}

impl ::roslite::wire::WireField for EmptyRequest {
    const MIN_SIZE: usize = 0;

    fn encode(&self, _out: &mut ::std::vec::Vec<u8>) {
    }

    fn decode(_r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(EmptyRequest {
        })
    }

    fn encoded_len(&self) -> usize {
        0
    }
}

impl ::roslite::wire::RosMessage for EmptyRequest {
    const TYPE_NAME: &'static str = "std_srvs/EmptyRequest";
    const MD5SUM: &'static str = "d41d8cd98f00b204e9800998ecf8427e";
    const DEFINITION: &'static str = r#""#;
}

/// `std_srvs/EmptyResponse`
#[derive(Debug, Clone, PartialEq)]
pub struct EmptyResponse {
}

impl ::std::default::Default for EmptyResponse {
    fn default() -> Self {
        EmptyResponse {
        }
    }
}

impl ::roslite::wire::WireField for EmptyResponse {
    const MIN_SIZE: usize = 0;

    fn encode(&self, _out: &mut ::std::vec::Vec<u8>) {
    }

    fn decode(_r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(EmptyResponse {
        })
    }

    fn encoded_len(&self) -> usize {
        0
    }
}

impl ::roslite::wire::RosMessage for EmptyResponse {
    const TYPE_NAME: &'static str = "std_srvs/EmptyResponse";
    const MD5SUM: &'static str = "d41d8cd98f00b204e9800998ecf8427e";
    const DEFINITION: &'static str = r#""#;
}

/// `std_srvs/Empty`
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Empty;

impl ::roslite::wire::RosService for Empty {
    type Request = EmptyRequest;
    type Response = EmptyResponse;
    const TYPE_NAME: &'static str = "std_srvs/Empty";
    const MD5SUM: &'static str = "d41d8cd98f00b204e9800998ecf8427e";
}
