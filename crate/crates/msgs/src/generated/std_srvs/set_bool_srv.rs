// This file is generated by `roslite msg gen`. Do not edit.

/// `std_srvs/SetBoolRequest`
#[derive(Debug, Clone, PartialEq)]
pub struct SetBoolRequest {
    pub data: bool,
}

impl ::std::default::Default for SetBoolRequest {
    fn default() -> Self {
        SetBoolRequest {
            data: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for SetBoolRequest {
    const MIN_SIZE: usize = <bool as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.data, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(SetBoolRequest {
            data: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.data)
    }
}

impl ::roslite::wire::RosMessage for SetBoolRequest {
    const TYPE_NAME: &'static str = "std_srvs/SetBoolRequest";
    const MD5SUM: &'static str = "8b94c1b53db61fb6aed406028ad6332a";
    const DEFINITION: &'static str = r#"bool data # e.g. for hardware enabling / disabling
"#;
}

/// `std_srvs/SetBoolResponse`
#[derive(Debug, Clone, PartialEq)]
pub struct SetBoolResponse {
    pub success: bool,
    pub message: ::std::string::String,
}

impl ::std::default::Default for SetBoolResponse {
    fn default() -> Self {
        SetBoolResponse {
            success: ::std::default::Default::default(),
            message: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for SetBoolResponse {
    const MIN_SIZE: usize = <bool as ::roslite::wire::WireField>::MIN_SIZE
        + <::std::string::String as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.success, out);
        ::roslite::wire::WireField::encode(&self.message, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(SetBoolResponse {
            success: ::roslite::wire::WireField::decode(r)?,
            message: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.success)
            + ::roslite::wire::WireField::encoded_len(&self.message)
    }
}

impl ::roslite::wire::RosMessage for SetBoolResponse {
    const TYPE_NAME: &'static str = "std_srvs/SetBoolResponse";
    const MD5SUM: &'static str = "937c9679a518e3a18d831e57125ea522";
    const DEFINITION: &'static str = r#"bool success   # indicate successful run of triggered service
string message # informational, e.g. for error messages
"#;
}

/// `std_srvs/SetBool`
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SetBool;

impl ::roslite::wire::RosService for SetBool {
    type Request = SetBoolRequest;
    type Response = SetBoolResponse;
    const TYPE_NAME: &'static str = "std_srvs/SetBool";
    const MD5SUM: &'static str = "09fb03525b03e7ea1fd3992bafd87e16";
}
