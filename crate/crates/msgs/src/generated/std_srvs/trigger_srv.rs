// This file is generated by `roslite msg gen`. Do not edit.

/// `std_srvs/TriggerRequest`
#[derive(Debug, Clone, PartialEq)]
pub struct TriggerRequest {
}

impl ::std::default::Default for TriggerRequest {
    fn default() -> Self {
        TriggerRequest {
        }
    }
}

impl ::roslite::wire::WireField for TriggerRequest {
    const MIN_SIZE: usize = 0;

    fn encode(&self, _out: &mut ::std::vec::Vec<u8>) {
    }

    fn decode(_r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(TriggerRequest {
        })
    }

    fn encoded_len(&self) -> usize {
        0
    }
}

impl ::roslite::wire::RosMessage for TriggerRequest {
    const TYPE_NAME: &'static str = "std_srvs/TriggerRequest";
    const MD5SUM: &'static str = "d41d8cd98f00b204e9800998ecf8427e";
    const DEFINITION: &'static str = r#""#;
}

/// `std_srvs/TriggerResponse`
#[derive(Debug, Clone, PartialEq)]
pub struct TriggerResponse {
    pub success: bool,
    pub message: ::std::string::String,
}

impl ::std::default::Default for TriggerResponse {
    fn default() -> Self {
        TriggerResponse {
            success: ::std::default::Default::default(),
            message: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for TriggerResponse {
    const MIN_SIZE: usize = <bool as ::roslite::wire::WireField>::MIN_SIZE
        + <::std::string::String as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.success, out);
        ::roslite::wire::WireField::encode(&self.message, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(TriggerResponse {
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

impl ::roslite::wire::RosMessage for TriggerResponse {
    const TYPE_NAME: &'static str = "std_srvs/TriggerResponse";
    const MD5SUM: &'static str = "937c9679a518e3a18d831e57125ea522";
    const DEFINITION: &'static str = r#"bool success   # indicate successful run of triggered service
string message # informational, e.g. for error messages
"#;
}

/// `std_srvs/Trigger`
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Trigger;

impl ::roslite::wire::RosService for Trigger {
    type Request = TriggerRequest;
    type Response = TriggerResponse;
    const TYPE_NAME: &'static str = "std_srvs/Trigger";
    const MD5SUM: &'static str = "937c9679a518e3a18d831e57125ea522";
}
