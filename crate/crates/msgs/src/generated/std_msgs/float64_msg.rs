// This file is generated by `roslite msg gen`. Do not edit.

/// `std_msgs/Float64`
#[derive(Debug, Clone, PartialEq)]
pub struct Float64 {
    pub data: f64,
}

impl ::std::default::Default for Float64 {
    fn default() -> Self {
        Float64 {
            data: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for Float64 {
    const MIN_SIZE: usize = <f64 as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.data, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(Float64 {
            data: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.data)
    }
}

impl ::roslite::wire::RosMessage for Float64 {
    const TYPE_NAME: &'static str = "std_msgs/Float64";
    const MD5SUM: &'static str = "fdb28210bfa9d7c91146260178d9a584";
    const DEFINITION: &'static str = r#"float64 data
"#;
}
