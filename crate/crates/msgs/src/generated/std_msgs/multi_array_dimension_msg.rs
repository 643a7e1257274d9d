// This file is generated by `roslite msg gen`. Do not edit.

/// `std_msgs/MultiArrayDimension`
#[derive(Debug, Clone, PartialEq)]
pub struct MultiArrayDimension {
    pub label: ::std::string::String,
    pub size: u32,
    pub stride: u32,
}

impl ::std::default::Default for MultiArrayDimension {
    fn default() -> Self {
        MultiArrayDimension {
            label: ::std::default::Default::default(),
            size: ::std::default::Default::default(),
            stride: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for MultiArrayDimension {
    const MIN_SIZE: usize = <::std::string::String as ::roslite::wire::WireField>::MIN_SIZE
        + <u32 as ::roslite::wire::WireField>::MIN_SIZE
        + <u32 as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.label, out);
        ::roslite::wire::WireField::encode(&self.size, out);
        ::roslite::wire::WireField::encode(&self.stride, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(MultiArrayDimension {
            label: ::roslite::wire::WireField::decode(r)?,
            size: ::roslite::wire::WireField::decode(r)?,
            stride: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.label)
            + ::roslite::wire::WireField::encoded_len(&self.size)
            + ::roslite::wire::WireField::encoded_len(&self.stride)
    }
}

impl ::roslite::wire::RosMessage for MultiArrayDimension {
    const TYPE_NAME: &'static str = "std_msgs/MultiArrayDimension";
    const MD5SUM: &'static str = "4cd0c83a8683deae40ecdac60e53bfa8";
    const DEFINITION: &'static str = r#"string label   # label of given dimension
uint32 size    # size of given dimension (in type units)
uint32 stride  # stride of given dimension
"#;
}
