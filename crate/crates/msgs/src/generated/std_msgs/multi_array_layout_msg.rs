// This file is generated by `roslite msg gen`. Do not edit.

/// `std_msgs/MultiArrayLayout`
#[derive(Debug, Clone, PartialEq)]
pub struct MultiArrayLayout {
    pub dim: ::std::vec::Vec<super::super::std_msgs::MultiArrayDimension>,
    pub data_offset: u32,
}

impl ::std::default::Default for MultiArrayLayout {
    fn default() -> Self {
        MultiArrayLayout {
            dim: ::std::default::Default::default(),
            data_offset: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for MultiArrayLayout {
    const MIN_SIZE: usize = <::std::vec::Vec<super::super::std_msgs::MultiArrayDimension> as ::roslite::wire::WireField>::MIN_SIZE
        + <u32 as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.dim, out);
        ::roslite::wire::WireField::encode(&self.data_offset, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(MultiArrayLayout {
            dim: ::roslite::wire::WireField::decode(r)?,
            data_offset: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.dim)
            + ::roslite::wire::WireField::encoded_len(&self.data_offset)
    }
}

impl ::roslite::wire::RosMessage for MultiArrayLayout {
    const TYPE_NAME: &'static str = "std_msgs/MultiArrayLayout";
    const MD5SUM: &'static str = "0fed2a11c13e11c5571b4e2a995a91a3";
    const DEFINITION: &'static str = r#"# The multiarray declares a generic multi-dimensional array of a
# particular data type.
MultiArrayDimension[] dim # Array of dimension properties
uint32 data_offset        # padding elements at front of data

================================================================================
MSG: std_msgs/MultiArrayDimension
string label   # label of given dimension
uint32 size    # size of given dimension (in type units)
uint32 stride  # stride of given dimension
"#;
}
