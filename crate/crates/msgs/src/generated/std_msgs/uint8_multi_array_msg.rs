// This file is generated by `roslite msg gen`. Do not edit.

/// `std_msgs/UInt8MultiArray`
#[derive(Debug, Clone, PartialEq)]
pub struct UInt8MultiArray {
    pub layout: super::super::std_msgs::MultiArrayLayout,
    pub data: ::std::vec::Vec<u8>,
}

impl ::std::default::Default for UInt8MultiArray {
    fn default() -> Self {
        UInt8MultiArray {
            layout: ::std::default::Default::default(),
            data: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for UInt8MultiArray {
    const MIN_SIZE: usize = <super::super::std_msgs::MultiArrayLayout as ::roslite::wire::WireField>::MIN_SIZE
        + <::std::vec::Vec<u8> as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.layout, out);
        ::roslite::wire::WireField::encode(&self.data, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(UInt8MultiArray {
            layout: ::roslite::wire::WireField::decode(r)?,
            data: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.layout)
            + ::roslite::wire::WireField::encoded_len(&self.data)
    }
}

impl ::roslite::wire::RosMessage for UInt8MultiArray {
    const TYPE_NAME: &'static str = "std_msgs/UInt8MultiArray";
    const MD5SUM: &'static str = "82373f1612381bb6ee473b5cd6f5d89c";
    const DEFINITION: &'static str = r#"# Please look at the MultiArrayLayout message definition for
# documentation on all multiarrays.

MultiArrayLayout  layout        # specification of data layout
uint8[]           data          # array of data

================================================================================
MSG: std_msgs/MultiArrayLayout
# The multiarray declares a generic multi-dimensional array of a
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
