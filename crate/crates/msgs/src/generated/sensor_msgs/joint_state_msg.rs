// This file is generated by `roslite msg gen`. Do not edit.

/// `sensor_msgs/JointState`
#[derive(Debug, Clone, PartialEq)]
pub struct JointState {
    pub header: super::super::std_msgs::Header,
    pub name: ::std::vec::Vec<::std::string::String>,
    pub position: ::std::vec::Vec<f64>,
    pub velocity: ::std::vec::Vec<f64>,
    pub effort: ::std::vec::Vec<f64>,
}

impl ::std::default::Default for JointState {
    fn default() -> Self {
        JointState {
            header: ::std::default::Default::default(),
            name: ::std::default::Default::default(),
            position: ::std::default::Default::default(),
            velocity: ::std::default::Default::default(),
            effort: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for JointState {
    const MIN_SIZE: usize = <super::super::std_msgs::Header as ::roslite::wire::WireField>::MIN_SIZE
        + <::std::vec::Vec<::std::string::String> as ::roslite::wire::WireField>::MIN_SIZE
        + <::std::vec::Vec<f64> as ::roslite::wire::WireField>::MIN_SIZE
        + <::std::vec::Vec<f64> as ::roslite::wire::WireField>::MIN_SIZE
        + <::std::vec::Vec<f64> as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.header, out);
        ::roslite::wire::WireField::encode(&self.name, out);
        ::roslite::wire::WireField::encode(&self.position, out);
        ::roslite::wire::WireField::encode(&self.velocity, out);
        ::roslite::wire::WireField::encode(&self.effort, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(JointState {
            header: ::roslite::wire::WireField::decode(r)?,
            name: ::roslite::wire::WireField::decode(r)?,
            position: ::roslite::wire::WireField::decode(r)?,
            velocity: ::roslite::wire::WireField::decode(r)?,
            effort: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.header)
            + ::roslite::wire::WireField::encoded_len(&self.name)
            + ::roslite::wire::WireField::encoded_len(&self.position)
            + ::roslite::wire::WireField::encoded_len(&self.velocity)
            + ::roslite::wire::WireField::encoded_len(&self.effort)
    }
}

impl ::roslite::wire::RosMessage for JointState {
    const TYPE_NAME: &'static str = "sensor_msgs/JointState";
    const MD5SUM: &'static str = "3066dcd76a6cfaef579bd0f34173e9fd";
    const DEFINITION: &'static str = r#"# This is a message that holds data to describe the state of a set of torque controlled joints. 

Header header

string[] name
float64[] position
float64[] velocity
float64[] effort

================================================================================
MSG: std_msgs/Header
# Standard metadata for higher-level stamped data types.
# sequence ID: consecutively increasing ID
uint32 seq
# Two-integer timestamp: stamp.sec (seconds since epoch), stamp.nsec
time stamp
# Frame this data is associated with
string frame_id
"#;
}
