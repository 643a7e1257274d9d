// This file is generated by `roslite msg gen`. Do not edit.

/// `rosgraph_msgs/Log`
#[derive(Debug, Clone, PartialEq)]
pub struct Log {
    pub header: super::super::std_msgs::Header,
    pub level: i8,
    pub name: ::std::string::String,
    pub msg: ::std::string::String,
    pub file: ::std::string::String,
    pub function: ::std::string::String,
    pub line: u32,
    pub topics: ::std::vec::Vec<::std::string::String>,
}

impl ::std::default::Default for Log {
    fn default() -> Self {
        Log {
            header: ::std::default::Default::default(),
            level: ::std::default::Default::default(),
            name: ::std::default::Default::default(),
            msg: ::std::default::Default::default(),
            file: ::std::default::Default::default(),
            function: ::std::default::Default::default(),
            line: ::std::default::Default::default(),
            topics: ::std::default::Default::default(),
        }
    }
}

impl Log {
    pub const DEBUG: i8 = 1;
    pub const INFO: i8 = 2;
    pub const WARN: i8 = 4;
    pub const ERROR: i8 = 8;
    pub const FATAL: i8 = 16;
}

impl ::roslite::wire::WireField for Log {
    const MIN_SIZE: usize = <super::super::std_msgs::Header as ::roslite::wire::WireField>::MIN_SIZE
        + <i8 as ::roslite::wire::WireField>::MIN_SIZE
        + <::std::string::String as ::roslite::wire::WireField>::MIN_SIZE
        + <::std::string::String as ::roslite::wire::WireField>::MIN_SIZE
        + <::std::string::String as ::roslite::wire::WireField>::MIN_SIZE
        + <::std::string::String as ::roslite::wire::WireField>::MIN_SIZE
        + <u32 as ::roslite::wire::WireField>::MIN_SIZE
        + <::std::vec::Vec<::std::string::String> as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.header, out);
        ::roslite::wire::WireField::encode(&self.level, out);
        ::roslite::wire::WireField::encode(&self.name, out);
        ::roslite::wire::WireField::encode(&self.msg, out);
        ::roslite::wire::WireField::encode(&self.file, out);
        ::roslite::wire::WireField::encode(&self.function, out);
        ::roslite::wire::WireField::encode(&self.line, out);
        ::roslite::wire::WireField::encode(&self.topics, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(Log {
            header: ::roslite::wire::WireField::decode(r)?,
            level: ::roslite::wire::WireField::decode(r)?,
            name: ::roslite::wire::WireField::decode(r)?,
            msg: ::roslite::wire::WireField::decode(r)?,
            file: ::roslite::wire::WireField::decode(r)?,
            function: ::roslite::wire::WireField::decode(r)?,
            line: ::roslite::wire::WireField::decode(r)?,
            topics: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.header)
            + ::roslite::wire::WireField::encoded_len(&self.level)
            + ::roslite::wire::WireField::encoded_len(&self.name)
            + ::roslite::wire::WireField::encoded_len(&self.msg)
            + ::roslite::wire::WireField::encoded_len(&self.file)
            + ::roslite::wire::WireField::encoded_len(&self.function)
            + ::roslite::wire::WireField::encoded_len(&self.line)
            + ::roslite::wire::WireField::encoded_len(&self.topics)
    }
}

impl ::roslite::wire::RosMessage for Log {
    const TYPE_NAME: &'static str = "rosgraph_msgs/Log";
    const MD5SUM: &'static str = "acffd30cd6b6de30f120938c17c593fb";
    const DEFINITION: &'static str = r#"##
## Severity level constants
##
byte DEBUG=1 #debug level
byte INFO=2  #general level
byte WARN=4  #warning level
byte ERROR=8 #error level
byte FATAL=16 #fatal/critical level
##
## Fields
##
Header header
byte level
string name # name of the node
string msg # message 
string file # file the message came from
string function # function the message came from
uint32 line # line the message came from
string[] topics # topic names that the node publishes

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
