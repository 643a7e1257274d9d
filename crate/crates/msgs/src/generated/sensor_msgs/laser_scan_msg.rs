// This file is generated by `roslite msg gen`. Do not edit.

/// `sensor_msgs/LaserScan`
#[derive(Debug, Clone, PartialEq)]
pub struct LaserScan {
    pub header: super::super::std_msgs::Header,
    pub angle_min: f32,
    pub angle_max: f32,
    pub angle_increment: f32,
    pub time_increment: f32,
    pub scan_time: f32,
    pub range_min: f32,
    pub range_max: f32,
    pub ranges: ::std::vec::Vec<f32>,
    pub intensities: ::std::vec::Vec<f32>,
}

impl ::std::default::Default for LaserScan {
    fn default() -> Self {
        LaserScan {
            header: ::std::default::Default::default(),
            angle_min: ::std::default::Default::default(),
            angle_max: ::std::default::Default::default(),
            angle_increment: ::std::default::Default::default(),
            time_increment: ::std::default::Default::default(),
            scan_time: ::std::default::Default::default(),
            range_min: ::std::default::Default::default(),
            range_max: ::std::default::Default::default(),
            ranges: ::std::default::Default::default(),
            intensities: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for LaserScan {
    const MIN_SIZE: usize = <super::super::std_msgs::Header as ::roslite::wire::WireField>::MIN_SIZE
        + <f32 as ::roslite::wire::WireField>::MIN_SIZE
        + <f32 as ::roslite::wire::WireField>::MIN_SIZE
        + <f32 as ::roslite::wire::WireField>::MIN_SIZE
        + <f32 as ::roslite::wire::WireField>::MIN_SIZE
        + <f32 as ::roslite::wire::WireField>::MIN_SIZE
        + <f32 as ::roslite::wire::WireField>::MIN_SIZE
        + <f32 as ::roslite::wire::WireField>::MIN_SIZE
        + <::std::vec::Vec<f32> as ::roslite::wire::WireField>::MIN_SIZE
        + <::std::vec::Vec<f32> as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.header, out);
        ::roslite::wire::WireField::encode(&self.angle_min, out);
        ::roslite::wire::WireField::encode(&self.angle_max, out);
        ::roslite::wire::WireField::encode(&self.angle_increment, out);
        ::roslite::wire::WireField::encode(&self.time_increment, out);
        ::roslite::wire::WireField::encode(&self.scan_time, out);
        ::roslite::wire::WireField::encode(&self.range_min, out);
        ::roslite::wire::WireField::encode(&self.range_max, out);
        ::roslite::wire::WireField::encode(&self.ranges, out);
        ::roslite::wire::WireField::encode(&self.intensities, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(LaserScan {
            header: ::roslite::wire::WireField::decode(r)?,
            angle_min: ::roslite::wire::WireField::decode(r)?,
            angle_max: ::roslite::wire::WireField::decode(r)?,
            angle_increment: ::roslite::wire::WireField::decode(r)?,
            time_increment: ::roslite::wire::WireField::decode(r)?,
            scan_time: ::roslite::wire::WireField::decode(r)?,
            range_min: ::roslite::wire::WireField::decode(r)?,
            range_max: ::roslite::wire::WireField::decode(r)?,
            ranges: ::roslite::wire::WireField::decode(r)?,
            intensities: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.header)
            + ::roslite::wire::WireField::encoded_len(&self.angle_min)
            + ::roslite::wire::WireField::encoded_len(&self.angle_max)
            + ::roslite::wire::WireField::encoded_len(&self.angle_increment)
            + ::roslite::wire::WireField::encoded_len(&self.time_increment)
            + ::roslite::wire::WireField::encoded_len(&self.scan_time)
            + ::roslite::wire::WireField::encoded_len(&self.range_min)
            + ::roslite::wire::WireField::encoded_len(&self.range_max)
            + ::roslite::wire::WireField::encoded_len(&self.ranges)
            + ::roslite::wire::WireField::encoded_len(&self.intensities)
    }
}

impl ::roslite::wire::RosMessage for LaserScan {
    const TYPE_NAME: &'static str = "sensor_msgs/LaserScan";
    const MD5SUM: &'static str = "90c7ef2dc6895d81024acba2ac42f369";
    const DEFINITION: &'static str = r#"# Single scan from a planar laser range-finder

Header header            # timestamp in the header is the acquisition time of
                         # the first ray in the scan.

float32 angle_min        # start angle of the scan [rad]
float32 angle_max        # end angle of the scan [rad]
float32 angle_increment  # angular distance between measurements [rad]

float32 time_increment   # time between measurements [seconds]
float32 scan_time        # time between scans [seconds]

float32 range_min        # minimum range value [m]
float32 range_max        # maximum range value [m]

float32[] ranges         # range data [m]
float32[] intensities    # intensity data [device-specific units]

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
