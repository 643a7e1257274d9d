// This file is generated by `roslite msg gen`. Do not edit.

/// `sensor_msgs/Imu`
#[derive(Debug, Clone, PartialEq)]
pub struct Imu {
    pub header: super::super::std_msgs::Header,
    pub orientation: super::super::geometry_msgs::Quaternion,
    pub orientation_covariance: [f64; 9],
    pub angular_velocity: super::super::geometry_msgs::Vector3,
    pub angular_velocity_covariance: [f64; 9],
    pub linear_acceleration: super::super::geometry_msgs::Vector3,
    pub linear_acceleration_covariance: [f64; 9],
}

impl ::std::default::Default for Imu {
    fn default() -> Self {
        Imu {
            header: ::std::default::Default::default(),
            orientation: ::std::default::Default::default(),
            orientation_covariance: ::std::array::from_fn(|_| ::std::default::Default::default()),
            angular_velocity: ::std::default::Default::default(),
            angular_velocity_covariance: ::std::array::from_fn(|_| ::std::default::Default::default()),
            linear_acceleration: ::std::default::Default::default(),
            linear_acceleration_covariance: ::std::array::from_fn(|_| ::std::default::Default::default()),
        }
    }
}

impl ::roslite::wire::WireField for Imu {
    const MIN_SIZE: usize = <super::super::std_msgs::Header as ::roslite::wire::WireField>::MIN_SIZE
        + <super::super::geometry_msgs::Quaternion as ::roslite::wire::WireField>::MIN_SIZE
        + <[f64; 9] as ::roslite::wire::WireField>::MIN_SIZE
        + <super::super::geometry_msgs::Vector3 as ::roslite::wire::WireField>::MIN_SIZE
        + <[f64; 9] as ::roslite::wire::WireField>::MIN_SIZE
        + <super::super::geometry_msgs::Vector3 as ::roslite::wire::WireField>::MIN_SIZE
        + <[f64; 9] as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.header, out);
        ::roslite::wire::WireField::encode(&self.orientation, out);
        ::roslite::wire::WireField::encode(&self.orientation_covariance, out);
        ::roslite::wire::WireField::encode(&self.angular_velocity, out);
        ::roslite::wire::WireField::encode(&self.angular_velocity_covariance, out);
        ::roslite::wire::WireField::encode(&self.linear_acceleration, out);
        ::roslite::wire::WireField::encode(&self.linear_acceleration_covariance, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(Imu {
            header: ::roslite::wire::WireField::decode(r)?,
            orientation: ::roslite::wire::WireField::decode(r)?,
            orientation_covariance: ::roslite::wire::WireField::decode(r)?,
            angular_velocity: ::roslite::wire::WireField::decode(r)?,
            angular_velocity_covariance: ::roslite::wire::WireField::decode(r)?,
            linear_acceleration: ::roslite::wire::WireField::decode(r)?,
            linear_acceleration_covariance: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.header)
            + ::roslite::wire::WireField::encoded_len(&self.orientation)
            + ::roslite::wire::WireField::encoded_len(&self.orientation_covariance)
            + ::roslite::wire::WireField::encoded_len(&self.angular_velocity)
            + ::roslite::wire::WireField::encoded_len(&self.angular_velocity_covariance)
            + ::roslite::wire::WireField::encoded_len(&self.linear_acceleration)
            + ::roslite::wire::WireField::encoded_len(&self.linear_acceleration_covariance)
    }
}

impl ::roslite::wire::RosMessage for Imu {
    const TYPE_NAME: &'static str = "sensor_msgs/Imu";
    const MD5SUM: &'static str = "6a62c6daae103f4ff57a132d6f95cec2";
    const DEFINITION: &'static str = r#"# This is a message to hold data from an IMU (Inertial Measurement Unit)

Header header

geometry_msgs/Quaternion orientation
float64[9] orientation_covariance # Row major about x, y, z axes

geometry_msgs/Vector3 angular_velocity
float64[9] angular_velocity_covariance # Row major about x, y, z axes

geometry_msgs/Vector3 linear_acceleration
float64[9] linear_acceleration_covariance # Row major x, y z 

================================================================================
MSG: std_msgs/Header
# Standard metadata for higher-level stamped data types.
# sequence ID: consecutively increasing ID
uint32 seq
# Two-integer timestamp: stamp.sec (seconds since epoch), stamp.nsec
time stamp
# Frame this data is associated with
string frame_id

================================================================================
MSG: geometry_msgs/Quaternion
# This represents an orientation in free space in quaternion form.

float64 x
float64 y
float64 z
float64 w

================================================================================
MSG: geometry_msgs/Vector3
# This represents a vector in free space.
float64 x
float64 y
float64 z
"#;
}
