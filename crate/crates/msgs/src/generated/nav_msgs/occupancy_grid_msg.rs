// This file is generated by `roslite msg gen`. Do not edit.

/// `nav_msgs/OccupancyGrid`
#[derive(Debug, Clone, PartialEq)]
pub struct OccupancyGrid {
    pub header: super::super::std_msgs::Header,
    pub info: super::super::nav_msgs::MapMetaData,
    pub data: ::std::vec::Vec<i8>,
}

impl ::std::default::Default for OccupancyGrid {
    fn default() -> Self {
        OccupancyGrid {
            header: ::std::default::Default::default(),
            info: ::std::default::Default::default(),
            data: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for OccupancyGrid {
    const MIN_SIZE: usize = <super::super::std_msgs::Header as ::roslite::wire::WireField>::MIN_SIZE
        + <super::super::nav_msgs::MapMetaData as ::roslite::wire::WireField>::MIN_SIZE
        + <::std::vec::Vec<i8> as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.header, out);
        ::roslite::wire::WireField::encode(&self.info, out);
        ::roslite::wire::WireField::encode(&self.data, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(OccupancyGrid {
            header: ::roslite::wire::WireField::decode(r)?,
            info: ::roslite::wire::WireField::decode(r)?,
            data: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.header)
            + ::roslite::wire::WireField::encoded_len(&self.info)
            + ::roslite::wire::WireField::encoded_len(&self.data)
    }
}

impl ::roslite::wire::RosMessage for OccupancyGrid {
    const TYPE_NAME: &'static str = "nav_msgs/OccupancyGrid";
    const MD5SUM: &'static str = "3381f2d731d4076ec5c71b0759edbe4e";
    const DEFINITION: &'static str = r#"# This represents a 2-D grid map, in which each cell represents the probability of
# occupancy.

Header header 

#MetaData for the map
MapMetaData info

# The map data, in row-major order, starting with (0,0).  Occupancy
# probabilities are in the range [0,100].  Unknown is -1.
int8[] data

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
MSG: nav_msgs/MapMetaData
# This hold basic information about the characterists of the OccupancyGrid

# The time at which the map was loaded
time map_load_time
# The map resolution [m/cell]
float32 resolution
# Map width [cells]
uint32 width
# Map height [cells]
uint32 height
# The origin of the map [m, m, rad].  This is the real-world pose of the
# cell (0,0) in the map.
geometry_msgs/Pose origin

================================================================================
MSG: geometry_msgs/Pose
# A representation of pose in free space, composed of position and orientation. 
Point position
Quaternion orientation

================================================================================
MSG: geometry_msgs/Point
# This contains the position of a point in free space
float64 x
float64 y
float64 z

================================================================================
MSG: geometry_msgs/Quaternion
# This represents an orientation in free space in quaternion form.

float64 x
float64 y
float64 z
float64 w
"#;
}
