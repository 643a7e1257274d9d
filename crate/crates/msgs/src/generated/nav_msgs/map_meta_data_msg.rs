// This file is generated by `roslite msg gen`. Do not edit.

/// `nav_msgs/MapMetaData`
#[derive(Debug, Clone, PartialEq)]
pub struct MapMetaData {
    pub map_load_time: ::roslite::wire::Time,
    pub resolution: f32,
    pub width: u32,
    pub height: u32,
    pub origin: super::super::geometry_msgs::Pose,
}

impl ::std::default::Default for MapMetaData {
    fn default() -> Self {
        MapMetaData {
            map_load_time: ::std::default::Default::default(),
            resolution: ::std::default::Default::default(),
            width: ::std::default::Default::default(),
            height: ::std::default::Default::default(),
            origin: ::std::default::Default::default(),
        }
    }
}

impl ::roslite::wire::WireField for MapMetaData {
    const MIN_SIZE: usize = <::roslite::wire::Time as ::roslite::wire::WireField>::MIN_SIZE
        + <f32 as ::roslite::wire::WireField>::MIN_SIZE
        + <u32 as ::roslite::wire::WireField>::MIN_SIZE
        + <u32 as ::roslite::wire::WireField>::MIN_SIZE
        + <super::super::geometry_msgs::Pose as ::roslite::wire::WireField>::MIN_SIZE;

    fn encode(&self, out: &mut ::std::vec::Vec<u8>) {
        ::roslite::wire::WireField::encode(&self.map_load_time, out);
        ::roslite::wire::WireField::encode(&self.resolution, out);
        ::roslite::wire::WireField::encode(&self.width, out);
        ::roslite::wire::WireField::encode(&self.height, out);
        ::roslite::wire::WireField::encode(&self.origin, out);
    }

    fn decode(r: &mut ::roslite::wire::WireReader<'_>) -> ::std::result::Result<Self, ::roslite::wire::WireError> {
        ::std::result::Result::Ok(MapMetaData {
            map_load_time: ::roslite::wire::WireField::decode(r)?,
            resolution: ::roslite::wire::WireField::decode(r)?,
            width: ::roslite::wire::WireField::decode(r)?,
            height: ::roslite::wire::WireField::decode(r)?,
            origin: ::roslite::wire::WireField::decode(r)?,
        })
    }

    fn encoded_len(&self) -> usize {
        0
            + ::roslite::wire::WireField::encoded_len(&self.map_load_time)
            + ::roslite::wire::WireField::encoded_len(&self.resolution)
            + ::roslite::wire::WireField::encoded_len(&self.width)
            + ::roslite::wire::WireField::encoded_len(&self.height)
            + ::roslite::wire::WireField::encoded_len(&self.origin)
    }
}

impl ::roslite::wire::RosMessage for MapMetaData {
    const TYPE_NAME: &'static str = "nav_msgs/MapMetaData";
    const MD5SUM: &'static str = "10cfc8a2818024d3248802c00c95f11b";
    const DEFINITION: &'static str = r#"# This hold basic information about the characterists of the OccupancyGrid

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
