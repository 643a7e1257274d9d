// This file is generated by `roslite msg gen`. Do not edit.

pub mod asset_msgs;
pub mod geometry_msgs;
pub mod nav_msgs;
pub mod roscpp_tutorials;
pub mod rosgraph_msgs;
pub mod sensor_msgs;
pub mod std_msgs;
pub mod std_srvs;
pub mod tf2_msgs;
