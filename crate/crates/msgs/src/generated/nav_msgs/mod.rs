// This file is generated by `roslite msg gen`. Do not edit.

mod map_meta_data_msg;
mod occupancy_grid_msg;
mod odometry_msg;

pub use map_meta_data_msg::{MapMetaData};
pub use occupancy_grid_msg::{OccupancyGrid};
pub use odometry_msg::{Odometry};
