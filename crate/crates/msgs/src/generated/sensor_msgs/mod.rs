// This file is generated by `roslite msg gen`. Do not edit.

mod imu_msg;
mod joint_state_msg;
mod laser_scan_msg;

pub use imu_msg::{Imu};
pub use joint_state_msg::{JointState};
pub use laser_scan_msg::{LaserScan};
