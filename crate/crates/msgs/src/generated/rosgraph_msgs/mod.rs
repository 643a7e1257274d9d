// This file is generated by `roslite msg gen`. Do not edit.

mod log_msg;

pub use log_msg::{Log};
