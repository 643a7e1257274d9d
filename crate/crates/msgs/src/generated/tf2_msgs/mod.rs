// This file is generated by `roslite msg gen`. Do not edit.

mod tfmessage_msg;

pub use tfmessage_msg::{TFMessage};
