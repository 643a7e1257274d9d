// This file is generated by `roslite msg gen`. Do not edit.

mod empty_srv;
mod set_bool_srv;
mod trigger_srv;

pub use empty_srv::{Empty, EmptyRequest, EmptyResponse};
pub use set_bool_srv::{SetBool, SetBoolRequest, SetBoolResponse};
pub use trigger_srv::{Trigger, TriggerRequest, TriggerResponse};
