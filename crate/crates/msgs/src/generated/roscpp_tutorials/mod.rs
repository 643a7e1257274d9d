// This file is generated by `roslite msg gen`. Do not edit.

mod two_ints_srv;

pub use two_ints_srv::{TwoInts, TwoIntsRequest, TwoIntsResponse};
