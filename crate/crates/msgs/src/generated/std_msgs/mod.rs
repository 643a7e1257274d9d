// This file is generated by `roslite msg gen`. Do not edit.

mod bool_msg;
mod byte_msg;
mod char_msg;
mod color_rgba_msg;
mod duration_msg;
mod empty_msg;
mod float32_msg;
mod float64_msg;
mod float64_multi_array_msg;
mod header_msg;
mod int32_msg;
mod int64_msg;
mod int8_msg;
mod multi_array_dimension_msg;
mod multi_array_layout_msg;
mod string_msg;
mod time_msg;
mod uint32_msg;
mod uint64_msg;
mod uint8_msg;
mod uint8_multi_array_msg;

pub use bool_msg::{Bool};
pub use byte_msg::{Byte};
pub use char_msg::{Char};
pub use color_rgba_msg::{ColorRGBA};
pub use duration_msg::{Duration};
pub use empty_msg::{Empty};
pub use float32_msg::{Float32};
pub use float64_msg::{Float64};
pub use float64_multi_array_msg::{Float64MultiArray};
pub use header_msg::{Header};
pub use int32_msg::{Int32};
pub use int64_msg::{Int64};
pub use int8_msg::{Int8};
pub use multi_array_dimension_msg::{MultiArrayDimension};
pub use multi_array_layout_msg::{MultiArrayLayout};
pub use string_msg::{String};
pub use time_msg::{Time};
pub use uint32_msg::{UInt32};
pub use uint64_msg::{UInt64};
pub use uint8_msg::{UInt8};
pub use uint8_multi_array_msg::{UInt8MultiArray};
