// This file is generated by `roslite msg gen`. Do not edit.

mod get_asset_srv;
mod mesh_msg;

pub use get_asset_srv::{GetAsset, GetAssetRequest, GetAssetResponse};
pub use mesh_msg::{Mesh};
