//! Mesh asset loading: URI resolution under package roots, STL/OBJ parsing,
//! a ROS service that serves processed meshes, and a caching client.

mod cache;
mod mesh;
mod service;
mod uri;

use std::fmt;

use thiserror::Error;

use crate::node::NodeError;

pub use cache::{AssetCache, CacheEntry, CacheStats};
pub use mesh::{parse_obj, parse_stl, stl_is_binary, Mesh, DEFAULT_COLOR};
pub use service::{
    handle_request, parse_mesh_bytes, service_info, AssetClient, AssetResponse, FetchedMesh, LoaderService,
    LoaderStats, RawAsset, DEFAULT_SERVICE, MAX_RESPONSE_BYTES, SERVICE_TYPE,
};
pub use uri::{resolve_uri, roots_from_env, PACKAGE_PATH_ENV};

/// Where in a file a parse error occurred.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Offset(usize),
    Line(usize),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Offset(o) => write!(f, "byte {o}"),
            Location::Line(l) => write!(f, "line {l}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AssetError {
    #[error("unsupported URI scheme {0:?}")]
    UnknownScheme(String),
    #[error("asset not found: {0}")]
    NotFound(String),
    #[error("path escapes the package roots: {0}")]
    PathEscapesRoot(String),
    #[error("malformed file at {at}: {reason}")]
    MalformedFile { at: Location, reason: String },
    #[error("mesh has no usable triangles")]
    EmptyMesh,
    #[error("unsupported format {0:?}; request the raw bytes instead")]
    Unsupported(String),
    #[error("asset of {size} bytes exceeds the {max}-byte response limit")]
    TooLarge { size: u64, max: u64 },
    #[error("I/O error: {0}")]
    Io(String),
    #[error("cache I/O error: {0}")]
    CacheIo(String),
    #[error("malformed message: {0}")]
    Malformed(String),
    #[error("asset service: {0}")]
    Service(String),
}

impl From<NodeError> for AssetError {
    fn from(e: NodeError) -> Self {
        AssetError::Service(e.to_string())
    }
}
