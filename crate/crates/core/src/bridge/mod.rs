//! Websocket JSON bridge for browser clients.
//!
//! Each connection speaks JSON text frames. Inbound frames carry an `op`
//! and an optional client-chosen `id`; every op with an id is answered by
//! at least one frame carrying the same id, errors included. See
//! [`server`] for the op list and [`json`] for the value mapping.

pub mod json;
pub mod server;

use thiserror::Error;

use crate::msg::SchemaError;
use crate::node::NodeError;
use crate::tf::TfError;
use crate::wire::WireError;

pub use json::{from_json, measure_encoding_overhead, to_json, EncodingOverhead, MAX_SAFE_INTEGER};
pub use server::{serve_bridge, BridgeConfig, BridgeServer, BridgeStats, DEFAULT_PORT};

#[derive(Debug, Error)]
pub enum BridgeError {
    #[error("cannot bind {addr}: {reason}")]
    Bind { addr: String, reason: String },
    #[error("binding {0} beyond loopback requires an auth token")]
    TokenRequired(String),
    #[error("schema mismatch at {path}: {reason}")]
    SchemaMismatch { path: String, reason: String },
    #[error("unknown field {path:?} for {type_name}")]
    UnknownField { path: String, type_name: String },
    #[error("bad request: {0}")]
    BadRequest(String),
    #[error("unauthorized")]
    Unauthorized,
    #[error(transparent)]
    Node(#[from] NodeError),
    #[error(transparent)]
    Schema(#[from] SchemaError),
    #[error(transparent)]
    Wire(#[from] WireError),
    #[error(transparent)]
    Tf(#[from] TfError),
}
