//! A self-contained ROS 1 client network layer.
//!
//! - [`msg`]: `.msg`/`.srv` parsing, checksums, dependency text, code generation
//! - [`wire`]: binary serialization for dynamic values and generated types
//! - [`xmlrpc`]: the XML-RPC subset spoken by the master and node slave APIs
//! - [`tcpros`]: connection headers, framing, latching, publisher queues, services
//! - [`node`]: node runtime (registration, pub/sub, services, parameters) and a
//!   small in-process master
//! - [`tf`]: transform tree, URDF parsing and forward kinematics
//! - [`asset`]: mesh loader service with local caching
//! - [`bridge`]: websocket JSON bridge for browser clients

pub mod asset;
pub mod bridge;
pub mod msg;
pub mod node;
pub mod tcpros;
pub mod tf;
pub mod wire;
pub mod xmlrpc;

/// `f64` transform-math aliases.
pub type Vec3 = tf::Vec3<f64>;
pub type Quat = tf::Quat<f64>;
pub type Transform = tf::Transform<f64>;
pub type FrameTree = tf::FrameTree<f64>;
pub type RobotModel = tf::RobotModel<f64>;
/// Single-precision mesh, matching the `float32` wire fields.
pub type Mesh = asset::Mesh<f32>;
