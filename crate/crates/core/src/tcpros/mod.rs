//! The TCPROS data plane: connection headers, length-prefixed frames,
//! topic handshakes with latching, per-subscriber queues and service calls.

mod header;
mod publisher;
mod server;
mod service;

pub use header::ConnectionHeader;
pub use publisher::{LinkCounters, LinkState, Offer, QueuePolicy, SubscriberLink, TopicPublisher};
pub use server::{publisher_accept, TcprosRegistry, TcprosServer};
pub use service::{service_call, ServiceClient, ServiceHandler, ServiceServer};

use std::io::{Read, Write};
use std::net::TcpStream;
use std::time::Duration;

use thiserror::Error;

/// Largest accepted connection header.
pub const MAX_HEADER_SIZE: usize = 16 * 1024 * 1024;
/// Default largest accepted message frame.
pub const DEFAULT_MAX_FRAME: usize = 64 * 1024 * 1024;
/// Default time allowed for a peer to complete the header exchange.
pub const DEFAULT_HANDSHAKE_TIMEOUT: Duration = Duration::from_secs(5);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TcprosError {
    #[error("connection header of {0} bytes exceeds the limit")]
    OversizeHeader(usize),
    #[error("malformed connection header: {0}")]
    MalformedHeader(String),
    #[error("connection header lacks `{0}`")]
    MissingField(&'static str),
    #[error("peer rejected the handshake: {0}")]
    HandshakeRejected(String),
    #[error("md5sum mismatch: local {local}, remote {remote}")]
    Md5Mismatch { local: String, remote: String },
    #[error("topic {0} is not advertised here")]
    UnknownTopic(String),
    #[error("service {0} is not provided here")]
    UnknownService(String),
    #[error("frame of {len} bytes exceeds the {max}-byte limit")]
    FrameTooLarge { len: usize, max: usize },
    #[error("peer disconnected")]
    Disconnected,
    #[error("timed out")]
    Timeout,
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for TcprosError {
    fn from(e: std::io::Error) -> Self {
        use std::io::ErrorKind::*;
        match e.kind() {
            TimedOut | WouldBlock => TcprosError::Timeout,
            UnexpectedEof | ConnectionReset | ConnectionAborted | BrokenPipe => TcprosError::Disconnected,
            _ => TcprosError::Io(e.to_string()),
        }
    }
}

/// Writes one frame: 4-byte little-endian body length, then the body.
pub fn write_frame(w: &mut impl Write, body: &[u8]) -> Result<(), TcprosError> {
    let len = u32::try_from(body.len()).map_err(|_| TcprosError::FrameTooLarge {
        len: body.len(),
        max: u32::MAX as usize,
    })?;
    w.write_all(&len.to_le_bytes())?;
    w.write_all(body)?;
    Ok(())
}

/// Reads one frame body, refusing lengths above `max`.
pub fn read_frame(r: &mut impl Read, max: usize) -> Result<Vec<u8>, TcprosError> {
    let mut len = [0u8; 4];
    r.read_exact(&mut len)?;
    let len = u32::from_le_bytes(len) as usize;
    if len > max {
        return Err(TcprosError::FrameTooLarge { len, max });
    }
    read_body(r, len)
}

/// Reads exactly `len` bytes without trusting `len` for the allocation.
fn read_body(r: &mut impl Read, len: usize) -> Result<Vec<u8>, TcprosError> {
    let mut body = Vec::with_capacity(len.min(1 << 20));
    r.take(len as u64).read_to_end(&mut body)?;
    if body.len() < len {
        return Err(TcprosError::Disconnected);
    }
    Ok(body)
}

/// Parameters of an outgoing topic subscription.
#[derive(Debug, Clone)]
pub struct SubscribeParams {
    pub topic: String,
    pub type_name: String,
    /// `*` accepts any publisher type.
    pub md5sum: String,
    pub caller_id: String,
    pub tcp_nodelay: bool,
}

/// Runs the subscriber side of the topic handshake on a connected socket and
/// returns the publisher's reply header.
pub fn subscriber_handshake(
    stream: &mut TcpStream,
    params: &SubscribeParams,
    timeout: Duration,
) -> Result<ConnectionHeader, TcprosError> {
    if params.tcp_nodelay {
        stream.set_nodelay(true)?;
    }
    let mut header = ConnectionHeader::new();
    header.insert("callerid", &params.caller_id);
    header.insert("topic", &params.topic);
    header.insert("type", &params.type_name);
    header.insert("md5sum", &params.md5sum);
    header.insert("tcp_nodelay", if params.tcp_nodelay { "1" } else { "0" });
    stream.set_read_timeout(Some(timeout))?;
    stream.set_write_timeout(Some(timeout))?;
    header.write_to(stream)?;
    let reply = ConnectionHeader::read_from(stream)?;
    // Active topic links have no read timeout: idle topics are legitimate.
    stream.set_read_timeout(None)?;
    stream.set_write_timeout(None)?;
    if let Some(error) = reply.get("error") {
        return Err(TcprosError::HandshakeRejected(error.to_string()));
    }
    let remote = reply.get("md5sum").ok_or(TcprosError::MissingField("md5sum"))?;
    if params.md5sum != "*" && remote != "*" && remote != params.md5sum {
        return Err(TcprosError::Md5Mismatch {
            local: params.md5sum.clone(),
            remote: remote.to_string(),
        });
    }
    Ok(reply)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frame_layout() {
        let mut out = Vec::new();
        write_frame(&mut out, b"").unwrap();
        assert_eq!(out, [0, 0, 0, 0]);
        write_frame(&mut out, b"abc").unwrap();
        let mut r = &out[..];
        assert_eq!(read_frame(&mut r, 16).unwrap(), b"");
        assert_eq!(read_frame(&mut r, 16).unwrap(), b"abc");
        assert_eq!(read_frame(&mut r, 16), Err(TcprosError::Disconnected));
    }

    #[test]
    fn frame_limit_and_truncation() {
        let big = [0xff, 0xff, 0xff, 0x7f];
        assert!(matches!(read_frame(&mut &big[..], DEFAULT_MAX_FRAME), Err(TcprosError::FrameTooLarge { .. })));
        let short = [5, 0, 0, 0, 1, 2];
        assert_eq!(read_frame(&mut &short[..], 64), Err(TcprosError::Disconnected));
    }
}
