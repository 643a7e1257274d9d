use std::io::{Read, Write};
use std::net::{SocketAddr, TcpStream};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;
use std::time::Duration;

use super::{read_frame, write_frame, ConnectionHeader, TcprosError, DEFAULT_MAX_FRAME};

/// A service implementation over serialized request/response bodies.
/// `Err(text)` is sent to the caller as an `ok = 0` reply.
pub type ServiceHandler = Arc<dyn Fn(&[u8]) -> Result<Vec<u8>, String> + Send + Sync>;

/// A service hosted on this node's TCPROS listener.
pub struct ServiceServer {
    pub name: String,
    pub type_name: String,
    pub md5sum: String,
    pub caller_id: String,
    pub handler: ServiceHandler,
    /// Number of requests handled (successful or not).
    pub calls: AtomicU64,
}

impl ServiceServer {
    pub fn new(name: &str, type_name: &str, md5sum: &str, caller_id: &str, handler: ServiceHandler) -> Self {
        ServiceServer {
            name: name.to_string(),
            type_name: type_name.to_string(),
            md5sum: md5sum.to_string(),
            caller_id: caller_id.to_string(),
            handler,
            calls: AtomicU64::new(0),
        }
    }

    fn reply_header(&self) -> ConnectionHeader {
        ConnectionHeader::new()
            .with("callerid", &self.caller_id)
            .with("md5sum", &self.md5sum)
            .with("request_type", format!("{}Request", self.type_name))
            .with("response_type", format!("{}Response", self.type_name))
            .with("type", &self.type_name)
    }

    /// Runs the handler, mapping panics to error replies.
    pub fn invoke(&self, request: &[u8]) -> Result<Vec<u8>, String> {
        self.calls.fetch_add(1, Ordering::Relaxed);
        match catch_unwind(AssertUnwindSafe(|| (self.handler)(request))) {
            Ok(r) => r,
            Err(panic) => Err(panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "service handler panicked".to_string())),
        }
    }

    /// Serves a client whose header has already been read.
    pub(crate) fn serve(&self, mut stream: TcpStream, client: &ConnectionHeader) -> Result<(), TcprosError> {
        let md5 = client.require("md5sum")?;
        if md5 != "*" && md5 != self.md5sum {
            let reason = format!(
                "request from [{}]: md5sums do not match: [{md5}] vs. [{}]",
                client.get("callerid").unwrap_or_default(),
                self.md5sum
            );
            ConnectionHeader::new().with("error", &reason).write_to(&mut stream)?;
            return Err(TcprosError::Md5Mismatch {
                local: self.md5sum.clone(),
                remote: md5.to_string(),
            });
        }
        self.reply_header().write_to(&mut stream)?;
        if client.get("probe") == Some("1") {
            return Ok(());
        }
        let persistent = client.get("persistent") == Some("1");
        stream.set_read_timeout(None)?;
        loop {
            let request = match read_frame(&mut stream, DEFAULT_MAX_FRAME) {
                Ok(r) => r,
                Err(TcprosError::Disconnected) => return Ok(()),
                Err(e) => return Err(e),
            };
            let mut out = Vec::new();
            match self.invoke(&request) {
                Ok(body) => {
                    out.push(1);
                    write_frame(&mut out, &body)?;
                }
                Err(text) => {
                    out.push(0);
                    write_frame(&mut out, text.as_bytes())?;
                }
            }
            stream.write_all(&out)?;
            stream.flush()?;
            if !persistent {
                return Ok(());
            }
        }
    }
}

/// Reads one service response: ok flag, then a length-prefixed payload.
fn read_response(stream: &mut impl Read) -> Result<(bool, Vec<u8>), TcprosError> {
    let mut ok = [0u8; 1];
    stream.read_exact(&mut ok)?;
    let payload = read_frame(stream, DEFAULT_MAX_FRAME)?;
    Ok((ok[0] != 0, payload))
}

/// A connected service client; keeps its socket when persistent.
pub struct ServiceClient {
    stream: TcpStream,
    pub reply: ConnectionHeader,
    persistent: bool,
    used: bool,
}

impl ServiceClient {
    pub fn connect(
        addr: SocketAddr,
        service: &str,
        md5sum: &str,
        caller_id: &str,
        persistent: bool,
        timeout: Duration,
    ) -> Result<Self, TcprosError> {
        let stream = TcpStream::connect_timeout(&addr, timeout)?;
        Self::handshake(stream, service, md5sum, caller_id, persistent, timeout)
    }

    pub fn handshake(
        mut stream: TcpStream,
        service: &str,
        md5sum: &str,
        caller_id: &str,
        persistent: bool,
        timeout: Duration,
    ) -> Result<Self, TcprosError> {
        let _ = stream.set_nodelay(true);
        stream.set_read_timeout(Some(timeout))?;
        stream.set_write_timeout(Some(timeout))?;
        let mut header = ConnectionHeader::new()
            .with("callerid", caller_id)
            .with("service", service)
            .with("md5sum", md5sum);
        if persistent {
            header.insert("persistent", "1");
        }
        header.write_to(&mut stream)?;
        let reply = ConnectionHeader::read_from(&mut stream)?;
        if let Some(error) = reply.get("error") {
            return Err(TcprosError::HandshakeRejected(error.to_string()));
        }
        if let Some(remote) = reply.get("md5sum") {
            if md5sum != "*" && remote != "*" && remote != md5sum {
                return Err(TcprosError::Md5Mismatch {
                    local: md5sum.to_string(),
                    remote: remote.to_string(),
                });
            }
        }
        Ok(ServiceClient {
            stream,
            reply,
            persistent,
            used: false,
        })
    }

    /// Sends one request; `(false, text)` carries the server's error message.
    pub fn call(&mut self, request: &[u8]) -> Result<(bool, Vec<u8>), TcprosError> {
        if self.used && !self.persistent {
            return Err(TcprosError::Disconnected);
        }
        self.used = true;
        let mut frame = Vec::with_capacity(request.len() + 4);
        write_frame(&mut frame, request)?;
        self.stream.write_all(&frame)?;
        self.stream.flush()?;
        read_response(&mut self.stream)
    }

    pub fn set_timeout(&self, timeout: Option<Duration>) -> Result<(), TcprosError> {
        self.stream.set_read_timeout(timeout)?;
        self.stream.set_write_timeout(timeout)?;
        Ok(())
    }
}

/// One service call on an already connected socket.
pub fn service_call(
    stream: TcpStream,
    service: &str,
    md5sum: &str,
    caller_id: &str,
    request: &[u8],
    persistent: bool,
    timeout: Duration,
) -> Result<(bool, Vec<u8>), TcprosError> {
    ServiceClient::handshake(stream, service, md5sum, caller_id, persistent, timeout)?.call(request)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn response_framing() {
        let mut wire = vec![1];
        write_frame(&mut wire, b"").unwrap();
        assert_eq!(wire, [1, 0, 0, 0, 0]);
        assert_eq!(read_response(&mut &wire[..]).unwrap(), (true, vec![]));
        let mut wire = vec![0];
        write_frame(&mut wire, b"boom").unwrap();
        assert_eq!(read_response(&mut &wire[..]).unwrap(), (false, b"boom".to_vec()));
    }
}
