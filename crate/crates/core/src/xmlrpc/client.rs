use std::io::Write;
use std::net::{TcpStream, ToSocketAddrs};
use std::time::Duration;

use url::Url;

use super::{decode_response_body, encode_call, http, RosRpcReply, XmlRpcError, XrValue};

/// Blocking XML-RPC client bound to one server URI.
#[derive(Debug, Clone)]
pub struct XmlRpcClient {
    uri: String,
    host: String,
    port: u16,
    path: String,
    timeout: Duration,
}

impl XmlRpcClient {
    pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(3);

    pub fn new(uri: &str) -> Result<Self, XmlRpcError> {
        let invalid = || XmlRpcError::InvalidUri(uri.to_string());
        let url = Url::parse(uri).map_err(|_| invalid())?;
        if url.scheme() != "http" {
            return Err(invalid());
        }
        let host = url.host_str().ok_or_else(invalid)?;
        // IPv6 literals come back bracketed; connecting wants them bare.
        let host = host.trim_start_matches('[').trim_end_matches(']').to_string();
        Ok(XmlRpcClient {
            uri: uri.to_string(),
            host,
            port: url.port_or_known_default().ok_or_else(invalid)?,
            path: url.path().to_string(),
            timeout: Self::DEFAULT_TIMEOUT,
        })
    }

    pub fn with_timeout(mut self, timeout: Duration) -> Self {
        self.timeout = timeout;
        self
    }

    pub fn uri(&self) -> &str {
        &self.uri
    }

    fn connect(&self) -> Result<TcpStream, XmlRpcError> {
        let addrs = (self.host.as_str(), self.port)
            .to_socket_addrs()
            .map_err(|e| XmlRpcError::Io(format!("resolving {}: {e}", self.host)))?;
        let mut last = XmlRpcError::Io(format!("no address for {}", self.host));
        for addr in addrs {
            match TcpStream::connect_timeout(&addr, self.timeout) {
                Ok(s) => return Ok(s),
                Err(e) => last = e.into(),
            }
        }
        Err(last)
    }

    /// Performs one call; `<fault>` replies become [`XmlRpcError::Fault`].
    pub fn call(&self, method: &str, params: &[XrValue]) -> Result<XrValue, XmlRpcError> {
        let mut stream = self.connect()?;
        stream.set_read_timeout(Some(self.timeout))?;
        stream.set_write_timeout(Some(self.timeout))?;
        let _ = stream.set_nodelay(true);
        let host = format!("{}:{}", self.host, self.port);
        stream.write_all(&encode_call(method, params, &host, &self.path))?;
        let msg = http::read_http_message(&mut stream)?;
        match msg.status {
            Some(200) => {}
            Some(other) => return Err(XmlRpcError::Http(other)),
            None => return Err(XmlRpcError::HttpSyntax("expected a response".into())),
        }
        let body = std::str::from_utf8(&msg.body).map_err(|_| XmlRpcError::XmlSyntax("body is not UTF-8".into()))?;
        decode_response_body(body)
    }

    /// Performs a ROS API call and checks the `[code, status, value]` shape.
    pub fn call_ros(&self, method: &str, params: &[XrValue]) -> Result<RosRpcReply, XmlRpcError> {
        RosRpcReply::from_value(self.call(method, params)?)
    }
}

/// One-shot call with the default timeout.
pub fn call(uri: &str, method: &str, params: &[XrValue]) -> Result<XrValue, XmlRpcError> {
    XmlRpcClient::new(uri)?.call(method, params)
}

/// One-shot ROS API call with the default timeout.
pub fn call_ros(uri: &str, method: &str, params: &[XrValue]) -> Result<RosRpcReply, XmlRpcError> {
    XmlRpcClient::new(uri)?.call_ros(method, params)
}
