//! Just enough HTTP/1.1 for XML-RPC: one request or response per connection,
//! bodies delimited by `Content-Length`.

use std::io::Read;

use super::XmlRpcError;

/// Largest accepted header block.
const MAX_HEAD: usize = 64 * 1024;
/// Largest accepted body.
pub(crate) const MAX_BODY: usize = 64 * 1024 * 1024;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HttpMessage {
    /// `Some(status)` for responses.
    pub status: Option<u16>,
    /// Request method and path, empty for responses.
    pub method: String,
    pub path: String,
    /// Header names are lower-cased.
    pub headers: Vec<(String, String)>,
    pub body: Vec<u8>,
}

impl HttpMessage {
    pub fn header(&self, name: &str) -> Option<&str> {
        self.headers
            .iter()
            .rev()
            .find(|(k, _)| k == name)
            .map(|(_, v)| v.as_str())
    }
}

pub(crate) fn request(host: &str, path: &str, body: &[u8]) -> Vec<u8> {
    let mut out = format!(
        "POST {path} HTTP/1.1\r\nHost: {host}\r\nUser-Agent: roslite\r\nContent-Type: text/xml\r\nContent-Length: {}\r\nConnection: close\r\n\r\n",
        body.len()
    )
    .into_bytes();
    out.extend_from_slice(body);
    out
}

pub(crate) fn response(status: u16, body: &[u8]) -> Vec<u8> {
    let reason = match status {
        200 => "OK",
        400 => "Bad Request",
        411 => "Length Required",
        413 => "Payload Too Large",
        501 => "Not Implemented",
        _ => "Error",
    };
    let mut out = format!(
        "HTTP/1.1 {status} {reason}\r\nServer: roslite\r\nContent-Type: text/xml\r\nContent-Length: {}\r\nConnection: close\r\n\r\n",
        body.len()
    )
    .into_bytes();
    out.extend_from_slice(body);
    out
}

fn find_head_end(buf: &[u8]) -> Option<usize> {
    buf.windows(4).position(|w| w == b"\r\n\r\n").map(|i| i + 4)
}

fn parse_head(head: &[u8]) -> Result<HttpMessage, XmlRpcError> {
    let bad = |m: &str| XmlRpcError::HttpSyntax(m.to_string());
    let text = std::str::from_utf8(head).map_err(|_| bad("header is not UTF-8"))?;
    let mut lines = text.split("\r\n");
    let start = lines.next().ok_or_else(|| bad("empty message"))?;
    let mut parts = start.splitn(3, ' ');
    let first = parts.next().unwrap_or_default();
    let second = parts.next().ok_or_else(|| bad("truncated start line"))?;
    let mut msg = HttpMessage {
        status: None,
        method: String::new(),
        path: String::new(),
        headers: Vec::new(),
        body: Vec::new(),
    };
    if first.starts_with("HTTP/") {
        msg.status = Some(second.parse().map_err(|_| bad("invalid status code"))?);
    } else {
        let version = parts.next().ok_or_else(|| bad("truncated request line"))?;
        if !version.starts_with("HTTP/1.") {
            return Err(bad("unsupported HTTP version"));
        }
        msg.method = first.to_string();
        msg.path = second.to_string();
    }
    for line in lines.filter(|l| !l.is_empty()) {
        let (k, v) = line.split_once(':').ok_or_else(|| bad("header line without ':'"))?;
        msg.headers.push((k.trim().to_ascii_lowercase(), v.trim().to_string()));
    }
    if msg
        .header("transfer-encoding")
        .is_some_and(|te| te.to_ascii_lowercase().contains("chunked"))
    {
        return Err(XmlRpcError::Chunked);
    }
    Ok(msg)
}

fn content_length(msg: &HttpMessage) -> Result<Option<usize>, XmlRpcError> {
    match msg.header("content-length") {
        None => Ok(None),
        Some(v) => {
            let n: usize = v
                .parse()
                .map_err(|_| XmlRpcError::HttpSyntax(format!("invalid Content-Length {v:?}")))?;
            if n > MAX_BODY {
                return Err(XmlRpcError::HttpSyntax(format!("body of {n} bytes exceeds limit")));
            }
            Ok(Some(n))
        }
    }
}

/// Parses a complete in-memory HTTP message.
pub(crate) fn parse_message(bytes: &[u8]) -> Result<HttpMessage, XmlRpcError> {
    let end = find_head_end(bytes).ok_or_else(|| XmlRpcError::HttpSyntax("incomplete header".into()))?;
    let mut msg = parse_head(&bytes[..end])?;
    let rest = &bytes[end..];
    msg.body = match content_length(&msg)? {
        Some(n) if n > rest.len() => return Err(XmlRpcError::HttpSyntax("truncated body".into())),
        Some(n) => rest[..n].to_vec(),
        None => rest.to_vec(),
    };
    Ok(msg)
}

/// Reads one HTTP message from a stream. Without `Content-Length`, requests
/// are rejected and responses read until EOF.
pub fn read_http_message(stream: &mut impl Read) -> Result<HttpMessage, XmlRpcError> {
    let mut buf = Vec::with_capacity(1024);
    let mut chunk = [0u8; 4096];
    let end = loop {
        if let Some(end) = find_head_end(&buf) {
            break end;
        }
        if buf.len() > MAX_HEAD {
            return Err(XmlRpcError::HttpSyntax("header too large".into()));
        }
        let n = stream.read(&mut chunk)?;
        if n == 0 {
            return Err(XmlRpcError::HttpSyntax("connection closed before end of header".into()));
        }
        buf.extend_from_slice(&chunk[..n]);
    };
    let mut msg = parse_head(&buf[..end])?;
    let mut body = buf.split_off(end);
    match content_length(&msg)? {
        Some(n) => {
            if body.len() < n {
                let have = body.len();
                body.resize(n, 0);
                stream.read_exact(&mut body[have..]).map_err(|e| match e.kind() {
                    std::io::ErrorKind::UnexpectedEof => XmlRpcError::HttpSyntax("truncated body".into()),
                    _ => e.into(),
                })?;
            }
            body.truncate(n);
        }
        None if msg.status.is_none() => {
            return Err(XmlRpcError::HttpSyntax("request without Content-Length".into()));
        }
        None => {
            stream.take((MAX_BODY + 1) as u64).read_to_end(&mut body)?;
            if body.len() > MAX_BODY {
                return Err(XmlRpcError::HttpSyntax("body exceeds limit".into()));
            }
        }
    }
    msg.body = body;
    Ok(msg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn request_framing() {
        let req = request("localhost:11311", "/", b"<x/>");
        let msg = parse_message(&req).unwrap();
        assert_eq!(msg.method, "POST");
        assert_eq!(msg.header("content-type"), Some("text/xml"));
        assert_eq!(msg.header("content-length"), Some("4"));
        assert_eq!(msg.body, b"<x/>");
    }

    #[test]
    fn stream_read_split_across_chunks() {
        let resp = response(200, &vec![b'a'; 10_000]);
        let msg = read_http_message(&mut &resp[..]).unwrap();
        assert_eq!(msg.status, Some(200));
        assert_eq!(msg.body.len(), 10_000);
    }

    #[test]
    fn chunked_rejected() {
        let raw = b"HTTP/1.1 200 OK\r\nTransfer-Encoding: chunked\r\n\r\n4\r\nabcd\r\n0\r\n\r\n";
        assert_eq!(read_http_message(&mut &raw[..]), Err(XmlRpcError::Chunked));
    }

    #[test]
    fn truncated_body() {
        let raw = b"POST / HTTP/1.1\r\nContent-Length: 10\r\n\r\nabc";
        assert!(matches!(read_http_message(&mut &raw[..]), Err(XmlRpcError::HttpSyntax(_))));
    }
}
