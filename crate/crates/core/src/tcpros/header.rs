use std::io::{Read, Write};

use super::{read_body, TcprosError, MAX_HEADER_SIZE};

/// Ordered `key=value` record exchanged at the start of every TCPROS
/// connection. Inserting an existing key replaces its value in place, so a
/// decoded header keeps the last occurrence of a duplicated key.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConnectionHeader {
    entries: Vec<(String, String)>,
}

impl ConnectionHeader {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, key: impl Into<String>, value: impl Into<String>) {
        let (key, value) = (key.into(), value.into());
        match self.entries.iter_mut().find(|(k, _)| *k == key) {
            Some(slot) => slot.1 = value,
            None => self.entries.push((key, value)),
        }
    }

    pub fn with(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.insert(key, value);
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn require(&self, key: &'static str) -> Result<&str, TcprosError> {
        self.get(key).ok_or(TcprosError::MissingField(key))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// 4-byte total length, then per entry a 4-byte length and `key=value`.
    pub fn encode(&self) -> Result<Vec<u8>, TcprosError> {
        let body_len: usize = self.entries.iter().map(|(k, v)| 4 + k.len() + 1 + v.len()).sum();
        if body_len > MAX_HEADER_SIZE {
            return Err(TcprosError::OversizeHeader(body_len));
        }
        let mut out = Vec::with_capacity(4 + body_len);
        out.extend_from_slice(&(body_len as u32).to_le_bytes());
        for (k, v) in &self.entries {
            out.extend_from_slice(&((k.len() + 1 + v.len()) as u32).to_le_bytes());
            out.extend_from_slice(k.as_bytes());
            out.push(b'=');
            out.extend_from_slice(v.as_bytes());
        }
        Ok(out)
    }

    /// Decodes the entries that follow the 4-byte total length.
    pub fn decode_body(mut body: &[u8]) -> Result<Self, TcprosError> {
        let bad = |m: &str| TcprosError::MalformedHeader(m.to_string());
        let mut header = ConnectionHeader::new();
        while !body.is_empty() {
            if body.len() < 4 {
                return Err(bad("truncated entry length"));
            }
            let n = u32::from_le_bytes(body[..4].try_into().expect("4 bytes")) as usize;
            body = &body[4..];
            if n > body.len() {
                return Err(bad("entry overruns header"));
            }
            let entry = std::str::from_utf8(&body[..n]).map_err(|_| bad("entry is not UTF-8"))?;
            body = &body[n..];
            let (k, v) = entry.split_once('=').ok_or_else(|| bad("entry without '='"))?;
            header.insert(k, v);
        }
        Ok(header)
    }

    /// Decodes a complete header including its total-length prefix.
    pub fn decode(bytes: &[u8]) -> Result<Self, TcprosError> {
        if bytes.len() < 4 {
            return Err(TcprosError::MalformedHeader("truncated length".into()));
        }
        let n = u32::from_le_bytes(bytes[..4].try_into().expect("4 bytes")) as usize;
        if n > MAX_HEADER_SIZE {
            return Err(TcprosError::OversizeHeader(n));
        }
        if bytes.len() - 4 != n {
            return Err(TcprosError::MalformedHeader(format!(
                "declared {n} bytes, found {}",
                bytes.len() - 4
            )));
        }
        Self::decode_body(&bytes[4..])
    }

    pub fn read_from(r: &mut impl Read) -> Result<Self, TcprosError> {
        let mut len = [0u8; 4];
        r.read_exact(&mut len)?;
        let n = u32::from_le_bytes(len) as usize;
        if n > MAX_HEADER_SIZE {
            return Err(TcprosError::OversizeHeader(n));
        }
        Self::decode_body(&read_body(r, n)?)
    }

    pub fn write_to(&self, w: &mut impl Write) -> Result<(), TcprosError> {
        w.write_all(&self.encode()?)?;
        w.flush()?;
        Ok(())
    }
}

impl<K: Into<String>, V: Into<String>> FromIterator<(K, V)> for ConnectionHeader {
    fn from_iter<I: IntoIterator<Item = (K, V)>>(iter: I) -> Self {
        let mut h = ConnectionHeader::new();
        for (k, v) in iter {
            h.insert(k, v);
        }
        h
    }
}
