//! The XML-RPC subset used by the ROS master, slave and parameter APIs.
//!
//! HTTP/1.1 with `Connection: close`, `Content-Length` bodies only, and a
//! purpose-built XML parser. Every ROS API reply is a `[code, status, value]`
//! triple, see [`RosRpcReply`].

mod client;
mod http;
mod server;
mod xml;

pub use client::{call, call_ros, XmlRpcClient};
pub use http::{read_http_message, HttpMessage};
pub use server::{Handler, XmlRpcServer};

use std::fmt::Write as _;

use base64::Engine as _;
use thiserror::Error;

use xml::Element;

/// Maximum nesting of arrays and structs accepted by the decoder.
pub const MAX_VALUE_DEPTH: usize = 64;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum XmlRpcError {
    #[error("HTTP status {0}")]
    Http(u16),
    #[error("malformed HTTP message: {0}")]
    HttpSyntax(String),
    #[error("chunked transfer encoding is not supported")]
    Chunked,
    #[error("XML syntax error {0}")]
    XmlSyntax(String),
    #[error("value nesting exceeds {MAX_VALUE_DEPTH} levels")]
    DepthExceeded,
    #[error("fault {code}: {message}")]
    Fault { code: i32, message: String },
    #[error("malformed XML-RPC payload: {0}")]
    Malformed(String),
    #[error("reply is not a [code, status, value] triple: {0}")]
    InvalidReply(String),
    #[error("timed out")]
    Timeout,
    #[error("io error: {0}")]
    Io(String),
    #[error("bind error on {addr}: {reason}")]
    Bind { addr: String, reason: String },
    #[error("invalid URI {0:?}")]
    InvalidUri(String),
}

impl From<std::io::Error> for XmlRpcError {
    fn from(e: std::io::Error) -> Self {
        match e.kind() {
            std::io::ErrorKind::TimedOut | std::io::ErrorKind::WouldBlock => XmlRpcError::Timeout,
            _ => XmlRpcError::Io(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum XrValue {
    Int(i32),
    Bool(bool),
    Str(String),
    Double(f64),
    Seq(Vec<XrValue>),
    /// `<struct>`; member order is kept, names are unique.
    Record(Vec<(String, XrValue)>),
    /// `<base64>`
    Binary(Vec<u8>),
}

impl XrValue {
    pub fn str(s: impl Into<String>) -> XrValue {
        XrValue::Str(s.into())
    }

    pub fn as_int(&self) -> Option<i32> {
        match self {
            XrValue::Int(v) => Some(*v),
            _ => None,
        }
    }

    pub fn as_str(&self) -> Option<&str> {
        match self {
            XrValue::Str(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_seq(&self) -> Option<&[XrValue]> {
        match self {
            XrValue::Seq(v) => Some(v),
            _ => None,
        }
    }

    pub fn member(&self, name: &str) -> Option<&XrValue> {
        match self {
            XrValue::Record(m) => m.iter().find(|(k, _)| k == name).map(|(_, v)| v),
            _ => None,
        }
    }

    /// Sequence of strings, e.g. a list of URIs.
    pub fn as_str_list(&self) -> Option<Vec<String>> {
        self.as_seq()?.iter().map(|v| v.as_str().map(str::to_string)).collect()
    }

    pub fn encode_into(&self, out: &mut String) {
        out.push_str("<value>");
        match self {
            XrValue::Int(v) => {
                let _ = write!(out, "<i4>{v}</i4>");
            }
            XrValue::Bool(b) => {
                let _ = write!(out, "<boolean>{}</boolean>", u8::from(*b));
            }
            XrValue::Str(s) => {
                out.push_str("<string>");
                xml::escape(s, out);
                out.push_str("</string>");
            }
            XrValue::Double(d) => {
                // Display for f64 is the shortest string that round-trips.
                let _ = write!(out, "<double>{d}</double>");
            }
            XrValue::Seq(items) => {
                out.push_str("<array><data>");
                for item in items {
                    item.encode_into(out);
                }
                out.push_str("</data></array>");
            }
            XrValue::Record(members) => {
                out.push_str("<struct>");
                for (name, value) in members {
                    out.push_str("<member><name>");
                    xml::escape(name, out);
                    out.push_str("</name>");
                    value.encode_into(out);
                    out.push_str("</member>");
                }
                out.push_str("</struct>");
            }
            XrValue::Binary(bytes) => {
                out.push_str("<base64>");
                out.push_str(&base64::engine::general_purpose::STANDARD.encode(bytes));
                out.push_str("</base64>");
            }
        }
        out.push_str("</value>");
    }

    fn decode(el: &Element, depth: usize) -> Result<XrValue, XmlRpcError> {
        if depth > MAX_VALUE_DEPTH {
            return Err(XmlRpcError::DepthExceeded);
        }
        if el.name != "value" {
            return Err(XmlRpcError::Malformed(format!("expected <value>, found <{}>", el.name)));
        }
        let mut typed = el.elements();
        let Some(inner) = typed.next() else {
            return Ok(XrValue::Str(el.text()));
        };
        if typed.next().is_some() {
            return Err(XmlRpcError::Malformed("<value> with several children".into()));
        }
        let text = inner.text();
        let bad = |what: &str| XmlRpcError::Malformed(format!("invalid {what} {text:?}"));
        Ok(match inner.name.as_str() {
            "i4" | "int" => XrValue::Int(text.trim().parse().map_err(|_| bad("int"))?),
            "boolean" => match text.trim() {
                "1" | "true" => XrValue::Bool(true),
                "0" | "false" => XrValue::Bool(false),
                _ => return Err(bad("boolean")),
            },
            "string" => XrValue::Str(text),
            "double" => XrValue::Double(text.trim().parse().map_err(|_| bad("double"))?),
            "dateTime.iso8601" => XrValue::Str(text.trim().to_string()),
            "base64" => {
                let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
                XrValue::Binary(
                    base64::engine::general_purpose::STANDARD
                        .decode(compact)
                        .map_err(|_| bad("base64"))?,
                )
            }
            "array" => {
                let data = inner
                    .child("data")
                    .ok_or_else(|| XmlRpcError::Malformed("<array> without <data>".into()))?;
                XrValue::Seq(
                    data.elements()
                        .map(|v| XrValue::decode(v, depth + 1))
                        .collect::<Result<_, _>>()?,
                )
            }
            "struct" => {
                let mut members: Vec<(String, XrValue)> = Vec::new();
                for m in inner.elements() {
                    if m.name != "member" {
                        return Err(XmlRpcError::Malformed(format!("unexpected <{}> in <struct>", m.name)));
                    }
                    let name = m
                        .child("name")
                        .ok_or_else(|| XmlRpcError::Malformed("<member> without <name>".into()))?
                        .text();
                    let value = m
                        .child("value")
                        .ok_or_else(|| XmlRpcError::Malformed("<member> without <value>".into()))?;
                    let value = XrValue::decode(value, depth + 1)?;
                    match members.iter_mut().find(|(k, _)| *k == name) {
                        Some(slot) => slot.1 = value,
                        None => members.push((name, value)),
                    }
                }
                XrValue::Record(members)
            }
            other => return Err(XmlRpcError::Malformed(format!("unsupported value type <{other}>"))),
        })
    }
}

impl From<i32> for XrValue {
    fn from(v: i32) -> Self {
        XrValue::Int(v)
    }
}

impl From<bool> for XrValue {
    fn from(v: bool) -> Self {
        XrValue::Bool(v)
    }
}

impl From<&str> for XrValue {
    fn from(v: &str) -> Self {
        XrValue::Str(v.to_string())
    }
}

impl From<String> for XrValue {
    fn from(v: String) -> Self {
        XrValue::Str(v)
    }
}

impl From<f64> for XrValue {
    fn from(v: f64) -> Self {
        XrValue::Double(v)
    }
}

impl<T: Into<XrValue>> From<Vec<T>> for XrValue {
    fn from(v: Vec<T>) -> Self {
        XrValue::Seq(v.into_iter().map(Into::into).collect())
    }
}

/// The `[code, statusMessage, value]` triple every ROS API call returns.
#[derive(Debug, Clone, PartialEq)]
pub struct RosRpcReply {
    pub code: i32,
    pub status: String,
    pub payload: XrValue,
}

impl RosRpcReply {
    pub const SUCCESS: i32 = 1;
    pub const FAILURE: i32 = 0;
    pub const ERROR: i32 = -1;

    pub fn success(status: impl Into<String>, payload: impl Into<XrValue>) -> Self {
        RosRpcReply {
            code: Self::SUCCESS,
            status: status.into(),
            payload: payload.into(),
        }
    }

    pub fn failure(status: impl Into<String>) -> Self {
        RosRpcReply {
            code: Self::FAILURE,
            status: status.into(),
            payload: XrValue::Int(0),
        }
    }

    pub fn error(status: impl Into<String>) -> Self {
        RosRpcReply {
            code: Self::ERROR,
            status: status.into(),
            payload: XrValue::Int(0),
        }
    }

    pub fn into_value(self) -> XrValue {
        XrValue::Seq(vec![XrValue::Int(self.code), XrValue::Str(self.status), self.payload])
    }

    pub fn from_value(value: XrValue) -> Result<Self, XmlRpcError> {
        match value {
            XrValue::Seq(items) if items.len() == 3 => {
                let mut it = items.into_iter();
                let code = it.next().unwrap();
                let status = it.next().unwrap();
                let payload = it.next().unwrap();
                let code = code
                    .as_int()
                    .ok_or_else(|| XmlRpcError::InvalidReply(format!("code {code:?} is not an int")))?;
                let status = match status {
                    XrValue::Str(s) => s,
                    other => return Err(XmlRpcError::InvalidReply(format!("status {other:?} is not a string"))),
                };
                Ok(RosRpcReply { code, status, payload })
            }
            other => Err(XmlRpcError::InvalidReply(format!("{other:?}"))),
        }
    }
}

/// XML body of a `methodCall`.
pub fn encode_call_body(method: &str, params: &[XrValue]) -> String {
    let mut out = String::from("<?xml version=\"1.0\"?><methodCall><methodName>");
    xml::escape(method, &mut out);
    out.push_str("</methodName><params>");
    for p in params {
        out.push_str("<param>");
        p.encode_into(&mut out);
        out.push_str("</param>");
    }
    out.push_str("</params></methodCall>");
    out
}

/// A complete HTTP POST carrying a `methodCall`.
pub fn encode_call(method: &str, params: &[XrValue], host: &str, path: &str) -> Vec<u8> {
    let body = encode_call_body(method, params);
    http::request(host, path, body.as_bytes())
}

pub fn encode_response_body(value: &XrValue) -> String {
    let mut out = String::from("<?xml version=\"1.0\"?><methodResponse><params><param>");
    value.encode_into(&mut out);
    out.push_str("</param></params></methodResponse>");
    out
}

pub fn encode_fault_body(code: i32, message: &str) -> String {
    let mut out = String::from("<?xml version=\"1.0\"?><methodResponse><fault>");
    XrValue::Record(vec![
        ("faultCode".into(), XrValue::Int(code)),
        ("faultString".into(), XrValue::Str(message.into())),
    ])
    .encode_into(&mut out);
    out.push_str("</fault></methodResponse>");
    out
}

pub fn encode_response(value: &XrValue) -> Vec<u8> {
    http::response(200, encode_response_body(value).as_bytes())
}

pub fn encode_fault(code: i32, message: &str) -> Vec<u8> {
    http::response(200, encode_fault_body(code, message).as_bytes())
}

/// Parses a `methodCall` body into the method name and parameters.
pub fn decode_call_body(body: &str) -> Result<(String, Vec<XrValue>), XmlRpcError> {
    let root = xml::parse_document(body)?;
    if root.name != "methodCall" {
        return Err(XmlRpcError::Malformed(format!("expected <methodCall>, found <{}>", root.name)));
    }
    let method = root
        .child("methodName")
        .ok_or_else(|| XmlRpcError::Malformed("missing <methodName>".into()))?
        .text()
        .trim()
        .to_string();
    if method.is_empty() {
        return Err(XmlRpcError::Malformed("empty <methodName>".into()));
    }
    let params = match root.child("params") {
        None => Vec::new(),
        Some(params) => params
            .elements()
            .map(|p| {
                if p.name != "param" {
                    return Err(XmlRpcError::Malformed(format!("unexpected <{}> in <params>", p.name)));
                }
                let v = p
                    .child("value")
                    .ok_or_else(|| XmlRpcError::Malformed("<param> without <value>".into()))?;
                XrValue::decode(v, 0)
            })
            .collect::<Result<_, _>>()?,
    };
    Ok((method, params))
}

/// Parses a `methodResponse` body; `<fault>` becomes [`XmlRpcError::Fault`].
pub fn decode_response_body(body: &str) -> Result<XrValue, XmlRpcError> {
    let root = xml::parse_document(body)?;
    if root.name != "methodResponse" {
        return Err(XmlRpcError::Malformed(format!("expected <methodResponse>, found <{}>", root.name)));
    }
    if let Some(fault) = root.child("fault") {
        let v = fault
            .child("value")
            .ok_or_else(|| XmlRpcError::Malformed("<fault> without <value>".into()))?;
        let v = XrValue::decode(v, 0)?;
        let code = v.member("faultCode").and_then(XrValue::as_int).unwrap_or(-1);
        let message = v
            .member("faultString")
            .and_then(XrValue::as_str)
            .unwrap_or_default()
            .to_string();
        return Err(XmlRpcError::Fault { code, message });
    }
    let value = root
        .child("params")
        .and_then(|p| p.child("param"))
        .and_then(|p| p.child("value"))
        .ok_or_else(|| XmlRpcError::Malformed("response without <params><param><value>".into()))?;
    XrValue::decode(value, 0)
}

/// Decodes a complete HTTP response carrying a `methodResponse`.
pub fn decode_response(bytes: &[u8]) -> Result<XrValue, XmlRpcError> {
    let msg = http::parse_message(bytes)?;
    if let Some(status) = msg.status {
        if status != 200 {
            return Err(XmlRpcError::Http(status));
        }
    }
    let body = std::str::from_utf8(&msg.body).map_err(|_| XmlRpcError::XmlSyntax("body is not UTF-8".into()))?;
    decode_response_body(body)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn int_and_bool_encoding() {
        let body = encode_call_body("m", &[XrValue::Int(3), XrValue::Bool(true), XrValue::str("")]);
        assert!(body.contains("<value><i4>3</i4></value>"));
        assert!(body.contains("<boolean>1</boolean>"));
        assert!(body.contains("<value><string></string></value>"));
    }

    #[test]
    fn untyped_and_int_variants_decode() {
        let body = "<?xml version=\"1.0\"?><methodResponse><params><param><value><array><data>\
            <value>plain</value><value><string></string></value><value></value><value><int>-4</int></value>\
            <value><double>0.1</double></value></data></array></value></param></params></methodResponse>";
        assert_eq!(
            decode_response_body(body).unwrap(),
            XrValue::Seq(vec![
                XrValue::str("plain"),
                XrValue::str(""),
                XrValue::str(""),
                XrValue::Int(-4),
                XrValue::Double(0.1)
            ])
        );
    }

    #[test]
    fn fault_maps_to_error() {
        let body = encode_fault_body(-1, "method not found");
        assert_eq!(
            decode_response_body(&body),
            Err(XmlRpcError::Fault { code: -1, message: "method not found".into() })
        );
    }

    #[test]
    fn call_round_trip() {
        let params = vec![XrValue::str("/node"), XrValue::Seq(vec![XrValue::str("TCPROS")])];
        let (m, p) = decode_call_body(&encode_call_body("requestTopic", &params)).unwrap();
        assert_eq!(m, "requestTopic");
        assert_eq!(p, params);
    }

    #[test]
    fn system_state_shape() {
        // getSystemState reply as sent by the reference master (whitespace trimmed).
        let body = r#"<?xml version='1.0'?>
<methodResponse>
<params>
<param>
<value><array><data>
<value><int>1</int></value>
<value><string>current system state</string></value>
<value><array><data>
<value><array><data>
<value><array><data>
<value><string>/rosout_agg</string></value>
<value><array><data>
<value><string>/rosout</string></value>
</data></array></value>
</data></array></value>
</data></array></value>
<value><array><data>
<value><array><data>
<value><string>/rosout</string></value>
<value><array><data>
<value><string>/rosout</string></value>
</data></array></value>
</data></array></value>
</data></array></value>
<value><array><data>
<value><array><data>
<value><string>/rosout/get_loggers</string></value>
<value><array><data>
<value><string>/rosout</string></value>
</data></array></value>
</data></array></value>
</data></array></value>
</data></array></value>
</data></array></value>
</param>
</params>
</methodResponse>
"#;
        let reply = RosRpcReply::from_value(decode_response_body(body).unwrap()).unwrap();
        assert_eq!(reply.code, 1);
        let lists = reply.payload.as_seq().unwrap();
        assert_eq!(lists.len(), 3);
        let publishers = lists[0].as_seq().unwrap();
        assert_eq!(publishers[0].as_seq().unwrap()[0], XrValue::str("/rosout_agg"));
        assert_eq!(publishers[0].as_seq().unwrap()[1].as_str_list().unwrap(), vec!["/rosout"]);
    }

    #[test]
    fn reply_shape_enforced() {
        assert!(RosRpcReply::from_value(XrValue::Seq(vec![XrValue::Int(1), XrValue::str("")])).is_err());
        assert!(RosRpcReply::from_value(XrValue::Int(1)).is_err());
        assert!(RosRpcReply::from_value(XrValue::Seq(vec![XrValue::str("1"), XrValue::str(""), XrValue::Int(0)])).is_err());
        let ok = RosRpcReply::success("ok", 5).into_value();
        assert_eq!(RosRpcReply::from_value(ok).unwrap().payload, XrValue::Int(5));
    }

    #[test]
    fn depth_limit_on_values() {
        let mut v = XrValue::Int(1);
        for _ in 0..=MAX_VALUE_DEPTH {
            v = XrValue::Seq(vec![v]);
        }
        let body = encode_response_body(&v);
        assert_eq!(decode_response_body(&body), Err(XmlRpcError::DepthExceeded));
    }

    fn arb_value() -> impl Strategy<Value = XrValue> {
        let leaf = prop_oneof![
            any::<i32>().prop_map(XrValue::Int),
            any::<bool>().prop_map(XrValue::Bool),
            ".*".prop_map(|s: String| XrValue::Str(s.replace('\r', "\n"))),
            any::<f64>().prop_filter("finite", |d| d.is_finite()).prop_map(XrValue::Double),
            proptest::collection::vec(any::<u8>(), 0..32).prop_map(XrValue::Binary),
        ];
        leaf.prop_recursive(8, 256, 16, |inner| {
            prop_oneof![
                proptest::collection::vec(inner.clone(), 0..16).prop_map(XrValue::Seq),
                proptest::collection::btree_map("[a-z_]{1,8}", inner, 0..16)
                    .prop_map(|m| XrValue::Record(m.into_iter().collect())),
            ]
        })
    }

    proptest! {
        #[test]
        fn encode_decode_round_trip(v in arb_value()) {
            let bytes = encode_response(&v);
            prop_assert_eq!(decode_response(&bytes).unwrap(), v);
        }

        #[test]
        fn decoder_total_on_garbage(body in ".{0,400}") {
            let _ = decode_response_body(&body);
            let _ = decode_call_body(&body);
        }
    }
}
