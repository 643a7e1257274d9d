use std::collections::HashMap;
use std::io::Write;
use std::net::{SocketAddr, TcpListener, TcpStream};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::thread::JoinHandle;
use std::time::Duration;

use super::{decode_call_body, encode_fault, encode_response, http, XmlRpcError, XrValue};

/// A method implementation. `Err(reason)` is reported as fault `-1`.
pub type Handler = Arc<dyn Fn(&[XrValue]) -> Result<XrValue, String> + Send + Sync>;

/// Per-connection socket timeout; one request per connection.
const CONNECTION_TIMEOUT: Duration = Duration::from_secs(10);

/// A running XML-RPC server; stops on [`XmlRpcServer::shutdown`] or drop.
pub struct XmlRpcServer {
    addr: SocketAddr,
    stop: Arc<AtomicBool>,
    thread: Option<JoinHandle<()>>,
}

impl XmlRpcServer {
    /// Binds `bind` (port 0 picks an ephemeral port) and serves each
    /// connection on its own thread.
    pub fn serve(bind: &str, methods: HashMap<String, Handler>) -> Result<Self, XmlRpcError> {
        let listener = TcpListener::bind(bind).map_err(|e| XmlRpcError::Bind {
            addr: bind.to_string(),
            reason: e.to_string(),
        })?;
        let addr = listener.local_addr()?;
        let stop = Arc::new(AtomicBool::new(false));
        let methods = Arc::new(methods);
        let thread = {
            let stop = stop.clone();
            std::thread::Builder::new()
                .name(format!("xmlrpc-{}", addr.port()))
                .spawn(move || accept_loop(listener, methods, stop))?
        };
        Ok(XmlRpcServer {
            addr,
            stop,
            thread: Some(thread),
        })
    }

    pub fn local_addr(&self) -> SocketAddr {
        self.addr
    }

    pub fn port(&self) -> u16 {
        self.addr.port()
    }

    /// The URI peers should use, given the host name to advertise.
    pub fn uri(&self, advertised_host: &str) -> String {
        format!("http://{}:{}/", advertised_host, self.addr.port())
    }

    pub fn shutdown(&mut self) {
        if self.stop.swap(true, Ordering::SeqCst) {
            return;
        }
        // Wake the blocking accept.
        let mut wake = self.addr;
        if wake.ip().is_unspecified() {
            wake.set_ip(match wake {
                SocketAddr::V4(_) => std::net::Ipv4Addr::LOCALHOST.into(),
                SocketAddr::V6(_) => std::net::Ipv6Addr::LOCALHOST.into(),
            });
        }
        let _ = TcpStream::connect_timeout(&wake, Duration::from_secs(1));
        if let Some(t) = self.thread.take() {
            let _ = t.join();
        }
    }
}

impl Drop for XmlRpcServer {
    fn drop(&mut self) {
        self.shutdown();
    }
}

fn accept_loop(listener: TcpListener, methods: Arc<HashMap<String, Handler>>, stop: Arc<AtomicBool>) {
    for conn in listener.incoming() {
        if stop.load(Ordering::SeqCst) {
            break;
        }
        let Ok(stream) = conn else { continue };
        let methods = methods.clone();
        let spawned = std::thread::Builder::new()
            .name("xmlrpc-conn".into())
            .spawn(move || handle_connection(stream, &methods));
        if let Err(e) = spawned {
            log::warn!("xmlrpc: cannot spawn connection thread: {e}");
        }
    }
}

fn handle_connection(mut stream: TcpStream, methods: &HashMap<String, Handler>) {
    let _ = stream.set_read_timeout(Some(CONNECTION_TIMEOUT));
    let _ = stream.set_write_timeout(Some(CONNECTION_TIMEOUT));
    let reply = match http::read_http_message(&mut stream) {
        Ok(msg) if msg.status.is_some() => http::response(400, b"expected a request"),
        Ok(msg) => match std::str::from_utf8(&msg.body) {
            Ok(body) => dispatch(body, methods),
            Err(_) => encode_fault(-1, "request body is not UTF-8"),
        },
        Err(XmlRpcError::Chunked) => http::response(501, b"chunked transfer encoding not supported"),
        Err(XmlRpcError::Timeout) | Err(XmlRpcError::Io(_)) => return,
        Err(e) => http::response(400, e.to_string().as_bytes()),
    };
    let _ = stream.write_all(&reply);
    let _ = stream.flush();
    let _ = stream.shutdown(std::net::Shutdown::Both);
}

/// Decodes a `methodCall` body, runs the handler and encodes the HTTP reply.
pub(crate) fn dispatch(body: &str, methods: &HashMap<String, Handler>) -> Vec<u8> {
    let (method, params) = match decode_call_body(body) {
        Ok(call) => call,
        Err(e) => return encode_fault(-1, &e.to_string()),
    };
    let Some(handler) = methods.get(&method) else {
        return encode_fault(-1, "method not found");
    };
    match catch_unwind(AssertUnwindSafe(|| handler(&params))) {
        Ok(Ok(value)) => encode_response(&value),
        Ok(Err(reason)) => encode_fault(-1, &reason),
        Err(panic) => {
            let reason = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "handler panicked".to_string());
            encode_fault(-1, &reason)
        }
    }
}
