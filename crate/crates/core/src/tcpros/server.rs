use std::net::{Shutdown, SocketAddr, TcpListener, TcpStream};
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::thread::JoinHandle;
use std::time::Duration;

use super::{ConnectionHeader, ServiceServer, SubscriberLink, TcprosError, TopicPublisher, DEFAULT_HANDSHAKE_TIMEOUT};

/// What a TCPROS listener can hand out: advertised topics and hosted services.
pub trait TcprosRegistry: Send + Sync {
    fn publisher(&self, topic: &str) -> Option<Arc<TopicPublisher>>;
    fn service(&self, name: &str) -> Option<Arc<ServiceServer>>;
}

fn reject(stream: &mut TcpStream, reason: &str) {
    let _ = ConnectionHeader::new().with("error", reason).write_to(stream);
    let _ = stream.shutdown(Shutdown::Both);
}

fn accept_topic(
    mut stream: TcpStream,
    header: &ConnectionHeader,
    registry: &dyn TcprosRegistry,
) -> Result<Arc<SubscriberLink>, TcprosError> {
    let topic = header.require("topic")?;
    let caller = header.get("callerid").unwrap_or_default().to_string();
    let Some(publisher) = registry.publisher(topic) else {
        reject(&mut stream, &format!("no topic {topic} advertised"));
        return Err(TcprosError::UnknownTopic(topic.to_string()));
    };
    let md5 = header.get("md5sum").unwrap_or("*");
    if md5 != "*" && md5 != publisher.md5sum {
        let reason = format!(
            "Client [{caller}] wants topic {topic} to have datatype/md5sum [{}/{md5}], but our version has [{}/{}]. Dropping connection.",
            header.get("type").unwrap_or_default(),
            publisher.type_name,
            publisher.md5sum
        );
        reject(&mut stream, &reason);
        return Err(TcprosError::Md5Mismatch {
            local: publisher.md5sum.clone(),
            remote: md5.to_string(),
        });
    }
    if header.get("tcp_nodelay") == Some("1") {
        let _ = stream.set_nodelay(true);
    }
    publisher.reply_header().write_to(&mut stream)?;
    stream.set_read_timeout(None)?;
    stream.set_write_timeout(None)?;
    Ok(publisher.attach(stream, &caller, md5)?)
}

/// Reads a subscriber's header from `stream` and, if it names an advertised
/// topic with a compatible md5sum, replies and starts the link. Failures are
/// reported to the peer as a single `error` header.
pub fn publisher_accept(
    mut stream: TcpStream,
    registry: &dyn TcprosRegistry,
    timeout: Duration,
) -> Result<Arc<SubscriberLink>, TcprosError> {
    stream.set_read_timeout(Some(timeout))?;
    stream.set_write_timeout(Some(timeout))?;
    let header = match ConnectionHeader::read_from(&mut stream) {
        Ok(h) => h,
        Err(e) => {
            reject(&mut stream, &e.to_string());
            return Err(e);
        }
    };
    accept_topic(stream, &header, registry)
}

fn handle(mut stream: TcpStream, registry: &dyn TcprosRegistry, timeout: Duration) -> Result<(), TcprosError> {
    stream.set_read_timeout(Some(timeout))?;
    stream.set_write_timeout(Some(timeout))?;
    let header = match ConnectionHeader::read_from(&mut stream) {
        Ok(h) => h,
        Err(e) => {
            reject(&mut stream, &e.to_string());
            return Err(e);
        }
    };
    if header.get("topic").is_some() {
        accept_topic(stream, &header, registry).map(|_| ())
    } else if let Some(name) = header.get("service") {
        let Some(server) = registry.service(name) else {
            reject(&mut stream, &format!("no service {name} provided"));
            return Err(TcprosError::UnknownService(name.to_string()));
        };
        server.serve(stream, &header)
    } else {
        reject(&mut stream, "connection header names neither a topic nor a service");
        Err(TcprosError::MissingField("topic"))
    }
}

/// The node's TCPROS listener, serving topic subscribers and service clients.
pub struct TcprosServer {
    addr: SocketAddr,
    stop: Arc<AtomicBool>,
    thread: Option<JoinHandle<()>>,
}

impl TcprosServer {
    pub fn bind(bind: &str, registry: Arc<dyn TcprosRegistry>) -> Result<Self, TcprosError> {
        Self::bind_with_timeout(bind, registry, DEFAULT_HANDSHAKE_TIMEOUT)
    }

    pub fn bind_with_timeout(
        bind: &str,
        registry: Arc<dyn TcprosRegistry>,
        handshake_timeout: Duration,
    ) -> Result<Self, TcprosError> {
        let listener = TcpListener::bind(bind)?;
        let addr = listener.local_addr()?;
        let stop = Arc::new(AtomicBool::new(false));
        let thread = {
            let stop = stop.clone();
            std::thread::Builder::new()
                .name(format!("tcpros-{}", addr.port()))
                .spawn(move || {
                    for conn in listener.incoming() {
                        if stop.load(Ordering::SeqCst) {
                            break;
                        }
                        let Ok(stream) = conn else { continue };
                        let registry = registry.clone();
                        let _ = std::thread::Builder::new().name("tcpros-conn".into()).spawn(move || {
                            if let Err(e) = handle(stream, &*registry, handshake_timeout) {
                                log::debug!("tcpros: inbound connection failed: {e}");
                            }
                        });
                    }
                })?
        };
        Ok(TcprosServer {
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

    pub fn shutdown(&mut self) {
        if self.stop.swap(true, Ordering::SeqCst) {
            return;
        }
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

impl Drop for TcprosServer {
    fn drop(&mut self) {
        self.shutdown();
    }
}
