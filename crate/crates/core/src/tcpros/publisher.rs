use std::collections::VecDeque;
use std::io::{Read, Write};
use std::net::{Shutdown, TcpStream};
use std::sync::atomic::{AtomicU64, AtomicU8, Ordering};
use std::sync::{Arc, Condvar, Mutex};

use super::{write_frame, ConnectionHeader};

/// Bounds of one subscriber's outgoing queue; whichever limit is hit first
/// triggers dropping the oldest queued message.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QueuePolicy {
    pub max_messages: usize,
    pub max_bytes: usize,
}

impl Default for QueuePolicy {
    fn default() -> Self {
        QueuePolicy {
            max_messages: 16,
            max_bytes: 4 * 1024 * 1024,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum LinkState {
    Handshaking = 0,
    Active = 1,
    Closed = 2,
    Errored = 3,
}

impl LinkState {
    fn from_u8(v: u8) -> LinkState {
        match v {
            0 => LinkState::Handshaking,
            1 => LinkState::Active,
            2 => LinkState::Closed,
            _ => LinkState::Errored,
        }
    }
}

/// Monotonic per-link counters, readable from any thread.
#[derive(Debug, Default)]
pub struct LinkCounters {
    pub messages: AtomicU64,
    pub bytes: AtomicU64,
    pub drops: AtomicU64,
}

impl LinkCounters {
    pub fn snapshot(&self) -> (u64, u64, u64) {
        (
            self.messages.load(Ordering::Relaxed),
            self.bytes.load(Ordering::Relaxed),
            self.drops.load(Ordering::Relaxed),
        )
    }
}

/// Result of offering a message to a subscriber queue.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Offer {
    Accepted,
    /// Accepted after evicting this many older messages.
    DroppedOldest(usize),
    /// The link is no longer live.
    Closed,
}

struct Queue {
    items: VecDeque<Arc<Vec<u8>>>,
    bytes: usize,
}

/// The publisher's view of one connected subscriber. A dedicated writer
/// thread drains the queue, so a slow peer only ever stalls itself.
pub struct SubscriberLink {
    id: u64,
    pub remote_caller_id: String,
    pub topic: String,
    pub md5sum: String,
    pub counters: LinkCounters,
    state: AtomicU8,
    policy: QueuePolicy,
    queue: Mutex<Queue>,
    ready: Condvar,
    stream: TcpStream,
}

impl SubscriberLink {
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn state(&self) -> LinkState {
        LinkState::from_u8(self.state.load(Ordering::SeqCst))
    }

    pub fn is_live(&self) -> bool {
        matches!(self.state(), LinkState::Handshaking | LinkState::Active)
    }

    pub fn queued(&self) -> usize {
        self.queue.lock().expect("queue lock").items.len()
    }

    /// Enqueues a message, evicting the oldest entries while over either bound.
    pub fn offer(&self, msg: Arc<Vec<u8>>) -> Offer {
        if !self.is_live() {
            return Offer::Closed;
        }
        let mut q = self.queue.lock().expect("queue lock");
        q.bytes += msg.len();
        q.items.push_back(msg);
        let mut dropped = 0;
        while q.items.len() > self.policy.max_messages.max(1)
            || (q.bytes > self.policy.max_bytes && q.items.len() > 1)
        {
            let old = q.items.pop_front().expect("non-empty");
            q.bytes -= old.len();
            dropped += 1;
        }
        drop(q);
        self.ready.notify_one();
        if dropped > 0 {
            self.counters.drops.fetch_add(dropped as u64, Ordering::Relaxed);
            Offer::DroppedOldest(dropped)
        } else {
            Offer::Accepted
        }
    }

    pub fn close(&self) {
        self.finish(LinkState::Closed);
    }

    fn finish(&self, state: LinkState) {
        let prev = self.state.swap(state as u8, Ordering::SeqCst);
        if matches!(LinkState::from_u8(prev), LinkState::Closed | LinkState::Errored) {
            // Keep the first terminal state.
            self.state.store(prev, Ordering::SeqCst);
        }
        let _ = self.stream.shutdown(Shutdown::Both);
        self.ready.notify_all();
    }

    fn next(&self) -> Option<Arc<Vec<u8>>> {
        let mut q = self.queue.lock().expect("queue lock");
        loop {
            if !self.is_live() {
                return None;
            }
            if let Some(msg) = q.items.pop_front() {
                q.bytes -= msg.len();
                return Some(msg);
            }
            q = self.ready.wait(q).expect("queue lock");
        }
    }

    fn write_loop(self: Arc<Self>, mut stream: TcpStream) {
        while let Some(msg) = self.next() {
            let written = write_frame(&mut stream, &msg).and_then(|_| stream.flush().map_err(Into::into));
            if let Err(e) = written {
                log::debug!("{}: link to {} failed: {e}", self.topic, self.remote_caller_id);
                self.finish(LinkState::Errored);
                return;
            }
            self.counters.messages.fetch_add(1, Ordering::Relaxed);
            self.counters.bytes.fetch_add(msg.len() as u64 + 4, Ordering::Relaxed);
        }
    }

    /// Subscribers never send after the handshake; EOF means they left.
    fn watch_loop(self: Arc<Self>, mut stream: TcpStream) {
        let mut sink = [0u8; 256];
        loop {
            match stream.read(&mut sink) {
                Ok(0) | Err(_) => break,
                Ok(_) => {}
            }
        }
        self.close();
    }
}

struct PublisherState {
    latched: Option<Arc<Vec<u8>>>,
    links: Vec<Arc<SubscriberLink>>,
    next_id: u64,
}

/// One advertised topic: its metadata, latched message and live links.
pub struct TopicPublisher {
    pub topic: String,
    pub type_name: String,
    pub md5sum: String,
    pub definition: String,
    pub caller_id: String,
    pub latching: bool,
    pub policy: QueuePolicy,
    state: Mutex<PublisherState>,
}

impl TopicPublisher {
    pub fn new(
        topic: &str,
        type_name: &str,
        md5sum: &str,
        definition: &str,
        caller_id: &str,
        latching: bool,
        policy: QueuePolicy,
    ) -> Self {
        TopicPublisher {
            topic: topic.to_string(),
            type_name: type_name.to_string(),
            md5sum: md5sum.to_string(),
            definition: definition.to_string(),
            caller_id: caller_id.to_string(),
            latching,
            policy,
            state: Mutex::new(PublisherState {
                latched: None,
                links: Vec::new(),
                next_id: 1,
            }),
        }
    }

    /// Header sent back to an accepted subscriber.
    pub fn reply_header(&self) -> ConnectionHeader {
        ConnectionHeader::new()
            .with("callerid", &self.caller_id)
            .with("latching", if self.latching { "1" } else { "0" })
            .with("md5sum", &self.md5sum)
            .with("message_definition", &self.definition)
            .with("topic", &self.topic)
            .with("type", &self.type_name)
    }

    /// Offers one serialized message to every live link; returns how many accepted it.
    pub fn publish(&self, bytes: Vec<u8>) -> usize {
        let msg = Arc::new(bytes);
        let mut st = self.state.lock().expect("publisher lock");
        if self.latching {
            st.latched = Some(msg.clone());
        }
        st.links.retain(|l| l.is_live());
        st.links
            .iter()
            .filter(|l| l.offer(msg.clone()) != Offer::Closed)
            .count()
    }

    /// Registers an accepted subscriber socket (reply header already sent)
    /// and starts its writer. A latched message is queued first, under the
    /// same lock that `publish` takes, so it is delivered exactly once.
    pub fn attach(
        &self,
        stream: TcpStream,
        remote_caller_id: &str,
        md5sum: &str,
    ) -> std::io::Result<Arc<SubscriberLink>> {
        let writer = stream.try_clone()?;
        let watcher = stream.try_clone()?;
        let mut st = self.state.lock().expect("publisher lock");
        let link = Arc::new(SubscriberLink {
            id: st.next_id,
            remote_caller_id: remote_caller_id.to_string(),
            topic: self.topic.clone(),
            md5sum: md5sum.to_string(),
            counters: LinkCounters::default(),
            state: AtomicU8::new(LinkState::Active as u8),
            policy: self.policy,
            queue: Mutex::new(Queue {
                items: VecDeque::new(),
                bytes: 0,
            }),
            ready: Condvar::new(),
            stream,
        });
        st.next_id += 1;
        if let Some(latched) = &st.latched {
            link.offer(latched.clone());
        }
        st.links.retain(|l| l.is_live());
        st.links.push(link.clone());
        drop(st);
        let l = link.clone();
        std::thread::Builder::new()
            .name(format!("tcpros-pub{}", self.topic))
            .spawn(move || l.write_loop(writer))?;
        let l = link.clone();
        std::thread::Builder::new()
            .name("tcpros-watch".into())
            .spawn(move || l.watch_loop(watcher))?;
        Ok(link)
    }

    pub fn links(&self) -> Vec<Arc<SubscriberLink>> {
        let mut st = self.state.lock().expect("publisher lock");
        st.links.retain(|l| l.is_live());
        st.links.clone()
    }

    pub fn num_subscribers(&self) -> usize {
        self.links().len()
    }

    pub fn latched(&self) -> Option<Arc<Vec<u8>>> {
        self.state.lock().expect("publisher lock").latched.clone()
    }

    /// Closes every link.
    pub fn close(&self) {
        let links = std::mem::take(&mut self.state.lock().expect("publisher lock").links);
        for l in links {
            l.close();
        }
    }
}

impl Drop for TopicPublisher {
    fn drop(&mut self) {
        self.close();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::net::TcpListener;

    fn socket_pair() -> (TcpStream, TcpStream) {
        let l = TcpListener::bind("127.0.0.1:0").unwrap();
        let a = TcpStream::connect(l.local_addr().unwrap()).unwrap();
        let (b, _) = l.accept().unwrap();
        (a, b)
    }

    fn idle_link(policy: QueuePolicy) -> (SubscriberLink, TcpStream) {
        let (a, b) = socket_pair();
        let link = SubscriberLink {
            id: 1,
            remote_caller_id: "/peer".into(),
            topic: "/t".into(),
            md5sum: "*".into(),
            counters: LinkCounters::default(),
            state: AtomicU8::new(LinkState::Active as u8),
            policy,
            queue: Mutex::new(Queue {
                items: VecDeque::new(),
                bytes: 0,
            }),
            ready: Condvar::new(),
            stream: a,
        };
        (link, b)
    }

    #[test]
    fn queue_of_one_keeps_latest() {
        let (link, _peer) = idle_link(QueuePolicy {
            max_messages: 1,
            max_bytes: 1 << 20,
        });
        assert_eq!(link.offer(Arc::new(vec![1])), Offer::Accepted);
        assert_eq!(link.offer(Arc::new(vec![2])), Offer::DroppedOldest(1));
        assert_eq!(link.offer(Arc::new(vec![3])), Offer::DroppedOldest(1));
        assert_eq!(link.next().as_deref(), Some(&vec![3]));
        assert_eq!(link.counters.drops.load(Ordering::Relaxed), 2);
    }

    #[test]
    fn byte_bound_drops_oldest_but_keeps_newest() {
        let (link, _peer) = idle_link(QueuePolicy {
            max_messages: 16,
            max_bytes: 10,
        });
        link.offer(Arc::new(vec![0; 6]));
        assert_eq!(link.offer(Arc::new(vec![0; 6])), Offer::DroppedOldest(1));
        // A single oversized message is still delivered.
        assert_eq!(link.offer(Arc::new(vec![0; 64])), Offer::DroppedOldest(1));
        assert_eq!(link.queued(), 1);
    }

    #[test]
    fn closed_link_refuses() {
        let (link, _peer) = idle_link(QueuePolicy::default());
        link.close();
        assert_eq!(link.offer(Arc::new(vec![1])), Offer::Closed);
        assert_eq!(link.state(), LinkState::Closed);
        assert!(link.next().is_none());
    }
}
