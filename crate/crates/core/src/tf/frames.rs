//! Latest-value transform tree fed from `tf2_msgs/TFMessage`.

use std::collections::{HashMap, HashSet};
use std::time::Instant;

use crate::wire::{DynamicValue, Time};

use super::{Quat, Real, TfError, Transform, Vec3};

/// Edge from a child frame to its parent.
#[derive(Debug, Clone)]
pub struct FrameEntry<T: Real> {
    pub parent: String,
    /// Maps points in the child frame into the parent frame.
    pub transform: Transform<T>,
    pub stamp: Time,
    pub received: Instant,
    pub is_static: bool,
}

/// Outcome of ingesting one `TFMessage`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IngestReport {
    pub accepted: usize,
    pub rejected: Vec<TfError>,
}

/// Child → parent map with latest-received-wins semantics and no cycles.
#[derive(Debug, Clone)]
pub struct FrameTree<T: Real> {
    frames: HashMap<String, FrameEntry<T>>,
    cycles_rejected: u64,
    invalid_rejected: u64,
}

impl<T: Real> Default for FrameTree<T> {
    fn default() -> Self {
        FrameTree {
            frames: HashMap::new(),
            cycles_rejected: 0,
            invalid_rejected: 0,
        }
    }
}

/// tf2 frame ids carry no leading slash.
pub fn canonical_frame(id: &str) -> &str {
    id.trim_start_matches('/')
}

impl<T: Real> FrameTree<T> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Upserts `child → parent`. The rotation is normalized; an edge that
    /// would close a cycle is dropped and counted.
    pub fn insert(
        &mut self,
        child: &str,
        parent: &str,
        transform: Transform<T>,
        stamp: Time,
        is_static: bool,
    ) -> Result<(), TfError> {
        let (child, parent) = (canonical_frame(child), canonical_frame(parent));
        if child.is_empty() || parent.is_empty() {
            self.invalid_rejected += 1;
            return Err(TfError::InvalidTransform(format!("empty frame id in {parent:?} → {child:?}")));
        }
        let Some(rotation) = transform.rotation.normalized() else {
            self.invalid_rejected += 1;
            return Err(TfError::InvalidTransform(format!("{parent} → {child}: degenerate rotation")));
        };
        if !transform.translation.is_finite() {
            self.invalid_rejected += 1;
            return Err(TfError::InvalidTransform(format!("{parent} → {child}: non-finite translation")));
        }
        if child == parent || self.ancestors(parent).any(|a| a == child) {
            self.cycles_rejected += 1;
            return Err(TfError::CycleRejected {
                child: child.to_string(),
                parent: parent.to_string(),
            });
        }
        self.frames.insert(
            child.to_string(),
            FrameEntry {
                parent: parent.to_string(),
                transform: Transform::new(transform.translation, rotation),
                stamp,
                received: Instant::now(),
                is_static,
            },
        );
        Ok(())
    }

    /// Ingests every `TransformStamped` in a `tf2_msgs/TFMessage` value.
    pub fn ingest(&mut self, msg: &DynamicValue, is_static: bool) -> Result<IngestReport, TfError> {
        let transforms = msg
            .field("transforms")
            .and_then(DynamicValue::as_seq)
            .ok_or_else(|| TfError::SchemaMismatch("expected a tf2_msgs/TFMessage with `transforms`".into()))?;
        let mut report = IngestReport::default();
        for ts in transforms {
            let (child, parent, transform, stamp) = transform_stamped(ts)?;
            match self.insert(&child, &parent, transform, stamp, is_static) {
                Ok(()) => report.accepted += 1,
                Err(e) => {
                    log::debug!("tf: {e}");
                    report.rejected.push(e);
                }
            }
        }
        Ok(report)
    }

    /// Walks from `frame` (exclusive) up to its root.
    fn ancestors<'a>(&'a self, frame: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        let mut cur = frame;
        let mut steps = 0usize;
        let limit = self.frames.len();
        std::iter::from_fn(move || {
            if steps > limit {
                return None;
            }
            steps += 1;
            let parent = self.frames.get(cur)?.parent.as_str();
            cur = parent;
            Some(parent)
        })
    }

    pub fn contains(&self, frame: &str) -> bool {
        let frame = canonical_frame(frame);
        self.frames.contains_key(frame) || self.frames.values().any(|e| e.parent == frame)
    }

    pub fn parent(&self, frame: &str) -> Option<&str> {
        self.frames.get(canonical_frame(frame)).map(|e| e.parent.as_str())
    }

    pub fn entry(&self, frame: &str) -> Option<&FrameEntry<T>> {
        self.frames.get(canonical_frame(frame))
    }

    /// Every known frame, sorted.
    pub fn frames(&self) -> Vec<String> {
        let mut all: HashSet<&str> = self.frames.keys().map(String::as_str).collect();
        all.extend(self.frames.values().map(|e| e.parent.as_str()));
        let mut v: Vec<String> = all.into_iter().map(str::to_string).collect();
        v.sort();
        v
    }

    pub fn len(&self) -> usize {
        self.frames.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frames.is_empty()
    }

    pub fn cycles_rejected(&self) -> u64 {
        self.cycles_rejected
    }

    pub fn invalid_rejected(&self) -> u64 {
        self.invalid_rejected
    }

    /// Drops dynamic edges received before `cutoff`; static edges never expire.
    pub fn expire(&mut self, cutoff: Instant) -> usize {
        let before = self.frames.len();
        self.frames.retain(|_, e| e.is_static || e.received >= cutoff);
        before - self.frames.len()
    }

    /// `frame` followed by each of its ancestors up to the root.
    fn chain<'a>(&'a self, frame: &'a str) -> Vec<&'a str> {
        std::iter::once(frame).chain(self.ancestors(frame)).collect()
    }

    /// Transform mapping points in `source` into `target` coordinates.
    pub fn lookup(&self, target: &str, source: &str) -> Result<Transform<T>, TfError> {
        let (target, source) = (canonical_frame(target), canonical_frame(source));
        for f in [target, source] {
            if !self.contains(f) {
                return Err(TfError::UnknownFrame(f.to_string()));
            }
        }
        if target == source {
            return Ok(Transform::identity());
        }
        let on_target: HashSet<&str> = self.chain(target).into_iter().collect();
        let Some(lca) = self.chain(source).into_iter().find(|f| on_target.contains(f)) else {
            return Err(TfError::FramesDisconnected {
                target_frame: target.to_string(),
                source_frame: source.to_string(),
            });
        };
        let up = |from: &str| {
            let mut t = Transform::identity();
            let mut cur = from;
            while cur != lca {
                let e = &self.frames[cur];
                t = e.transform.compose(&t);
                cur = &e.parent;
            }
            t
        };
        Ok(up(target).inverse().compose(&up(source)))
    }
}

fn f64_at(v: &DynamicValue, path: &str) -> Result<f64, TfError> {
    v.path(path)
        .and_then(DynamicValue::as_f64)
        .ok_or_else(|| TfError::SchemaMismatch(format!("TransformStamped is missing numeric `{path}`")))
}

fn transform_stamped<T: Real>(ts: &DynamicValue) -> Result<(String, String, Transform<T>, Time), TfError> {
    let text = |path: &str| {
        ts.path(path)
            .and_then(DynamicValue::as_str)
            .map(str::to_string)
            .ok_or_else(|| TfError::SchemaMismatch(format!("TransformStamped is missing `{path}`")))
    };
    let stamp = match ts.path("header.stamp") {
        Some(DynamicValue::Time(t)) => *t,
        _ => Time::default(),
    };
    let g = |p: &str| f64_at(ts, p).map(T::of);
    let transform = Transform::new(
        Vec3::new(g("transform.translation.x")?, g("transform.translation.y")?, g("transform.translation.z")?),
        Quat::new(
            g("transform.rotation.x")?,
            g("transform.rotation.y")?,
            g("transform.rotation.z")?,
            g("transform.rotation.w")?,
        ),
    );
    Ok((text("child_frame_id")?, text("header.frame_id")?, transform, stamp))
}
