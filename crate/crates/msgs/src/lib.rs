//! Generated containers for the standard definitions bundled with `roslite`.
//!
//! The sources under `src/generated/` come from `roslite msg gen` run with no type arguments.
//! `tests/generated.rs` fails when they drift from the generator; rerun it
//! with `ROSLITE_REGEN=1` to rewrite them.

#[path = "generated/mod.rs"]
#[allow(clippy::derivable_impls, clippy::identity_op)]
mod generated;

pub use generated::*;
