pub mod bench;
pub mod graph;
pub mod msg;
pub mod param;
pub mod run;
pub mod topic;

use std::time::Duration;

use crate::error::{CliError, CliResult};

/// Parses a JSON literal given on the command line.
pub fn parse_json_arg(what: &str, text: &str) -> CliResult<serde_json::Value> {
    serde_json::from_str(text).map_err(|e| CliError::usage(format!("{what} is not valid JSON: {e}")))
}

pub fn seconds(what: &str, v: f64) -> CliResult<Duration> {
    if v.is_finite() && v >= 0.0 {
        Ok(Duration::from_secs_f64(v))
    } else {
        Err(CliError::usage(format!("{what} must be a non-negative number of seconds")))
    }
}
