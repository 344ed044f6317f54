use std::time::Instant;

use serde::Serialize;
use serde_json::Value;
use trifree_core::{Error, Verdict};

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_UNDECIDED: i32 = 2;
pub const EXIT_SIZE_CAP: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

pub fn exit_code(v: Verdict) -> i32 {
    match v {
        Verdict::CertifiedTrue => EXIT_TRUE,
        Verdict::CertifiedFalse => EXIT_FALSE,
        Verdict::Undecided => EXIT_UNDECIDED,
    }
}

/// Exit code for a run that stopped with an error.
pub fn error_code(e: &Error) -> i32 {
    match e {
        Error::SizeCap { .. } => EXIT_SIZE_CAP,
        Error::AmbiguousCeiling { .. } | Error::NoTailAvailable => EXIT_UNDECIDED,
        Error::NoColoring | Error::ZeroDenominator => EXIT_FALSE,
        _ => EXIT_USAGE,
    }
}

#[derive(Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

/// The JSON document every command emits.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: Value,
    pub verdict: Option<Verdict>,
    pub exit_code: i32,
    pub results: Value,
    pub error: Option<String>,
    pub seeds: Vec<u64>,
    pub timing: Option<Timing>,
    pub version: &'static str,
}

/// What a command hands back to the driver.
pub struct Outcome {
    pub verdict: Option<Verdict>,
    pub results: Value,
    pub seeds: Vec<u64>,
    /// Tabular side output (CSV), written where `--csv` points.
    pub csv: Option<String>,
}

impl Outcome {
    pub fn new(verdict: Option<Verdict>, results: Value) -> Self {
        Outcome {
            verdict,
            results,
            seeds: Vec::new(),
            csv: None,
        }
    }

    pub fn code(&self) -> i32 {
        self.verdict.map_or(EXIT_TRUE, exit_code)
    }
}

pub struct Clock(Instant);

impl Clock {
    pub fn start() -> Self {
        Clock(Instant::now())
    }

    pub fn timing(&self, enabled: bool) -> Option<Timing> {
        enabled.then(|| Timing {
            elapsed_ms: self.0.elapsed().as_secs_f64() * 1e3,
        })
    }
}

pub fn version() -> &'static str {
    env!("CARGO_PKG_VERSION")
}
