use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

impl Verdict {
    pub fn exit_code(self) -> u8 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Error => 2,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorInfo {
    pub kind: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Timings {
    pub elapsed_us: u64,
}

/// Everything a command prints. Field order is fixed and `timings` comes
/// last, so two runs differ at most in the final line.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub inputs: Value,
    pub verdict: Verdict,
    pub result: Option<Value>,
    pub error: Option<ErrorInfo>,
    pub timings: Timings,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self, summary: &str) -> String {
        let mut out = String::new();
        let verdict = match self.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Error => "ERROR",
        };
        let _ = writeln!(out, "{}: {verdict}", self.command);
        if !summary.is_empty() {
            out.push_str(summary);
            if !summary.ends_with('\n') {
                out.push('\n');
            }
        }
        if let Some(e) = &self.error {
            let _ = writeln!(out, "{}: {}", e.kind, e.message);
        }
        let _ = writeln!(out, "elapsed: {} us", self.timings.elapsed_us);
        out
    }
}
