use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

pub const REPORT_FORMAT: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Success,
    VerificationFailed,
    CertificateFailed,
    Usage,
}

impl Outcome {
    pub fn code(self) -> u8 {
        match self {
            Outcome::Success => 0,
            Outcome::VerificationFailed => 1,
            Outcome::CertificateFailed => 2,
            Outcome::Usage => 64,
        }
    }

    fn status(self) -> &'static str {
        match self {
            Outcome::Success => "ok",
            Outcome::VerificationFailed => "verification-failed",
            Outcome::CertificateFailed => "certificate-failed",
            Outcome::Usage => "usage-error",
        }
    }
}

#[derive(Serialize)]
struct ReportDoc<'a> {
    format_version: u32,
    tool_version: &'static str,
    command: &'a str,
    argv: Vec<String>,
    inputs: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    rng_seed: Option<u64>,
    status: &'static str,
    elapsed_ms: f64,
    result: Value,
}

pub struct Reporter {
    command: &'static str,
    started: Instant,
    pub rng_seed: Option<u64>,
    pub inputs: Value,
}

impl Reporter {
    pub fn new(command: &'static str, inputs: Value) -> Self {
        Reporter { command, started: Instant::now(), rng_seed: None, inputs }
    }

    pub fn document(&self, outcome: Outcome, result: Value) -> String {
        let doc = ReportDoc {
            format_version: REPORT_FORMAT,
            tool_version: env!("CARGO_PKG_VERSION"),
            command: self.command,
            argv: std::env::args().collect(),
            inputs: self.inputs.clone(),
            rng_seed: self.rng_seed,
            status: outcome.status(),
            elapsed_ms: self.started.elapsed().as_secs_f64() * 1e3,
            result,
        };
        serde_json::to_string_pretty(&doc).expect("reports serialize")
    }

    pub fn emit(&self, outcome: Outcome, result: impl Serialize) -> Outcome {
        let value = serde_json::to_value(result).expect("results serialize");
        println!("{}", self.document(outcome, value));
        outcome
    }

    pub fn error(&self, outcome: Outcome, message: &str) -> Outcome {
        eprintln!("error: {message}");
        self.emit(outcome, serde_json::json!({ "error": message }))
    }
}
