//! Command implementations behind the `vsrc` binary.
//!
//! Every command returns an [`Outcome`]: a [`RunRecord`] for `--json`
//! output, a human-readable rendering, and the process exit code.

pub mod commands;
pub mod experiment;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const SEMANTIC: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const BUDGET: i32 = 3;
    pub const INTERNAL: i32 = 4;
}

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input; exit code 2.
    Parse(String),
    /// A broken internal invariant; exit code 4.
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => exit::PARSE,
            CliError::Internal(_) => exit::INTERNAL,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(msg) => write!(f, "parse error: {msg}"),
            CliError::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

/// Machine-readable result of one command.
#[derive(Debug, Clone, Serialize)]
pub struct RunRecord {
    pub command: &'static str,
    /// SHA-256 of the primary input, hex encoded.
    pub input_digest: String,
    pub method: Option<String>,
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<f64>,
    pub valid: bool,
    pub certificates: Value,
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub record: RunRecord,
    pub text: String,
    pub exit_code: i32,
}

impl Outcome {
    pub fn render(&self, json: bool) -> String {
        if json {
            serde_json::to_string_pretty(&self.record).expect("records serialize")
        } else {
            self.text.clone()
        }
    }
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}
