//! The JSON envelope written to stdout.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use semitotal::Error;

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_VERIFY: u8 = 3;
pub const EXIT_SCALE: u8 = 4;

#[derive(Debug, Clone, Serialize)]
pub struct Diagnostic {
    pub level: &'static str,
    pub code: &'static str,
    pub message: String,
}

impl Diagnostic {
    pub fn error(code: &'static str, message: impl Into<String>) -> Self {
        Diagnostic {
            level: "error",
            code,
            message: message.into(),
        }
    }

    pub fn warning(code: &'static str, message: impl Into<String>) -> Self {
        Diagnostic {
            level: "warning",
            code,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: Value,
    pub inputs_digest: String,
    pub results: Vec<Value>,
    pub diagnostics: Vec<Diagnostic>,
    pub timing: Timing,
}

/// Accumulates everything read so the digest covers all inputs in order.
#[derive(Default)]
pub struct Inputs {
    hasher: Sha256,
}

impl Inputs {
    pub fn absorb(&mut self, bytes: &[u8]) {
        self.hasher.update((bytes.len() as u64).to_le_bytes());
        self.hasher.update(bytes);
    }

    pub fn digest(self) -> String {
        let out = self.hasher.finalize();
        let hex: String = out.iter().map(|b| format!("{b:02x}")).collect();
        format!("sha256:{hex}")
    }
}

/// A failure with the exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub exit: u8,
    pub diagnostic: Diagnostic,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            exit: EXIT_USAGE,
            diagnostic: Diagnostic::error("usage", message),
        }
    }

    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            exit: EXIT_INPUT,
            diagnostic: Diagnostic::error("malformed-input", message),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (exit, code) = match &e {
            Error::ScaleLimit(_) => (EXIT_SCALE, "scale-limit"),
            Error::CertificateRejected(_) => (EXIT_VERIFY, "certificate-rejected"),
            Error::Parse { .. } => (EXIT_INPUT, "parse"),
            Error::InvalidInstance(_) => (EXIT_INPUT, "invalid-instance"),
            Error::PreconditionViolated(_) => (EXIT_INPUT, "precondition"),
            Error::Infeasible(_) => (EXIT_INPUT, "undefined-parameter"),
            _ => (EXIT_INPUT, "invalid-graph"),
        };
        Failure {
            exit,
            diagnostic: Diagnostic::error(code, e.to_string()),
        }
    }
}
