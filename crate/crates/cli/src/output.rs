use std::fmt;
use std::io::{self, Write};
use std::process::ExitCode;

use serde::Serialize;

pub const FORMAT_VERSION: &str = "sylowscope/1";

#[derive(Debug)]
pub enum CliError {
    /// Unparseable input.
    Syntax(String),
    /// Well-formed input naming something invalid.
    Invalid(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Syntax(_) => ExitCode::from(3),
            CliError::Invalid(_) => ExitCode::from(2),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Syntax(msg) | CliError::Invalid(msg) => f.write_str(msg),
        }
    }
}

impl From<sylowscope::catalog::GroupError> for CliError {
    fn from(err: sylowscope::catalog::GroupError) -> Self {
        if err.is_syntax() {
            CliError::Syntax(err.to_string())
        } else {
            CliError::Invalid(format!("{err} [{}]", err.code()))
        }
    }
}

#[derive(Serialize)]
struct Record<'a, Q, R> {
    version: &'static str,
    command: &'a str,
    query: Q,
    result: R,
}

/// Writes results either as text or as one JSON object per line.
pub struct Printer {
    json: bool,
    quiet: bool,
    stdout: io::StdoutLock<'static>,
}

impl Printer {
    pub fn new(json: bool, quiet: bool) -> Self {
        Printer {
            json,
            quiet,
            stdout: io::stdout().lock(),
        }
    }

    pub fn quiet(&self) -> bool {
        self.quiet
    }

    pub fn record<Q: Serialize, R: Serialize>(
        &mut self,
        command: &str,
        query: Q,
        result: R,
        text: impl FnOnce() -> String,
    ) {
        let line = if self.json {
            let record = Record {
                version: FORMAT_VERSION,
                command,
                query,
                result,
            };
            serde_json::to_string(&record).expect("records serialise")
        } else {
            text()
        };
        // A closed pipe is not worth a panic.
        let _ = writeln!(self.stdout, "{line}");
    }

    /// Extra text-mode detail, dropped by `--json` and `--quiet`.
    pub fn note(&mut self, text: impl fmt::Display) {
        if !self.json && !self.quiet {
            let _ = writeln!(self.stdout, "{text}");
        }
    }
}
