//! Command dispatch for the `nagata` binary.

pub mod output;
pub mod parse;

use std::path::PathBuf;

use clap::ValueEnum;
use nagata_core::{FaceModel, PairingAction};
use serde_json::json;
use thiserror::Error;

use crate::output::OutputDocument;
use crate::parse::{ParseError, SCHEMA};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Bigraded Hilbert table and vector.
    Hilbert,
    /// Generators of the annihilator.
    Ann,
    /// Closed form against the catalecticant oracle.
    Check,
    /// Hasse diagram of the face poset.
    Hasse,
    /// Weak and strong Lefschetz checks.
    Lefschetz,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Action {
    Contraction,
    Differentiation,
}

impl From<Action> for PairingAction {
    fn from(a: Action) -> Self {
        match a {
            Action::Contraction => PairingAction::Contraction,
            Action::Differentiation => PairingAction::Differentiation,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Options {
    pub format: Format,
    pub action: Option<PairingAction>,
    pub minimal: bool,
    pub dot: Option<PathBuf>,
    pub trials: usize,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            format: Format::Json,
            action: None,
            minimal: false,
            dot: None,
            trials: 10,
            seed: 0,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] nagata_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn to_json(&self) -> String {
        let mut error = json!({"kind": "validation", "message": self.to_string()});
        if let CliError::Parse(p) = self {
            if let Some(c) = p.column() {
                error["column"] = c.into();
            }
        }
        json!({"schema_version": SCHEMA, "error": error}).to_string()
    }
}

/// Exit status of a finished run.
pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub exit: i32,
}

pub fn document(command: Command, text: &str, opts: &Options) -> Result<OutputDocument, CliError> {
    let input = parse::parse(text, opts.action)?;
    if let Some(path) = &opts.dot {
        let dot = FaceModel::build(&input).hasse_dot();
        std::fs::write(path, dot).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
    }
    Ok(match command {
        Command::Hilbert => output::hilbert(&input),
        Command::Ann => output::ann(&input, opts.minimal),
        Command::Check => output::check(&input),
        Command::Hasse => output::hasse(&input),
        Command::Lefschetz => output::lefschetz(&input, opts.trials, opts.seed)?,
    })
}

pub fn run(command: Command, text: &str, opts: &Options) -> Result<Outcome, CliError> {
    let doc = document(command, text, opts)?;
    let stdout = match opts.format {
        Format::Json => doc.to_json(),
        Format::Text => doc.to_text(),
    };
    let exit = if doc.ok() { EXIT_OK } else { EXIT_MISMATCH };
    Ok(Outcome { stdout, exit })
}
