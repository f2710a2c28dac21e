//! Job files: `{"schema": "relcone-job/1", "command": ..., "payload": {...}}`,
//! or `"payload_file"` naming a JSON file relative to the job file.

use std::fmt;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use relcone_core::cech;
use relcone_core::simplicial::builtins;

pub const JOB_SCHEMA: &str = "relcone-job/1";
pub const REPORT_SCHEMA: &str = "relcone-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Homology,
    RelativeHomology,
    ConeCompare,
    Cech,
    GerbeClass,
    RelativeGerbeClass,
    Integrality,
    BohrSommerfeld,
    Prequant,
    LiePrequant,
    LieInfo,
}

impl Command {
    pub const ALL: [Command; 11] = [
        Command::Homology,
        Command::RelativeHomology,
        Command::ConeCompare,
        Command::Cech,
        Command::GerbeClass,
        Command::RelativeGerbeClass,
        Command::Integrality,
        Command::BohrSommerfeld,
        Command::Prequant,
        Command::LiePrequant,
        Command::LieInfo,
    ];

    pub fn tag(self) -> String {
        serde_json::to_value(self).expect("unit variant").as_str().expect("string tag").to_string()
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("invalid input at `{path}`: {message}")]
    Validation { path: String, message: String },
    #[error("computation failed: {0}")]
    Computation(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Validation { .. } => 2,
            CliError::Computation(_) => 3,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "io",
            CliError::Validation { .. } => "validation",
            CliError::Computation(_) => "computation",
        }
    }

    pub fn invalid(path: impl Into<String>, message: impl fmt::Display) -> Self {
        CliError::Validation {
            path: path.into(),
            message: message.to_string(),
        }
    }

    pub fn compute(e: impl fmt::Display) -> Self {
        CliError::Computation(e.to_string())
    }

    pub fn to_json(&self) -> Value {
        let (path, message) = match self {
            CliError::Io { path, message } => (path.display().to_string(), message.clone()),
            CliError::Validation { path, message } => (path.clone(), message.clone()),
            CliError::Computation(m) => (String::new(), m.clone()),
        };
        json!({
            "schema": REPORT_SCHEMA,
            "error": { "kind": self.kind(), "path": path, "message": message },
        })
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JobFile {
    schema: String,
    command: Command,
    #[serde(default)]
    payload: Option<Value>,
    #[serde(default)]
    payload_file: Option<PathBuf>,
    #[serde(default)]
    format: Option<Format>,
}

/// A job with its payload resolved.
#[derive(Clone, Debug, PartialEq)]
pub struct Job {
    pub command: Command,
    pub payload: Value,
    pub format: Option<Format>,
}

/// Deserializes `value`, reporting failures with their JSON path under `prefix`.
pub fn from_value<T: DeserializeOwned>(prefix: &str, value: &Value) -> Result<T, CliError> {
    serde_path_to_error::deserialize(value.clone()).map_err(|e| {
        let inner = e.path().to_string();
        let path = if inner == "." { prefix.to_string() } else { format!("{prefix}.{inner}") };
        CliError::invalid(path, e.into_inner())
    })
}

fn parse_json(path: &Path, bytes: &[u8]) -> Result<Value, CliError> {
    serde_json::from_slice(bytes).map_err(|e| CliError::invalid(path.display().to_string(), e))
}

impl Job {
    pub fn new(command: Command, payload: Value) -> Self {
        Job {
            command,
            payload,
            format: None,
        }
    }

    /// Parses a job; `payload_file` is resolved against `base_dir`.
    pub fn parse(bytes: &[u8], base_dir: &Path) -> Result<Job, CliError> {
        let raw = parse_json(Path::new("job"), bytes)?;
        let file: JobFile = from_value("job", &raw)?;
        if file.schema != JOB_SCHEMA {
            return Err(CliError::invalid(
                "job.schema",
                format!("unsupported schema {:?}, expected {JOB_SCHEMA:?}", file.schema),
            ));
        }
        let payload = match (file.payload, file.payload_file) {
            (Some(p), None) => p,
            (None, Some(rel)) => {
                let path = base_dir.join(rel);
                let bytes = std::fs::read(&path).map_err(|e| CliError::Io {
                    path: path.clone(),
                    message: e.to_string(),
                })?;
                parse_json(&path, &bytes)?
            }
            _ => {
                return Err(CliError::invalid("job", "give exactly one of `payload` and `payload_file`"));
            }
        };
        Ok(Job {
            command: file.command,
            payload,
            format: file.format,
        })
    }

    pub fn read(path: &Path) -> Result<Job, CliError> {
        let bytes = std::fs::read(path).map_err(|e| CliError::Io {
            path: path.to_path_buf(),
            message: e.to_string(),
        })?;
        Job::parse(&bytes, path.parent().unwrap_or(Path::new(".")))
    }

    /// Homology for a built-in space, the cone comparison for a built-in
    /// simplicial map, Čech cohomology for a built-in nerve or cover map.
    pub fn builtin(name: &str) -> Result<Job, CliError> {
        let b = json!({ "builtin": name });
        if builtins::space(name).is_ok() {
            return Ok(Job::new(Command::Homology, json!({ "space": b })));
        }
        if builtins::map(name).is_ok() {
            return Ok(Job::new(Command::ConeCompare, json!({ "map": b })));
        }
        if cech::nerve::named(name).is_ok() {
            return Ok(Job::new(Command::Cech, json!({ "nerve": b })));
        }
        if cech::nerve::named_map(name).is_ok() {
            return Ok(Job::new(Command::Cech, json!({ "cover_map": b })));
        }
        Err(CliError::invalid("--builtin", format!("unknown built-in {name:?}")))
    }

    /// `sha256:` digest of the canonical JSON of schema, command and payload.
    pub fn digest(&self) -> String {
        let canonical = json!({
            "schema": JOB_SCHEMA,
            "command": self.command,
            "payload": self.payload,
        });
        let bytes = serde_json::to_vec(&canonical).expect("JSON values serialize");
        format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
    }
}
