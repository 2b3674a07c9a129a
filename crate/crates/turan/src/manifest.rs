//! Run manifests: enough to re-run a command and check that it writes the
//! same bytes.

use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::io::{read_file, write_file};

pub const MANIFEST_SCHEMA: &str = "turan-manifest/v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputHash {
    pub path: String,
    pub sha256: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    pub schema: String,
    pub command: String,
    /// Command-line arguments after the program name.
    pub argv: Vec<String>,
    pub parameters: Value,
    pub code_version: String,
    /// Seconds since the Unix epoch; the only field that differs between
    /// runs.
    pub timestamp: String,
    pub inputs: Vec<InputHash>,
    pub output: String,
    pub output_sha256: String,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

pub fn hash_inputs(paths: &[PathBuf]) -> Result<Vec<InputHash>> {
    paths.iter().map(|p| Ok(InputHash { path: p.display().to_string(), sha256: sha256_hex(&read_file(p)?) })).collect()
}

/// `FILE.manifest.json` next to `FILE`.
pub fn manifest_path(output: &Path) -> PathBuf {
    let mut name = output.as_os_str().to_owned();
    name.push(".manifest.json");
    PathBuf::from(name)
}

impl RunManifest {
    pub fn new(
        command: &str,
        argv: Vec<String>,
        parameters: Value,
        inputs: Vec<InputHash>,
        output: &Path,
        output_bytes: &[u8],
    ) -> RunManifest {
        let timestamp = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        RunManifest {
            schema: MANIFEST_SCHEMA.to_string(),
            command: command.to_string(),
            argv,
            parameters,
            code_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: timestamp.to_string(),
            inputs,
            output: output.display().to_string(),
            output_sha256: sha256_hex(output_bytes),
        }
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        write_file(path, s.as_bytes())
    }

    pub fn read(path: &Path) -> Result<RunManifest> {
        let m: RunManifest = serde_json::from_slice(&read_file(path)?)?;
        if m.schema != MANIFEST_SCHEMA {
            return Err(Error::Usage(format!("{}: unknown manifest schema {:?}", path.display(), m.schema)));
        }
        Ok(m)
    }
}

/// Outcome of comparing a re-run with its manifest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplayReport {
    pub manifest: String,
    pub command: String,
    pub code_version_matches: bool,
    /// Inputs whose current hash differs from the recorded one.
    pub changed_inputs: Vec<String>,
    pub expected_sha256: String,
    pub actual_sha256: String,
    pub identical: bool,
}
