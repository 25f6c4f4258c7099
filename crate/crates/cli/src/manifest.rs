//! Run manifests: every subcommand records its exact argument vector, seed,
//! and output files, so `excount replay manifest.json` reproduces the run
//! byte for byte.

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use std::fs;
use std::path::{Path, PathBuf};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool: String,
    pub version: String,
    pub subcommand: String,
    /// Full argument vector after the binary name.
    pub args: Vec<String>,
    pub seed: Option<u64>,
    /// Output files relative to the manifest's directory.
    pub outputs: Vec<String>,
}

impl RunManifest {
    pub fn new(subcommand: &str, args: Vec<String>, seed: Option<u64>) -> Self {
        RunManifest {
            tool: "excount".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            subcommand: subcommand.into(),
            args,
            seed,
            outputs: Vec::new(),
        }
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading manifest {}", path.display()))?;
        serde_json::from_str(&text).context("parsing manifest")
    }
}

/// Write bytes to `dir/name` atomically (temp file + rename).
pub fn write_output(dir: &Path, name: &str, bytes: &[u8]) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = dir.join(name);
    let tmp = dir.join(format!(".{name}.tmp"));
    fs::write(&tmp, bytes).with_context(|| format!("writing {}", tmp.display()))?;
    fs::rename(&tmp, &path)?;
    Ok(path)
}

/// Serialize pretty JSON with a trailing newline; key order is struct order,
/// so equal values give equal bytes.
pub fn to_json_bytes<T: Serialize>(value: &T) -> Result<Vec<u8>> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text.into_bytes())
}

pub fn finish(dir: &Path, mut manifest: RunManifest, outputs: Vec<String>) -> Result<()> {
    manifest.outputs = outputs;
    let bytes = to_json_bytes(&manifest)?;
    write_output(dir, "manifest.json", &bytes)?;
    Ok(())
}
