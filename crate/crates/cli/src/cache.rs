//! Result cache: one JSON envelope per (version, config) digest.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use anyhow::Context;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub struct Store {
    dir: PathBuf,
}

/// Hex SHA-256 of the tool version and the canonical config.
pub fn key(version: &str, config: &Value) -> String {
    let mut hasher = Sha256::new();
    hasher.update(version.as_bytes());
    hasher.update([0]);
    hasher.update(config.to_string().as_bytes());
    hex::encode(hasher.finalize())
}

impl Store {
    /// `--cache-dir`, then `$SPHALG_CACHE_DIR`, `$XDG_CACHE_HOME/sphalg`,
    /// `$HOME/.cache/sphalg`.
    pub fn locate(explicit: Option<PathBuf>) -> Option<Store> {
        let env = |name: &str| std::env::var_os(name).filter(|v| !v.is_empty()).map(PathBuf::from);
        let dir = explicit
            .or_else(|| env("SPHALG_CACHE_DIR"))
            .or_else(|| env("XDG_CACHE_HOME").map(|d| d.join("sphalg")))
            .or_else(|| env("HOME").map(|d| d.join(".cache").join("sphalg")))?;
        Some(Store { dir })
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// A stored envelope, if present and readable.
    pub fn load(&self, key: &str) -> Option<Value> {
        let bytes = fs::read(self.path(key)).ok()?;
        serde_json::from_slice(&bytes).ok()
    }

    /// Writes through a temporary file and a rename so readers never see a
    /// partial entry.
    pub fn save(&self, key: &str, envelope: &Value) -> anyhow::Result<()> {
        fs::create_dir_all(&self.dir).with_context(|| format!("creating {}", self.dir.display()))?;
        let tmp = self.dir.join(format!(".{key}.{}.tmp", std::process::id()));
        let mut file = fs::File::create(&tmp).with_context(|| format!("creating {}", tmp.display()))?;
        file.write_all(serde_json::to_string(envelope)?.as_bytes())?;
        file.sync_all()?;
        drop(file);
        fs::rename(&tmp, self.path(key)).context("moving cache entry into place")?;
        Ok(())
    }
}
