//! Content-addressed on-disk cache of Betti tables.
//!
//! The key is a SHA-256 over the tool version, the field and the canonical
//! machine-format text of the ideal, so a version bump silently retires old
//! entries. Each entry also stores a digest of its table; an entry that fails
//! to parse or whose digest does not match is treated as a miss and removed.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::homology::{BettiEngine, BettiTable, Field, HomologyError};
use crate::monomial::MonomialIdeal;

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache directory {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: String,
    pub tool_version: String,
    pub created_unix: u64,
    pub table_digest: String,
    pub table: BettiTable,
}

#[derive(Debug, Clone)]
pub struct BettiCache {
    dir: PathBuf,
    version: String,
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn table_digest(table: &BettiTable) -> String {
    hex(&Sha256::digest(serde_json::to_vec(table).expect("serializable")))
}

impl BettiCache {
    pub fn open(dir: impl AsRef<Path>) -> Result<Self, CacheError> {
        BettiCache::with_version(dir, env!("CARGO_PKG_VERSION"))
    }

    pub fn with_version(dir: impl AsRef<Path>, version: &str) -> Result<Self, CacheError> {
        let dir = dir.as_ref().to_path_buf();
        let io_err = |source| CacheError::Io { path: dir.clone(), source };
        fs::create_dir_all(&dir).map_err(io_err)?;
        // fail early on a read-only directory
        let probe = dir.join(".write-probe");
        fs::write(&probe, b"").map_err(io_err)?;
        let _ = fs::remove_file(&probe);
        Ok(BettiCache { dir, version: version.to_string() })
    }

    pub fn key(&self, ideal: &MonomialIdeal, field: Field) -> String {
        let mut h = Sha256::new();
        h.update(b"edgereg-betti\n");
        h.update(self.version.as_bytes());
        h.update(b"\n");
        h.update(field.tag().as_bytes());
        h.update(b"\n");
        h.update(ideal.to_machine().as_bytes());
        hex(&h.finalize())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(&key[..2]).join(format!("{key}.json"))
    }

    pub fn get(&self, ideal: &MonomialIdeal, field: Field) -> Option<BettiTable> {
        let key = self.key(ideal, field);
        let path = self.path(&key);
        let bytes = fs::read(&path).ok()?;
        match serde_json::from_slice::<CacheEntry>(&bytes) {
            Ok(e) if e.key == key && e.tool_version == self.version && e.table_digest == table_digest(&e.table) => Some(e.table),
            _ => {
                let _ = fs::remove_file(&path);
                None
            }
        }
    }

    pub fn put(&self, ideal: &MonomialIdeal, table: &BettiTable) -> Result<CacheEntry, CacheError> {
        let key = self.key(ideal, table.field);
        let entry = CacheEntry {
            key: key.clone(),
            tool_version: self.version.clone(),
            created_unix: SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()),
            table_digest: table_digest(table),
            table: table.clone(),
        };
        let path = self.path(&key);
        let io_err = |source| CacheError::Io { path: path.clone(), source };
        fs::create_dir_all(path.parent().unwrap()).map_err(io_err)?;
        // write-then-rename so readers never see a partial entry
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, serde_json::to_vec(&entry).expect("serializable")).map_err(io_err)?;
        fs::rename(&tmp, &path).map_err(io_err)?;
        Ok(entry)
    }

    /// The cached table, or a fresh computation that is then stored. The flag
    /// reports a hit.
    pub fn get_or_compute(&self, engine: &BettiEngine, ideal: &MonomialIdeal, field: Field) -> Result<(BettiTable, bool), CacheError> {
        if let Some(t) = self.get(ideal, field) {
            return Ok((t, true));
        }
        let table = engine.betti_table_in(ideal, field)?;
        self.put(ideal, &table)?;
        Ok((table, false))
    }
}
