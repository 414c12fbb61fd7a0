//! Persistent content-addressed store for per-element results.
//!
//! Each entry is one JSON file named by the SHA-256 of its key. The file
//! carries the schema version, the key, the payload and the SHA-256 of the
//! payload; a mismatch in any of them makes the lookup a miss.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::SCHEMA_VERSION;
use crate::Result;

/// Identity of one cached computation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CacheKey {
    pub version: u32,
    pub sys: String,
    pub mode: String,
    pub word: String,
    pub nu: Vec<i32>,
    pub orientation: String,
}

impl CacheKey {
    pub fn new(sys: &str, mode: &str, word: &str, nu: &[i32], orientation: &str) -> CacheKey {
        CacheKey {
            version: SCHEMA_VERSION,
            sys: sys.to_string(),
            mode: mode.to_string(),
            word: word.to_string(),
            nu: nu.to_vec(),
            orientation: orientation.to_string(),
        }
    }

    /// Canonical text form, e.g. `v1|A2|flag|0121|0,0|all`.
    pub fn canonical(&self) -> String {
        let nu: Vec<String> = self.nu.iter().map(i32::to_string).collect();
        format!(
            "v{}|{}|{}|{}|{}|{}",
            self.version,
            self.sys,
            self.mode,
            self.word,
            nu.join(","),
            self.orientation
        )
    }

    fn digest(&self) -> String {
        sha256_hex(self.canonical().as_bytes())
    }
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Serialize, Deserialize)]
struct Entry {
    version: u32,
    key: String,
    checksum: String,
    payload: String,
}

/// On-disk cache with concurrent lookups and serialized stores.
#[derive(Debug)]
pub struct Cache {
    dir: PathBuf,
    write_lock: Mutex<()>,
    hits: AtomicUsize,
    misses: AtomicUsize,
    rejected: AtomicUsize,
}

impl Cache {
    pub fn open(dir: impl AsRef<Path>) -> Result<Cache> {
        let dir = dir.as_ref().to_path_buf();
        fs::create_dir_all(&dir)?;
        Ok(Cache {
            dir,
            write_lock: Mutex::new(()),
            hits: AtomicUsize::new(0),
            misses: AtomicUsize::new(0),
            rejected: AtomicUsize::new(0),
        })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(format!("{}.json", key.digest()))
    }

    /// The stored value, or `None` on a miss. Unreadable, corrupted or
    /// foreign-version entries count as misses.
    pub fn lookup<T: DeserializeOwned>(&self, key: &CacheKey) -> Option<T> {
        let found = fs::read(self.path_for(key)).ok().and_then(|bytes| {
            let parsed = serde_json::from_slice::<Entry>(&bytes)
                .ok()
                .filter(|e| e.version == SCHEMA_VERSION && e.key == key.canonical())
                .filter(|e| sha256_hex(e.payload.as_bytes()) == e.checksum)
                .and_then(|e| serde_json::from_str(&e.payload).ok());
            if parsed.is_none() {
                self.rejected.fetch_add(1, Ordering::Relaxed);
            }
            parsed
        });
        let counter = if found.is_some() { &self.hits } else { &self.misses };
        counter.fetch_add(1, Ordering::Relaxed);
        found
    }

    /// Writes through a temporary file and an atomic rename.
    pub fn store<T: Serialize>(&self, key: &CacheKey, value: &T) -> Result<()> {
        let payload = serde_json::to_string(value)?;
        let entry = Entry {
            version: key.version,
            key: key.canonical(),
            checksum: sha256_hex(payload.as_bytes()),
            payload,
        };
        let bytes = serde_json::to_vec(&entry)?;
        let target = self.path_for(key);
        let _guard = self.write_lock.lock().unwrap_or_else(|e| e.into_inner());
        let tmp = target.with_extension("json.tmp");
        fs::write(&tmp, bytes)?;
        fs::rename(&tmp, &target)?;
        Ok(())
    }

    pub fn hits(&self) -> usize {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> usize {
        self.misses.load(Ordering::Relaxed)
    }

    /// Entries that existed but failed validation.
    pub fn rejected(&self) -> usize {
        self.rejected.load(Ordering::Relaxed)
    }
}
