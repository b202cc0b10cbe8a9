//! On-disk persistence of partition tables.
//!
//! One JSON file per root system, `partition-<family><rank>.json`:
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "family": "A",
//!   "rank": 2,
//!   "root_ordering_hash": "<sha256 hex of the positive-root order>",
//!   "height_cutoff": 6,
//!   "records": [{"x": [1, 1], "n": 2, "value": "1"}]
//! }
//! ```
//!
//! `height_cutoff` is the largest height of a stored x. Files with another
//! schema version or root ordering are rejected. Saving merges with what is
//! already on disk, so tables can be extended across runs.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::partition::PartitionTable;
use crate::rootsys::{RootSystemId, RootVector};

pub const CACHE_SCHEMA_VERSION: u32 = 1;

/// Environment variable overriding the cache directory.
pub const CACHE_DIR_ENV: &str = "NILGRADE_CACHE_DIR";

#[derive(Debug, Serialize, Deserialize)]
struct CacheFile {
    schema_version: u32,
    family: String,
    rank: usize,
    root_ordering_hash: String,
    height_cutoff: i64,
    records: Vec<Record>,
}

#[derive(Debug, Serialize, Deserialize)]
struct Record {
    x: Vec<i64>,
    n: usize,
    value: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CacheInfo {
    pub path: PathBuf,
    pub system: String,
    pub records: usize,
    pub height_cutoff: i64,
}

/// `$NILGRADE_CACHE_DIR`, else `$XDG_CACHE_HOME/nilgrade`, else
/// `$HOME/.cache/nilgrade`.
pub fn default_cache_dir() -> PathBuf {
    if let Some(dir) = std::env::var_os(CACHE_DIR_ENV) {
        return PathBuf::from(dir);
    }
    if let Some(dir) = std::env::var_os("XDG_CACHE_HOME") {
        return PathBuf::from(dir).join("nilgrade");
    }
    std::env::var_os("HOME")
        .map(|h| PathBuf::from(h).join(".cache").join("nilgrade"))
        .unwrap_or_else(|| PathBuf::from(".nilgrade-cache"))
}

pub fn cache_path(dir: &Path, id: RootSystemId) -> PathBuf {
    dir.join(format!("partition-{id}.json"))
}

pub fn root_ordering_hash(roots: &[RootVector]) -> String {
    let mut h = Sha256::new();
    for r in roots {
        h.update(format!("{r};").as_bytes());
    }
    format!("{:x}", h.finalize())
}

fn bad(path: &Path, reason: impl Into<String>) -> Error {
    Error::Cache {
        path: path.display().to_string(),
        reason: reason.into(),
    }
}

fn read_file(path: &Path) -> Result<CacheFile> {
    let text = fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| bad(path, e.to_string()))
}

/// Seed `table` from its cache file. Returns the number of x values loaded;
/// a missing file loads nothing.
pub fn load(table: &PartitionTable, dir: &Path) -> Result<usize> {
    let path = cache_path(dir, table.system());
    if !path.exists() {
        return Ok(0);
    }
    let file = read_file(&path)?;
    if file.schema_version != CACHE_SCHEMA_VERSION {
        return Err(bad(
            &path,
            format!("schema version {}", file.schema_version),
        ));
    }
    let id = table.system();
    if file.family != id.family().to_string() || file.rank != id.rank() {
        return Err(bad(&path, format!("holds {}{}", file.family, file.rank)));
    }
    if file.root_ordering_hash != root_ordering_hash(table.roots()) {
        return Err(bad(&path, "root ordering hash mismatch"));
    }
    let mut grouped: BTreeMap<Vec<i64>, Vec<BigUint>> = BTreeMap::new();
    for rec in file.records {
        if rec.x.len() != id.rank() {
            return Err(bad(&path, "record of wrong rank"));
        }
        let value: BigUint = rec
            .value
            .parse()
            .map_err(|_| bad(&path, format!("bad value {}", rec.value)))?;
        let s = grouped.entry(rec.x).or_default();
        if s.len() <= rec.n {
            s.resize(rec.n + 1, BigUint::default());
        }
        s[rec.n] = value;
    }
    let count = grouped.len();
    for (x, s) in grouped {
        table.insert(RootVector::new(x), s);
    }
    Ok(count)
}

/// Write the table's full-root-set entries, merged with the existing file.
pub fn save(table: &PartitionTable, dir: &Path) -> Result<PathBuf> {
    let path = cache_path(dir, table.system());
    if path.exists() {
        // A stale or foreign file is simply overwritten.
        let _ = load(table, dir);
    }
    fs::create_dir_all(dir)?;
    let entries = table.entries();
    let height_cutoff = entries.iter().map(|(x, _)| x.height()).max().unwrap_or(0);
    let mut records = Vec::new();
    for (x, s) in &entries {
        for (n, v) in s.iter().enumerate() {
            if *v != BigUint::default() {
                records.push(Record {
                    x: x.coords().to_vec(),
                    n,
                    value: v.to_string(),
                });
            }
        }
    }
    let id = table.system();
    let file = CacheFile {
        schema_version: CACHE_SCHEMA_VERSION,
        family: id.family().to_string(),
        rank: id.rank(),
        root_ordering_hash: root_ordering_hash(table.roots()),
        height_cutoff,
        records,
    };
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, serde_json::to_string(&file)?)?;
    fs::rename(&tmp, &path)?;
    Ok(path)
}

pub fn list(dir: &Path) -> Result<Vec<CacheInfo>> {
    let mut out = Vec::new();
    if !dir.exists() {
        return Ok(out);
    }
    for entry in fs::read_dir(dir)? {
        let path = entry?.path();
        if !is_cache_file(&path) {
            continue;
        }
        let file = read_file(&path)?;
        out.push(CacheInfo {
            system: format!("{}{}", file.family, file.rank),
            records: file.records.len(),
            height_cutoff: file.height_cutoff,
            path,
        });
    }
    out.sort_by(|a, b| a.path.cmp(&b.path));
    Ok(out)
}

/// Remove all cache files in `dir`; returns how many were removed.
pub fn clear(dir: &Path) -> Result<usize> {
    let mut removed = 0;
    if !dir.exists() {
        return Ok(0);
    }
    for entry in fs::read_dir(dir)? {
        let path = entry?.path();
        if is_cache_file(&path) {
            fs::remove_file(&path)?;
            removed += 1;
        }
    }
    Ok(removed)
}

fn is_cache_file(path: &Path) -> bool {
    path.file_name()
        .and_then(|n| n.to_str())
        .is_some_and(|n| n.starts_with("partition-") && n.ends_with(".json"))
}
