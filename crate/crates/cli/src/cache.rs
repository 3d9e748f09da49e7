//! Line-delimited JSON cache of evaluated constants. Appends only; on
//! duplicate keys the last line wins.

use std::collections::HashMap;
use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::eval::Record;
use crate::CliError;

pub const ENV_VAR: &str = "MZVLAB_CACHE";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub expr: String,
    pub config: String,
    pub digits: u32,
    pub value: String,
    pub bound: String,
    pub bound_kind: String,
    pub terms: u64,
    pub timestamp: u64,
}

impl CacheEntry {
    pub fn new(expr: String, config: String, digits: u32, r: &Record) -> Self {
        let timestamp = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs());
        CacheEntry {
            expr,
            config,
            digits,
            value: r.value.clone().unwrap_or_default(),
            bound: r.bound.clone().unwrap_or_default(),
            bound_kind: r.bound_kind.clone().unwrap_or_default(),
            terms: r.terms.unwrap_or(0),
            timestamp,
        }
    }

    fn key(&self) -> (String, String) {
        (self.expr.clone(), self.config.clone())
    }
}

pub struct Cache {
    path: PathBuf,
    entries: HashMap<(String, String), CacheEntry>,
    order: Vec<(String, String)>,
}

/// `--cache`, else `$MZVLAB_CACHE`, else a file under the user cache directory.
pub fn default_path(flag: Option<&Path>) -> Option<PathBuf> {
    if let Some(p) = flag {
        return Some(p.to_path_buf());
    }
    if let Some(p) = std::env::var_os(ENV_VAR).filter(|p| !p.is_empty()) {
        return Some(PathBuf::from(p));
    }
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))?;
    Some(base.join("mzvlab").join("constants.jsonl"))
}

fn io(path: &Path, source: std::io::Error) -> CliError {
    CliError::Io { path: path.display().to_string(), source }
}

impl Cache {
    pub fn open(path: PathBuf) -> Result<Self, CliError> {
        let mut cache = Cache { path, entries: HashMap::new(), order: Vec::new() };
        let text = match fs::read_to_string(&cache.path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(cache),
            Err(e) => return Err(io(&cache.path, e)),
        };
        for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
            let entry: CacheEntry = serde_json::from_str(line).map_err(|source| CliError::CacheLine {
                path: cache.path.display().to_string(),
                line: i + 1,
                source,
            })?;
            cache.remember(entry);
        }
        Ok(cache)
    }

    fn remember(&mut self, entry: CacheEntry) {
        let key = entry.key();
        if self.entries.insert(key.clone(), entry).is_none() {
            self.order.push(key);
        }
    }

    /// An entry usable at `digits`, i.e. stored at that precision or higher.
    pub fn lookup(&self, expr: &str, config: &str, digits: u32) -> Option<&CacheEntry> {
        self.entries.get(&(expr.to_string(), config.to_string())).filter(|e| e.digits >= digits)
    }

    pub fn insert(&mut self, entry: CacheEntry) -> Result<(), CliError> {
        if let Some(dir) = self.path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir).map_err(|e| io(dir, e))?;
        }
        let mut line = serde_json::to_string(&entry).map_err(CliError::Json)?;
        line.push('\n');
        OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .and_then(|mut f| f.write_all(line.as_bytes()))
            .map_err(|e| io(&self.path, e))?;
        self.remember(entry);
        Ok(())
    }

    /// Live entries in first-seen order.
    pub fn entries(&self) -> Vec<&CacheEntry> {
        self.order.iter().map(|k| &self.entries[k]).collect()
    }

    pub fn clear(&mut self) -> Result<(), CliError> {
        match fs::remove_file(&self.path) {
            Ok(()) => {}
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(e) => return Err(io(&self.path, e)),
        }
        self.entries.clear();
        self.order.clear();
        Ok(())
    }

    pub fn path(&self) -> &Path {
        &self.path
    }
}
