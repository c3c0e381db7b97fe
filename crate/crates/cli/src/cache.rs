//! On-disk count cache: one `key<TAB>value` line per entry.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use rand::Rng;
use tilecount::{Count, Error, Result};

pub const CACHE_ENV: &str = "TILECOUNT_CACHE_DIR";
const FILE_NAME: &str = "counts.tsv";

/// Probability that a hit is recomputed and compared.
const SPOT_CHECK: f64 = 0.05;

#[derive(Debug, Default)]
struct Entries {
    map: BTreeMap<String, Count>,
    dirty: bool,
}

/// Count cache shared by worker threads. Without a directory every lookup
/// misses and nothing is written.
#[derive(Debug, Default)]
pub struct CountCache {
    path: Option<PathBuf>,
    entries: Mutex<Entries>,
}

impl CountCache {
    pub fn disabled() -> Self {
        CountCache::default()
    }

    /// Opens the cache in `$TILECOUNT_CACHE_DIR`, if set.
    pub fn from_env() -> Result<Self> {
        match std::env::var_os(CACHE_ENV) {
            Some(dir) if !dir.is_empty() => CountCache::open(Path::new(&dir)),
            _ => Ok(CountCache::disabled()),
        }
    }

    pub fn open(dir: &Path) -> Result<Self> {
        fs::create_dir_all(dir)?;
        let path = dir.join(FILE_NAME);
        let mut map = BTreeMap::new();
        if path.exists() {
            for (n, line) in fs::read_to_string(&path)?.lines().enumerate() {
                if line.is_empty() {
                    continue;
                }
                let (key, value) = line.split_once('\t').ok_or_else(|| {
                    Error::Io(format!("{}:{}: expected key<TAB>value", path.display(), n + 1))
                })?;
                map.insert(key.to_string(), value.parse()?);
            }
        }
        Ok(CountCache {
            path: Some(path),
            entries: Mutex::new(Entries { map, dirty: false }),
        })
    }

    #[cfg(test)]
    fn len(&self) -> usize {
        self.entries.lock().unwrap().map.len()
    }

    pub fn get(&self, key: &str) -> Option<Count> {
        self.entries.lock().unwrap().map.get(key).cloned()
    }

    pub fn insert(&self, key: &str, value: Count) {
        if self.path.is_none() {
            return;
        }
        let mut e = self.entries.lock().unwrap();
        if e.map.get(key) != Some(&value) {
            e.map.insert(key.to_string(), value);
            e.dirty = true;
        }
    }

    /// Looks `key` up, computing and storing it on a miss. A small fraction
    /// of hits is recomputed; a disagreement is an error.
    pub fn get_or_compute<F>(&self, key: &str, compute: F) -> Result<Count>
    where
        F: FnOnce() -> Result<Count>,
    {
        match self.get(key) {
            Some(hit) => {
                if rand::thread_rng().gen_bool(SPOT_CHECK) {
                    let fresh = compute()?;
                    if fresh != hit {
                        return Err(Error::Mismatch {
                            identity: "cache spot check",
                            lhs: format!("{key} = {hit}"),
                            rhs: fresh.to_string(),
                        });
                    }
                }
                Ok(hit)
            }
            None => {
                let v = compute()?;
                self.insert(key, v.clone());
                Ok(v)
            }
        }
    }

    /// Writes the cache through a temporary file renamed over the old one.
    pub fn save(&self) -> Result<()> {
        let Some(path) = &self.path else {
            return Ok(());
        };
        let mut e = self.entries.lock().unwrap();
        if !e.dirty {
            return Ok(());
        }
        let dir = path.parent().unwrap_or(Path::new("."));
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        for (k, v) in &e.map {
            writeln!(tmp, "{k}\t{v}")?;
        }
        tmp.flush()?;
        tmp.persist(path).map_err(|err| Error::Io(err.error.to_string()))?;
        e.dirty = false;
        Ok(())
    }
}
