//! Flat-file cache of exact dimensions, keyed by artifact version, algebra, multidegree and
//! basis flavor.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use gstar::dims::{dimension, BasisFlavor, DimOptions};
use gstar::{AlgebraKind, MultiDegree};
use rand::seq::IteratorRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

/// Bumped whenever the dimension pipeline changes in a way that could alter results.
pub const ARTIFACT_VERSION: u32 = 1;

/// Number of cached keys recomputed by the self-test.
pub const SELF_TEST_SAMPLES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CacheKey {
    pub version: u32,
    pub algebra: AlgebraKind,
    pub degree: MultiDegree,
    pub flavor: BasisFlavor,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub version: u32,
    pub algebra: AlgebraKind,
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    pub n4: usize,
    pub flavor: BasisFlavor,
    pub dim: usize,
    /// Seconds since the Unix epoch when the value was computed.
    pub timestamp: u64,
}

impl CacheEntry {
    fn key(&self) -> CacheKey {
        CacheKey {
            version: self.version,
            algebra: self.algebra,
            degree: MultiDegree::new(self.n1, self.n2, self.n3, self.n4),
            flavor: self.flavor,
        }
    }
}

fn now() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs())
}

#[derive(Debug, Default)]
pub struct DimCache {
    path: Option<PathBuf>,
    entries: BTreeMap<CacheKey, CacheEntry>,
    dirty: bool,
}

impl DimCache {
    /// A cache that never touches the filesystem.
    pub fn in_memory() -> Self {
        DimCache::default()
    }

    /// Loads `path` if it exists; a missing file is an empty cache.
    pub fn open(path: &Path) -> CliResult<Self> {
        let entries = if path.exists() {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Cache(format!("{}: {e}", path.display())))?;
            let list: Vec<CacheEntry> =
                serde_json::from_str(&text).map_err(|e| CliError::Cache(format!("{}: {e}", path.display())))?;
            list.into_iter().map(|e| (e.key(), e)).collect()
        } else {
            BTreeMap::new()
        };
        Ok(DimCache {
            path: Some(path.to_path_buf()),
            entries,
            dirty: false,
        })
    }

    #[cfg(test)]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    #[cfg(test)]
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, kind: AlgebraKind, d: MultiDegree, flavor: BasisFlavor) -> Option<usize> {
        self.entries.get(&key(kind, d, flavor)).map(|e| e.dim)
    }

    pub fn insert(&mut self, kind: AlgebraKind, d: MultiDegree, flavor: BasisFlavor, dim: usize) {
        let [n1, n2, n3, n4] = d.0;
        let entry = CacheEntry {
            version: ARTIFACT_VERSION,
            algebra: kind,
            n1,
            n2,
            n3,
            n4,
            flavor,
            dim,
            timestamp: now(),
        };
        self.entries.insert(entry.key(), entry);
        self.dirty = true;
    }

    /// Recomputes up to [`SELF_TEST_SAMPLES`] seeded random current-version entries and
    /// returns how many were checked.
    pub fn self_test(&self, seed: u64, opts: &DimOptions) -> CliResult<usize> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sample = self
            .entries
            .values()
            .filter(|e| e.version == ARTIFACT_VERSION)
            .choose_multiple(&mut rng, SELF_TEST_SAMPLES);
        for e in &sample {
            let k = e.key();
            let fresh = dimension(k.degree, k.algebra, k.flavor, opts)?;
            if fresh != e.dim {
                return Err(CliError::CacheMismatch(format!(
                    "{} {} {}: cached {} but recomputed {fresh}",
                    k.algebra,
                    k.degree,
                    k.flavor.name(),
                    e.dim
                )));
            }
        }
        Ok(sample.len())
    }

    /// Writes the cache back if anything was inserted.
    pub fn save(&mut self) -> CliResult<()> {
        let Some(path) = &self.path else {
            return Ok(());
        };
        if !self.dirty {
            return Ok(());
        }
        let list: Vec<&CacheEntry> = self.entries.values().collect();
        let text = serde_json::to_string_pretty(&list).map_err(|e| CliError::Cache(e.to_string()))?;
        std::fs::write(path, text + "\n").map_err(|e| CliError::Cache(format!("{}: {e}", path.display())))?;
        self.dirty = false;
        Ok(())
    }
}

fn key(kind: AlgebraKind, d: MultiDegree, flavor: BasisFlavor) -> CacheKey {
    CacheKey {
        version: ARTIFACT_VERSION,
        algebra: kind,
        degree: d,
        flavor,
    }
}
