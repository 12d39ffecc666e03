//! On-disk JSON cache of computed degrees, keyed by `(n, coeff, code version)`.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{Mutex, OnceLock};

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::homology::{
    compute_degree, default_primes, integral_assembly, integral_from_json, integral_to_json,
    DegreeHomology, HomologyTable, IntegralGroup,
};
use crate::parallel;
use crate::qarith::CoeffRing;

pub const CACHE_ENV: &str = "BRAIDQ_CACHE";

const SOURCES: &[&str] = &[
    include_str!("complexes/complex.rs"),
    include_str!("complexes/composition.rs"),
    include_str!("complexes/scaling.rs"),
    include_str!("exactla/cyclo.rs"),
    include_str!("exactla/smith.rs"),
    include_str!("exactla/valuated.rs"),
    include_str!("homology/compute.rs"),
    include_str!("homology/group.rs"),
    include_str!("homology/table.rs"),
    include_str!("qarith/poly.rs"),
    include_str!("qarith/qnum.rs"),
];

/// Short hash of the crate version and the sources that determine results.
pub fn code_version() -> &'static str {
    static V: OnceLock<String> = OnceLock::new();
    V.get_or_init(|| {
        let mut h = Sha256::new();
        h.update(env!("CARGO_PKG_VERSION").as_bytes());
        for s in SOURCES {
            h.update((s.len() as u64).to_le_bytes());
            h.update(s.as_bytes());
        }
        hex::encode(&h.finalize()[..8])
    })
}

fn file_tag(coeff: CoeffRing) -> String {
    coeff.tag().replace(':', "")
}

/// One cache file as found on disk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheEntry {
    pub path: PathBuf,
    pub coeff: String,
    pub n: usize,
    pub version: String,
    pub bytes: u64,
}

impl CacheEntry {
    pub fn is_current(&self) -> bool {
        self.version == code_version()
    }
}

/// Concurrent readers, serialized writers; files are replaced atomically.
#[derive(Debug)]
pub struct Cache {
    dir: PathBuf,
    writes: Mutex<()>,
}

impl Cache {
    /// Creates the directory if needed and checks that it is writable.
    pub fn open(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        tempfile::NamedTempFile::new_in(&dir)?;
        Ok(Cache {
            dir,
            writes: Mutex::new(()),
        })
    }

    /// `BRAIDQ_CACHE` if set, else `.braidq-cache` in the working directory.
    pub fn default_dir() -> PathBuf {
        std::env::var_os(CACHE_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from(".braidq-cache"))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, tag: &str, n: usize) -> PathBuf {
        self.dir
            .join(format!("{tag}-n{n:03}-{}.json", code_version()))
    }

    fn read(&self, tag: &str, n: usize) -> Option<String> {
        fs::read_to_string(self.path(tag, n)).ok()
    }

    fn write(&self, tag: &str, n: usize, body: &str) -> Result<()> {
        let _guard = self.writes.lock().expect("cache lock");
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(body.as_bytes())?;
        tmp.write_all(b"\n")?;
        tmp.persist(self.path(tag, n))
            .map_err(|e| Error::Io(e.error))?;
        Ok(())
    }

    /// Cached or freshly computed homology of one degree.
    pub fn degree(&self, n: usize, coeff: CoeffRing) -> Result<DegreeHomology> {
        let tag = file_tag(coeff);
        if let Some(d) = self
            .read(&tag, n)
            .and_then(|s| DegreeHomology::from_json(&s).ok())
        {
            return Ok(d);
        }
        let d = compute_degree(n, coeff)?;
        self.write(&tag, n, &d.to_json())?;
        Ok(d)
    }

    /// The table for `0 ≤ n ≤ nmax`; degrees `n ≥ 2` go through the cache.
    pub fn table(&self, coeff: CoeffRing, nmax: usize) -> Result<HomologyTable> {
        let ns: Vec<usize> = (0..=nmax).collect();
        let degrees = parallel::map(&ns, |&n| {
            if n < 2 {
                compute_degree(n, coeff)
            } else {
                self.degree(n, coeff)
            }
        });
        let degrees = degrees
            .into_iter()
            .map(|d| d.map(|d| (d.n, d)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(HomologyTable {
            coeff,
            nmax,
            degrees,
        })
    }

    pub fn integral(&self, n: usize) -> Result<Vec<IntegralGroup>> {
        let tag = file_tag(CoeffRing::Integers);
        if let Some((_, g)) = self.read(&tag, n).and_then(|s| integral_from_json(&s).ok()) {
            return Ok(g);
        }
        let g = integral_assembly(n, &default_primes(n))?;
        self.write(&tag, n, &integral_to_json(n, &g))?;
        Ok(g)
    }

    /// Integral groups for `0 ≤ n ≤ nmax`, indexed by `n`.
    pub fn integral_table(&self, nmax: usize) -> Result<Vec<Vec<IntegralGroup>>> {
        let ns: Vec<usize> = (0..=nmax).collect();
        parallel::map(&ns, |&n| {
            if n < 2 {
                integral_assembly(n, &[])
            } else {
                self.integral(n)
            }
        })
        .into_iter()
        .collect()
    }

    /// Every cache file, current or stale, sorted by name.
    pub fn entries(&self) -> Result<Vec<CacheEntry>> {
        let mut out = Vec::new();
        for e in fs::read_dir(&self.dir)? {
            let e = e?;
            let name = e.file_name().to_string_lossy().into_owned();
            let Some(stem) = name.strip_suffix(".json") else {
                continue;
            };
            let mut parts = stem.rsplitn(3, '-');
            let (Some(version), Some(n), Some(coeff)) = (parts.next(), parts.next(), parts.next())
            else {
                continue;
            };
            let Some(n) = n.strip_prefix('n').and_then(|n| n.parse().ok()) else {
                continue;
            };
            out.push(CacheEntry {
                path: e.path(),
                coeff: coeff.to_string(),
                n,
                version: version.to_string(),
                bytes: e.metadata()?.len(),
            });
        }
        out.sort_by(|a, b| a.path.cmp(&b.path));
        Ok(out)
    }

    /// Removes every cache file; returns how many were removed.
    pub fn clear(&self) -> Result<usize> {
        let _guard = self.writes.lock().expect("cache lock");
        let entries = self.entries()?;
        for e in &entries {
            fs::remove_file(&e.path)?;
        }
        Ok(entries.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_clear() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        let t = cache.table(CoeffRing::PrimeField(2), 6).unwrap();
        assert_eq!(cache.entries().unwrap().len(), 5);
        let before: Vec<String> = cache
            .entries()
            .unwrap()
            .iter()
            .map(|e| fs::read_to_string(&e.path).unwrap())
            .collect();
        assert_eq!(cache.table(CoeffRing::PrimeField(2), 6).unwrap(), t);
        assert_eq!(cache.clear().unwrap(), 5);
        assert!(cache.entries().unwrap().is_empty());
        cache.table(CoeffRing::PrimeField(2), 6).unwrap();
        let after: Vec<String> = cache
            .entries()
            .unwrap()
            .iter()
            .map(|e| fs::read_to_string(&e.path).unwrap())
            .collect();
        assert_eq!(before, after);
    }
}
