//! On-disk cache of admissible bases, one JSON file per `(schema, d, n, policy)`.
//!
//! Entries are written to a temporary file and renamed into place; loading
//! re-hashes the payload and rejects anything that does not match.

use std::fs::{self, File};
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::hit::{HitSpace, Policy};

pub const SCHEMA: u32 = 1;
pub const ENV_VAR: &str = "HITKERNEL_CACHE";

/// Fields are declared in key order so that serialization is canonical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CacheEntry {
    pub basis: Vec<Vec<u32>>,
    pub d: usize,
    pub hash: String,
    pub hit_rank: usize,
    pub n: u32,
    pub policy: String,
    pub schema: u32,
}

#[derive(Serialize)]
struct Payload<'a> {
    basis: &'a [Vec<u32>],
    d: usize,
    hit_rank: usize,
    n: u32,
    policy: &'a str,
    schema: u32,
}

impl CacheEntry {
    pub fn new(d: usize, n: u32, policy: Policy, basis: Vec<Vec<u32>>, hit_rank: usize) -> Self {
        let mut e = CacheEntry { basis, d, hash: String::new(), hit_rank, n, policy: policy.as_str().into(), schema: SCHEMA };
        e.hash = e.payload_hash();
        e
    }

    pub fn from_hit_space(h: &HitSpace) -> Self {
        let basis = h.admissible_monomials().into_iter().map(|m| m.exponents().to_vec()).collect();
        Self::new(h.nvars(), h.degree(), h.policy(), basis, h.rank())
    }

    /// SHA-256 of the compact JSON of every field except `hash`.
    pub fn payload_hash(&self) -> String {
        let p = Payload { basis: &self.basis, d: self.d, hit_rank: self.hit_rank, n: self.n, policy: &self.policy, schema: self.schema };
        let bytes = serde_json::to_vec(&p).expect("plain data serializes");
        hex::encode(Sha256::digest(bytes))
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Cache { dir })
    }

    /// The cache named by `HITKERNEL_CACHE`, if set.
    pub fn from_env() -> Result<Option<Self>> {
        match std::env::var_os(ENV_VAR) {
            Some(v) if !v.is_empty() => Self::open(PathBuf::from(v)).map(Some),
            _ => Ok(None),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, d: usize, n: u32, policy: Policy) -> PathBuf {
        self.dir.join(format!("basis-v{SCHEMA}-d{d}-n{n}-{}.json", policy.as_str()))
    }

    fn lock(&self) -> Result<File> {
        let f = File::options().create(true).truncate(false).write(true).open(self.dir.join(".lock"))?;
        f.lock()?;
        Ok(f)
    }

    pub fn store(&self, e: &CacheEntry) -> Result<PathBuf> {
        let policy = Policy::parse(&e.policy)?;
        if e.hash != e.payload_hash() || e.schema != SCHEMA {
            return Err(Error::InvalidArgument("refusing to store an inconsistent cache entry".into()));
        }
        let _guard = self.lock()?;
        let target = self.path(e.d, e.n, policy);
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(e.to_json().as_bytes())?;
        tmp.as_file().sync_all()?;
        tmp.persist(&target).map_err(|err| Error::Io(err.error))?;
        Ok(target)
    }

    /// `Ok(None)` if nothing is stored; [`Error::CacheCorrupt`] if the file
    /// does not parse, is for another key, or fails its hash.
    pub fn load(&self, d: usize, n: u32, policy: Policy) -> Result<Option<CacheEntry>> {
        let _guard = self.lock()?;
        let path = self.path(d, n, policy);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let corrupt = |why: String| Error::CacheCorrupt(format!("{}: {why}", path.display()));
        let e: CacheEntry = serde_json::from_str(&text).map_err(|err| corrupt(err.to_string()))?;
        if e.schema != SCHEMA {
            return Err(corrupt(format!("schema {}", e.schema)));
        }
        if (e.d, e.n, e.policy.as_str()) != (d, n, policy.as_str()) {
            return Err(corrupt("entry is for a different key".into()));
        }
        if e.hash != e.payload_hash() {
            return Err(corrupt("hash mismatch".into()));
        }
        Ok(Some(e))
    }
}
