//! On-disk cache of homology profiles: one JSON file per ring and field.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::betti::ProfileCache;
use crate::homology::{FieldSpec, HomologyProfile};
use crate::semigroup::{Multidegree, Normalization, PinchConfig};

use super::SCHEMA_VERSION;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    schema_version: u32,
    n: usize,
    d: u32,
    m: Multidegree,
    field: FieldSpec,
    entries: BTreeMap<String, HomologyProfile>,
}

/// Profiles keyed by `h` in the coordinates that sort the pinch descending, so
/// that configurations differing by a permutation share a file.
pub struct FileCache {
    path: PathBuf,
    normalization: Normalization,
    n: usize,
    d: u32,
    field: FieldSpec,
    entries: Mutex<BTreeMap<String, HomologyProfile>>,
    dirty: Mutex<bool>,
}

fn key(h: &Multidegree) -> String {
    h.coords().iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

impl FileCache {
    pub fn file_name(config: &PinchConfig, field: FieldSpec) -> String {
        let norm = config.normalization();
        let m = norm.pinch.coords().iter().map(u32::to_string).collect::<Vec<_>>().join("-");
        let f = match field {
            FieldSpec::Rationals => "QQ".to_string(),
            FieldSpec::PrimeField(p) => format!("GF{p}"),
        };
        format!("n{}_d{}_m{}_{}.json", config.n(), config.d(), m, f)
    }

    /// Opens (or starts) the cache file for `config`; unreadable or
    /// mismatching files are ignored and will be overwritten.
    pub fn open(dir: &Path, config: &PinchConfig, field: FieldSpec) -> Self {
        let normalization = config.normalization();
        let path = dir.join(Self::file_name(config, field));
        let entries = fs::read_to_string(&path)
            .ok()
            .and_then(|text| serde_json::from_str::<CacheFile>(&text).ok())
            .filter(|f| {
                f.schema_version == SCHEMA_VERSION
                    && f.n == config.n()
                    && f.d == config.d()
                    && f.m == normalization.pinch
                    && f.field == field
            })
            .map(|f| f.entries)
            .unwrap_or_default();
        Self {
            path,
            normalization,
            n: config.n(),
            d: config.d(),
            field,
            entries: Mutex::new(entries),
            dirty: Mutex::new(false),
        }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.entries.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Writes the file atomically if anything was added since opening.
    pub fn flush(&self) -> std::io::Result<()> {
        let mut dirty = self.dirty.lock().expect("cache lock");
        if !*dirty {
            return Ok(());
        }
        let dir = self.path.parent().unwrap_or(Path::new("."));
        fs::create_dir_all(dir)?;
        let file = CacheFile {
            schema_version: SCHEMA_VERSION,
            n: self.n,
            d: self.d,
            m: self.normalization.pinch.clone(),
            field: self.field,
            entries: self.entries.lock().expect("cache lock").clone(),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        serde_json::to_writer(&mut tmp, &file)?;
        tmp.write_all(b"\n")?;
        tmp.persist(&self.path).map_err(|e| e.error)?;
        *dirty = false;
        Ok(())
    }
}

impl ProfileCache for FileCache {
    fn get(&self, h: &Multidegree) -> Option<HomologyProfile> {
        let k = key(&self.normalization.apply(h));
        self.entries.lock().expect("cache lock").get(&k).cloned()
    }

    fn put(&self, h: &Multidegree, profile: &HomologyProfile) {
        let k = key(&self.normalization.apply(h));
        let mut entries = self.entries.lock().expect("cache lock");
        if entries.insert(k, profile.clone()).is_none() {
            *self.dirty.lock().expect("cache lock") = true;
        }
    }
}
