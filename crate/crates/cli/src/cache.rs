//! On-disk result cache: one JSON document per entry, named by a SHA-256 of
//! the key, replaced atomically.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use liefusion_core::repbuilder::ModuleSkeleton;
use liefusion_core::weights::WeightSystem;
use liefusion_core::{LieType, ResultStore, Weight};

/// Bumped whenever a cached payload changes shape or meaning.
pub const FORMAT_VERSION: &str = "liefusion-cache/1";

pub const CACHE_DIR_ENV: &str = "LIEFUSION_CACHE_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryKind {
    WeightSystem,
    ModuleSkeleton,
}

impl EntryKind {
    fn tag(self) -> &'static str {
        match self {
            EntryKind::WeightSystem => "weight-system",
            EntryKind::ModuleSkeleton => "module-skeleton",
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Entry<T> {
    format_version: String,
    key: String,
    payload: T,
}

#[derive(Debug, Clone)]
pub struct DiskCache {
    dir: PathBuf,
}

/// `$XDG_CACHE_HOME/liefusion`, else `$HOME/.cache/liefusion`.
pub fn default_cache_dir() -> Option<PathBuf> {
    let base = std::env::var_os("XDG_CACHE_HOME")
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))?;
    Some(base.join("liefusion"))
}

pub fn entry_key(kind: EntryKind, t: LieType, lambda: &Weight) -> String {
    let labels: Vec<String> = lambda.coords().iter().map(|c| c.to_string()).collect();
    format!("{}:{}:{}", kind.tag(), t, labels.join(","))
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>) -> std::io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(DiskCache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, key: &str) -> PathBuf {
        let mut h = Sha256::new();
        h.update(FORMAT_VERSION.as_bytes());
        h.update(b"\0");
        h.update(key.as_bytes());
        self.dir.join(format!("{}.json", hex::encode(h.finalize())))
    }

    fn load<T: DeserializeOwned>(&self, key: &str) -> Option<T> {
        let bytes = fs::read(self.path_for(key)).ok()?;
        let entry: Entry<T> = serde_json::from_slice(&bytes).ok()?;
        (entry.format_version == FORMAT_VERSION && entry.key == key).then_some(entry.payload)
    }

    fn save<T: Serialize>(&self, key: &str, payload: &T) -> std::io::Result<()> {
        let entry = Entry { format_version: FORMAT_VERSION.to_string(), key: key.to_string(), payload };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer(&mut tmp, &entry)?;
        tmp.flush()?;
        tmp.persist(self.path_for(key)).map_err(|e| e.error)?;
        Ok(())
    }
}

// Write failures only cost a recomputation next time, so they are dropped.
impl ResultStore for DiskCache {
    fn load_weight_system(&self, t: LieType, lambda: &Weight) -> Option<WeightSystem> {
        self.load(&entry_key(EntryKind::WeightSystem, t, lambda))
    }

    fn save_weight_system(&self, t: LieType, lambda: &Weight, ws: &WeightSystem) {
        let _ = self.save(&entry_key(EntryKind::WeightSystem, t, lambda), ws);
    }

    fn load_module(&self, t: LieType, lambda: &Weight) -> Option<ModuleSkeleton> {
        self.load(&entry_key(EntryKind::ModuleSkeleton, t, lambda))
    }

    fn save_module(&self, t: LieType, lambda: &Weight, module: &ModuleSkeleton) {
        let _ = self.save(&entry_key(EntryKind::ModuleSkeleton, t, lambda), module);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use liefusion_core::LieContext;
    use std::sync::Arc;

    #[test]
    fn round_trip_and_version_mismatch() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::new(dir.path()).unwrap();
        let lam = Weight::new(vec![0, 0, 0, 1]);
        let cold = LieContext::new(LieType::F4).unwrap();
        let ws = cold.weight_system(&lam).unwrap();
        let m = cold.module(&lam).unwrap();
        cache.save_weight_system(LieType::F4, &lam, &ws);
        cache.save_module(LieType::F4, &lam, &m.skeleton());
        assert_eq!(cache.load_weight_system(LieType::F4, &lam).as_ref(), Some(ws.as_ref()));
        assert_eq!(cache.load_module(LieType::F4, &lam), Some(m.skeleton()));
        assert!(cache.load_weight_system(LieType::G2, &Weight::new(vec![0, 1])).is_none());

        let path = cache.path_for(&entry_key(EntryKind::WeightSystem, LieType::F4, &lam));
        let text = fs::read_to_string(&path).unwrap().replace(FORMAT_VERSION, "liefusion-cache/0");
        fs::write(&path, text).unwrap();
        assert!(cache.load_weight_system(LieType::F4, &lam).is_none());

        let warm = LieContext::new(LieType::F4).unwrap().with_store(Arc::new(cache));
        assert_eq!(warm.module(&lam).unwrap().skeleton(), m.skeleton());
        assert_eq!(warm.weight_system(&lam).unwrap(), ws);
    }
}
