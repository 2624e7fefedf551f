//! Content-addressed witness cache.
//!
//! Entries live in `<dir>/<sha256>.json`. Writes go through a temporary file
//! and a rename, so concurrent writers of the same key leave one complete
//! entry behind (values are determined by the key, so the winner is
//! irrelevant). Every hit is re-verified before it is returned; entries that
//! fail verification are recomputed and overwritten.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const ENV_VAR: &str = "HOMKIT_CACHE";

#[derive(Clone, Debug)]
pub struct Cache {
    dir: Option<PathBuf>,
}

#[derive(Clone, Debug)]
pub struct Cached {
    pub key: String,
    pub value: Value,
    /// Location of the entry, when the cache is enabled.
    pub path: Option<PathBuf>,
    pub hit: bool,
}

/// Hex sha256 of the compact serialization of `parts`.
pub fn content_key(parts: &[&Value]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update(serde_json::to_vec(p).expect("json serializes"));
        h.update([0u8]);
    }
    hex::encode(h.finalize())
}

impl Cache {
    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: Some(dir.into()) }
    }

    /// `HOMKIT_CACHE` wins over the flag, which wins over the system temp dir.
    pub fn resolve(flag: Option<PathBuf>, enabled: bool) -> Self {
        if !enabled {
            return Self::disabled();
        }
        let dir = std::env::var_os(ENV_VAR)
            .filter(|v| !v.is_empty())
            .map(PathBuf::from)
            .or(flag)
            .unwrap_or_else(|| std::env::temp_dir().join("homkit-cache"));
        Self::at(dir)
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    fn entry_path(&self, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{key}.json")))
    }

    fn read(&self, key: &str, op: &str) -> Option<Value> {
        let path = self.entry_path(key)?;
        let text = fs::read_to_string(path).ok()?;
        let v: Value = serde_json::from_str(&text).ok()?;
        (v.get("key")? == key && v.get("operation")? == op).then(|| v.get("value").cloned())?
    }

    fn write(&self, key: &str, op: &str, value: &Value) -> Result<Option<PathBuf>> {
        let Some(path) = self.entry_path(key) else {
            return Ok(None);
        };
        let dir = self.dir.as_ref().expect("enabled cache has a dir");
        fs::create_dir_all(dir).with_context(|| format!("creating cache dir {}", dir.display()))?;
        let tmp = dir.join(format!("{key}.{}.tmp", std::process::id()));
        let body = json!({ "key": key, "operation": op, "value": value });
        fs::write(&tmp, homkit_core::io::to_text(&body)).with_context(|| format!("writing {}", tmp.display()))?;
        fs::rename(&tmp, &path).with_context(|| format!("publishing {}", path.display()))?;
        Ok(Some(path))
    }

    /// Returns the cached value for `key` if it passes `verify`, else computes,
    /// stores and returns a fresh one.
    pub fn get_or_compute(
        &self,
        key: &str,
        op: &str,
        compute: impl FnOnce() -> Result<Value>,
        verify: impl Fn(&Value) -> Result<()>,
    ) -> Result<Cached> {
        if let Some(v) = self.read(key, op) {
            if verify(&v).is_ok() {
                return Ok(Cached { key: key.to_string(), value: v, path: self.entry_path(key), hit: true });
            }
        }
        let value = compute()?;
        let path = self.write(key, op, &value)?;
        Ok(Cached { key: key.to_string(), value, path, hit: false })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hit_after_miss_and_reverify() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::at(dir.path());
        let key = content_key(&[&json!("a"), &json!(1)]);
        let first = cache.get_or_compute(&key, "op", || Ok(json!(7)), |_| Ok(())).unwrap();
        assert!(!first.hit);
        let second = cache.get_or_compute(&key, "op", || Ok(json!(8)), |_| Ok(())).unwrap();
        assert!(second.hit);
        assert_eq!(second.value, json!(7));
        // a stale entry is replaced
        let third = cache
            .get_or_compute(&key, "op", || Ok(json!(9)), |v| if v == &json!(7) { anyhow::bail!("stale") } else { Ok(()) })
            .unwrap();
        assert!(!third.hit);
        assert_eq!(third.value, json!(9));
    }

    #[test]
    fn keys_separate_parts() {
        assert_ne!(content_key(&[&json!("ab"), &json!("c")]), content_key(&[&json!("a"), &json!("bc")]));
    }
}
