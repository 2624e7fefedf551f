//! Check manifests: which algebras to exercise, with which caps, and the seed.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::Result;
use homkit_core::{Error, PathAlgebra};
use serde::{Deserialize, Serialize};

use crate::load::load_algebra;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct Manifest {
    pub seed: u64,
    pub algebras: Vec<AlgebraEntry>,
    /// Directory relative paths are resolved against.
    #[serde(skip)]
    pub base: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct AlgebraEntry {
    pub name: String,
    /// A JSON file or a `catalog:` reference.
    pub algebra: String,
    #[serde(default = "default_dim_bound")]
    pub dim_bound: usize,
    #[serde(default = "default_cutoff")]
    pub cutoff: usize,
    #[serde(default = "default_iter_cap")]
    pub iter_cap: usize,
    /// Random cases per randomized suite.
    #[serde(default = "default_cases")]
    pub cases: usize,
    /// Expected findim, checked when present.
    #[serde(default)]
    pub findim: Option<usize>,
}

fn default_dim_bound() -> usize {
    3
}
fn default_cutoff() -> usize {
    8
}
fn default_iter_cap() -> usize {
    homkit_core::approx::DEFAULT_ITER_CAP
}
fn default_cases() -> usize {
    20
}

impl AlgebraEntry {
    fn catalog(name: &str, findim: usize) -> Self {
        AlgebraEntry {
            name: name.to_string(),
            algebra: format!("catalog:{name}:F2"),
            dim_bound: default_dim_bound(),
            cutoff: default_cutoff(),
            iter_cap: default_iter_cap(),
            cases: default_cases(),
            findim: Some(findim),
        }
    }

    pub fn load(&self, base: Option<&Path>) -> Result<Arc<PathAlgebra>> {
        if self.algebra.starts_with("catalog:") {
            return load_algebra(&self.algebra);
        }
        let p = match base {
            Some(b) => b.join(&self.algebra),
            None => PathBuf::from(&self.algebra),
        };
        load_algebra(&p.to_string_lossy())
    }
}

impl Default for Manifest {
    /// Dual numbers, `A_2`, `A_3` with radical square zero and the semisimple algebra, over `F_2`.
    fn default() -> Self {
        Manifest {
            seed: 0x5eed,
            algebras: vec![
                AlgebraEntry::catalog("dual", 0),
                AlgebraEntry::catalog("a2", 1),
                AlgebraEntry::catalog("a3-rad2", 2),
                AlgebraEntry::catalog("semisimple", 0),
            ],
            base: None,
        }
    }
}

impl Manifest {
    pub fn load(path: &Path) -> Result<Self> {
        let v = homkit_core::io::read_json(path)?;
        let mut m: Manifest =
            serde_json::from_value(v).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        m.base = path.parent().map(Path::to_path_buf);
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_round_trips() {
        let m = Manifest::default();
        let v = serde_json::to_value(&m).unwrap();
        let back: Manifest = serde_json::from_value(v).unwrap();
        assert_eq!(back, m);
        for e in &m.algebras {
            e.load(None).unwrap();
        }
    }

    #[test]
    fn unknown_fields_rejected() {
        let v = serde_json::json!({"seed": 1, "algebras": [], "extra": 0});
        assert!(serde_json::from_value::<Manifest>(v).is_err());
    }
}
