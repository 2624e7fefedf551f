//! Three-valued isomorphism testing.
//!
//! Cheap invariants (dimension vectors, radical and socle layers, ranks of
//! path actions, Hom dimensions) rule out isomorphism; a search through
//! `Hom(M, N)` for an invertible element proves it. Exhaustive search over
//! a finite field turns a failed search into a definite "no".

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::field::Scalar;
use crate::hom::{hom_dim, hom_space};
use crate::matrix::Matrix;
use crate::module::{Module, ModuleMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IsoVerdict {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IsoConfig {
    /// Exhaustive search is used when `|k|^dim Hom(M, N)` is at most this.
    pub exhaustive_cap: u64,
    pub random_trials: usize,
    pub seed: u64,
}

impl Default for IsoConfig {
    fn default() -> Self {
        IsoConfig { exhaustive_cap: 1 << 14, random_trials: 48, seed: 0x5eed }
    }
}

/// Invariants preserved by isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub dims: Vec<usize>,
    pub radical_layers: Vec<Vec<usize>>,
    pub socle_layers: Vec<Vec<usize>>,
    pub path_ranks: Vec<usize>,
}

pub fn fingerprint(m: &Module) -> Fingerprint {
    let alg = m.algebra();
    let f = alg.field();
    let nv = alg.num_vertices();
    let basis = alg.basis();
    let path_mats: Vec<Matrix> = (0..basis.len()).map(|i| m.basis_matrix(i)).collect();
    let path_ranks = path_mats.iter().map(|p| p.rank()).collect();
    let mut radical_layers = Vec::new();
    let mut socle_layers = Vec::new();
    for k in 1..alg.loewy_length() {
        let rad: Vec<usize> = (0..nv)
            .map(|v| {
                let imgs: Vec<&Matrix> =
                    (0..basis.len()).filter(|&i| basis[i].target == v && basis[i].len() >= k).map(|i| &path_mats[i]).collect();
                Matrix::hstack(f, m.dim_at(v), &imgs).rank()
            })
            .collect();
        let soc: Vec<usize> = (0..nv)
            .map(|v| {
                let outs: Vec<&Matrix> =
                    (0..basis.len()).filter(|&i| basis[i].source == v && basis[i].len() == k).map(|i| &path_mats[i]).collect();
                Matrix::vstack(f, m.dim_at(v), &outs).nullity()
            })
            .collect();
        radical_layers.push(rad);
        socle_layers.push(soc);
    }
    Fingerprint { dims: m.dims().to_vec(), radical_layers, socle_layers, path_ranks }
}

pub fn is_isomorphic(m: &Module, n: &Module, cfg: &IsoConfig) -> Result<IsoVerdict> {
    Ok(match find_isomorphism(m, n, cfg)? {
        Search::Found(_) => IsoVerdict::Yes,
        Search::Excluded => IsoVerdict::No,
        Search::GaveUp => IsoVerdict::Unknown,
    })
}

#[derive(Clone, Debug)]
pub enum Search {
    Found(ModuleMap),
    Excluded,
    GaveUp,
}

pub fn find_isomorphism(m: &Module, n: &Module, cfg: &IsoConfig) -> Result<Search> {
    m.check_same_algebra(n)?;
    if m.dims() != n.dims() {
        return Ok(Search::Excluded);
    }
    if m == n {
        return Ok(Search::Found(ModuleMap::identity(m)));
    }
    if fingerprint(m) != fingerprint(n) {
        return Ok(Search::Excluded);
    }
    let hs = hom_space(m, n)?;
    let d = hs.dim();
    if d != hom_dim(m, m)? || d != hom_dim(n, n)? || d != hom_dim(n, m)? {
        return Ok(Search::Excluded);
    }
    let field = m.field();
    let invertible = |coefs: &[Scalar]| -> Option<ModuleMap> {
        let f = hs.combine(coefs);
        f.is_iso().then_some(f)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.random_trials {
        let coefs: Vec<Scalar> = (0..d).map(|_| field.sample(&mut rng)).collect();
        if let Some(f) = invertible(&coefs) {
            return Ok(Search::Found(f));
        }
    }
    if let Some(q) = field.order() {
        let total = (q as u128).checked_pow(d as u32);
        if total.is_some_and(|t| t <= cfg.exhaustive_cap as u128) {
            let total = total.unwrap() as u64;
            for idx in 0..total {
                let mut rest = idx;
                let coefs: Vec<Scalar> = (0..d)
                    .map(|_| {
                        let c = field.element(rest % q);
                        rest /= q;
                        c
                    })
                    .collect();
                if let Some(f) = invertible(&coefs) {
                    return Ok(Search::Found(f));
                }
            }
            return Ok(Search::Excluded);
        }
    }
    Ok(Search::GaveUp)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{PathAlgebra, Quiver};
    use crate::field::Field;
    use crate::module::{projective, simple};

    #[test]
    fn a2_cases() {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let a = Arc::new(PathAlgebra::new(q, vec![], Field::prime(2).unwrap()).unwrap());
        let cfg = IsoConfig::default();
        let (s1, s2, p1) = (simple(&a, 0), simple(&a, 1), projective(&a, 0));
        assert_eq!(is_isomorphic(&p1, &p1, &cfg).unwrap(), IsoVerdict::Yes);
        assert_eq!(is_isomorphic(&s1, &s2, &cfg).unwrap(), IsoVerdict::No);
        let ss = Module::direct_sum(&a, &[&s1, &s2]).sum;
        assert_eq!(is_isomorphic(&p1, &ss, &cfg).unwrap(), IsoVerdict::No);
        let x = Module::direct_sum(&a, &[&p1, &s1]).sum;
        let y = Module::direct_sum(&a, &[&s1, &p1]).sum;
        assert_ne!(x, y);
        assert_eq!(is_isomorphic(&x, &y, &cfg).unwrap(), IsoVerdict::Yes);
    }
}
