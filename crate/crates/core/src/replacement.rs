//! Cofibrant and fibrant replacements of sphere complexes.
//!
//! A cofibrant replacement of `S(M)` is built from iterated special
//! precovers `F_i -> K_{i-1}` (with `K_{-1} = M`), so the kernels `K_i` land
//! in `C`. A fibrant replacement of `S^n(N)` dually iterates special
//! preenvelopes `L_{j-1} -> C_j` with cokernels `L_j` in `F`, placing `C_j`
//! in degree `n - j`. Once a (co)syzygy is already in the relevant class the
//! step is the identity and the construction stops.

use crate::approx::{CotorsionPairSpec, SpecialApproximation};
use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::exact::{cokernel, kernel};
use crate::module::{Module, ModuleMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Cofibrant,
    Fibrant,
}

#[derive(Clone, Debug)]
pub struct Replacement {
    pub side: Side,
    /// The deleted (co)resolution.
    pub complex: ChainComplex,
    /// `F_0 -> M` or `N -> C_0`.
    pub augmentation: ModuleMap,
    /// Cofibrant: `K_i = ker(F_i -> K_{i-1})`. Fibrant: `L_j = coker(L_{j-1} -> C_j)`.
    pub syzygies: Vec<Module>,
    /// Kernel inclusions `K_i -> F_i`, or cokernel projections `C_j -> L_j`.
    pub syzygy_maps: Vec<ModuleMap>,
    pub steps: Vec<SpecialApproximation>,
    /// Whether the last (co)syzygy is zero, so that nothing was cut off.
    pub complete: bool,
    /// Degree of `M` (resp. `N`) in the augmented complex minus one (resp. plus one).
    pub base: i64,
}

impl Replacement {
    /// Number of nonzero terms minus one, i.e. the length of the (co)resolution.
    pub fn length(&self) -> usize {
        self.steps.len().saturating_sub(1)
    }

    /// The replaced module.
    pub fn module(&self) -> &Module {
        match self.side {
            Side::Cofibrant => self.augmentation.target(),
            Side::Fibrant => self.augmentation.source(),
        }
    }

    /// Last computed (co)syzygy, zero when the replacement is complete.
    pub fn last_syzygy(&self) -> Module {
        self.syzygies.last().cloned().unwrap_or_else(|| Module::zero(self.module().algebra().clone()))
    }

    /// The term `F_i` (resp. `C_j`) as numbered by the construction.
    pub fn term(&self, i: usize) -> Module {
        match self.side {
            Side::Cofibrant => self.complex.object(i as i64),
            Side::Fibrant => self.complex.object(self.base - i as i64),
        }
    }

    /// The complex with `M` (resp. `N`) appended: `M` sits in degree `-1`
    /// for a cofibrant replacement, `N` in degree `n + 1` for a fibrant one.
    pub fn augmented(&self) -> Result<ChainComplex> {
        match self.side {
            Side::Cofibrant => {
                let top = self.complex.hi().max(0);
                let mut maps: Vec<ModuleMap> = (1..=top).rev().map(|i| self.complex.diff(i)).collect();
                let aug = self.augmentation.retarget(&self.complex.object(0), self.module());
                maps.push(aug);
                ChainComplex::from_maps_descending(-1, &maps)
            }
            Side::Fibrant => {
                let lo = self.complex.lo().min(self.base);
                let mut maps = vec![self.augmentation.retarget(self.module(), &self.complex.object(self.base))];
                maps.extend((lo + 1..=self.base).rev().map(|d| self.complex.diff(d)));
                ChainComplex::from_maps_descending(lo, &maps)
            }
        }
    }

    /// Checks exactness of the augmented complex and the per-step certificates.
    pub fn verify(&self, spec: &CotorsionPairSpec) -> Result<()> {
        let aug = self.augmented()?;
        aug.check_square_zero()?;
        let (lo, hi) = aug.window();
        // the extreme end of a truncated replacement carries the last syzygy as homology
        let (lo, hi) = match (self.side, self.complete) {
            (_, true) => (lo, hi),
            (Side::Cofibrant, false) => (lo, hi - 1),
            (Side::Fibrant, false) => (lo + 1, hi),
        };
        for n in lo..=hi {
            if aug.homology_dim(n) != 0 {
                return Err(Error::InvariantViolation(format!("replacement is not exact in degree {n}")));
            }
        }
        for s in &self.steps {
            s.verify(spec)?;
        }
        Ok(())
    }
}

/// Iterated special precovers of `M`, with at most `length + 1` terms.
pub fn cofibrant_replacement(spec: &CotorsionPairSpec, m: &Module, length: usize) -> Result<Replacement> {
    let alg = spec.algebra();
    let mut k = m.clone();
    let mut into_prev: Option<ModuleMap> = None;
    let mut objects: Vec<Module> = Vec::new();
    let mut diffs: Vec<ModuleMap> = Vec::new();
    let mut syzygies = Vec::new();
    let mut syzygy_maps = Vec::new();
    let mut steps = Vec::new();
    let mut augmentation = ModuleMap::zero(&Module::zero(alg.clone()), m);
    for i in 0..=length {
        if k.is_zero() {
            break;
        }
        let step = spec
            .resolution_step(&k)
            .map_err(|e| Error::ReplacementFailed { stage: i, reason: e.to_string() })?;
        let phi = step.map.clone();
        match &into_prev {
            None => augmentation = phi.clone(),
            Some(inc) => diffs.push(phi.then(inc)),
        }
        objects.push(phi.source().clone());
        let (kk, inc) = kernel(&phi);
        syzygies.push(kk.clone());
        syzygy_maps.push(inc.clone());
        steps.push(step);
        into_prev = Some(inc);
        k = kk;
    }
    let complete = k.is_zero();
    let complex = if objects.is_empty() {
        ChainComplex::zero(alg)
    } else {
        ChainComplex::new(alg.clone(), 0, objects, diffs)?
    };
    Ok(Replacement { side: Side::Cofibrant, complex, augmentation, syzygies, syzygy_maps, steps, complete, base: 0 })
}

/// Iterated special preenvelopes of `N`, placed in degrees `n, n-1, ...`.
pub fn fibrant_replacement(spec: &CotorsionPairSpec, n_mod: &Module, n: i64, length: usize) -> Result<Replacement> {
    let alg = spec.algebra();
    let mut l = n_mod.clone();
    let mut prev_epi: Option<ModuleMap> = None;
    let mut objects: Vec<Module> = Vec::new();
    let mut maps: Vec<ModuleMap> = Vec::new();
    let mut syzygies = Vec::new();
    let mut syzygy_maps = Vec::new();
    let mut steps = Vec::new();
    let mut augmentation = ModuleMap::zero(n_mod, &Module::zero(alg.clone()));
    for j in 0..=length {
        if l.is_zero() {
            break;
        }
        let step = spec
            .coresolution_step(&l)
            .map_err(|e| Error::ReplacementFailed { stage: j, reason: e.to_string() })?;
        if !step.converged {
            return Err(Error::ReplacementFailed {
                stage: j,
                reason: format!("preenvelope did not converge after {} iterations", step.iterations),
            });
        }
        let e = step.map.clone();
        match &prev_epi {
            None => augmentation = e.clone(),
            Some(p) => maps.push(p.then(&e)),
        }
        objects.push(e.target().clone());
        let (coker, proj) = cokernel(&e);
        syzygies.push(coker.clone());
        syzygy_maps.push(proj.clone());
        steps.push(step);
        prev_epi = Some(proj);
        l = coker;
    }
    let complete = l.is_zero();
    let complex = match objects.len() {
        0 => ChainComplex::zero(alg).shift(n),
        1 => ChainComplex::sphere(&objects[0], n),
        len => ChainComplex::from_maps_descending(n - len as i64 + 1, &maps)?,
    };
    Ok(Replacement { side: Side::Fibrant, complex, augmentation, syzygies, syzygy_maps, steps, complete, base: n })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{PathAlgebra, Quiver, Relation};
    use crate::field::Field;
    use crate::module::{injective, projective, simple};

    fn a2() -> Arc<PathAlgebra> {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        Arc::new(PathAlgebra::new(q, vec![], Field::prime(2).unwrap()).unwrap())
    }

    fn dual() -> Arc<PathAlgebra> {
        let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let f = Field::prime(3).unwrap();
        let r = Relation { terms: vec![(f.one(), q.path(&["x", "x"]).unwrap())] };
        Arc::new(PathAlgebra::new(q, vec![r], f).unwrap())
    }

    #[test]
    fn projective_resolution_of_simple_a2() {
        let a = a2();
        let spec = CotorsionPairSpec::projective(&a);
        let r = cofibrant_replacement(&spec, &simple(&a, 0), 5).unwrap();
        assert!(r.complete);
        assert_eq!(r.length(), 1);
        assert_eq!(r.term(0), projective(&a, 0));
        assert_eq!(r.term(1), projective(&a, 1));
        r.verify(&spec).unwrap();
        let p = cofibrant_replacement(&spec, &projective(&a, 1), 5).unwrap();
        assert_eq!(p.length(), 0);
    }

    #[test]
    fn dual_numbers_resolutions() {
        let d = dual();
        let s = simple(&d, 0);
        let spec = CotorsionPairSpec::projective(&d);
        let r = cofibrant_replacement(&spec, &s, 4).unwrap();
        assert!(!r.complete);
        assert_eq!(r.steps.len(), 5);
        for i in 0..5 {
            assert_eq!(r.term(i).dim(), 2);
        }
        for i in 1..5 {
            assert_eq!(r.complex.diff(i).rank(), 1);
        }
        r.verify(&spec).unwrap();
        let inj = CotorsionPairSpec::injective(&d);
        let c = fibrant_replacement(&inj, &s, 3, 4).unwrap();
        assert_eq!(c.complex.window(), (-1, 3));
        assert!((0..5).all(|j| c.term(j).dim() == 2));
        c.verify(&inj).unwrap();
    }

    #[test]
    fn injective_is_its_own_fibrant_replacement() {
        let a = a2();
        let inj = CotorsionPairSpec::injective(&a);
        let i1 = injective(&a, 0);
        let c = fibrant_replacement(&inj, &i1, 2, 3).unwrap();
        assert!(c.complete);
        assert_eq!(c.complex.window(), (2, 2));
        assert_eq!(c.augmented().unwrap().window(), (2, 3));
    }
}
