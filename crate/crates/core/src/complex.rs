//! Bounded chain complexes of modules, homology and Hom complexes.
//!
//! Differentials lower degree: `d_n: X_n -> X_{n-1}`. Outside the support
//! window every object is zero.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::PathAlgebra;
use crate::error::{Error, Result};
use crate::exact::{cokernel, factor_through_mono, kernel};
use crate::hom::{hom_space, HomSpace};
use crate::matrix::Matrix;
use crate::module::{Module, ModuleMap};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    algebra: Arc<PathAlgebra>,
    lo: i64,
    objects: Vec<Module>,
    /// `diffs[i]` is `d_{lo+i+1}: X_{lo+i+1} -> X_{lo+i}`.
    diffs: Vec<ModuleMap>,
}

impl ChainComplex {
    /// `objects[i]` sits in degree `lo + i`; `diffs[i]` is `d_{lo+i+1}`.
    pub fn new(algebra: Arc<PathAlgebra>, lo: i64, objects: Vec<Module>, diffs: Vec<ModuleMap>) -> Result<Self> {
        if objects.is_empty() {
            return Err(Error::InvalidComplex("empty support window".into()));
        }
        if diffs.len() + 1 != objects.len() {
            return Err(Error::InvalidComplex("need one differential per adjacent pair of degrees".into()));
        }
        for m in &objects {
            if !crate::module::same_algebra(m.algebra(), &algebra) {
                return Err(Error::AlgebraMismatch);
            }
        }
        for (i, d) in diffs.iter().enumerate() {
            d.validate()?;
            if d.source().dims() != objects[i + 1].dims() || d.target().dims() != objects[i].dims() {
                return Err(Error::InvalidComplex(format!("d_{} has the wrong endpoints", lo + i as i64 + 1)));
            }
        }
        let diffs = diffs
            .into_iter()
            .enumerate()
            .map(|(i, d)| d.retarget(&objects[i + 1], &objects[i]))
            .collect();
        let c = ChainComplex { algebra, lo, objects, diffs };
        c.check_square_zero()?;
        Ok(c)
    }

    pub fn check_square_zero(&self) -> Result<()> {
        for i in 1..self.diffs.len() {
            if !self.diffs[i].then(&self.diffs[i - 1]).is_zero() {
                return Err(Error::InvalidComplex(format!(
                    "d_{} d_{} is nonzero",
                    self.lo + i as i64,
                    self.lo + i as i64 + 1
                )));
            }
        }
        Ok(())
    }

    pub fn zero(algebra: &Arc<PathAlgebra>) -> Self {
        ChainComplex { algebra: algebra.clone(), lo: 0, objects: vec![Module::zero(algebra.clone())], diffs: vec![] }
    }

    /// `S^n(M)`: `M` in degree `n`, zero elsewhere.
    pub fn sphere(m: &Module, n: i64) -> Self {
        ChainComplex { algebra: m.algebra().clone(), lo: n, objects: vec![m.clone()], diffs: vec![] }
    }

    /// `D^n(M)`: `M --1--> M` in degrees `n`, `n - 1`.
    pub fn disk(m: &Module, n: i64) -> Self {
        ChainComplex {
            algebra: m.algebra().clone(),
            lo: n - 1,
            objects: vec![m.clone(), m.clone()],
            diffs: vec![ModuleMap::identity(m)],
        }
    }

    /// The complex `X_hi -> ... -> X_lo` given by a chain of composable maps,
    /// with `maps[0]` the differential leaving the top degree `lo + maps.len()`.
    pub fn from_maps_descending(lo: i64, maps: &[ModuleMap]) -> Result<Self> {
        let Some(first) = maps.first() else {
            return Err(Error::InvalidComplex("no maps".into()));
        };
        let algebra = first.source().algebra().clone();
        let mut objects: Vec<Module> = maps.iter().rev().map(|d| d.target().clone()).collect();
        objects.push(first.source().clone());
        let diffs: Vec<ModuleMap> = maps.iter().rev().cloned().collect();
        ChainComplex::new(algebra, lo, objects, diffs)
    }

    pub fn algebra(&self) -> &Arc<PathAlgebra> {
        &self.algebra
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.objects.len() as i64 - 1
    }

    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.hi())
    }

    /// Smallest window containing all nonzero objects, or `None` for the zero complex.
    pub fn amplitude(&self) -> Option<(i64, i64)> {
        let nz: Vec<i64> = (self.lo..=self.hi()).filter(|&n| !self.object(n).is_zero()).collect();
        Some((*nz.first()?, *nz.last()?))
    }

    pub fn object(&self, n: i64) -> Module {
        if n < self.lo || n > self.hi() {
            Module::zero(self.algebra.clone())
        } else {
            self.objects[(n - self.lo) as usize].clone()
        }
    }

    pub fn objects(&self) -> &[Module] {
        &self.objects
    }

    /// `d_n: X_n -> X_{n-1}` (zero outside the window).
    pub fn diff(&self, n: i64) -> ModuleMap {
        if n > self.lo && n <= self.hi() {
            self.diffs[(n - self.lo - 1) as usize].clone()
        } else {
            ModuleMap::zero(&self.object(n), &self.object(n - 1))
        }
    }

    /// Same complex on a wider window, padded with zero objects.
    pub fn widen(&self, lo: i64, hi: i64) -> ChainComplex {
        let lo = lo.min(self.lo);
        let hi = hi.max(self.hi());
        let objects: Vec<Module> = (lo..=hi).map(|n| self.object(n)).collect();
        let diffs: Vec<ModuleMap> = (lo + 1..=hi).map(|n| self.diff(n)).collect();
        ChainComplex { algebra: self.algebra.clone(), lo, objects, diffs }
    }

    /// Degree shift: `(X[s])_n = X_{n-s}`, differentials unchanged.
    pub fn shift(&self, s: i64) -> ChainComplex {
        ChainComplex { algebra: self.algebra.clone(), lo: self.lo + s, objects: self.objects.clone(), diffs: self.diffs.clone() }
    }

    pub fn direct_sum(&self, other: &ChainComplex) -> ChainComplex {
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        let alg = &self.algebra;
        let objects: Vec<Module> =
            (lo..=hi).map(|n| Module::direct_sum(alg, &[&self.object(n), &other.object(n)]).sum).collect();
        let diffs: Vec<ModuleMap> = (lo + 1..=hi)
            .map(|n| {
                let d = ModuleMap::block_diag(alg, &[&self.diff(n), &other.diff(n)]);
                d.retarget(&objects[(n - lo) as usize], &objects[(n - lo - 1) as usize])
            })
            .collect();
        ChainComplex { algebra: alg.clone(), lo, objects, diffs }
    }

    pub fn homology(&self, n: i64) -> Homology {
        let d_n = self.diff(n);
        let d_up = self.diff(n + 1);
        let (z, z_mono) = kernel(&d_n);
        let (b, _, b_mono) = crate::exact::image(&d_up);
        let (k, _) = cokernel(&d_n);
        let b_in_z = factor_through_mono(&b_mono, &z_mono).expect("boundaries are cycles");
        let (h, _) = cokernel(&b_in_z);
        Homology { z, z_mono, b, h, k }
    }

    pub fn homology_dim(&self, n: i64) -> usize {
        let x = self.object(n).dim();
        x - self.diff(n).rank() - self.diff(n + 1).rank()
    }

    pub fn is_exact(&self) -> bool {
        (self.lo..=self.hi()).all(|n| self.homology_dim(n) == 0)
    }

    /// First degree with nonzero homology.
    pub fn first_homology(&self) -> Option<i64> {
        (self.lo..=self.hi()).find(|&n| self.homology_dim(n) != 0)
    }
}

/// `Z_n = ker d_n`, `B_n = im d_{n+1}`, `H_n = Z_n / B_n`, `K_n = Coker d_n`.
#[derive(Clone, Debug)]
pub struct Homology {
    pub z: Module,
    pub z_mono: ModuleMap,
    pub b: Module,
    pub h: Module,
    pub k: Module,
}

/// Degreewise maps `f_n: X_n -> Y_n` commuting with the differentials.
#[derive(Clone, Debug)]
pub struct ComplexMap {
    pub source: ChainComplex,
    pub target: ChainComplex,
    pub components: BTreeMap<i64, ModuleMap>,
}

impl ComplexMap {
    pub fn new(source: ChainComplex, target: ChainComplex, components: BTreeMap<i64, ModuleMap>) -> Result<Self> {
        let m = ComplexMap { source, target, components };
        m.validate()?;
        Ok(m)
    }

    pub fn component(&self, n: i64) -> ModuleMap {
        self.components
            .get(&n)
            .cloned()
            .unwrap_or_else(|| ModuleMap::zero(&self.source.object(n), &self.target.object(n)))
    }

    pub fn validate(&self) -> Result<()> {
        let lo = self.source.lo().min(self.target.lo());
        let hi = self.source.hi().max(self.target.hi());
        for n in lo..=hi + 1 {
            let lhs = self.source.diff(n).then(&self.component(n - 1));
            let rhs = self.component(n).then(&self.target.diff(n));
            if lhs.mats() != rhs.mats() {
                return Err(Error::InvalidComplex(format!("complex map does not commute with d_{n}")));
            }
        }
        Ok(())
    }
}

/// One degree of `Hom(X, Y)`: the blocks `Hom(X_k, Y_{k+n})` with nonzero dimension.
#[derive(Clone, Debug)]
pub struct HomDegree {
    pub blocks: Vec<(i64, HomSpace)>,
    pub dim: usize,
}

impl HomDegree {
    fn offset(&self, k: i64) -> Option<(usize, &HomSpace)> {
        let mut off = 0;
        for (kk, hs) in &self.blocks {
            if *kk == k {
                return Some((off, hs));
            }
            off += hs.dim();
        }
        None
    }
}

/// `Hom(X, Y)` restricted to a window of degrees, with differentials
/// `(d f)_k = d^Y_{k+n} f_k - (-1)^n f_{k-1} d^X_k` written in diagram order
/// as `f_k` followed by `d^Y`, minus the sign times `d^X_k` followed by `f_{k-1}`.
#[derive(Clone, Debug)]
pub struct HomComplex {
    pub lo: i64,
    pub hi: i64,
    pub degrees: BTreeMap<i64, HomDegree>,
    /// `diffs[n]`: matrix of `d^H_n: Hom_n -> Hom_{n-1}` for `lo < n <= hi`.
    pub diffs: BTreeMap<i64, Matrix>,
}

impl HomComplex {
    pub fn dim(&self, n: i64) -> usize {
        self.degrees.get(&n).map_or(0, |d| d.dim)
    }

    /// Homology dimension; requires `lo < n < hi` so both adjacent differentials are present.
    pub fn homology_dim(&self, n: i64) -> usize {
        assert!(self.lo < n && n < self.hi, "degree {n} is not interior to the computed window");
        self.dim(n) - self.diffs[&n].rank() - self.diffs[&(n + 1)].rank()
    }

    pub fn check_square_zero(&self) -> Result<()> {
        for n in self.lo + 2..=self.hi {
            let prod = self.diffs[&(n - 1)].mul(&self.diffs[&n]);
            if !prod.is_zero() {
                return Err(Error::InvariantViolation(format!("Hom complex differential squares to nonzero at {n}")));
            }
        }
        Ok(())
    }

    /// The cycle in degree `n` given by coordinates, as its family of components.
    pub fn components(&self, n: i64, coords: &[crate::field::Scalar]) -> Vec<(i64, ModuleMap)> {
        let Some(deg) = self.degrees.get(&n) else { return vec![] };
        let mut out = Vec::new();
        let mut off = 0;
        for (k, hs) in &deg.blocks {
            out.push((*k, hs.combine(&coords[off..off + hs.dim()])));
            off += hs.dim();
        }
        out
    }
}

/// `Hom(X, Y)` in degrees `lo..=hi`.
pub fn hom_complex(x: &ChainComplex, y: &ChainComplex, lo: i64, hi: i64) -> Result<HomComplex> {
    if !crate::module::same_algebra(x.algebra(), y.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let f = x.algebra().field();
    let mut degrees = BTreeMap::new();
    for n in lo..=hi {
        let mut blocks = Vec::new();
        let mut dim = 0;
        for k in x.lo()..=x.hi() {
            let (xk, yk) = (x.object(k), y.object(k + n));
            if xk.is_zero() || yk.is_zero() {
                continue;
            }
            let hs = hom_space(&xk, &yk)?;
            if hs.dim() > 0 {
                dim += hs.dim();
                blocks.push((k, hs));
            }
        }
        degrees.insert(n, HomDegree { blocks, dim });
    }
    let mut diffs = BTreeMap::new();
    for n in lo + 1..=hi {
        let src = &degrees[&n];
        let tgt = &degrees[&(n - 1)];
        let sign = if n % 2 == 0 { f.one() } else { f.from_i64(-1) };
        let mut mat = Matrix::zeros(f, tgt.dim, src.dim);
        let mut col = 0;
        for (k, hs) in &src.blocks {
            for b in &hs.basis {
                // component k: f_k then d^Y_{k+n}
                if let Some((off, ths)) = tgt.offset(*k) {
                    let g = b.then(&y.diff(k + n));
                    let g = g.retarget(&ths.source, &ths.target);
                    for (i, c) in ths.coords(&g).into_iter().enumerate() {
                        mat.set(off + i, col, f.add(mat.get(off + i, col), &c));
                    }
                }
                // component k + 1: -(-1)^n d^X_{k+1} then f_k
                if let Some((off, ths)) = tgt.offset(k + 1) {
                    let g = x.diff(k + 1).then(b).scale(&f.neg(&sign));
                    let g = g.retarget(&ths.source, &ths.target);
                    for (i, c) in ths.coords(&g).into_iter().enumerate() {
                        mat.set(off + i, col, f.add(mat.get(off + i, col), &c));
                    }
                }
                col += 1;
            }
        }
        diffs.insert(n, mat);
    }
    Ok(HomComplex { lo, hi, degrees, diffs })
}

/// Degrees of `Hom(X, Y)` that can be nonzero, padded by one on each side.
pub fn hom_window(x: &ChainComplex, y: &ChainComplex) -> (i64, i64) {
    (y.lo() - x.hi() - 1, y.hi() - x.lo() + 1)
}

/// Whether `Hom(X, Y)` is exact in every degree.
pub fn hom_is_exact(x: &ChainComplex, y: &ChainComplex) -> Result<Option<i64>> {
    let (lo, hi) = hom_window(x, y);
    let h = hom_complex(x, y, lo, hi)?;
    Ok((lo + 1..hi).find(|&n| h.homology_dim(n) != 0))
}

/// `dim H_n Hom(X, Y)`, computing only the three degrees involved.
pub fn hom_homology_dim(x: &ChainComplex, y: &ChainComplex, n: i64) -> Result<usize> {
    Ok(hom_complex(x, y, n - 1, n + 1)?.homology_dim(n))
}
