//! Finite-dimensional representations and their morphisms.
//!
//! A module assigns a vector space `k^{dims[v]}` to each vertex and a matrix
//! of shape `dims[target] x dims[source]` to each arrow, acting on column
//! vectors. A path `a_1 ... a_k` therefore acts by `A_k ... A_1`.
//!
//! Composition of maps is written in diagram order: `f.then(&g)` is "first
//! `f`, then `g`", with vertex matrices `G_v * F_v`.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{Path, PathAlgebra};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Module {
    algebra: Arc<PathAlgebra>,
    dims: Vec<usize>,
    action: Vec<Matrix>,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModuleMap {
    source: Module,
    target: Module,
    mats: Vec<Matrix>,
}

pub(crate) fn same_algebra(a: &Arc<PathAlgebra>, b: &Arc<PathAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Module {
    pub fn new(algebra: Arc<PathAlgebra>, dims: Vec<usize>, action: Vec<Matrix>) -> Result<Self> {
        let m = Module { algebra, dims, action };
        m.validate()?;
        Ok(m)
    }

    /// Builds without checking the relations; callers guarantee validity.
    pub(crate) fn new_unchecked(algebra: Arc<PathAlgebra>, dims: Vec<usize>, action: Vec<Matrix>) -> Self {
        let m = Module { algebra, dims, action };
        debug_assert!(m.validate().is_ok(), "constructed module violates relations");
        m
    }

    pub fn validate(&self) -> Result<()> {
        let alg = &self.algebra;
        if self.dims.len() != alg.num_vertices() {
            return Err(Error::InvalidModule(format!(
                "expected {} vertex dimensions, got {}",
                alg.num_vertices(),
                self.dims.len()
            )));
        }
        if self.action.len() != alg.num_arrows() {
            return Err(Error::InvalidModule(format!(
                "expected {} arrow matrices, got {}",
                alg.num_arrows(),
                self.action.len()
            )));
        }
        for (a, m) in self.action.iter().enumerate() {
            let arrow = alg.arrow(a);
            let want = (self.dims[arrow.target], self.dims[arrow.source]);
            if m.shape() != want || m.field() != alg.field() {
                return Err(Error::InvalidModule(format!(
                    "arrow {} has shape {:?}, expected {:?}",
                    arrow.name,
                    m.shape(),
                    want
                )));
            }
        }
        for (r, rel) in alg.relations().iter().enumerate() {
            let Some((_, first)) = rel.terms.first() else { continue };
            let mut sum = Matrix::zeros(alg.field(), self.dims[first.target], self.dims[first.source]);
            for (c, p) in &rel.terms {
                sum = sum.add(&self.path_matrix(p).scale(c));
            }
            if !sum.is_zero() {
                return Err(Error::InvalidModule(format!("relation {r} does not vanish on the module")));
            }
        }
        Ok(())
    }

    pub fn zero(algebra: Arc<PathAlgebra>) -> Self {
        let f = algebra.field();
        let action = (0..algebra.num_arrows()).map(|_| Matrix::zeros(f, 0, 0)).collect();
        let dims = vec![0; algebra.num_vertices()];
        Module { algebra, dims, action }
    }

    pub fn algebra(&self) -> &Arc<PathAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn action(&self, a: usize) -> &Matrix {
        &self.action[a]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    /// Start of each vertex block in the flattened (vertex-major) vector space.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.dims.len());
        let mut acc = 0;
        for &d in &self.dims {
            out.push(acc);
            acc += d;
        }
        out
    }

    pub fn path_matrix(&self, p: &Path) -> Matrix {
        let mut m = Matrix::identity(self.field(), self.dims[p.source]);
        for &a in &p.arrows {
            m = self.action[a].mul(&m);
        }
        m
    }

    /// Matrix of the `i`-th path basis element of the algebra.
    pub fn basis_matrix(&self, i: usize) -> Matrix {
        self.path_matrix(&self.algebra.basis()[i])
    }

    pub fn check_same_algebra(&self, other: &Module) -> Result<()> {
        if same_algebra(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// Direct sum with canonical injections and projections.
    pub fn direct_sum(algebra: &Arc<PathAlgebra>, parts: &[&Module]) -> DirectSum {
        let f = algebra.field();
        let nv = algebra.num_vertices();
        let dims: Vec<usize> = (0..nv).map(|v| parts.iter().map(|m| m.dims[v]).sum()).collect();
        let action = (0..algebra.num_arrows())
            .map(|a| {
                let blocks: Vec<&Matrix> = parts.iter().map(|m| &m.action[a]).collect();
                Matrix::block_diag(f, &blocks)
            })
            .collect();
        let sum = Module { algebra: algebra.clone(), dims, action };
        let mut injections = Vec::new();
        let mut projections = Vec::new();
        let mut offs = vec![0usize; nv];
        for m in parts {
            let inj: Vec<Matrix> = (0..nv)
                .map(|v| {
                    let mut x = Matrix::zeros(f, sum.dims[v], m.dims[v]);
                    x.paste(offs[v], 0, &Matrix::identity(f, m.dims[v]));
                    x
                })
                .collect();
            let proj: Vec<Matrix> = inj.iter().map(|x| x.transpose()).collect();
            injections.push(ModuleMap { source: (*m).clone(), target: sum.clone(), mats: inj });
            projections.push(ModuleMap { source: sum.clone(), target: (*m).clone(), mats: proj });
            for v in 0..nv {
                offs[v] += m.dims[v];
            }
        }
        DirectSum { sum, injections, projections }
    }

    pub fn sum_of(parts: &[&Module]) -> Option<Module> {
        let first = parts.first()?;
        Some(Module::direct_sum(&first.algebra, parts).sum)
    }

    /// `self^n`.
    pub fn power(&self, n: usize) -> Module {
        let parts: Vec<&Module> = std::iter::repeat(self).take(n).collect();
        Module::direct_sum(&self.algebra, &parts).sum
    }

    /// Radical `rad_v = sum of images of incoming arrows` as a column basis.
    pub fn radical_at(&self, v: usize) -> Matrix {
        let f = self.field();
        let incoming: Vec<&Matrix> = (0..self.algebra.num_arrows())
            .filter(|&a| self.algebra.arrow(a).target == v)
            .map(|a| &self.action[a])
            .collect();
        Matrix::hstack(f, self.dims[v], &incoming).image_basis()
    }

    /// Socle `soc_v = intersection of kernels of outgoing arrows` as a column basis.
    pub fn socle_at(&self, v: usize) -> Matrix {
        let f = self.field();
        let outgoing: Vec<&Matrix> = (0..self.algebra.num_arrows())
            .filter(|&a| self.algebra.arrow(a).source == v)
            .map(|a| &self.action[a])
            .collect();
        let rows: usize = outgoing.iter().map(|m| m.rows()).sum();
        let stacked = Matrix::vstack(f, self.dims[v], &outgoing);
        debug_assert_eq!(stacked.rows(), rows);
        stacked.kernel()
    }

    pub fn top_dims(&self) -> Vec<usize> {
        (0..self.dims.len()).map(|v| self.dims[v] - self.radical_at(v).cols()).collect()
    }

    pub fn socle_dims(&self) -> Vec<usize> {
        (0..self.dims.len()).map(|v| self.socle_at(v).cols()).collect()
    }

    pub fn is_projective(&self) -> bool {
        let top = self.top_dims();
        let total: usize = (0..top.len()).map(|v| top[v] * projective_dim(&self.algebra, v)).sum();
        total == self.dim()
    }

    pub fn is_injective(&self) -> bool {
        let soc = self.socle_dims();
        let total: usize = (0..soc.len()).map(|v| soc[v] * injective_dim(&self.algebra, v)).sum();
        total == self.dim()
    }

    pub fn is_semisimple(&self) -> bool {
        self.action.iter().all(|m| m.is_zero())
    }

    /// Minimal projective cover `P -> self`.
    pub fn projective_cover(&self) -> ModuleMap {
        let f = self.field();
        let mut parts = Vec::new();
        let mut gens = Vec::new();
        for v in 0..self.dims.len() {
            let rad = self.radical_at(v);
            for i in rad.complement_indices() {
                let mut m = vec![f.zero(); self.dims[v]];
                m[i] = f.one();
                parts.push(projective(&self.algebra, v));
                gens.push((v, m));
            }
        }
        let maps: Vec<ModuleMap> = gens
            .iter()
            .zip(&parts)
            .map(|((v, m), p)| map_from_projective(p, *v, self, m))
            .collect();
        ModuleMap::hstack(&self.algebra, self, &maps)
    }

    /// Minimal injective envelope `self -> I`.
    pub fn injective_envelope(&self) -> ModuleMap {
        let mut maps = Vec::new();
        for v in 0..self.dims.len() {
            let soc = self.socle_at(v);
            if soc.cols() == 0 {
                continue;
            }
            // functionals restricting to the dual basis on the socle
            let phi = soc
                .transpose()
                .solve(&Matrix::identity(self.field(), soc.cols()))
                .expect("socle basis is linearly independent")
                .transpose();
            for j in 0..phi.rows() {
                let inj = injective(&self.algebra, v);
                maps.push(map_to_injective(self, &inj, v, phi.row(j)));
            }
        }
        ModuleMap::vstack(&self.algebra, self, &maps)
    }

    /// First syzygy: kernel of the projective cover.
    pub fn syzygy(&self) -> Module {
        let cover = self.projective_cover();
        crate::exact::kernel(&cover).0
    }

    pub fn cosyzygy(&self) -> Module {
        let env = self.injective_envelope();
        crate::exact::cokernel(&env).0
    }
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module{:?}", self.dims)
    }
}

impl fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleMap({:?} -> {:?}, {:?})", self.source.dims, self.target.dims, self.mats)
    }
}

pub struct DirectSum {
    pub sum: Module,
    pub injections: Vec<ModuleMap>,
    pub projections: Vec<ModuleMap>,
}

impl ModuleMap {
    pub fn new(source: Module, target: Module, mats: Vec<Matrix>) -> Result<Self> {
        source.check_same_algebra(&target)?;
        let m = ModuleMap { source, target, mats };
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(source: Module, target: Module, mats: Vec<Matrix>) -> Self {
        let m = ModuleMap { source, target, mats };
        debug_assert!(m.validate().is_ok(), "constructed map does not intertwine");
        m
    }

    pub fn validate(&self) -> Result<()> {
        let alg = self.source.algebra.clone();
        if self.mats.len() != alg.num_vertices() {
            return Err(Error::InvalidMap("wrong number of vertex matrices".into()));
        }
        for v in 0..alg.num_vertices() {
            if self.mats[v].shape() != (self.target.dims[v], self.source.dims[v]) {
                return Err(Error::InvalidMap(format!("vertex {} block has wrong shape", alg.quiver().vertices()[v])));
            }
        }
        for a in 0..alg.num_arrows() {
            let arrow = alg.arrow(a);
            let lhs = self.mats[arrow.target].mul(self.source.action(a));
            let rhs = self.target.action(a).mul(&self.mats[arrow.source]);
            if lhs != rhs {
                return Err(Error::InvalidMap(format!("map does not commute with arrow {}", arrow.name)));
            }
        }
        Ok(())
    }

    pub fn zero(source: &Module, target: &Module) -> Self {
        let f = source.field();
        let mats = (0..source.dims.len()).map(|v| Matrix::zeros(f, target.dims[v], source.dims[v])).collect();
        ModuleMap { source: source.clone(), target: target.clone(), mats }
    }

    pub fn identity(m: &Module) -> Self {
        let f = m.field();
        let mats = m.dims.iter().map(|&d| Matrix::identity(f, d)).collect();
        ModuleMap { source: m.clone(), target: m.clone(), mats }
    }

    pub fn source(&self) -> &Module {
        &self.source
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    pub fn mat(&self, v: usize) -> &Matrix {
        &self.mats[v]
    }

    pub fn mats(&self) -> &[Matrix] {
        &self.mats
    }

    pub fn field(&self) -> Field {
        self.source.field()
    }

    /// `self` followed by `g`.
    pub fn then(&self, g: &ModuleMap) -> ModuleMap {
        assert_eq!(self.target.dims, g.source.dims, "composition of incompatible maps");
        let mats = self.mats.iter().zip(&g.mats).map(|(f, g)| g.mul(f)).collect();
        ModuleMap { source: self.source.clone(), target: g.target.clone(), mats }
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        let mats = self.mats.iter().zip(&other.mats).map(|(a, b)| a.add(b)).collect();
        ModuleMap { source: self.source.clone(), target: self.target.clone(), mats }
    }

    pub fn sub(&self, other: &ModuleMap) -> ModuleMap {
        let mats = self.mats.iter().zip(&other.mats).map(|(a, b)| a.sub(b)).collect();
        ModuleMap { source: self.source.clone(), target: self.target.clone(), mats }
    }

    pub fn scale(&self, c: &Scalar) -> ModuleMap {
        let mats = self.mats.iter().map(|a| a.scale(c)).collect();
        ModuleMap { source: self.source.clone(), target: self.target.clone(), mats }
    }

    pub fn neg(&self) -> ModuleMap {
        self.scale(&self.field().from_i64(-1))
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(|m| m.is_zero())
    }

    pub fn rank(&self) -> usize {
        self.mats.iter().map(|m| m.rank()).sum()
    }

    pub fn is_mono(&self) -> bool {
        self.mats.iter().all(|m| m.is_injective())
    }

    pub fn is_epi(&self) -> bool {
        self.mats.iter().all(|m| m.is_surjective())
    }

    pub fn is_iso(&self) -> bool {
        self.mats.iter().all(|m| m.is_invertible())
    }

    pub fn inverse(&self) -> Option<ModuleMap> {
        let mats = self.mats.iter().map(|m| m.inverse()).collect::<Option<Vec<_>>>()?;
        Some(ModuleMap { source: self.target.clone(), target: self.source.clone(), mats })
    }

    /// Entries in vertex-major, row-major order.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.mats.iter().flat_map(|m| m.entries().iter().cloned()).collect()
    }

    /// Replaces source and/or target by equal modules (same dims and action).
    pub fn retarget(&self, source: &Module, target: &Module) -> ModuleMap {
        assert_eq!(source.dims, self.source.dims);
        assert_eq!(target.dims, self.target.dims);
        ModuleMap { source: source.clone(), target: target.clone(), mats: self.mats.clone() }
    }

    /// `(f_1, ..., f_k): X_1 + ... + X_k -> Y`.
    pub fn hstack(algebra: &Arc<PathAlgebra>, target: &Module, maps: &[ModuleMap]) -> ModuleMap {
        let f = algebra.field();
        let srcs: Vec<&Module> = maps.iter().map(|m| &m.source).collect();
        let source = Module::direct_sum(algebra, &srcs).sum;
        let mats = (0..algebra.num_vertices())
            .map(|v| {
                let blocks: Vec<&Matrix> = maps.iter().map(|m| &m.mats[v]).collect();
                Matrix::hstack(f, target.dims[v], &blocks)
            })
            .collect();
        ModuleMap { source, target: target.clone(), mats }
    }

    /// `(f_1; ...; f_k): X -> Y_1 + ... + Y_k`.
    pub fn vstack(algebra: &Arc<PathAlgebra>, source: &Module, maps: &[ModuleMap]) -> ModuleMap {
        let f = algebra.field();
        let tgts: Vec<&Module> = maps.iter().map(|m| &m.target).collect();
        let target = Module::direct_sum(algebra, &tgts).sum;
        let mats = (0..algebra.num_vertices())
            .map(|v| {
                let blocks: Vec<&Matrix> = maps.iter().map(|m| &m.mats[v]).collect();
                Matrix::vstack(f, source.dims[v], &blocks)
            })
            .collect();
        ModuleMap { source: source.clone(), target, mats }
    }

    /// `f_1 + ... + f_k: X_1 + ... + X_k -> Y_1 + ... + Y_k`.
    pub fn block_diag(algebra: &Arc<PathAlgebra>, maps: &[&ModuleMap]) -> ModuleMap {
        let f = algebra.field();
        let srcs: Vec<&Module> = maps.iter().map(|m| &m.source).collect();
        let tgts: Vec<&Module> = maps.iter().map(|m| &m.target).collect();
        let source = Module::direct_sum(algebra, &srcs).sum;
        let target = Module::direct_sum(algebra, &tgts).sum;
        let mats = (0..algebra.num_vertices())
            .map(|v| {
                let blocks: Vec<&Matrix> = maps.iter().map(|m| &m.mats[v]).collect();
                Matrix::block_diag(f, &blocks)
            })
            .collect();
        ModuleMap { source, target, mats }
    }
}

/// The standard modules attached to each vertex.
#[derive(Clone, Debug)]
pub struct StandardModules {
    pub projectives: Vec<Module>,
    pub injectives: Vec<Module>,
    pub simples: Vec<Module>,
}

pub fn standard_modules(algebra: &Arc<PathAlgebra>) -> StandardModules {
    let n = algebra.num_vertices();
    StandardModules {
        projectives: (0..n).map(|v| projective(algebra, v)).collect(),
        injectives: (0..n).map(|v| injective(algebra, v)).collect(),
        simples: (0..n).map(|v| simple(algebra, v)).collect(),
    }
}

fn projective_dim(algebra: &PathAlgebra, v: usize) -> usize {
    algebra.basis().iter().filter(|p| p.source == v).count()
}

fn injective_dim(algebra: &PathAlgebra, v: usize) -> usize {
    algebra.basis().iter().filter(|p| p.target == v).count()
}

/// `P_v`: at vertex `w`, the span of basis paths from `v` to `w`.
pub fn projective(algebra: &Arc<PathAlgebra>, v: usize) -> Module {
    let f = algebra.field();
    let nv = algebra.num_vertices();
    let blocks: Vec<Vec<usize>> = (0..nv).map(|w| algebra.paths_between(v, w)).collect();
    let dims: Vec<usize> = blocks.iter().map(|b| b.len()).collect();
    let action = (0..algebra.num_arrows())
        .map(|a| {
            let arrow = algebra.arrow(a);
            let (src, tgt) = (&blocks[arrow.source], &blocks[arrow.target]);
            let mut m = Matrix::zeros(f, tgt.len(), src.len());
            for (j, &p) in src.iter().enumerate() {
                for (q, c) in algebra.right_arrow(p, a) {
                    let i = tgt.iter().position(|x| x == q).expect("product stays in P_v");
                    m.set(i, j, c.clone());
                }
            }
            m
        })
        .collect();
    Module::new_unchecked(algebra.clone(), dims, action)
}

/// `I_v`: at vertex `w`, the dual of the span of basis paths from `w` to `v`.
pub fn injective(algebra: &Arc<PathAlgebra>, v: usize) -> Module {
    let f = algebra.field();
    let nv = algebra.num_vertices();
    let blocks: Vec<Vec<usize>> = (0..nv).map(|w| algebra.paths_between(w, v)).collect();
    let dims: Vec<usize> = blocks.iter().map(|b| b.len()).collect();
    let action = (0..algebra.num_arrows())
        .map(|a| {
            let arrow = algebra.arrow(a);
            let (src, tgt) = (&blocks[arrow.source], &blocks[arrow.target]);
            // (phi . a)(q) = phi(a q) for q a path from target(a) to v
            let mut m = Matrix::zeros(f, tgt.len(), src.len());
            for (i, &q) in tgt.iter().enumerate() {
                for (p, c) in algebra.left_arrow(a, q) {
                    let j = src.iter().position(|x| x == p).expect("product stays in e_w A e_v");
                    m.set(i, j, c.clone());
                }
            }
            m
        })
        .collect();
    Module::new_unchecked(algebra.clone(), dims, action)
}

pub fn simple(algebra: &Arc<PathAlgebra>, v: usize) -> Module {
    let f = algebra.field();
    let dims: Vec<usize> = (0..algebra.num_vertices()).map(|w| usize::from(w == v)).collect();
    let action = (0..algebra.num_arrows())
        .map(|a| {
            let arrow = algebra.arrow(a);
            Matrix::zeros(f, dims[arrow.target], dims[arrow.source])
        })
        .collect();
    Module::new_unchecked(algebra.clone(), dims, action)
}

/// The regular module `A = P_1 + ... + P_n`.
pub fn regular(algebra: &Arc<PathAlgebra>) -> Module {
    let ps: Vec<Module> = (0..algebra.num_vertices()).map(|v| projective(algebra, v)).collect();
    let refs: Vec<&Module> = ps.iter().collect();
    Module::direct_sum(algebra, &refs).sum
}

/// The map `P_v -> M` sending `e_v` to `m` (a vector in `M_v`).
pub fn map_from_projective(p: &Module, v: usize, m_mod: &Module, m: &[Scalar]) -> ModuleMap {
    let algebra = m_mod.algebra();
    let f = algebra.field();
    let mv = Matrix::from_cols(f, m.len(), &[m.to_vec()]);
    let mats = (0..algebra.num_vertices())
        .map(|w| {
            let cols: Vec<Vec<Scalar>> = algebra
                .paths_between(v, w)
                .into_iter()
                .map(|i| m_mod.basis_matrix(i).mul(&mv).col(0))
                .collect();
            Matrix::from_cols(f, m_mod.dims[w], &cols)
        })
        .collect();
    ModuleMap::new_unchecked(p.clone(), m_mod.clone(), mats)
}

/// The map `M -> I_v` induced by the functional `phi` on `M_v`.
pub fn map_to_injective(m_mod: &Module, inj: &Module, v: usize, phi: &[Scalar]) -> ModuleMap {
    let algebra = m_mod.algebra();
    let f = algebra.field();
    let phi = Matrix::from_rows(f, vec![phi.to_vec()], m_mod.dims[v]);
    let mats = (0..algebra.num_vertices())
        .map(|w| {
            let rows: Vec<Vec<Scalar>> = algebra
                .paths_between(w, v)
                .into_iter()
                .map(|i| phi.mul(&m_mod.basis_matrix(i)).row(0).to_vec())
                .collect();
            Matrix::from_rows(f, rows, m_mod.dims[w])
        })
        .collect();
    ModuleMap::new_unchecked(m_mod.clone(), inj.clone(), mats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Quiver;

    fn a2() -> Arc<PathAlgebra> {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        Arc::new(PathAlgebra::new(q, vec![], Field::prime(2).unwrap()).unwrap())
    }

    fn dual() -> Arc<PathAlgebra> {
        let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let f = Field::prime(2).unwrap();
        let r = crate::algebra::Relation { terms: vec![(f.one(), q.path(&["x", "x"]).unwrap())] };
        Arc::new(PathAlgebra::new(q, vec![r], f).unwrap())
    }

    #[test]
    fn a2_standard_modules() {
        let a = a2();
        let st = standard_modules(&a);
        assert_eq!(st.projectives[0].dims(), &[1, 1]);
        assert_eq!(st.projectives[1].dims(), &[0, 1]);
        assert_eq!(st.projectives[1], st.simples[1]);
        assert_eq!(st.injectives[0], st.simples[0]);
        assert_eq!(st.injectives[1].dims(), &[1, 1]);
        for m in st.projectives.iter().chain(&st.injectives).chain(&st.simples) {
            m.validate().unwrap();
        }
        assert!(st.projectives.iter().all(|p| p.is_projective()));
        assert!(st.injectives.iter().all(|p| p.is_injective()));
        assert!(!st.simples[0].is_projective());
        assert_eq!(st.projectives[0].top_dims(), vec![1, 0]);
    }

    #[test]
    fn dual_numbers_standard_modules() {
        let a = dual();
        let st = standard_modules(&a);
        assert_eq!(st.projectives[0].dim(), 2);
        assert_eq!(st.simples[0].dim(), 1);
        assert!(st.projectives[0].is_injective());
        assert_eq!(st.injectives[0].dim(), 2);
    }

    #[test]
    fn covers_and_envelopes() {
        let a = a2();
        let s1 = simple(&a, 0);
        let cover = s1.projective_cover();
        cover.validate().unwrap();
        assert!(cover.is_epi());
        assert_eq!(cover.source().dims(), &[1, 1]);
        let s2 = simple(&a, 1);
        let env = s2.injective_envelope();
        env.validate().unwrap();
        assert!(env.is_mono());
        assert_eq!(env.target().dims(), &[1, 1]);
    }

    #[test]
    fn direct_sum_maps_validate() {
        let a = a2();
        let p1 = projective(&a, 0);
        let s1 = simple(&a, 0);
        let ds = Module::direct_sum(&a, &[&p1, &s1]);
        for (i, p) in ds.injections.iter().zip(&ds.projections) {
            i.validate().unwrap();
            p.validate().unwrap();
            assert!(i.then(p).is_iso());
        }
    }
}
