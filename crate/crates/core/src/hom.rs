//! Hom spaces between modules.

use crate::error::Result;
use crate::field::Scalar;
use crate::matrix::Matrix;
use crate::module::{Module, ModuleMap};

/// A basis of `Hom(M, N)` together with the linear system it solves, so
/// that arbitrary homomorphisms can be expressed in basis coordinates.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source: Module,
    pub target: Module,
    pub basis: Vec<ModuleMap>,
    free: Vec<usize>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a homomorphism in `basis`.
    pub fn coords(&self, f: &ModuleMap) -> Vec<Scalar> {
        let flat = f.flatten();
        self.free.iter().map(|&i| flat[i].clone()).collect()
    }

    /// `sum c_i basis_i`.
    pub fn combine(&self, coefs: &[Scalar]) -> ModuleMap {
        let mut out = ModuleMap::zero(&self.source, &self.target);
        for (c, b) in coefs.iter().zip(&self.basis) {
            if !self.source.field().is_zero(c) {
                out = out.add(&b.scale(c));
            }
        }
        out
    }
}

pub fn hom_space(m: &Module, n: &Module) -> Result<HomSpace> {
    m.check_same_algebra(n)?;
    let alg = m.algebra();
    let f = alg.field();
    let nv = alg.num_vertices();
    // unknown X_v is an n_v x m_v block, stored row-major, blocks in vertex order
    let mut offs = Vec::with_capacity(nv);
    let mut total = 0;
    for v in 0..nv {
        offs.push(total);
        total += n.dim_at(v) * m.dim_at(v);
    }
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for a in 0..alg.num_arrows() {
        let arrow = alg.arrow(a);
        let (s, t) = (arrow.source, arrow.target);
        let ma = m.action(a);
        let na = n.action(a);
        // (X_t M_a - N_a X_s)[i][j] = 0 for i < n_t, j < m_s
        for i in 0..n.dim_at(t) {
            for j in 0..m.dim_at(s) {
                let mut row = vec![f.zero(); total];
                for k in 0..m.dim_at(t) {
                    let idx = offs[t] + i * m.dim_at(t) + k;
                    row[idx] = f.add(&row[idx], ma.get(k, j));
                }
                for k in 0..n.dim_at(s) {
                    let idx = offs[s] + k * m.dim_at(s) + j;
                    row[idx] = f.sub(&row[idx], na.get(i, k));
                }
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_rows(f, rows, total);
    let (kernel, free) = system.kernel_with_free();
    let basis = (0..kernel.cols())
        .map(|c| {
            let col = kernel.col(c);
            let mats = (0..nv)
                .map(|v| {
                    let (r, cc) = (n.dim_at(v), m.dim_at(v));
                    Matrix::from_fn(f, r, cc, |i, j| col[offs[v] + i * cc + j].clone())
                })
                .collect();
            ModuleMap::new_unchecked(m.clone(), n.clone(), mats)
        })
        .collect();
    Ok(HomSpace { source: m.clone(), target: n.clone(), basis, free })
}

pub fn hom_dim(m: &Module, n: &Module) -> Result<usize> {
    Ok(hom_space(m, n)?.dim())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{PathAlgebra, Quiver, Relation};
    use crate::field::Field;
    use crate::module::{projective, simple};

    /// Brute force over all vertexwise matrices with entries in F_2.
    fn brute_force_hom_count(m: &Module, n: &Module) -> usize {
        let f = m.field();
        let nv = m.dims().len();
        let sizes: Vec<usize> = (0..nv).map(|v| m.dim_at(v) * n.dim_at(v)).collect();
        let total: usize = sizes.iter().sum();
        let mut count = 0;
        for bits in 0u64..(1 << total) {
            let mut off = 0;
            let mats: Vec<Matrix> = (0..nv)
                .map(|v| {
                    let cols = m.dim_at(v);
                    let mm = Matrix::from_fn(f, n.dim_at(v), cols, |i, j| {
                        f.from_i64(((bits >> (off + i * cols + j)) & 1) as i64)
                    });
                    off += sizes[v];
                    mm
                })
                .collect();
            if ModuleMap::new(m.clone(), n.clone(), mats).is_ok() {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn a2_hom_dims() {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let a = Arc::new(PathAlgebra::new(q, vec![], Field::prime(2).unwrap()).unwrap());
        let p1 = projective(&a, 0);
        let s1 = simple(&a, 0);
        let h = hom_space(&p1, &s1).unwrap();
        assert_eq!(h.dim(), 1);
        assert_eq!(1usize << h.dim(), brute_force_hom_count(&p1, &s1));
        assert_eq!(hom_dim(&s1, &p1).unwrap(), 0);
        let end = hom_space(&p1, &p1).unwrap();
        assert_eq!(1usize << end.dim(), brute_force_hom_count(&p1, &p1));
        for b in &end.basis {
            b.validate().unwrap();
            let c = end.coords(b);
            assert_eq!(&end.combine(&c), b);
        }
    }

    #[test]
    fn dual_numbers_end_of_simple() {
        let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let f = Field::prime(2).unwrap();
        let r = Relation { terms: vec![(f.one(), q.path(&["x", "x"]).unwrap())] };
        let a = Arc::new(PathAlgebra::new(q, vec![r], f).unwrap());
        let s = simple(&a, 0);
        assert_eq!(hom_dim(&s, &s).unwrap(), 1);
        let p = projective(&a, 0);
        assert_eq!(hom_dim(&p, &p).unwrap(), 2);
        assert_eq!(1usize << 2, brute_force_hom_count(&p, &p));
    }
}
