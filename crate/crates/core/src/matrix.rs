//! Dense matrices over a [`Field`] with deterministic Gauss-Jordan elimination.
//!
//! Pivots are always chosen as the first nonzero entry scanning rows top to
//! bottom, so every echelon form (and therefore every basis handed out by
//! this crate) is reproducible run to run.

use std::fmt;

use crate::field::{Field, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, data }
    }

    /// Builds a matrix from rows; `cols` is needed when there are no rows.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        Matrix { field, rows: n, cols, data }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(field: Field, rows: usize, cols: &[Vec<Scalar>]) -> Self {
        Self::from_fn(field, rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn from_i64(field: Field, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix { field, rows, cols, data: entries.iter().map(|&v| field.from_i64(v)).collect() }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let f = self.field;
        if let Field::Prime { p } = f {
            let a = to_u64(&self.data);
            let b = to_u64(&other.data);
            let mut out = vec![0u64; self.rows * other.cols];
            for i in 0..self.rows {
                for k in 0..self.cols {
                    let x = a[i * self.cols + k];
                    if x == 0 {
                        continue;
                    }
                    let row = &b[k * other.cols..(k + 1) * other.cols];
                    let dst = &mut out[i * other.cols..(i + 1) * other.cols];
                    for (d, &y) in dst.iter_mut().zip(row) {
                        *d = ((*d as u128 + x as u128 * y as u128) % p as u128) as u64;
                    }
                }
            }
            return Matrix { field: f, rows: self.rows, cols: other.cols, data: from_u64(out) };
        }
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = self.get(i, k);
                if f.is_zero(x) {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.mul_add(out.get(i, j), x, other.get(k, j));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        let f = self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for (j, x) in v.iter().enumerate() {
                    acc = f.mul_add(&acc, self.get(i, j), x);
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in sum");
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Matrix {
        let f = self.field;
        Matrix { field: f, rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| f.neg(a)).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let f = self.field;
        Matrix { field: f, rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| f.mul(a, c)).collect() }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Horizontal concatenation `[A | B | ...]`; all blocks need `rows` rows.
    pub fn hstack(field: Field, rows: usize, blocks: &[&Matrix]) -> Matrix {
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            out.paste(0, off, b);
            off += b.cols;
        }
        out
    }

    pub fn vstack(field: Field, cols: usize, blocks: &[&Matrix]) -> Matrix {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            out.paste(off, 0, b);
            off += b.rows;
        }
        out
    }

    pub fn block_diag(field: Field, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            out.paste(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        out
    }

    /// Copies `block` into `self` with its top-left corner at `(r, c)`.
    pub fn paste(&mut self, r: usize, c: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r + i, c + j, block.get(i, j).clone());
            }
        }
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        Matrix::from_fn(self.field, rows.len(), cols.len(), |i, j| self.get(rows.start + i, cols.start + j).clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    pub fn rref(&self) -> Rref {
        if let Field::Prime { p } = self.field {
            let mut a = to_u64(&self.data);
            let pivots = rref_mod(&mut a, self.rows, self.cols, p);
            let reduced = Matrix { field: self.field, rows: self.rows, cols: self.cols, data: from_u64(a) };
            return Rref { reduced, pivots };
        }
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else { continue };
            m.swap_rows(r, pr);
            let inv = f.inv(m.get(r, c));
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), &inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || f.is_zero(m.get(i, c)) {
                    continue;
                }
                let factor = f.neg(m.get(i, c));
                for j in c..m.cols {
                    let v = f.mul_add(m.get(i, j), &factor, m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { reduced: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Kernel basis as columns, plus the free columns. Basis vector `k` is 1
    /// at free column `free[k]` and 0 at every other free column, so the
    /// coordinates of any kernel vector are read off at the free positions.
    pub fn kernel_with_free(&self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        let Rref { reduced, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut basis = Matrix::zeros(f, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis.set(fc, k, f.one());
            for (r, &pc) in pivots.iter().enumerate() {
                basis.set(pc, k, f.neg(reduced.get(r, fc)));
            }
        }
        (basis, free)
    }

    pub fn kernel(&self) -> Matrix {
        self.kernel_with_free().0
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// A basis of the column space made of original columns.
    pub fn image_basis(&self) -> Matrix {
        self.select_cols(&self.rref().pivots)
    }

    /// Solves `self * X = rhs`, returning the solution with free variables set to zero.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "solve shape mismatch");
        let f = self.field;
        let aug = Matrix::hstack(f, self.rows, &[self, rhs]);
        let Rref { reduced, pivots } = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(f, self.cols, rhs.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, reduced.get(r, self.cols + j).clone());
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve(&Matrix::identity(self.field, self.rows))?;
        if self.mul(&x) == Matrix::identity(self.field, self.rows) {
            Some(x)
        } else {
            None
        }
    }

    /// Standard basis vectors (by index) extending the column space of `self`
    /// to the whole ambient space, chosen greedily in index order.
    pub fn complement_indices(&self) -> Vec<usize> {
        let id = Matrix::identity(self.field, self.rows);
        let aug = Matrix::hstack(self.field, self.rows, &[self, &id]);
        aug.rref().pivots.into_iter().filter(|&c| c >= self.cols).map(|c| c - self.cols).collect()
    }

    pub fn unit_vectors(field: Field, n: usize, idx: &[usize]) -> Matrix {
        Matrix::from_fn(field, n, idx.len(), |i, j| if idx[j] == i { field.one() } else { field.zero() })
    }
}

fn to_u64(data: &[Scalar]) -> Vec<u64> {
    data.iter()
        .map(|x| match x {
            Scalar::Mod(v) => *v,
            Scalar::Rat(_) => panic!("rational entry in prime-field matrix"),
        })
        .collect()
}

fn from_u64(data: Vec<u64>) -> Vec<Scalar> {
    data.into_iter().map(Scalar::Mod).collect()
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(p as i128) as u64
}

fn rref_mod(a: &mut [u64], rows: usize, cols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| a[i * cols + c] != 0) else { continue };
        if pr != r {
            for j in 0..cols {
                a.swap(r * cols + j, pr * cols + j);
            }
        }
        let inv = inv_mod(a[r * cols + c], p);
        for j in c..cols {
            a[r * cols + j] = ((a[r * cols + j] as u128 * inv as u128) % p as u128) as u64;
        }
        for i in 0..rows {
            let x = a[i * cols + c];
            if i == r || x == 0 {
                continue;
            }
            let factor = p - x;
            for j in c..cols {
                let y = a[r * cols + j];
                if y != 0 {
                    a[i * cols + j] = ((a[i * cols + j] as u128 + factor as u128 * y as u128) % p as u128) as u64;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| self.field.format(x)).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "] ({}x{})", self.rows, self.cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    #[test]
    fn rank_and_kernel() {
        let f = f5();
        let a = Matrix::from_i64(f, 2, 3, &[1, 2, 3, 2, 4, 6]);
        assert_eq!(a.rank(), 1);
        let (k, free) = a.kernel_with_free();
        assert_eq!(free, vec![1, 2]);
        assert!(a.mul(&k).is_zero());
        assert_eq!(k.cols(), 2);
    }

    #[test]
    fn solve_and_inverse() {
        let f = f5();
        let a = Matrix::from_i64(f, 2, 2, &[1, 1, 0, 1]);
        let b = Matrix::from_i64(f, 2, 1, &[3, 2]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul(&x), b);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(f, 2));
        let singular = Matrix::from_i64(f, 2, 2, &[1, 2, 2, 4]);
        assert!(singular.inverse().is_none());
        assert!(singular.solve(&Matrix::from_i64(f, 2, 1, &[1, 0])).is_none());
    }

    #[test]
    fn rational_elimination_matches_prime_shape() {
        let q = Field::Rational;
        let a = Matrix::from_i64(q, 3, 3, &[2, 4, 6, 1, 1, 1, 3, 5, 7]);
        assert_eq!(a.rank(), 2);
        assert!(a.mul(&a.kernel()).is_zero());
    }

    #[test]
    fn complement_extends_to_basis() {
        let f = f5();
        let b = Matrix::from_i64(f, 3, 1, &[0, 1, 1]);
        let idx = b.complement_indices();
        assert_eq!(idx.len(), 2);
        let full = Matrix::hstack(f, 3, &[&b, &Matrix::unit_vectors(f, 3, &idx)]);
        assert!(full.is_invertible());
    }

    #[test]
    fn empty_shapes() {
        let f = f5();
        let a = Matrix::zeros(f, 0, 3);
        assert_eq!(a.kernel().cols(), 3);
        let b = Matrix::zeros(f, 2, 0);
        assert_eq!(b.rank(), 0);
        assert_eq!(b.kernel().cols(), 0);
        assert_eq!(Matrix::zeros(f, 2, 0).mul(&Matrix::zeros(f, 0, 4)), Matrix::zeros(f, 2, 4));
    }
}
