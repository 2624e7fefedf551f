//! Quivers, paths and path algebras `kQ/I` with admissible ideals `I`.
//!
//! Paths compose left to right: the path `[a, b]` means "first `a`, then
//! `b`" and requires `target(a) == source(b)`. The ideal is presented by a
//! noncommutative Gröbner basis for the length-lexicographic order (longer
//! paths are larger; equal lengths compare arrow indices lexicographically);
//! the path basis of the algebra is the set of normal words.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;

const MAX_GROEBNER_ROUNDS: usize = 64;
const MAX_GROEBNER_SIZE: usize = 512;
const MAX_PATH_LENGTH: usize = 64;
const MAX_ALGEBRA_DIM: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// `arrows` are `(name, from, to)` triples naming declared vertices.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::MalformedQuiver(format!("duplicate vertex {v:?}")));
            }
        }
        let find = |name: &str| -> Result<usize> {
            vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::MalformedQuiver(format!("unknown vertex {name:?}")))
        };
        let mut out = Vec::with_capacity(arrows.len());
        for (name, from, to) in arrows {
            let name = name.as_ref().to_string();
            if out.iter().any(|a: &Arrow| a.name == name) {
                return Err(Error::MalformedQuiver(format!("duplicate arrow {name:?}")));
            }
            out.push(Arrow { name, source: find(from.as_ref())?, target: find(to.as_ref())? });
        }
        Ok(Quiver { vertices, arrows: out })
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Resolves a list of arrow names into a path.
    pub fn path(&self, names: &[&str]) -> Result<Path> {
        let mut idx = Vec::with_capacity(names.len());
        for n in names {
            idx.push(self.arrow_index(n).ok_or_else(|| Error::MalformedRelation(format!("unknown arrow {n:?}")))?);
        }
        self.path_from_indices(idx)
    }

    pub fn path_from_indices(&self, arrows: Vec<usize>) -> Result<Path> {
        let Some(&first) = arrows.first() else {
            return Err(Error::MalformedRelation("empty path".into()));
        };
        for w in arrows.windows(2) {
            if self.arrows[w[0]].target != self.arrows[w[1]].source {
                return Err(Error::MalformedRelation(format!(
                    "arrows {} and {} do not compose",
                    self.arrows[w[0]].name, self.arrows[w[1]].name
                )));
            }
        }
        let last = *arrows.last().unwrap();
        Ok(Path { source: self.arrows[first].source, target: self.arrows[last].target, arrows })
    }
}

/// A path in the quiver; trivial paths have no arrows and `source == target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Concatenation `self` then `other`, if the endpoints match.
    pub fn then(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path { source: self.source, target: other.target, arrows })
    }

    fn find(&self, word: &[usize]) -> Option<usize> {
        if word.len() > self.arrows.len() {
            return None;
        }
        (0..=self.arrows.len() - word.len()).find(|&i| &self.arrows[i..i + word.len()] == word)
    }

    pub fn display(&self, quiver: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e_{}", quiver.vertices[self.source])
        } else {
            self.arrows.iter().map(|&a| quiver.arrows[a].name.as_str()).collect::<Vec<_>>().join("·")
        }
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
            .then_with(|| self.target.cmp(&other.target))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A relation as supplied by the user: a linear combination of parallel paths.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub terms: Vec<(Scalar, Path)>,
}

/// Linear combination of parallel paths, kept sorted by the path order.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Poly {
    terms: BTreeMap<Path, Scalar>,
}

impl Poly {
    fn from_terms(field: Field, terms: &[(Scalar, Path)]) -> Poly {
        let mut p = Poly { terms: BTreeMap::new() };
        for (c, path) in terms {
            p.add_term(field, path.clone(), c.clone());
        }
        p
    }

    fn add_term(&mut self, field: Field, path: Path, c: Scalar) {
        let entry = self.terms.entry(path.clone()).or_insert_with(|| field.zero());
        *entry = field.add(entry, &c);
        if field.is_zero(entry) {
            self.terms.remove(&path);
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn tip(&self) -> Option<(&Path, &Scalar)> {
        self.terms.iter().next_back()
    }

    fn monic(mut self, field: Field) -> Poly {
        if let Some((_, lc)) = self.tip() {
            let inv = field.inv(lc);
            for v in self.terms.values_mut() {
                *v = field.mul(v, &inv);
            }
        }
        self
    }

    /// `c * u * self * v` for arrow words `u` and `v`.
    fn sandwich(&self, field: Field, c: &Scalar, u: &[usize], v: &[usize], src: usize, tgt: usize) -> Poly {
        let mut out = Poly { terms: BTreeMap::new() };
        for (p, k) in &self.terms {
            let mut arrows = u.to_vec();
            arrows.extend_from_slice(&p.arrows);
            arrows.extend_from_slice(v);
            let path = Path {
                source: if u.is_empty() { p.source } else { src },
                target: if v.is_empty() { p.target } else { tgt },
                arrows,
            };
            out.add_term(field, path, field.mul(c, k));
        }
        out
    }

    fn sub_assign(&mut self, field: Field, other: &Poly) {
        for (p, c) in &other.terms {
            self.add_term(field, p.clone(), field.neg(c));
        }
    }
}

/// `kQ/I` for an admissible ideal `I`, with its path basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathAlgebra {
    field: Field,
    quiver: Quiver,
    relations: Vec<Relation>,
    groebner: Vec<(Vec<Path>, Vec<Scalar>)>,
    basis: Vec<Path>,
    index: HashMap<Path, usize>,
    /// `right_arrow[i][a]`: normal form of `basis[i] · a`.
    right_arrow: Vec<Vec<Vec<(usize, Scalar)>>>,
    /// `left_arrow[a][i]`: normal form of `a · basis[i]`.
    left_arrow: Vec<Vec<Vec<(usize, Scalar)>>>,
    loewy_length: usize,
}

impl std::hash::Hash for PathAlgebra {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.hash(state);
        self.quiver.hash(state);
        self.relations.hash(state);
    }
}

impl PathAlgebra {
    pub fn new(quiver: Quiver, relations: Vec<Relation>, field: Field) -> Result<Self> {
        field.validate()?;
        for rel in &relations {
            validate_relation(&quiver, rel)?;
        }
        let gens: Vec<Poly> = relations
            .iter()
            .map(|r| Poly::from_terms(field, &r.terms))
            .filter(|p| !p.is_zero())
            .collect();
        let gb = groebner_basis(field, gens)?;
        let tips: Vec<Vec<usize>> = gb.iter().map(|g| g.tip().unwrap().0.arrows.clone()).collect();
        let basis = normal_words(&quiver, &tips)?;
        let index: HashMap<Path, usize> = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

        let mut alg = PathAlgebra {
            field,
            quiver,
            relations,
            groebner: gb
                .iter()
                .map(|g| {
                    let (paths, coefs) = g.terms.iter().rev().map(|(p, c)| (p.clone(), c.clone())).unzip();
                    (paths, coefs)
                })
                .collect(),
            basis,
            index,
            right_arrow: Vec::new(),
            left_arrow: Vec::new(),
            loewy_length: 0,
        };
        let n_arrows = alg.quiver.arrows.len();
        let mut right = vec![vec![Vec::new(); n_arrows]; alg.basis.len()];
        let mut left = vec![vec![Vec::new(); alg.basis.len()]; n_arrows];
        for (i, p) in alg.basis.iter().enumerate() {
            for (a, arrow) in alg.quiver.arrows.iter().enumerate() {
                let ap = Path { source: arrow.source, target: arrow.target, arrows: vec![a] };
                if let Some(q) = p.then(&ap) {
                    right[i][a] = alg.reduce_path(&gb, q);
                }
                if let Some(q) = ap.then(p) {
                    left[a][i] = alg.reduce_path(&gb, q);
                }
            }
        }
        alg.right_arrow = right;
        alg.left_arrow = left;
        alg.loewy_length = alg.radical_nilpotency()?;
        Ok(alg)
    }

    fn reduce_path(&self, gb: &[Poly], path: Path) -> Vec<(usize, Scalar)> {
        let mut p = Poly { terms: BTreeMap::new() };
        p.add_term(self.field, path, self.field.one());
        let p = reduce(self.field, p, gb);
        p.terms
            .into_iter()
            .map(|(path, c)| (*self.index.get(&path).expect("normal word outside basis"), c))
            .collect()
    }

    /// Checks that the arrow ideal is nilpotent modulo the relations and
    /// returns the Loewy length (smallest `L` with `J^L = 0`).
    fn radical_nilpotency(&self) -> Result<usize> {
        let n = self.basis.len();
        let f = self.field;
        // W_k = span of the normal forms of length-k paths, in basis coordinates.
        let mut cols: Vec<Vec<Scalar>> = Vec::new();
        for (a, arrow) in self.quiver.arrows.iter().enumerate() {
            let i = self.index[&Path::trivial(arrow.source)];
            cols.push(self.dense(&self.right_arrow[i][a]));
        }
        let mut current = Matrix::from_cols(f, n, &cols).image_basis();
        let mut k = 1;
        while current.cols() > 0 {
            let mut next = Vec::new();
            for j in 0..current.cols() {
                let v = current.col(j);
                for a in 0..self.quiver.arrows.len() {
                    next.push(self.right_mul_arrow_vec(&v, a));
                }
            }
            current = Matrix::from_cols(f, n, &next).image_basis();
            k += 1;
            // W_k spans the length-k paths; J^k is the sum of W_j for j >= k,
            // and a nilpotent J vanishes in at most dim A steps.
            if k > n + 1 {
                return Err(Error::NonAdmissible(format!(
                    "arrow ideal is not nilpotent modulo the relations (paths of length {k} survive)"
                )));
            }
        }
        Ok(k)
    }

    fn dense(&self, sparse: &[(usize, Scalar)]) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.basis.len()];
        for (i, c) in sparse {
            v[*i] = c.clone();
        }
        v
    }

    fn right_mul_arrow_vec(&self, v: &[Scalar], a: usize) -> Vec<Scalar> {
        let f = self.field;
        let mut out = vec![f.zero(); self.basis.len()];
        for (i, c) in v.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            for (j, d) in &self.right_arrow[i][a] {
                out[*j] = f.mul_add(&out[*j], c, d);
            }
        }
        out
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }

    pub fn num_arrows(&self) -> usize {
        self.quiver.arrows.len()
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.quiver.arrows[a]
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// Reduced Gröbner basis as `(paths, coefficients)` with the tip first.
    pub fn groebner_basis(&self) -> &[(Vec<Path>, Vec<Scalar>)] {
        &self.groebner
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn loewy_length(&self) -> usize {
        self.loewy_length
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Indices of basis paths from `v` to `w`, in basis order.
    pub fn paths_between(&self, v: usize, w: usize) -> Vec<usize> {
        (0..self.basis.len()).filter(|&i| self.basis[i].source == v && self.basis[i].target == w).collect()
    }

    /// Normal form of `basis[i] · arrow`.
    pub fn right_arrow(&self, i: usize, a: usize) -> &[(usize, Scalar)] {
        &self.right_arrow[i][a]
    }

    /// Normal form of `arrow · basis[i]`.
    pub fn left_arrow(&self, a: usize, i: usize) -> &[(usize, Scalar)] {
        &self.left_arrow[a][i]
    }

    /// Normal form of an arbitrary path.
    pub fn normal_form(&self, path: &Path) -> Vec<(usize, Scalar)> {
        let mut cur: Vec<(usize, Scalar)> = vec![(self.index[&Path::trivial(path.source)], self.field.one())];
        for &a in &path.arrows {
            let mut next: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (i, c) in &cur {
                for (j, d) in &self.right_arrow[*i][a] {
                    let e = next.entry(*j).or_insert_with(|| self.field.zero());
                    *e = self.field.mul_add(e, c, d);
                }
            }
            cur = next.into_iter().filter(|(_, c)| !self.field.is_zero(c)).collect();
        }
        cur
    }

    pub fn is_semisimple(&self) -> bool {
        self.quiver.arrows.is_empty()
    }
}

fn validate_relation(quiver: &Quiver, rel: &Relation) -> Result<()> {
    let mut endpoints = None;
    for (_, p) in &rel.terms {
        for &a in &p.arrows {
            if a >= quiver.arrows.len() {
                return Err(Error::MalformedRelation(format!("arrow index {a} out of range")));
            }
        }
        let recomputed = quiver.path_from_indices(p.arrows.clone())?;
        if recomputed != *p {
            return Err(Error::MalformedRelation("path endpoints inconsistent with arrows".into()));
        }
        if p.len() < 2 {
            return Err(Error::NonAdmissible(format!(
                "relation term {} has length {} < 2; the ideal must lie in the square of the arrow ideal",
                p.display(quiver),
                p.len()
            )));
        }
        match endpoints {
            None => endpoints = Some((p.source, p.target)),
            Some(e) if e != (p.source, p.target) => {
                return Err(Error::MalformedRelation(format!(
                    "relation mixes non-parallel paths ({} is not parallel to the first term)",
                    p.display(quiver)
                )));
            }
            _ => {}
        }
    }
    Ok(())
}

/// Full reduction of `p` modulo the tips of `gb`.
fn reduce(field: Field, mut p: Poly, gb: &[Poly]) -> Poly {
    'outer: loop {
        for (path, c) in p.terms.iter().rev() {
            for g in gb {
                let (tip, _) = g.tip().unwrap();
                if let Some(pos) = path.find(&tip.arrows) {
                    let u = &path.arrows[..pos];
                    let v = &path.arrows[pos + tip.arrows.len()..];
                    let s = g.sandwich(field, c, u, v, path.source, path.target);
                    p.sub_assign(field, &s);
                    continue 'outer;
                }
            }
        }
        return p;
    }
}

fn interreduce(field: Field, mut gb: Vec<Poly>) -> Vec<Poly> {
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < gb.len() {
            let others: Vec<Poly> = gb.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
            let r = reduce(field, gb[i].clone(), &others);
            if r.is_zero() {
                gb.remove(i);
                changed = true;
                continue;
            }
            let r = r.monic(field);
            if r != gb[i] {
                gb[i] = r;
                changed = true;
            }
            i += 1;
        }
        if !changed {
            gb.sort_by(|a, b| a.tip().unwrap().0.cmp(b.tip().unwrap().0));
            return gb;
        }
    }
}

fn groebner_basis(field: Field, gens: Vec<Poly>) -> Result<Vec<Poly>> {
    let mut gb = interreduce(field, gens.into_iter().map(|g| g.monic(field)).collect());
    for _ in 0..MAX_GROEBNER_ROUNDS {
        let mut fresh: Vec<Poly> = Vec::new();
        for f in &gb {
            for g in &gb {
                let tf = &f.tip().unwrap().0.arrows;
                let tg = &g.tip().unwrap().0.arrows;
                for l in 1..tf.len().min(tg.len()) {
                    if tf[tf.len() - l..] != tg[..l] {
                        continue;
                    }
                    let u = &tf[..tf.len() - l];
                    let v = &tg[l..];
                    let one = field.one();
                    let (fp, gp) = (f.tip().unwrap().0, g.tip().unwrap().0);
                    let mut s = f.sandwich(field, &one, &[], v, fp.source, gp.target);
                    s.sub_assign(field, &g.sandwich(field, &one, u, &[], fp.source, gp.target));
                    let mut all: Vec<Poly> = gb.clone();
                    all.extend(fresh.iter().cloned());
                    let r = reduce(field, s, &all);
                    if !r.is_zero() {
                        fresh.push(r.monic(field));
                    }
                }
            }
        }
        if fresh.is_empty() {
            return Ok(gb);
        }
        gb.extend(fresh);
        gb = interreduce(field, gb);
        let longest = gb.iter().map(|g| g.tip().unwrap().0.len()).max().unwrap_or(0);
        if gb.len() > MAX_GROEBNER_SIZE || longest > MAX_PATH_LENGTH {
            return Err(Error::NonAdmissible("Gröbner basis does not stabilize within caps".into()));
        }
    }
    Err(Error::NonAdmissible("Gröbner basis completion did not terminate within the round cap".into()))
}

fn normal_words(quiver: &Quiver, tips: &[Vec<usize>]) -> Result<Vec<Path>> {
    let mut basis: Vec<Path> = (0..quiver.num_vertices()).map(Path::trivial).collect();
    let mut frontier = basis.clone();
    let mut length = 0;
    while !frontier.is_empty() {
        length += 1;
        if length > MAX_PATH_LENGTH {
            return Err(Error::NonAdmissible(format!(
                "nonzero paths of length > {MAX_PATH_LENGTH}; the algebra is not finite-dimensional"
            )));
        }
        let mut next = Vec::new();
        for p in &frontier {
            for (a, arrow) in quiver.arrows.iter().enumerate() {
                if arrow.source != p.target {
                    continue;
                }
                let mut arrows = p.arrows.clone();
                arrows.push(a);
                let reducible = tips.iter().any(|t| t.len() <= arrows.len() && arrows[arrows.len() - t.len()..] == t[..]);
                if !reducible {
                    next.push(Path { source: p.source, target: arrow.target, arrows });
                }
            }
        }
        basis.extend(next.iter().cloned());
        if basis.len() > MAX_ALGEBRA_DIM {
            return Err(Error::NonAdmissible(format!("more than {MAX_ALGEBRA_DIM} normal words")));
        }
        frontier = next;
    }
    basis.sort();
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn rel(q: &Quiver, f: Field, terms: &[(i64, &[&str])]) -> Relation {
        Relation { terms: terms.iter().map(|(c, p)| (f.from_i64(*c), q.path(p).unwrap())).collect() }
    }

    /// Independent count: enumerate all quiver paths up to length `max_len`
    /// and drop the ones containing a monomial relation as a subword.
    fn brute_force_monomial_dim(q: &Quiver, zero_words: &[Vec<usize>], max_len: usize) -> usize {
        let mut count = q.num_vertices();
        let mut layer: Vec<Vec<usize>> = (0..q.arrows().len()).map(|a| vec![a]).collect();
        for _ in 1..=max_len {
            let alive: Vec<Vec<usize>> = layer
                .into_iter()
                .filter(|w| !zero_words.iter().any(|z| w.windows(z.len()).any(|s| s == &z[..])))
                .collect();
            count += alive.len();
            layer = alive
                .iter()
                .flat_map(|w| {
                    let t = q.arrows()[*w.last().unwrap()].target;
                    (0..q.arrows().len()).filter(move |&a| q.arrows()[a].source == t).map(move |a| {
                        let mut w2 = w.clone();
                        w2.push(a);
                        w2
                    })
                })
                .collect();
        }
        count
    }

    #[test]
    fn dual_numbers_basis() {
        let q = Quiver::new(&["1"], &[("a", "1", "1")]).unwrap();
        let r = rel(&q, f2(), &[(1, &["a", "a"])]);
        let a = PathAlgebra::new(q, vec![r], f2()).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.loewy_length(), 2);
    }

    #[test]
    fn a2_has_three_paths() {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let a = PathAlgebra::new(q, vec![], f2()).unwrap();
        assert_eq!(a.dim(), 3);
    }

    #[test]
    fn a3_with_zero_relation() {
        let q = Quiver::new(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
        let oracle = brute_force_monomial_dim(&q, &[vec![0, 1]], 2);
        let r = rel(&q, f2(), &[(1, &["a", "b"])]);
        let a = PathAlgebra::new(q, vec![r], f2()).unwrap();
        assert_eq!(oracle, 5);
        assert_eq!(a.dim(), 5);
        let names: Vec<String> = a.basis().iter().map(|p| p.display(a.quiver())).collect();
        assert_eq!(names, vec!["e_1", "e_2", "e_3", "a", "b"]);
    }

    #[test]
    fn commutative_square() {
        let q = Quiver::new(
            &["1", "2", "3", "4"],
            &[("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
        )
        .unwrap();
        let f = Field::prime(5).unwrap();
        let r = rel(&q, f, &[(1, &["a", "b"]), (-1, &["c", "d"])]);
        let a = PathAlgebra::new(q, vec![r], f).unwrap();
        assert_eq!(a.dim(), 9);
        let cd = a.quiver().path(&["c", "d"]).unwrap();
        let ab = a.quiver().path(&["a", "b"]).unwrap();
        assert_eq!(a.normal_form(&cd), vec![(a.basis_index(&ab).unwrap(), f.one())]);
    }

    #[test]
    fn loop_without_relations_is_rejected() {
        let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        assert!(matches!(PathAlgebra::new(q, vec![], f2()), Err(Error::NonAdmissible(_))));
    }

    #[test]
    fn non_nilpotent_quotient_is_rejected() {
        // x^2 = x^3 gives a 3-dimensional algebra with an idempotent in the arrow ideal.
        let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let f = Field::prime(5).unwrap();
        let r = rel(&q, f, &[(1, &["x", "x"]), (-1, &["x", "x", "x"])]);
        assert!(matches!(PathAlgebra::new(q, vec![r], f), Err(Error::NonAdmissible(_))));
    }

    #[test]
    fn relation_errors() {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        let f = f2();
        let mixed = Relation {
            terms: vec![(f.one(), q.path(&["a", "b"]).unwrap()), (f.one(), q.path(&["b", "a"]).unwrap())],
        };
        assert!(matches!(PathAlgebra::new(q.clone(), vec![mixed], f), Err(Error::MalformedRelation(_))));
        let short = Relation { terms: vec![(f.one(), q.path(&["a"]).unwrap())] };
        assert!(matches!(PathAlgebra::new(q.clone(), vec![short], f), Err(Error::NonAdmissible(_))));
        assert!(q.path(&["a", "a"]).is_err());
    }

    #[test]
    fn overlap_completion() {
        // Two-cycle with both compositions zero: basis e1 e2 a b.
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        let f = Field::prime(3).unwrap();
        let r1 = rel(&q, f, &[(1, &["a", "b"])]);
        let r2 = rel(&q, f, &[(1, &["b", "a"])]);
        let a = PathAlgebra::new(q, vec![r1, r2], f).unwrap();
        assert_eq!(a.dim(), 4);
        // One loop, x^3 = 0 together with redundant x^4 = 0: basis 1, x, x^2.
        let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let r1 = rel(&q, f, &[(1, &["x", "x", "x"])]);
        let r2 = rel(&q, f, &[(1, &["x", "x", "x", "x"])]);
        let a = PathAlgebra::new(q, vec![r1, r2], f).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.groebner_basis().len(), 1);
    }

    #[test]
    fn non_monomial_overlap() {
        // Loops x, y with xy = yx, x^2 = 0, y^2 = 0: exterior-like algebra of dimension 4.
        let q = Quiver::new(&["1"], &[("x", "1", "1"), ("y", "1", "1")]).unwrap();
        let f = Field::prime(5).unwrap();
        let rels = vec![
            rel(&q, f, &[(1, &["x", "y"]), (-1, &["y", "x"])]),
            rel(&q, f, &[(1, &["x", "x"])]),
            rel(&q, f, &[(1, &["y", "y"])]),
        ];
        let a = PathAlgebra::new(q, rels, f).unwrap();
        assert_eq!(a.dim(), 4);
        assert_eq!(a.loewy_length(), 3);
    }
}
