//! Kernels, cokernels, images, pullbacks, pushouts and short exact sequences.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hom::hom_space;
use crate::matrix::Matrix;
use crate::module::{Module, ModuleMap};

/// Kernel object and its inclusion.
pub fn kernel(f: &ModuleMap) -> (Module, ModuleMap) {
    let m = f.source();
    let alg = m.algebra();
    let bases: Vec<Matrix> = (0..alg.num_vertices()).map(|v| f.mat(v).kernel()).collect();
    let dims: Vec<usize> = bases.iter().map(|b| b.cols()).collect();
    let action = (0..alg.num_arrows())
        .map(|a| {
            let arrow = alg.arrow(a);
            let img = m.action(a).mul(&bases[arrow.source]);
            bases[arrow.target].solve(&img).expect("kernel is a submodule")
        })
        .collect();
    let k = Module::new_unchecked(alg.clone(), dims, action);
    let inc = ModuleMap::new_unchecked(k.clone(), m.clone(), bases);
    (k, inc)
}

/// Cokernel object and its projection. The quotient at each vertex is
/// spanned by the standard basis vectors complementing the image.
pub fn cokernel(f: &ModuleMap) -> (Module, ModuleMap) {
    let n = f.target();
    let alg = n.algebra();
    let fld = alg.field();
    let nv = alg.num_vertices();
    let mut comps = Vec::with_capacity(nv);
    let mut projs = Vec::with_capacity(nv);
    for v in 0..nv {
        let img = f.mat(v).image_basis();
        let comp = img.complement_indices();
        let e = Matrix::unit_vectors(fld, n.dim_at(v), &comp);
        let full = Matrix::hstack(fld, n.dim_at(v), &[&img, &e]);
        let inv = full.inverse().expect("image plus complement is a basis");
        projs.push(inv.submatrix(img.cols()..n.dim_at(v), 0..n.dim_at(v)));
        comps.push(e);
    }
    let dims: Vec<usize> = comps.iter().map(|e| e.cols()).collect();
    let action = (0..alg.num_arrows())
        .map(|a| {
            let arrow = alg.arrow(a);
            projs[arrow.target].mul(n.action(a)).mul(&comps[arrow.source])
        })
        .collect();
    let c = Module::new_unchecked(alg.clone(), dims, action);
    let proj = ModuleMap::new_unchecked(n.clone(), c.clone(), projs);
    (c, proj)
}

/// Image with the factorization `M -> im f -> N`.
pub fn image(f: &ModuleMap) -> (Module, ModuleMap, ModuleMap) {
    let (m, n) = (f.source(), f.target());
    let alg = m.algebra();
    let bases: Vec<Matrix> = (0..alg.num_vertices()).map(|v| f.mat(v).image_basis()).collect();
    let dims: Vec<usize> = bases.iter().map(|b| b.cols()).collect();
    let action = (0..alg.num_arrows())
        .map(|a| {
            let arrow = alg.arrow(a);
            let img = n.action(a).mul(&bases[arrow.source]);
            bases[arrow.target].solve(&img).expect("image is a submodule")
        })
        .collect();
    let im = Module::new_unchecked(alg.clone(), dims, action);
    let epi_mats = (0..alg.num_vertices())
        .map(|v| bases[v].solve(f.mat(v)).expect("f factors through its image"))
        .collect();
    let epi = ModuleMap::new_unchecked(m.clone(), im.clone(), epi_mats);
    let mono = ModuleMap::new_unchecked(im.clone(), n.clone(), bases);
    (im, epi, mono)
}

/// Solves `y . mono = g` for `y` (`mono` injective).
pub fn factor_through_mono(g: &ModuleMap, mono: &ModuleMap) -> Option<ModuleMap> {
    let mats = (0..g.mats().len())
        .map(|v| {
            let y = mono.mat(v).solve(g.mat(v))?;
            (mono.mat(v).mul(&y) == *g.mat(v)).then_some(y)
        })
        .collect::<Option<Vec<_>>>()?;
    Some(ModuleMap::new_unchecked(g.source().clone(), mono.source().clone(), mats))
}

/// For `h` vanishing on the image of `f`, the induced map `coker f -> Y`
/// (with `proj` and the cokernel object as produced by [`cokernel`]).
pub fn factor_through_cokernel(h: &ModuleMap, f: &ModuleMap, coker: &Module) -> Option<ModuleMap> {
    if !f.then(h).is_zero() {
        return None;
    }
    let fld = h.field();
    let mats = (0..h.mats().len())
        .map(|v| {
            let img = f.mat(v).image_basis();
            let comp = img.complement_indices();
            h.mat(v).mul(&Matrix::unit_vectors(fld, f.target().dim_at(v), &comp))
        })
        .collect();
    Some(ModuleMap::new_unchecked(coker.clone(), h.target().clone(), mats))
}

/// A lift `l: G -> F` with `l . phi = f`, if one exists.
pub fn lift(phi: &ModuleMap, f: &ModuleMap) -> Result<Option<ModuleMap>> {
    let hs = hom_space(f.source(), phi.source())?;
    let fld = f.field();
    let target = f.flatten();
    let cols: Vec<Vec<Scalar>> = hs.basis.iter().map(|b| b.then(phi).flatten()).collect();
    let a = Matrix::from_cols(fld, target.len(), &cols);
    let rhs = Matrix::from_cols(fld, target.len(), &[target]);
    Ok(a.solve(&rhs).map(|x| hs.combine(&x.col(0))))
}

/// Dually, `e: N -> Y` with `i . e = g` for `i: M -> N`, `g: M -> Y`.
pub fn extend(i: &ModuleMap, g: &ModuleMap) -> Result<Option<ModuleMap>> {
    let hs = hom_space(i.target(), g.target())?;
    let fld = g.field();
    let target = g.flatten();
    let cols: Vec<Vec<Scalar>> = hs.basis.iter().map(|b| i.then(b).flatten()).collect();
    let a = Matrix::from_cols(fld, target.len(), &cols);
    let rhs = Matrix::from_cols(fld, target.len(), &[target]);
    Ok(a.solve(&rhs).map(|x| hs.combine(&x.col(0))))
}

#[derive(Clone, Debug)]
pub struct Pullback {
    pub object: Module,
    pub to_x: ModuleMap,
    pub to_y: ModuleMap,
    inclusion: ModuleMap,
}

impl Pullback {
    /// The unique map `T -> P` induced by `a: T -> X`, `b: T -> Y` with `a f = b g`.
    pub fn factor(&self, a: &ModuleMap, b: &ModuleMap) -> Option<ModuleMap> {
        let alg = a.source().algebra();
        let ab = ModuleMap::vstack(alg, a.source(), &[a.clone(), b.clone()]);
        factor_through_mono(&ab.retarget(a.source(), self.inclusion.target()), &self.inclusion)
    }
}

/// Pullback of `f: X -> Z` and `g: Y -> Z`, realized as `ker (f, -g)`.
pub fn pullback(f: &ModuleMap, g: &ModuleMap) -> Result<Pullback> {
    f.source().check_same_algebra(g.source())?;
    if f.target().dims() != g.target().dims() {
        return Err(Error::InvalidMap("pullback of maps with different codomains".into()));
    }
    let alg = f.source().algebra();
    let g = g.retarget(g.source(), f.target());
    let fg = ModuleMap::hstack(alg, f.target(), &[f.clone(), g.neg()]);
    let (p, inc) = kernel(&fg);
    let ds = Module::direct_sum(alg, &[f.source(), g.source()]);
    let inc = inc.retarget(&p, &ds.sum);
    let to_x = inc.then(&ds.projections[0]);
    let to_y = inc.then(&ds.projections[1]);
    Ok(Pullback { object: p, to_x, to_y, inclusion: inc })
}

#[derive(Clone, Debug)]
pub struct Pushout {
    pub object: Module,
    pub from_x: ModuleMap,
    pub from_y: ModuleMap,
    stacked: ModuleMap,
}

impl Pushout {
    /// The unique map `Q -> T` induced by `a: X -> T`, `b: Y -> T` with `f a = g b`.
    pub fn factor(&self, a: &ModuleMap, b: &ModuleMap) -> Option<ModuleMap> {
        let alg = a.source().algebra();
        let ab = ModuleMap::hstack(alg, a.target(), &[a.clone(), b.clone()]);
        let ab = ab.retarget(self.stacked.target(), a.target());
        factor_through_cokernel(&ab, &self.stacked, &self.object)
    }
}

/// Pushout of `f: Z -> X` and `g: Z -> Y`, realized as `coker (f; -g)`.
pub fn pushout(f: &ModuleMap, g: &ModuleMap) -> Result<Pushout> {
    f.source().check_same_algebra(g.source())?;
    if f.source().dims() != g.source().dims() {
        return Err(Error::InvalidMap("pushout of maps with different domains".into()));
    }
    let alg = f.source().algebra();
    let g = g.retarget(f.source(), g.target());
    let fg = ModuleMap::vstack(alg, f.source(), &[f.clone(), g.neg()]);
    let (q, proj) = cokernel(&fg);
    let ds = Module::direct_sum(alg, &[f.target(), g.target()]);
    let proj = proj.retarget(&ds.sum, &q);
    let from_x = ds.injections[0].then(&proj);
    let from_y = ds.injections[1].then(&proj);
    Ok(Pushout { object: q, from_x, from_y, stacked: fg.retarget(f.source(), &ds.sum) })
}

/// `0 -> A --i--> B --p--> C -> 0`.
#[derive(Clone, Debug)]
pub struct ShortExactSequence {
    pub i: ModuleMap,
    pub p: ModuleMap,
}

impl ShortExactSequence {
    pub fn new(i: ModuleMap, p: ModuleMap) -> Result<Self> {
        let s = ShortExactSequence { i, p };
        s.verify()?;
        Ok(s)
    }

    /// Rank verification at every vertex: `i` injective, `p` surjective,
    /// `i p = 0` and `dim B = dim A + dim C`.
    pub fn verify(&self) -> Result<()> {
        self.i.validate()?;
        self.p.validate()?;
        if self.i.target().dims() != self.p.source().dims() {
            return Err(Error::InvalidMap("middle terms differ".into()));
        }
        if !self.i.is_mono() {
            return Err(Error::NotMono);
        }
        if !self.p.is_epi() {
            return Err(Error::NotEpi);
        }
        if !self.i.then(&self.p.retarget(self.i.target(), self.p.target())).is_zero() {
            return Err(Error::InvariantViolation("composite of a short exact sequence is nonzero".into()));
        }
        for v in 0..self.i.mats().len() {
            if self.i.target().dim_at(v) != self.i.source().dim_at(v) + self.p.target().dim_at(v) {
                return Err(Error::InvariantViolation("sequence is not exact in the middle".into()));
            }
        }
        Ok(())
    }

    pub fn left(&self) -> &Module {
        self.i.source()
    }

    pub fn middle(&self) -> &Module {
        self.i.target()
    }

    pub fn right(&self) -> &Module {
        self.p.target()
    }
}

/// The two short exact sequences `0 -> ker -> M -> im -> 0` and `0 -> im -> N -> coker -> 0`.
#[derive(Clone, Debug)]
pub struct KernelCokernel {
    pub ker: Module,
    pub ker_mono: ModuleMap,
    pub coker: Module,
    pub coker_epi: ModuleMap,
    pub image: Module,
    pub image_epi: ModuleMap,
    pub image_mono: ModuleMap,
}

impl KernelCokernel {
    pub fn sequences(&self) -> Result<(ShortExactSequence, ShortExactSequence)> {
        Ok((
            ShortExactSequence::new(self.ker_mono.clone(), self.image_epi.clone())?,
            ShortExactSequence::new(self.image_mono.clone(), self.coker_epi.clone())?,
        ))
    }
}

pub fn kernel_cokernel(f: &ModuleMap) -> KernelCokernel {
    let (ker, ker_mono) = kernel(f);
    let (coker, coker_epi) = cokernel(f);
    let (image, image_epi, image_mono) = image(f);
    KernelCokernel { ker, ker_mono, coker, coker_epi, image, image_epi, image_mono }
}

/// Output of [`schanuel_sequence`].
#[derive(Clone, Debug)]
pub struct Schanuel {
    /// `0 -> ker f -> ker phi + G -> F -> 0`.
    pub sequence: ShortExactSequence,
    pub pullback: Pullback,
    /// `l: G -> F` with `l phi = f`.
    pub lift: ModuleMap,
    /// The splitting isomorphism `ker phi + G -> P`.
    pub splitting: ModuleMap,
}

/// For epimorphisms `phi: F -> M` and `f: G -> M` such that `f` lifts
/// through `phi`, builds the sequence `0 -> ker f -> ker phi + G -> F -> 0`
/// from the pullback of `phi` and `f`.
pub fn schanuel_sequence(phi: &ModuleMap, f: &ModuleMap) -> Result<Schanuel> {
    phi.source().check_same_algebra(f.source())?;
    if !phi.is_epi() || !f.is_epi() {
        return Err(Error::NotEpi);
    }
    let alg: &Arc<_> = phi.source().algebra();
    let f = f.retarget(f.source(), phi.target());
    let l = lift(phi, &f)?.ok_or_else(|| Error::LiftFailed("f does not factor through phi".into()))?;
    let pb = pullback(phi, &f)?;
    let (kphi, iphi) = kernel(phi);
    let (kf, if_) = kernel(&f);

    // ker f -> ker phi + G : k |-> (-l(k), k)
    let neg_l = if_.then(&l).neg();
    let into_kphi = factor_through_mono(&neg_l, &iphi)
        .ok_or_else(|| Error::InvariantViolation("-l restricted to ker f misses ker phi".into()))?;
    let i = ModuleMap::vstack(alg, &kf, &[into_kphi, if_.clone()]);
    // ker phi + G -> F : (k, g) |-> k + l(g)
    let p = ModuleMap::hstack(alg, phi.source(), &[iphi.clone(), l.clone()]);
    let p = p.retarget(i.target(), phi.source());
    let sequence = ShortExactSequence::new(i, p)?;

    // splitting ker phi + G -> P : (k, g) |-> (k + l(g), g)
    let mid = sequence.middle().clone();
    let ds = Module::direct_sum(alg, &[&kphi, f.source()]);
    let to_f = sequence.p.clone();
    let to_g = ds.projections[1].retarget(&mid, f.source());
    let splitting = pb
        .factor(&to_f, &to_g)
        .ok_or_else(|| Error::InvariantViolation("splitting does not factor through the pullback".into()))?;
    if !splitting.is_iso() {
        return Err(Error::InvariantViolation("pullback splitting is not an isomorphism".into()));
    }
    Ok(Schanuel { sequence, pullback: pb, lift: l, splitting })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{PathAlgebra, Quiver};
    use crate::field::Field;
    use crate::module::{projective, simple};

    fn a2() -> Arc<PathAlgebra> {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        Arc::new(PathAlgebra::new(q, vec![], Field::prime(2).unwrap()).unwrap())
    }

    #[test]
    fn identity_and_zero() {
        let a = a2();
        let p1 = projective(&a, 0);
        let kc = kernel_cokernel(&ModuleMap::identity(&p1));
        assert!(kc.ker.is_zero() && kc.coker.is_zero());
        kc.sequences().unwrap();
        let s1 = simple(&a, 0);
        let kc = kernel_cokernel(&ModuleMap::zero(&p1, &s1));
        assert_eq!(kc.ker.dims(), p1.dims());
        assert_eq!(kc.coker.dims(), s1.dims());
        kc.sequences().unwrap();
    }

    #[test]
    fn simple_inclusion_cokernel() {
        let a = a2();
        let p1 = projective(&a, 0);
        let s2 = simple(&a, 1);
        let inc = ModuleMap::new(s2.clone(), p1.clone(), vec![
            Matrix::zeros(a.field(), 1, 0),
            Matrix::identity(a.field(), 1),
        ])
        .unwrap();
        let (c, _) = cokernel(&inc);
        assert_eq!(c, simple(&a, 0));
    }

    #[test]
    fn pullback_of_two_covers() {
        let a = a2();
        let s1 = simple(&a, 0);
        let cover = s1.projective_cover();
        let pb = pullback(&cover, &cover).unwrap();
        assert_eq!(pb.object.dim(), 2 * 2 - 1);
        assert!(pb.to_x.is_epi());
        pb.to_x.validate().unwrap();
        let id = ModuleMap::identity(cover.source());
        let u = pb.factor(&id, &id).unwrap();
        assert_eq!(u.then(&pb.to_x), id);
    }

    #[test]
    fn pushout_along_zero() {
        let a = a2();
        let p1 = projective(&a, 0);
        let s2 = simple(&a, 1);
        let inc = ModuleMap::new(s2.clone(), p1.clone(), vec![
            Matrix::zeros(a.field(), 1, 0),
            Matrix::identity(a.field(), 1),
        ])
        .unwrap();
        let z = Module::zero(a.clone());
        let po = pushout(&inc, &ModuleMap::zero(&s2, &z)).unwrap();
        assert_eq!(po.object, simple(&a, 0));
    }

    #[test]
    fn schanuel_on_a2() {
        let a = a2();
        let s1 = simple(&a, 0);
        let phi = s1.projective_cover();
        let p2 = projective(&a, 1);
        let f = ModuleMap::hstack(&a, &s1, &[phi.clone(), ModuleMap::zero(&p2, &s1)]);
        let sch = schanuel_sequence(&phi, &f).unwrap();
        sch.sequence.verify().unwrap();
        // middle = S_2 + P_1 + P_2
        assert_eq!(sch.sequence.middle().dims(), &[1, 3]);
        assert_eq!(sch.sequence.left().dims(), &[0, 2]);
    }
}
