//! Membership in the complex classes attached to a cotorsion pair:
//! exact complexes with cycles in `F` (resp. `C`), and the dg classes of
//! degreewise `F` (resp. `C`) complexes orthogonal to them.
//!
//! The dg conditions quantify over whole classes of complexes; here they are
//! tested against finite families of disks built from the pair's test sets.

use serde::{Deserialize, Serialize};

use crate::approx::CotorsionPairSpec;
use crate::complex::{hom_is_exact, ChainComplex};
use crate::error::Result;
use crate::module::Module;
use crate::verdict::Verdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ComplexClass {
    #[serde(rename = "f-tilde")]
    FTilde,
    #[serde(rename = "c-tilde")]
    CTilde,
    #[serde(rename = "dg-f-tilde")]
    DgFTilde,
    #[serde(rename = "dg-c-tilde")]
    DgCTilde,
}

#[derive(Clone, Debug)]
pub struct ClassMembershipSpec {
    pub pair: CotorsionPairSpec,
    pub c_test_set: Vec<Module>,
    pub f_test_set: Vec<Module>,
}

impl ClassMembershipSpec {
    pub fn new(pair: CotorsionPairSpec) -> Self {
        let c_test_set = pair.c_test_set().to_vec();
        let f_test_set = pair.f_test_set();
        ClassMembershipSpec { pair, c_test_set, f_test_set }
    }
}

fn degreewise(x: &ChainComplex, test: impl Fn(&Module) -> Result<Verdict>) -> Result<Verdict> {
    let mut out = Verdict::Holds;
    for n in x.lo()..=x.hi() {
        let v = match test(&x.object(n))? {
            Verdict::Fails(w) => Verdict::Fails(format!("degree {n}: {w}")),
            Verdict::Inconclusive(w) => Verdict::Inconclusive(format!("degree {n}: {w}")),
            Verdict::Holds => Verdict::Holds,
        };
        out = out.and(v);
        if out.fails() {
            break;
        }
    }
    Ok(out)
}

fn exactness(x: &ChainComplex) -> Verdict {
    match x.first_homology() {
        None => Verdict::Holds,
        Some(n) => Verdict::Fails(format!("H_{n} has dimension {}", x.homology_dim(n))),
    }
}

pub fn class_membership(x: &ChainComplex, spec: &ClassMembershipSpec, which: ComplexClass) -> Result<Verdict> {
    let pair = &spec.pair;
    match which {
        ComplexClass::FTilde | ComplexClass::CTilde => {
            let ex = exactness(x);
            if !ex.holds() {
                return Ok(ex);
            }
            let mut out = Verdict::Holds;
            for n in x.lo()..=x.hi() {
                let z = x.homology(n).z;
                let v = if which == ComplexClass::FTilde { pair.certify_f(&z)? } else { pair.certify_c(&z)? };
                out = out.and(match v {
                    Verdict::Fails(w) => Verdict::Fails(format!("Z_{n}: {w}")),
                    Verdict::Inconclusive(w) => Verdict::Inconclusive(format!("Z_{n}: {w}")),
                    Verdict::Holds => Verdict::Holds,
                });
                if out.fails() {
                    break;
                }
            }
            Ok(out)
        }
        ComplexClass::DgFTilde => {
            let deg = degreewise(x, |m| pair.certify_f(m))?;
            if !deg.holds() {
                return Ok(deg);
            }
            for t in &spec.c_test_set {
                for m in x.lo() - 1..=x.hi() + 1 {
                    let disk = ChainComplex::disk(t, m);
                    if let Some(d) = hom_is_exact(x, &disk)? {
                        return Ok(Verdict::Fails(format!("Hom(X, D^{m}(T)) has homology in degree {d}")));
                    }
                }
            }
            Ok(Verdict::Holds)
        }
        ComplexClass::DgCTilde => {
            let deg = degreewise(x, |m| pair.certify_c(m))?;
            if !deg.holds() {
                return Ok(deg);
            }
            for f in &spec.f_test_set {
                for m in x.lo()..=x.hi() + 2 {
                    let disk = ChainComplex::disk(f, m);
                    if let Some(d) = hom_is_exact(&disk, x)? {
                        return Ok(Verdict::Fails(format!("Hom(D^{m}(F), X) has homology in degree {d}")));
                    }
                }
            }
            Ok(Verdict::Holds)
        }
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{PathAlgebra, Quiver};
    use crate::field::Field;
    use crate::module::{injective, simple};
    use crate::replacement::cofibrant_replacement;

    fn a2() -> Arc<PathAlgebra> {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        Arc::new(PathAlgebra::new(q, vec![], Field::prime(2).unwrap()).unwrap())
    }

    #[test]
    fn projective_resolution_in_f_tilde() {
        let a = a2();
        let spec = ClassMembershipSpec::new(CotorsionPairSpec::projective(&a));
        let r = cofibrant_replacement(&spec.pair, &simple(&a, 0), 3).unwrap();
        let deleted = r.complex.clone();
        // the deleted resolution is not exact in degree 0
        assert!(class_membership(&deleted, &spec, ComplexClass::FTilde).unwrap().fails());
        assert!(class_membership(&deleted, &spec, ComplexClass::DgFTilde).unwrap().holds());
        // the resolution of a projective, augmented, is split exact with projective cycles
        let p = cofibrant_replacement(&spec.pair, &crate::module::projective(&a, 0), 3).unwrap();
        let aug = p.augmented().unwrap();
        assert!(class_membership(&aug, &spec, ComplexClass::FTilde).unwrap().holds());
    }

    #[test]
    fn injective_complexes_are_dg_c() {
        let a = a2();
        let spec = ClassMembershipSpec::new(CotorsionPairSpec::injective(&a));
        let i1 = injective(&a, 0);
        let i2 = injective(&a, 1);
        let x = ChainComplex::sphere(&i1, 0).direct_sum(&ChainComplex::sphere(&i2, 1));
        assert!(class_membership(&x, &spec, ComplexClass::DgCTilde).unwrap().holds());
        let s2 = ChainComplex::sphere(&simple(&a, 1), 0);
        assert!(class_membership(&s2, &spec, ComplexClass::DgCTilde).unwrap().fails());
    }
}
