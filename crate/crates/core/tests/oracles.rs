//! Hand-derived values on the catalog algebras.

use homkit_core::approx::{ext1_dim, CotorsionPairSpec};
use homkit_core::catalog;
use homkit_core::module::{injective, projective, regular, simple};
use homkit_core::reldim::{ext_classic_range, ext_injective_range, ext_model_range, id, pd, DimValue};
use homkit_core::Field;

fn f2() -> Field {
    Field::prime(2).unwrap()
}

#[test]
fn dual_numbers_self_ext_is_one_everywhere() {
    // 0 <- S <- L <-x- L <-x- L ... with every Hom(L, S) = k and zero induced maps
    for f in [f2(), Field::prime(5).unwrap(), Field::Rational] {
        let d = catalog::algebra("dual", f).unwrap();
        let s = simple(&d, 0);
        assert_eq!(ext_classic_range(&s, &s, 6).unwrap(), vec![1; 7]);
        assert_eq!(ext_injective_range(&s, &s, 6).unwrap(), vec![1; 7]);
        assert_eq!(ext_model_range(&CotorsionPairSpec::injective(&d), &s, &s, 6).unwrap(), vec![1; 7]);
        assert_eq!(pd(&s, 8).unwrap().value, DimValue::CertifiedInfinite { first: 0, second: 1 });
        // self-injective: the regular module is injective
        assert!(regular(&d).is_injective());
    }
}

#[test]
fn a2_ext_table() {
    // arrow 1 -> 2: P1 = (1, 1) has radical S2, and S1 = I1 is injective
    let a = catalog::algebra("a2", f2()).unwrap();
    let (s1, s2) = (simple(&a, 0), simple(&a, 1));
    assert_eq!(ext_classic_range(&s1, &s2, 3).unwrap(), vec![0, 1, 0, 0]);
    assert_eq!(ext_classic_range(&s2, &s1, 3).unwrap(), vec![0, 0, 0, 0]);
    assert_eq!(ext_classic_range(&s1, &s1, 3).unwrap(), vec![1, 0, 0, 0]);
    assert_eq!(pd(&s1, 8).unwrap().value, DimValue::Finite { value: 1 });
    assert_eq!(pd(&s2, 8).unwrap().value, DimValue::Finite { value: 0 });
    assert_eq!(id(&s2, 8).unwrap().value, DimValue::Finite { value: 1 });
    assert_eq!(injective(&a, 0), s1);
    assert_eq!(ext1_dim(&s1, &s2).unwrap(), 1);
}

#[test]
fn a3_radical_square_zero_has_global_dimension_two() {
    // S1 <- P1 <- P2 <- P3 with syzygies S2 and S3 = P3
    let a = catalog::algebra("a3-rad2", f2()).unwrap();
    let s1 = simple(&a, 0);
    assert_eq!(pd(&s1, 8).unwrap().value, DimValue::Finite { value: 2 });
    assert_eq!(ext_classic_range(&s1, &simple(&a, 2), 3).unwrap(), vec![0, 0, 1, 0]);
    assert_eq!(projective(&a, 0).dims(), &[1, 1, 0]);
}

#[test]
fn commutative_square() {
    // rad P1 = (0, 1, 1, 1) is covered by P2 + P3 = (0, 1, 1, 2) with kernel S4 = P4
    let a = catalog::algebra("square", f2()).unwrap();
    assert_eq!(a.dim(), 9);
    let s1 = simple(&a, 0);
    assert_eq!(pd(&s1, 8).unwrap().value, DimValue::Finite { value: 2 });
    assert_eq!(ext_classic_range(&s1, &simple(&a, 3), 3).unwrap(), vec![0, 0, 1, 0]);
    assert_eq!(ext_classic_range(&s1, &simple(&a, 1), 3).unwrap(), vec![0, 1, 0, 0]);
}

#[test]
fn semisimple_is_trivial() {
    let a = catalog::algebra("semisimple", f2()).unwrap();
    let s = simple(&a, 0);
    assert_eq!(ext_classic_range(&s, &s, 4).unwrap(), vec![1, 0, 0, 0, 0]);
    assert!(s.is_projective() && s.is_injective());
}
