use std::sync::Arc;

use homkit_core::approx::{ext1, ext1_dim, CotorsionPairSpec};
use homkit_core::catalog;
use homkit_core::complex::{hom_complex, hom_window, ChainComplex};
use homkit_core::exact::cokernel;
use homkit_core::findim::random_module;
use homkit_core::hom::{hom_dim, hom_space};
use homkit_core::io;
use homkit_core::module::simple;
use homkit_core::reldim::{
    dimension_shift_check, ext_classic, ext_classic_range, minimal_projective_resolution, pd, DimValue, ShiftPart,
};
use homkit_core::replacement::{cofibrant_replacement, fibrant_replacement};
use homkit_core::{Field, Module, ModuleMap, PathAlgebra};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn algebra(idx: usize, field: usize) -> Arc<PathAlgebra> {
    let f = [Field::prime(2).unwrap(), Field::prime(3).unwrap(), Field::prime(5).unwrap()][field % 3];
    catalog::algebra(catalog::SUITE[idx % catalog::SUITE.len()], f).unwrap()
}

fn random_map(m: &Module, n: &Module, rng: &mut ChaCha8Rng) -> ModuleMap {
    let hs = hom_space(m, n).unwrap();
    let f = m.field();
    let coefs: Vec<_> = (0..hs.dim()).map(|_| f.sample(rng)).collect();
    hs.combine(&coefs)
}

fn random_complex(alg: &Arc<PathAlgebra>, rng: &mut ChaCha8Rng) -> ChainComplex {
    let a = random_module(alg, rng, 3);
    let b = random_module(alg, rng, 3);
    let f = random_map(&a, &b, rng);
    let (c, g) = cokernel(&f);
    let d = random_module(alg, rng, 3);
    let h = random_map(&c, &d, rng);
    ChainComplex::from_maps_descending(rng.gen_range(-2..=1), &[f, g.then(&h)]).unwrap()
}

fn setup(idx: usize, field: usize, seed: u64) -> (Arc<PathAlgebra>, ChaCha8Rng) {
    (algebra(idx, field), ChaCha8Rng::seed_from_u64(seed))
}

fn pd_value(m: &Module) -> DimValue {
    pd(m, 10).unwrap().value
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn hom_complex_squares_to_zero(idx in 0usize..5, field in 0usize..3, seed in any::<u64>()) {
        let (alg, mut rng) = setup(idx, field, seed);
        let x = random_complex(&alg, &mut rng);
        let y = random_complex(&alg, &mut rng);
        let (lo, hi) = hom_window(&x, &y);
        let h = hom_complex(&x, &y, lo, hi).unwrap();
        prop_assert!(h.check_square_zero().is_ok());
        // homology of a sum is the sum of homologies
        let xx = x.direct_sum(&x);
        let hh = hom_complex(&xx, &y, lo, hi).unwrap();
        for n in lo + 1..hi {
            prop_assert_eq!(hh.homology_dim(n), 2 * h.homology_dim(n));
        }
    }

    #[test]
    fn pd_of_a_sum_is_the_max(idx in 0usize..5, field in 0usize..3, seed in any::<u64>()) {
        let (alg, mut rng) = setup(idx, field, seed);
        let m = random_module(&alg, &mut rng, 3);
        let n = random_module(&alg, &mut rng, 3);
        let sum = Module::direct_sum(&alg, &[&m, &n]).sum;
        match (pd_value(&m).finite(), pd_value(&n).finite()) {
            (Some(a), Some(b)) => prop_assert_eq!(pd_value(&sum), DimValue::Finite { value: a.max(b) }),
            _ => prop_assert!(pd_value(&sum).finite().is_none()),
        }
    }

    #[test]
    fn ext1_matches_the_resolution(idx in 0usize..5, field in 0usize..3, seed in any::<u64>()) {
        let (alg, mut rng) = setup(idx, field, seed);
        let m = random_module(&alg, &mut rng, 3);
        let n = random_module(&alg, &mut rng, 3);
        prop_assert_eq!(ext1_dim(&m, &n).unwrap(), ext_classic(&m, &n, 1).unwrap());
        prop_assert_eq!(hom_dim(&m, &n).unwrap(), ext_classic(&m, &n, 0).unwrap());
        // realized extensions are short exact
        let e = ext1(&m, &n).unwrap();
        for c in &e.classes {
            let ses = e.realize(c).unwrap();
            prop_assert!(ses.verify().is_ok());
            prop_assert_eq!(ses.middle().dim(), m.dim() + n.dim());
        }
    }

    #[test]
    fn ext_is_additive(idx in 0usize..5, seed in any::<u64>()) {
        let (alg, mut rng) = setup(idx, 0, seed);
        let m = random_module(&alg, &mut rng, 3);
        let m2 = random_module(&alg, &mut rng, 2);
        let n = random_module(&alg, &mut rng, 3);
        let sum = Module::direct_sum(&alg, &[&m, &m2]).sum;
        let a = ext_classic_range(&m, &n, 3).unwrap();
        let b = ext_classic_range(&m2, &n, 3).unwrap();
        let s = ext_classic_range(&sum, &n, 3).unwrap();
        for k in 0..=3 {
            prop_assert_eq!(s[k], a[k] + b[k]);
        }
    }

    #[test]
    fn json_round_trips(idx in 0usize..5, field in 0usize..3, seed in any::<u64>()) {
        let (alg, mut rng) = setup(idx, field, seed);
        let back = Arc::new(io::algebra_from_json(&io::algebra_to_json(&alg)).unwrap());
        prop_assert_eq!(io::algebra_to_json(&back), io::algebra_to_json(&alg));
        let m = random_module(&alg, &mut rng, 4);
        let v = io::module_to_json(&m);
        prop_assert_eq!(io::module_to_json(&io::module_from_json(&alg, &v).unwrap()), v.clone());
        let text = io::to_text(&v);
        let reparsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(reparsed, v);
        let x = random_complex(&alg, &mut rng);
        let cv = io::complex_to_json(&x);
        let y = io::complex_from_json(&alg, &cv).unwrap();
        prop_assert_eq!(io::complex_to_json(&y), cv);
    }

    #[test]
    fn salce_kernels_are_orthogonal(idx in 0usize..5, seed in any::<u64>()) {
        let (alg, mut rng) = setup(idx, 0, seed);
        let g = simple(&alg, rng.gen_range(0..alg.num_vertices()));
        let spec = CotorsionPairSpec::generated(&alg, vec![g], 32, vec![]).unwrap();
        let m = random_module(&alg, &mut rng, 3);
        match spec.salce_precover(&m) {
            Ok(sp) => {
                prop_assert!(sp.map.is_epi());
                prop_assert!(spec.orthogonality(&sp.complement).unwrap().iter().all(|&d| d == 0));
                prop_assert!(sp.verify(&spec).is_ok());
            }
            Err(homkit_core::Error::PreenvelopeDidNotConverge { .. }) => {}
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn replacements_verify(idx in 0usize..5, field in 0usize..3, seed in any::<u64>()) {
        let (alg, mut rng) = setup(idx, field, seed);
        let m = random_module(&alg, &mut rng, 3);
        let proj = CotorsionPairSpec::projective(&alg);
        let inj = CotorsionPairSpec::injective(&alg);
        let c = cofibrant_replacement(&proj, &m, 3).unwrap();
        prop_assert!(c.verify(&proj).is_ok());
        let d = fibrant_replacement(&inj, &m, rng.gen_range(-1..=2), 3).unwrap();
        prop_assert!(d.verify(&inj).is_ok());
    }

    #[test]
    fn projective_replacement_is_the_minimal_resolution(idx in 0usize..5, seed in any::<u64>()) {
        let (alg, mut rng) = setup(idx, 0, seed);
        let m = random_module(&alg, &mut rng, 3);
        let r = minimal_projective_resolution(&m, 3).unwrap();
        // term i is the projective cover of the i-th syzygy
        let mut syz = m.clone();
        for i in 0..r.steps.len() {
            let term = r.term(i);
            let cover = syz.projective_cover();
            prop_assert_eq!(term.dims(), cover.source().dims());
            syz = syz.syzygy();
        }
    }

    #[test]
    fn shifting_along_syzygies(idx in 0usize..5, seed in any::<u64>(), deg in 1usize..3, k in -1i64..3) {
        let (alg, mut rng) = setup(idx, 0, seed);
        let m = random_module(&alg, &mut rng, 3);
        let n = random_module(&alg, &mut rng, 3);
        let proj = CotorsionPairSpec::projective(&alg);
        let out = dimension_shift_check(&proj, &m, &n, deg, k, ShiftPart::Syzygy).unwrap();
        prop_assert!(out.verdict.holds(), "{:?}", out);
        let inj = CotorsionPairSpec::injective(&alg);
        let out = dimension_shift_check(&inj, &m, &n, deg, k, ShiftPart::Cosyzygy).unwrap();
        prop_assert!(out.verdict.holds(), "{:?}", out);
    }
}
