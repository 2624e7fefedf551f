//! Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use homkit::suites::{self, SuiteReport};
use homkit_core::approx::CotorsionPairSpec;
use homkit_core::catalog;
use homkit_core::findim::{artinian_check, findim_estimate, ModuleCorpus, TheoremConfig};
use homkit_core::module::standard_modules;
use homkit_core::reldim::{ext_classic_range, ext_injective_range, ext_model_range};
use homkit_core::{Field, PathAlgebra};

const SEED: u64 = 0x5eed;

struct Outcome {
    pass: bool,
    detail: String,
}

fn fields() -> [Field; 2] {
    [Field::prime(2).unwrap(), Field::prime(5).unwrap()]
}

fn suite_algebras() -> Vec<(String, Arc<PathAlgebra>)> {
    let mut out = Vec::new();
    for f in fields() {
        for (name, a) in catalog::suite(f) {
            out.push((format!("{name}/F{}", f.order().unwrap()), a));
        }
    }
    out
}

fn alg(name: &str) -> Arc<PathAlgebra> {
    catalog::algebra(name, Field::prime(2).unwrap()).unwrap()
}

/// Corpus bound per algebra, kept small enough that every corpus is exhaustive.
fn corpus_for(name: &str) -> ModuleCorpus {
    let bound = if name == "square" { 2 } else { 3 };
    let c = suites::corpus(&alg(name), bound, SEED).unwrap();
    assert!(suites::is_exhaustive(&c), "{name} corpus is not exhaustive");
    c
}

fn summarize(reports: &[SuiteReport]) -> Outcome {
    let mut total = SuiteReport::new("total", "all");
    for r in reports {
        total.merge(r.clone());
    }
    let mut detail = format!(
        "{} cases, {} passed, {} failed, {} inconclusive",
        total.cases, total.passed, total.failed, total.inconclusive
    );
    if !total.failures.is_empty() {
        detail.push_str(&format!("; first failures: {:?}", total.failures));
    }
    if let Some(first) = total.inconclusive_samples.first() {
        detail.push_str(&format!("; inconclusive e.g. {first:?}"));
    }
    Outcome { pass: total.failed == 0 && total.passed > 0, detail }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let reports: Vec<SuiteReport> =
        suite_algebras().iter().map(|(name, a)| suites::ext_agreement(name, a, 6)).collect();
    let elapsed = start.elapsed();
    let mut o = summarize(&reports);
    let all_decided = reports.iter().all(|r| r.passed == r.cases);
    o.pass &= all_decided && elapsed < Duration::from_secs(120);
    o.detail = format!("{} in {:.1}s", o.detail, elapsed.as_secs_f64());
    o
}

fn criterion_2() -> Outcome {
    let mut problems = Vec::new();
    let mut checked = 0;
    for f in fields() {
        let dual = catalog::algebra("dual", f).unwrap();
        let s = standard_modules(&dual).simples[0].clone();
        let proj = CotorsionPairSpec::projective(&dual);
        let inj = CotorsionPairSpec::injective(&dual);
        let methods = [
            ext_classic_range(&s, &s, 6).unwrap(),
            ext_injective_range(&s, &s, 6).unwrap(),
            ext_model_range(&proj, &s, &s, 6).unwrap(),
            ext_model_range(&inj, &s, &s, 6).unwrap(),
        ];
        for dims in &methods {
            checked += 1;
            if dims != &vec![1; 7] {
                problems.push(format!("dual numbers over {f:?}: Ext(S, S) = {dims:?}"));
            }
        }
        let a2 = catalog::algebra("a2", f).unwrap();
        let corpus = suites::corpus(&a2, 3, SEED).unwrap();
        for m in corpus.nonzero() {
            for n in corpus.nonzero() {
                checked += 1;
                let dims = ext_classic_range(m, n, 6).unwrap();
                if dims[2..].iter().any(|&d| d != 0) {
                    problems.push(format!("A_2 over {f:?}: Ext({:?}, {:?}) = {dims:?}", m.dims(), n.dims()));
                }
            }
        }
    }
    Outcome { pass: problems.is_empty(), detail: format!("{checked} checks; problems: {problems:?}") }
}

fn criterion_3() -> Outcome {
    let algs: Vec<Arc<PathAlgebra>> = suite_algebras().into_iter().map(|(_, a)| a).collect();
    let mut rng = suites::rng_for(SEED, "acceptance", "vanishing");
    let mut total = SuiteReport::new("orthogonal-vanishing", "suite");
    // inconclusive triples do not count towards the 200
    let mut rounds = 0;
    while total.passed + total.failed < 200 && rounds < 10 {
        let need = 200 - total.passed - total.failed;
        total.merge(suites::vanishing("suite", &algs, need, 4, 12, 32, &mut rng));
        rounds += 1;
    }
    let decided = total.passed + total.failed;
    let mut o = summarize(&[total]);
    o.pass &= decided >= 200;
    o
}

fn criterion_4() -> Outcome {
    let reports: Vec<SuiteReport> = catalog::SUITE
        .iter()
        .map(|name| {
            let c = corpus_for(name);
            let extra: Vec<CotorsionPairSpec> =
                suites::finite_pd_hereditary(&c, 12, 32).unwrap().into_iter().collect();
            suites::dimension_shift(name, &c, 2, 3, &extra)
        })
        .collect();
    summarize(&reports)
}

fn criterion_5() -> Outcome {
    let mut reports = Vec::new();
    let mut rng = suites::rng_for(SEED, "acceptance", "relative");
    for name in catalog::SUITE {
        let c = corpus_for(name);
        let a = c.algebra.clone();
        let mut specs = vec![CotorsionPairSpec::projective(&a), CotorsionPairSpec::injective(&a)];
        specs.extend(suites::finite_pd_hereditary(&c, 12, 32).unwrap());
        for _ in 0..2 {
            specs.extend(suites::random_hereditary_pair(&a, &mut rng, 12, 32).unwrap());
        }
        reports.push(suites::relative_dims(name, &c, &specs, 12));
    }
    summarize(&reports)
}

fn criterion_6() -> Outcome {
    let mut problems = Vec::new();
    let mut lines = Vec::new();
    for (name, expected) in [("dual", 0), ("a2", 1), ("a3-rad2", 2), ("semisimple", 0)] {
        let c = corpus_for(name);
        let est = findim_estimate(&c, 12).unwrap();
        let art = artinian_check(&c, 12, 32).unwrap();
        lines.push(format!("{name}: findim {} fibdim(regular) {}", est.value, art.fibdim_regular));
        if !est.exact || est.value != expected {
            problems.push(format!("{name}: findim {} (exact {}), expected {expected}", est.value, est.exact));
        }
        if !art.converged || !art.verdict.holds() || art.fibdim_regular.finite() != Some(expected) {
            problems.push(format!("{name}: regular module check {:?}, converged {}", art.verdict, art.converged));
        }
    }
    Outcome { pass: problems.is_empty(), detail: format!("{}; problems: {problems:?}", lines.join(", ")) }
}

fn criterion_7() -> Outcome {
    let cfg = TheoremConfig { seed: SEED, ..TheoremConfig::default() };
    let reports: Vec<SuiteReport> =
        catalog::SUITE.iter().map(|name| suites::theorem_clauses(name, &corpus_for(name), &cfg)).collect();
    let mut o = summarize(&reports);
    o.pass &= reports.iter().all(|r| r.passed == r.cases);
    o
}

fn criterion_8() -> Outcome {
    let algs: Vec<Arc<PathAlgebra>> = suite_algebras().into_iter().map(|(_, a)| a).collect();
    let mut reports = Vec::new();
    let mut rng = suites::rng_for(SEED, "acceptance", "hom");
    reports.push(suites::hom_square_zero("suite", &algs, 1000, &mut rng));
    let mut rng = suites::rng_for(SEED, "acceptance", "schanuel");
    reports.push(suites::schanuel("suite", &algs, 1000, &mut rng));
    let mut rng = suites::rng_for(SEED, "acceptance", "filtration");
    let corpora = [corpus_for("a2"), corpus_for("a3-rad2")];
    reports.push(suites::filtration_closure("a2+a3", &corpora, 1, 1000, 12, &mut rng));
    let mut rng = suites::rng_for(SEED, "acceptance", "presentation");
    reports.push(suites::filtered_presentations("suite", &algs, 1000, &mut rng));
    for (name, a) in suite_algebras() {
        reports.push(suites::hereditary_projective(&name, &a));
    }
    let mut o = summarize(&reports);
    let per: Vec<String> = reports[..4].iter().map(|r| format!("{} {}/{}", r.suite, r.passed, r.cases)).collect();
    o.pass &= reports.iter().all(|r| r.passed == r.cases);
    o.detail = format!("{}; {}", per.join(", "), o.detail);
    o
}

fn criterion_9() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_homkit");
    let run = || Command::new(bin).args(["--no-cache", "check", "all"]).output().expect("binary runs");
    let a = run();
    let b = run();
    let same = a.stdout == b.stdout;
    Outcome {
        pass: same && a.status.success() && b.status.success() && !a.stdout.is_empty(),
        detail: format!(
            "{} bytes, exit codes {:?}/{:?}, identical {same}",
            a.stdout.len(),
            a.status.code(),
            b.status.code()
        ),
    }
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("three-way Ext agreement", criterion_1),
        ("known Ext values", criterion_2),
        ("Ext vanishing between the classes", criterion_3),
        ("dimension shifting", criterion_4),
        ("cofdim = pd_rel and fibdim = id_rel", criterion_5),
        ("finitistic dimensions", criterion_6),
        ("findim clauses (1) and (4) agree", criterion_7),
        ("structural property suites", criterion_8),
        ("deterministic check reports", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!("{status} criterion {}: {name} [{:.1}s] {}", i + 1, start.elapsed().as_secs_f64(), o.detail);
        if !o.pass {
            failed += 1;
        }
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
