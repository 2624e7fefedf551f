//! Command implementations. Each returns the text and JSON renderings of its
//! report together with the exit outcome; printing is left to the binary.

use std::path::Path;
use std::sync::Arc;

use anyhow::{Context, Result};
use homkit_core::approx::{CotorsionPairSpec, PairMode};
use homkit_core::complex::ChainComplex;
use homkit_core::findim::{artinian_check, findim_estimate, theorem_findim_check, TheoremConfig};
use homkit_core::io::{algebra_to_json, complex_from_json, complex_to_json, module_to_json, to_text};
use homkit_core::reldim::{
    cofdim, ext_classic, ext_dims_from_resolution, ext_injective, ext_model, fibdim, minimal_projective_resolution,
    pd, pd_rel, DimValue, DimensionReport,
};
use homkit_core::replacement::{cofibrant_replacement, fibrant_replacement, Side};
use homkit_core::{Module, PathAlgebra, Verdict};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cache::{content_key, Cache, Cached};
use crate::exit::Outcome;
use crate::load::{load_algebra, load_module, load_pair};
use crate::manifest::Manifest;
use crate::suites::{self, SuiteReport};

/// Settings shared by all commands.
#[derive(Clone, Debug)]
pub struct Ctx {
    pub cache: Cache,
    pub cutoff: usize,
    pub iter_cap: Option<usize>,
    pub dim_bound: usize,
    pub seed: u64,
}

impl Default for Ctx {
    fn default() -> Self {
        Ctx { cache: Cache::disabled(), cutoff: 12, iter_cap: None, dim_bound: 3, seed: 0x5eed }
    }
}

#[derive(Clone, Debug)]
pub struct CmdOutput {
    pub text: String,
    pub json: Value,
    pub outcome: Outcome,
}

impl CmdOutput {
    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            to_text(&self.json)
        } else {
            self.text.clone()
        }
    }
}

fn witness_line(c: &Cached) -> String {
    match &c.path {
        Some(p) => format!("witness: {}", p.display()),
        None => format!("witness: sha256 {} (cache disabled)", c.key),
    }
}

fn pair_descriptor(spec: &CotorsionPairSpec) -> Value {
    json!({
        "mode": spec.mode(),
        "generators": spec.generators().iter().map(module_to_json).collect::<Vec<_>>(),
        "cTestSet": spec.c_test_set().iter().map(module_to_json).collect::<Vec<_>>(),
        "iterCap": spec.iter_cap(),
    })
}

fn verify_complex(alg: &Arc<PathAlgebra>, v: &Value) -> Result<ChainComplex> {
    let c = complex_from_json(alg, v)?;
    c.check_square_zero()?;
    Ok(c)
}

/// Interior exactness of a cached resolution: homology may only sit in degree 0
/// and at the truncated top.
fn verify_resolution(alg: &Arc<PathAlgebra>, m: &Module, v: &Value) -> Result<ChainComplex> {
    let c = verify_complex(alg, v)?;
    for n in 1..c.hi() {
        anyhow::ensure!(c.homology_dim(n) == 0, "cached resolution is not exact in degree {n}");
    }
    anyhow::ensure!(c.homology(0).h.dims() == m.dims(), "cached resolution does not resolve the module");
    Ok(c)
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct MethodResult {
    method: String,
    dimension: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

/// `dim Ext^degree(M, N)` by every applicable method.
pub fn ext(ctx: &Ctx, algebra: &str, m_path: &Path, n_path: &Path, degree: usize, pair: Option<&str>) -> Result<CmdOutput> {
    let alg = load_algebra(algebra)?;
    let m = load_module(&alg, m_path)?;
    let n = load_module(&alg, n_path)?;
    let length = degree + 1;
    let key = content_key(&[&algebra_to_json(&alg), &module_to_json(&m), &json!("projective-resolution"), &json!(length)]);
    let cached = ctx.cache.get_or_compute(
        &key,
        "projective-resolution",
        || Ok(complex_to_json(&minimal_projective_resolution(&m, length)?.complex)),
        |v| verify_resolution(&alg, &m, v).map(|_| ()),
    )?;
    let resolution = verify_resolution(&alg, &m, &cached.value).context("witness resolution")?;
    let classic = ext_dims_from_resolution(&resolution, &n, degree)?[degree];

    let mut methods = vec![MethodResult { method: "classic".into(), dimension: Some(classic), note: None }];
    methods.push(MethodResult { method: "classic-recomputed".into(), dimension: Some(ext_classic(&m, &n, degree)?), note: None });
    methods.push(MethodResult { method: "injective".into(), dimension: Some(ext_injective(&m, &n, degree)?), note: None });
    for (name, spec) in [
        ("model-projective", CotorsionPairSpec::projective(&alg)),
        ("model-injective", CotorsionPairSpec::injective(&alg)),
    ] {
        methods.push(MethodResult { method: name.into(), dimension: Some(ext_model(&spec, &m, &n, degree)?), note: None });
    }
    let mut inconclusive = false;
    if let Some(p) = pair {
        let spec = load_pair(&alg, p, ctx.iter_cap)?;
        let r = if spec.check_hereditary()?.overall.holds() {
            match ext_model(&spec, &m, &n, degree) {
                Ok(d) => MethodResult { method: "model-pair".into(), dimension: Some(d), note: None },
                Err(e) => {
                    inconclusive = true;
                    MethodResult { method: "model-pair".into(), dimension: None, note: Some(e.to_string()) }
                }
            }
        } else {
            MethodResult {
                method: "model-pair".into(),
                dimension: None,
                note: Some("pair not certified hereditary; model Ext need not agree".into()),
            }
        };
        methods.push(r);
    }
    let disagree: Vec<String> = methods
        .iter()
        .filter_map(|r| r.dimension.filter(|&d| d != classic).map(|d| format!("{} gives {d}", r.method)))
        .collect();
    let agree = disagree.is_empty();
    let outcome = if !agree {
        Outcome::Failed
    } else if inconclusive {
        Outcome::Inconclusive
    } else {
        Outcome::Ok
    };
    let json = json!({
        "command": "ext",
        "degree": degree,
        "dimension": classic,
        "methods": methods,
        "agree": agree,
        "witness": { "sha256": cached.key, "resolution": cached.value },
    });
    let mut text = format!("{classic}\n{}\n", witness_line(&cached));
    if !agree {
        text.push_str(&format!("discrepancy: classic gives {classic}; {}\n", disagree.join("; ")));
    }
    Ok(CmdOutput { text, json, outcome })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimKind {
    Pd,
    Cofdim,
    Fibdim,
}

impl DimKind {
    fn name(self) -> &'static str {
        match self {
            DimKind::Pd => "pd",
            DimKind::Cofdim => "cofdim",
            DimKind::Fibdim => "fibdim",
        }
    }
}

fn report_json(r: &DimensionReport) -> Value {
    json!({
        "value": r.value,
        "rendered": r.value.to_string(),
        "method": r.method,
        "syzygyDims": r.syzygy_dims,
        "extEvidence": r.ext_evidence,
        "witness": r.witness.as_ref().map(complex_to_json),
    })
}

/// `pd` (relative to `pair` when given), `cofdim` or `fibdim` of one module.
pub fn dimension(ctx: &Ctx, kind: DimKind, algebra: &str, module: &Path, pair: Option<&str>) -> Result<CmdOutput> {
    let alg = load_algebra(algebra)?;
    let m = load_module(&alg, module)?;
    let spec = match (kind, pair) {
        (_, Some(p)) => load_pair(&alg, p, ctx.iter_cap)?,
        (DimKind::Fibdim, None) => load_pair(&alg, "injective", ctx.iter_cap)?,
        (_, None) => load_pair(&alg, "projective", ctx.iter_cap)?,
    };
    let op = kind.name();
    let key = content_key(&[
        &algebra_to_json(&alg),
        &module_to_json(&m),
        &json!(op),
        &pair_descriptor(&spec),
        &json!(ctx.cutoff),
    ]);
    let cutoff = ctx.cutoff;
    let cached = ctx.cache.get_or_compute(
        &key,
        op,
        || {
            let r = match kind {
                DimKind::Pd if spec.mode() == PairMode::Projective => pd(&m, cutoff)?,
                DimKind::Pd => pd_rel(&m, &spec, cutoff)?,
                DimKind::Cofdim => cofdim(&spec, &m, cutoff)?,
                DimKind::Fibdim => fibdim(&spec, &m, cutoff)?,
            };
            Ok(report_json(&r))
        },
        |v| {
            serde_json::from_value::<DimValue>(v["value"].clone())?;
            if !v["witness"].is_null() {
                verify_complex(&alg, &v["witness"])?;
            }
            Ok(())
        },
    )?;
    let value: DimValue = serde_json::from_value(cached.value["value"].clone())?;
    let outcome = match value {
        DimValue::UnknownBeyond { .. } => Outcome::Inconclusive,
        _ => Outcome::Ok,
    };
    let json = json!({
        "command": op,
        "pair": spec.mode(),
        "cutoff": cutoff,
        "report": cached.value,
        "witnessSha256": cached.key,
    });
    let text = format!("{value}\n{}\n", witness_line(&cached));
    Ok(CmdOutput { text, json, outcome })
}

/// Findim of the algebra from its module corpus, with the regular-module and clause checks.
pub fn findim(ctx: &Ctx, algebra: &str) -> Result<CmdOutput> {
    let alg = load_algebra(algebra)?;
    let corpus = suites::corpus(&alg, ctx.dim_bound, ctx.seed)?;
    let iter_cap = ctx.iter_cap.unwrap_or(homkit_core::approx::DEFAULT_ITER_CAP);
    let est = findim_estimate(&corpus, ctx.cutoff)?;
    let art = artinian_check(&corpus, ctx.cutoff, iter_cap)?;
    let cfg = TheoremConfig { cutoff: ctx.cutoff, iter_cap, seed: ctx.seed, ..TheoremConfig::default() };
    let thm = theorem_findim_check(&corpus, est.value, &cfg)?;
    let outcome = if art.verdict.fails() || thm.clauses.iter().any(Verdict::fails) {
        Outcome::Failed
    } else if !est.exact {
        Outcome::Inconclusive
    } else {
        Outcome::Ok
    };
    let json = json!({
        "command": "findim",
        "corpus": { "size": corpus.members.len(), "dimBound": corpus.dim_bound, "completeness": format!("{:?}", corpus.completeness) },
        "estimate": est,
        "regularModule": {
            "fibdim": art.fibdim_regular,
            "cofdim": art.cofdim_regular,
            "preenvelopeIterations": art.preenvelope_iterations,
            "converged": art.converged,
            "verdict": art.verdict,
        },
        "clauses": {
            "n": thm.n,
            "verdicts": thm.clauses,
            "minimalNClause1": thm.minimal_n_clause1,
            "minimalNClause4": thm.minimal_n_clause4,
            "freeRankCap": thm.free_rank_cap,
        },
    });
    let text = format!(
        "findim = {} ({})\nfibdim of the regular module = {}\n",
        est.value,
        if est.exact { "exact" } else { "lower bound" },
        art.fibdim_regular
    );
    Ok(CmdOutput { text, json, outcome })
}

/// A verified cofibrant or fibrant replacement.
pub fn replace(
    ctx: &Ctx,
    side: Side,
    algebra: &str,
    module: &Path,
    pair: Option<&str>,
    degree: i64,
    length: usize,
) -> Result<CmdOutput> {
    let alg = load_algebra(algebra)?;
    let m = load_module(&alg, module)?;
    let default = if side == Side::Cofibrant { "projective" } else { "injective" };
    let spec = load_pair(&alg, pair.unwrap_or(default), ctx.iter_cap)?;
    let r = match side {
        Side::Cofibrant => cofibrant_replacement(&spec, &m, length)?,
        Side::Fibrant => fibrant_replacement(&spec, &m, degree, length)?,
    };
    r.verify(&spec)?;
    let json = json!({
        "command": "replace",
        "side": if side == Side::Cofibrant { "cofibrant" } else { "fibrant" },
        "pair": spec.mode(),
        "complete": r.complete,
        "length": r.length(),
        "termDims": (0..r.steps.len()).map(|i| r.term(i).dims().to_vec()).collect::<Vec<_>>(),
        "iterations": r.steps.iter().map(|s| s.iterations).collect::<Vec<_>>(),
        "complex": complex_to_json(&r.complex),
        "augmented": complex_to_json(&r.augmented()?),
    });
    let text = to_text(&json);
    // a replacement truncated at the requested length is a complete answer
    Ok(CmdOutput { text, json, outcome: Outcome::Ok })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckSuite {
    Invariants,
    Findim,
    All,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AlgebraCheck {
    pub name: String,
    pub suites: Vec<SuiteReport>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckReport {
    pub seed: u64,
    pub suite: String,
    pub algebras: Vec<AlgebraCheck>,
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub inconclusive: usize,
    pub status: String,
}

impl CheckReport {
    pub fn outcome(&self) -> Outcome {
        if self.failed > 0 {
            Outcome::Failed
        } else if self.algebras.iter().flat_map(|a| &a.suites).any(|s| !s.decided()) {
            Outcome::Inconclusive
        } else {
            Outcome::Ok
        }
    }
}

fn invariant_suites(name: &str, alg: &Arc<PathAlgebra>, e: &crate::manifest::AlgebraEntry, seed: u64) -> Result<Vec<SuiteReport>> {
    let mut out = Vec::new();
    let algs = [alg.clone()];
    let corpus = suites::corpus(alg, e.dim_bound, seed)?;
    let extra: Vec<CotorsionPairSpec> =
        suites::finite_pd_hereditary(&corpus, e.cutoff, e.iter_cap)?.into_iter().collect();
    out.push(suites::ext_agreement(name, alg, e.cutoff.min(6)));
    let mut rng = suites::rng_for(seed, name, "orthogonal-vanishing");
    out.push(suites::vanishing(name, &algs, e.cases, 4, e.cutoff, e.iter_cap, &mut rng));
    out.push(suites::dimension_shift(name, &corpus, 2, 3, &extra));
    let mut specs = vec![CotorsionPairSpec::projective(alg), CotorsionPairSpec::injective(alg)];
    specs.extend(extra.iter().cloned());
    out.push(suites::relative_dims(name, &corpus, &specs, e.cutoff));
    let mut rng = suites::rng_for(seed, name, "hom-square-zero");
    out.push(suites::hom_square_zero(name, &algs, e.cases, &mut rng));
    let mut rng = suites::rng_for(seed, name, "schanuel");
    out.push(suites::schanuel(name, &algs, e.cases, &mut rng));
    let mut rng = suites::rng_for(seed, name, "filtration-closure");
    out.push(suites::filtration_closure(name, std::slice::from_ref(&corpus), 1, e.cases, e.cutoff, &mut rng));
    let mut rng = suites::rng_for(seed, name, "filtered-presentation");
    out.push(suites::filtered_presentations(name, &algs, e.cases, &mut rng));
    out.push(suites::hereditary_projective(name, alg));
    Ok(out)
}

fn findim_suites(name: &str, alg: &Arc<PathAlgebra>, e: &crate::manifest::AlgebraEntry, seed: u64) -> Result<Vec<SuiteReport>> {
    let corpus = suites::corpus(alg, e.dim_bound, seed)?;
    let cfg = TheoremConfig { cutoff: e.cutoff, iter_cap: e.iter_cap, seed, ..TheoremConfig::default() };
    Ok(vec![
        suites::findim_suite(name, &corpus, e.findim, e.cutoff, e.iter_cap),
        suites::theorem_clauses(name, &corpus, &cfg),
    ])
}

/// Runs the selected suites over every manifest algebra. The report depends
/// only on the manifest (including its seed).
pub fn check(manifest: &Manifest, which: CheckSuite) -> Result<CheckReport> {
    let mut algebras = Vec::new();
    for e in &manifest.algebras {
        let alg = e.load(manifest.base.as_deref()).with_context(|| format!("loading algebra {}", e.name))?;
        let mut suites = Vec::new();
        if which != CheckSuite::Findim {
            suites.extend(invariant_suites(&e.name, &alg, e, manifest.seed)?);
        }
        if which != CheckSuite::Invariants {
            suites.extend(findim_suites(&e.name, &alg, e, manifest.seed)?);
        }
        algebras.push(AlgebraCheck { name: e.name.clone(), suites });
    }
    let all = algebras.iter().flat_map(|a| &a.suites);
    let (mut cases, mut passed, mut failed, mut inconclusive) = (0, 0, 0, 0);
    for s in all {
        cases += s.cases;
        passed += s.passed;
        failed += s.failed;
        inconclusive += s.inconclusive;
    }
    let mut report = CheckReport {
        seed: manifest.seed,
        suite: match which {
            CheckSuite::Invariants => "invariants",
            CheckSuite::Findim => "findim",
            CheckSuite::All => "all",
        }
        .into(),
        algebras,
        cases,
        passed,
        failed,
        inconclusive,
        status: String::new(),
    };
    report.status = match report.outcome() {
        Outcome::Ok => "pass",
        Outcome::Failed => "fail",
        Outcome::Inconclusive => "inconclusive",
    }
    .into();
    Ok(report)
}

pub fn check_output(manifest: &Manifest, which: CheckSuite) -> Result<CmdOutput> {
    let report = check(manifest, which)?;
    let json = serde_json::to_value(&report)?;
    Ok(CmdOutput { text: to_text(&json), outcome: report.outcome(), json })
}
