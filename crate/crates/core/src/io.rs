//! JSON file formats for algebras, modules, maps, complexes and pair specs.
//!
//! Scalars are written as strings (`"3"`, `"-1/2"`) and accepted as strings
//! or integers. Objects keyed by vertex, arrow or degree use sorted keys, so
//! serialization is deterministic and `parse . serialize` is the identity.

use std::path::{Path as FsPath, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{PathAlgebra, Quiver, Relation};
use crate::approx::{CotorsionPairSpec, PairMode, DEFAULT_ITER_CAP};
use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;
use crate::module::{Module, ModuleMap};

fn parse_err(what: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{what}: {msg}"))
}

fn scalar_from(field: Field, v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => field.parse(s),
        Value::Number(n) => field.parse(&n.to_string()),
        other => Err(parse_err("scalar", format!("expected a string or integer, found {other}"))),
    }
}

fn matrix_to_json(m: &Matrix) -> Value {
    let f = m.field();
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(|x| Value::String(f.format(x))).collect()))
            .collect(),
    )
}

fn matrix_from_json(field: Field, rows: usize, cols: usize, v: &Value, what: &str) -> Result<Matrix> {
    let arr = v.as_array().ok_or_else(|| parse_err(what, "expected an array of rows"))?;
    if arr.len() != rows && !(rows == 0 && arr.is_empty()) {
        return Err(parse_err(what, format!("expected {rows} rows, found {}", arr.len())));
    }
    let mut out = Vec::with_capacity(rows);
    for (i, r) in arr.iter().enumerate() {
        let r = r.as_array().ok_or_else(|| parse_err(what, format!("row {i} is not an array")))?;
        if r.len() != cols {
            return Err(parse_err(what, format!("row {i} has {} entries, expected {cols}", r.len())));
        }
        out.push(r.iter().map(|x| scalar_from(field, x)).collect::<Result<Vec<_>>>()?);
    }
    Ok(Matrix::from_rows(field, out, cols))
}

fn field_from_json(v: &Value) -> Result<Field> {
    if let Some(s) = v.as_str() {
        let s = s.trim();
        if s == "Q" || s.eq_ignore_ascii_case("rational") {
            return Ok(Field::Rational);
        }
        let p = s.strip_prefix('F').or_else(|| s.strip_prefix("GF")).unwrap_or(s);
        let p: u64 = p.parse().map_err(|_| parse_err("field", format!("unrecognized field {s:?}")))?;
        return Field::prime(p);
    }
    let f: Field = serde_json::from_value(v.clone()).map_err(|e| parse_err("field", e))?;
    f.validate()?;
    Ok(f)
}

#[derive(Serialize, Deserialize)]
struct ArrowJson {
    name: String,
    source: String,
    target: String,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coef: Value,
    path: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct RelationJson {
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraJson {
    field: Value,
    vertices: Vec<String>,
    arrows: Vec<ArrowJson>,
    #[serde(default)]
    relations: Vec<RelationJson>,
}

pub fn algebra_to_json(a: &PathAlgebra) -> Value {
    let q = a.quiver();
    let f = a.field();
    let j = AlgebraJson {
        field: serde_json::to_value(f).expect("field serializes"),
        vertices: q.vertices().to_vec(),
        arrows: q
            .arrows()
            .iter()
            .map(|ar| ArrowJson {
                name: ar.name.clone(),
                source: q.vertices()[ar.source].clone(),
                target: q.vertices()[ar.target].clone(),
            })
            .collect(),
        relations: a
            .relations()
            .iter()
            .map(|r| RelationJson {
                terms: r
                    .terms
                    .iter()
                    .map(|(c, p)| TermJson {
                        coef: Value::String(f.format(c)),
                        path: p.arrows.iter().map(|&i| q.arrows()[i].name.clone()).collect(),
                    })
                    .collect(),
            })
            .collect(),
    };
    serde_json::to_value(j).expect("algebra serializes")
}

pub fn algebra_from_json(v: &Value) -> Result<PathAlgebra> {
    let j: AlgebraJson = serde_json::from_value(v.clone()).map_err(|e| parse_err("algebra", e))?;
    let field = field_from_json(&j.field)?;
    let arrows: Vec<(&str, &str, &str)> =
        j.arrows.iter().map(|a| (a.name.as_str(), a.source.as_str(), a.target.as_str())).collect();
    let verts: Vec<&str> = j.vertices.iter().map(|s| s.as_str()).collect();
    let q = Quiver::new(&verts, &arrows)?;
    let mut rels = Vec::new();
    for (i, r) in j.relations.iter().enumerate() {
        let mut terms = Vec::new();
        for t in &r.terms {
            let names: Vec<&str> = t.path.iter().map(|s| s.as_str()).collect();
            let p = q.path(&names).map_err(|e| parse_err(&format!("relation {i}"), e))?;
            terms.push((scalar_from(field, &t.coef)?, p));
        }
        rels.push(Relation { terms });
    }
    PathAlgebra::new(q, rels, field)
}

pub fn module_to_json(m: &Module) -> Value {
    let alg = m.algebra();
    let q = alg.quiver();
    let mut action = serde_json::Map::new();
    for (a, ar) in q.arrows().iter().enumerate() {
        action.insert(ar.name.clone(), matrix_to_json(m.action(a)));
    }
    let mut dims = serde_json::Map::new();
    for (v, name) in q.vertices().iter().enumerate() {
        dims.insert(name.clone(), Value::from(m.dim_at(v)));
    }
    serde_json::json!({ "dims": dims, "action": action })
}

/// `dims` may be an object keyed by vertex name or an array in vertex order.
pub fn module_from_json(alg: &Arc<PathAlgebra>, v: &Value) -> Result<Module> {
    let q = alg.quiver();
    let obj = v.as_object().ok_or_else(|| parse_err("module", "expected an object"))?;
    for k in obj.keys() {
        if k != "dims" && k != "action" {
            return Err(parse_err("module", format!("unknown field {k:?}")));
        }
    }
    let dims_v = obj.get("dims").ok_or_else(|| parse_err("module", "missing dims"))?;
    let dims: Vec<usize> = match dims_v {
        Value::Array(a) => {
            if a.len() != alg.num_vertices() {
                return Err(parse_err("module", "dims has the wrong length"));
            }
            a.iter().map(|x| x.as_u64().map(|d| d as usize).ok_or_else(|| parse_err("module", "bad dimension"))).collect::<Result<_>>()?
        }
        Value::Object(o) => {
            for k in o.keys() {
                if q.vertex_index(k).is_none() {
                    return Err(parse_err("module", format!("unknown vertex {k:?}")));
                }
            }
            q.vertices()
                .iter()
                .map(|name| Ok(o.get(name).map(|x| x.as_u64().ok_or_else(|| parse_err("module", "bad dimension"))).transpose()?.unwrap_or(0) as usize))
                .collect::<Result<_>>()?
        }
        _ => return Err(parse_err("module", "dims must be an array or object")),
    };
    let empty = serde_json::Map::new();
    let act = match obj.get("action") {
        None => &empty,
        Some(Value::Object(o)) => o,
        Some(_) => return Err(parse_err("module", "action must be an object keyed by arrow name")),
    };
    for k in act.keys() {
        if q.arrow_index(k).is_none() {
            return Err(parse_err("module", format!("unknown arrow {k:?}")));
        }
    }
    let f = alg.field();
    let mut action = Vec::new();
    for ar in q.arrows() {
        let (r, c) = (dims[ar.target], dims[ar.source]);
        let m = match act.get(&ar.name) {
            Some(m) => matrix_from_json(f, r, c, m, &format!("action of {}", ar.name))?,
            None => Matrix::zeros(f, r, c),
        };
        action.push(m);
    }
    Module::new(alg.clone(), dims, action)
}

pub fn map_to_json(f: &ModuleMap) -> Value {
    let q = f.source().algebra().quiver();
    let mut mats = serde_json::Map::new();
    for (v, name) in q.vertices().iter().enumerate() {
        mats.insert(name.clone(), matrix_to_json(f.mat(v)));
    }
    serde_json::json!({ "mats": mats })
}

pub fn map_from_json(source: &Module, target: &Module, v: &Value) -> Result<ModuleMap> {
    let alg = source.algebra();
    let q = alg.quiver();
    let mats_v = v
        .get("mats")
        .and_then(|m| m.as_object())
        .ok_or_else(|| parse_err("map", "expected {\"mats\": {vertex: matrix}}"))?;
    let f = alg.field();
    let mut mats = Vec::new();
    for (i, name) in q.vertices().iter().enumerate() {
        let (r, c) = (target.dim_at(i), source.dim_at(i));
        mats.push(match mats_v.get(name) {
            Some(m) => matrix_from_json(f, r, c, m, &format!("map at vertex {name}"))?,
            None => Matrix::zeros(f, r, c),
        });
    }
    ModuleMap::new(source.clone(), target.clone(), mats)
}

pub fn complex_to_json(x: &ChainComplex) -> Value {
    let (lo, hi) = x.window();
    let mut objects = serde_json::Map::new();
    let mut diffs = serde_json::Map::new();
    for n in lo..=hi {
        objects.insert(n.to_string(), module_to_json(&x.object(n)));
        if n > lo {
            diffs.insert(n.to_string(), map_to_json(&x.diff(n)));
        }
    }
    serde_json::json!({ "window": [lo, hi], "objects": objects, "diffs": diffs })
}

pub fn complex_from_json(alg: &Arc<PathAlgebra>, v: &Value) -> Result<ChainComplex> {
    let w = v.get("window").and_then(|w| w.as_array()).ok_or_else(|| parse_err("complex", "missing window"))?;
    if w.len() != 2 {
        return Err(parse_err("complex", "window must be [lo, hi]"));
    }
    let lo = w[0].as_i64().ok_or_else(|| parse_err("complex", "bad window"))?;
    let hi = w[1].as_i64().ok_or_else(|| parse_err("complex", "bad window"))?;
    if hi < lo {
        return Err(parse_err("complex", "empty window"));
    }
    let objs = v.get("objects").and_then(|o| o.as_object()).ok_or_else(|| parse_err("complex", "missing objects"))?;
    let empty = serde_json::Map::new();
    let diffs_v = v.get("diffs").and_then(|o| o.as_object()).unwrap_or(&empty);
    let mut objects = Vec::new();
    for n in lo..=hi {
        objects.push(match objs.get(&n.to_string()) {
            Some(m) => module_from_json(alg, m)?,
            None => Module::zero(alg.clone()),
        });
    }
    for k in objs.keys().chain(diffs_v.keys()) {
        let d: i64 = k.parse().map_err(|_| parse_err("complex", format!("degree key {k:?} is not an integer")))?;
        if d < lo || d > hi {
            return Err(parse_err("complex", format!("degree {d} outside the window")));
        }
    }
    let mut diffs = Vec::new();
    for n in lo + 1..=hi {
        let (s, t) = (&objects[(n - lo) as usize], &objects[(n - lo - 1) as usize]);
        diffs.push(match diffs_v.get(&n.to_string()) {
            Some(m) => map_from_json(s, t, m)?,
            None => ModuleMap::zero(s, t),
        });
    }
    ChainComplex::new(alg.clone(), lo, objects, diffs)
}

/// A module reference inside a pair file: a path relative to the pair file,
/// or an inline module object.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum ModuleRef {
    Path(String),
    Inline(Value),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct PairFile {
    pub mode: PairMode,
    #[serde(default)]
    pub generators: Vec<ModuleRef>,
    #[serde(default = "default_iter_cap")]
    pub iter_cap: usize,
    #[serde(default)]
    pub c_test_set: Vec<ModuleRef>,
}

fn default_iter_cap() -> usize {
    DEFAULT_ITER_CAP
}

fn resolve(alg: &Arc<PathAlgebra>, r: &ModuleRef, base: Option<&FsPath>) -> Result<Module> {
    match r {
        ModuleRef::Inline(v) => module_from_json(alg, v),
        ModuleRef::Path(p) => {
            let path: PathBuf = match base {
                Some(b) => b.join(p),
                None => PathBuf::from(p),
            };
            let v = read_json(&path)?;
            module_from_json(alg, &v).map_err(|e| parse_err(&path.display().to_string(), e))
        }
    }
}

impl PairFile {
    pub fn build(&self, alg: &Arc<PathAlgebra>, base: Option<&FsPath>) -> Result<CotorsionPairSpec> {
        Ok(match self.mode {
            PairMode::Projective => CotorsionPairSpec::projective(alg).with_iter_cap(self.iter_cap),
            PairMode::Injective => CotorsionPairSpec::injective(alg).with_iter_cap(self.iter_cap),
            PairMode::Generated => {
                let gens = self.generators.iter().map(|g| resolve(alg, g, base)).collect::<Result<Vec<_>>>()?;
                let tests = self.c_test_set.iter().map(|g| resolve(alg, g, base)).collect::<Result<Vec<_>>>()?;
                CotorsionPairSpec::generated(alg, gens, self.iter_cap, tests)?
            }
        })
    }
}

/// Reads a JSON file; syntax errors carry file, line and column.
pub fn read_json(path: &FsPath) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| parse_err(&path.display().to_string(), e))?;
    serde_json::from_str(&text).map_err(|e| {
        Error::Parse(format!("{}:{}:{}: {e}", path.display(), e.line(), e.column()))
    })
}

/// Canonical pretty-printed text with a trailing newline.
pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json serializes");
    s.push('\n');
    s
}
