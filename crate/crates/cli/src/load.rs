//! Reading algebras, modules and pairs from the command line.
//!
//! An algebra argument is either a JSON file or `catalog:<name>[:<field>]`
//! with a field written `F<p>` or `Q` (default `F2`).

use std::path::Path;
use std::sync::Arc;

use anyhow::{Context, Result};
use homkit_core::approx::CotorsionPairSpec;
use homkit_core::io::{self, PairFile};
use homkit_core::{catalog, Error, Field, Module, PathAlgebra};

pub fn parse_field(s: &str) -> Result<Field> {
    if s == "Q" {
        return Ok(Field::Rational);
    }
    let p = s
        .strip_prefix('F')
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| Error::InvalidField(format!("expected F<p> or Q, got {s:?}")))?;
    Ok(Field::prime(p)?)
}

pub fn load_algebra(arg: &str) -> Result<Arc<PathAlgebra>> {
    if let Some(rest) = arg.strip_prefix("catalog:") {
        let (name, field) = match rest.split_once(':') {
            Some((n, f)) => (n, parse_field(f)?),
            None => (rest, Field::prime(2)?),
        };
        return Ok(catalog::algebra(name, field)?);
    }
    let path = Path::new(arg);
    let v = io::read_json(path)?;
    let alg = io::algebra_from_json(&v).map_err(|e| located(path, e))?;
    Ok(Arc::new(alg))
}

pub fn load_module(alg: &Arc<PathAlgebra>, path: &Path) -> Result<Module> {
    let v = io::read_json(path)?;
    Ok(io::module_from_json(alg, &v).map_err(|e| located(path, e))?)
}

/// `projective` and `injective` name the two standard pairs; anything else is a pair file.
pub fn load_pair(alg: &Arc<PathAlgebra>, arg: &str, iter_cap: Option<usize>) -> Result<CotorsionPairSpec> {
    let spec = match arg {
        "projective" => CotorsionPairSpec::projective(alg),
        "injective" => CotorsionPairSpec::injective(alg),
        file => {
            let path = Path::new(file);
            let v = io::read_json(path)?;
            let pf: PairFile = serde_json::from_value(v)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            pf.build(alg, path.parent()).with_context(|| format!("building pair from {}", path.display()))?
        }
    };
    Ok(match iter_cap {
        Some(c) => spec.with_iter_cap(c),
        None => spec,
    })
}

fn located(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        Error::InvalidModule(m) => Error::InvalidModule(format!("{}: {m}", path.display())),
        Error::InvalidField(m) => Error::InvalidField(format!("{}: {m}", path.display())),
        Error::MalformedQuiver(m) => Error::MalformedQuiver(format!("{}: {m}", path.display())),
        Error::MalformedRelation(m) => Error::MalformedRelation(format!("{}: {m}", path.display())),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_arguments() {
        assert_eq!(load_algebra("catalog:dual").unwrap().dim(), 2);
        assert_eq!(load_algebra("catalog:square:F5").unwrap().field(), Field::prime(5).unwrap());
        assert!(load_algebra("catalog:nope").is_err());
        assert!(parse_field("F4").is_err());
    }
}
