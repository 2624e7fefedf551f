//! The small algebras used throughout the test suites.

use std::sync::Arc;

use crate::algebra::{PathAlgebra, Quiver, Relation};
use crate::error::{Error, Result};
use crate::field::Field;

pub const SUITE: [&str; 5] = ["semisimple", "a2", "a3-rad2", "dual", "square"];

/// `name` is one of [`SUITE`].
pub fn algebra(name: &str, field: Field) -> Result<Arc<PathAlgebra>> {
    let one = field.one();
    let (q, rels) = match name {
        "semisimple" => (Quiver::new::<&str>(&["1"], &[])?, vec![]),
        "a2" => (Quiver::new(&["1", "2"], &[("a", "1", "2")])?, vec![]),
        "a3-rad2" => {
            let q = Quiver::new(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")])?;
            let r = Relation { terms: vec![(one, q.path(&["a", "b"])?)] };
            (q, vec![r])
        }
        "dual" => {
            let q = Quiver::new(&["1"], &[("x", "1", "1")])?;
            let r = Relation { terms: vec![(one, q.path(&["x", "x"])?)] };
            (q, vec![r])
        }
        "square" => {
            let q = Quiver::new(
                &["1", "2", "3", "4"],
                &[("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
            )?;
            let r = Relation { terms: vec![(one, q.path(&["a", "b"])?), (field.from_i64(-1), q.path(&["c", "d"])?)] };
            (q, vec![r])
        }
        other => return Err(Error::Parse(format!("unknown catalog algebra {other:?}"))),
    };
    Ok(Arc::new(PathAlgebra::new(q, rels, field)?))
}

pub fn suite(field: Field) -> Vec<(&'static str, Arc<PathAlgebra>)> {
    SUITE.iter().map(|&n| (n, algebra(n, field).expect("catalog algebras are admissible"))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        let dims: Vec<usize> = suite(Field::prime(5).unwrap()).iter().map(|(_, a)| a.dim()).collect();
        assert_eq!(dims, vec![1, 3, 5, 2, 9]);
    }
}
