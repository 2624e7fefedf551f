//! Exact homological algebra over finite-dimensional quiver algebras.

pub mod algebra;
pub mod approx;
pub mod catalog;
pub mod classes;
pub mod complex;
pub mod error;
pub mod exact;
pub mod field;
pub mod findim;
pub mod hom;
pub mod io;
pub mod iso;
pub mod matrix;
pub mod module;
pub mod reldim;
pub mod replacement;
pub mod verdict;

pub use algebra::{Arrow, Path, PathAlgebra, Quiver, Relation};
pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use matrix::Matrix;
pub use module::{Module, ModuleMap};
pub use verdict::Verdict;
