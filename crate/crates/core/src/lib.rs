//! Exact computations with rational Cherednik algebras of Coxeter and complex
//! reflection groups: Dunkl operators, flat coordinates, shift operators and
//! singular polynomial representations.

pub mod cache;
pub mod cli;
pub mod coxeter;
pub mod dunkl;
pub mod error;
pub mod field;
pub mod linalg;
pub mod poly;
pub mod residues;
pub mod saito;
pub mod selftest;
pub mod serial;
pub mod shift;

pub use coxeter::{build_root_system, GroupElementAction, GroupSpec, GroupType, Root, RootSystem};
pub use error::{Error, Result};
pub use field::{Field, FieldContext, Scalar};
pub use linalg::{solve_linear_exact, LinearSolution, PolyMatrix, PolySpan};
pub use poly::{poly_arith, Monomial, MultiPoly, PolyOp};
