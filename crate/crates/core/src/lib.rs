//! Exact-arithmetic certifying solver for linear programs whose constraints
//! form a gainfree Leontief substitution system (`Ax = b`, `x >= 0`, every
//! column of `A` with at most one positive entry, `b >= 0`).
//!
//! For every accepted instance [`certify::solve`] returns one of the four
//! LP-duality outcomes, each carrying certificates (feasible solutions and/or
//! Farkas infeasibility vectors) that the verifiers in [`certify`] check
//! independently with zero tolerance. All arithmetic is over arbitrary
//! precision rationals; there is no floating point anywhere in the solver.

pub mod certify;
pub mod dual;
#[cfg(test)]
pub(crate) mod fixtures;
pub mod gen;
pub mod model;
pub mod num;
pub mod oracle;
pub mod primal;
pub mod textio;

pub use certify::{solve, solve_with, Outcome, SolveError, SolveOptions};
pub use model::{CycleWitness, Hypergraph, Instance};
pub use num::{MAffine, Rational};
