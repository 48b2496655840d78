//! Orchestration of the four-way duality case analysis and independent
//! verification of every certificate.
//!
//! [`solve`] composes the dual and primal subroutines into an [`Outcome`]
//! and refuses to return a certificate the verifiers reject. The verifiers
//! themselves only recompute matrix-vector products and compare exactly;
//! they share no state with the solver.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::dual::{dual_feasibility, dual_solution, farkas_dual};
use crate::model::{
    build_hypergraph, check_gainfree, denormalize_certificates, normalize, validate, CycleWitness,
    Instance, Violation,
};
use crate::num::Rational;
use crate::primal::{farkas_primal, primal_feasibility, primal_solution};

/// The four cases of LP duality, each carrying the certificates that prove
/// it: feasible solutions and/or Farkas infeasibility vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// Both sides feasible; `x` and `y` have equal objective values.
    Optimal { x: Vec<Rational>, y: Vec<Rational> },
    /// Primal infeasible (witness `z`), dual feasible and unbounded
    /// (solution `y`; `y + t z` stays feasible for every `t >= 0`).
    PrimalInfeasible { z: Vec<Rational>, y: Vec<Rational> },
    /// Dual infeasible (witness `r`), primal feasible and unbounded
    /// (solution `x`; `x + t r` stays feasible with ever smaller cost).
    DualInfeasible { x: Vec<Rational>, r: Vec<Rational> },
    /// Both sides infeasible.
    BothInfeasible { z: Vec<Rational>, r: Vec<Rational> },
}

/// Which of the four duality cases an outcome falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    Optimal,
    PrimalInfeasible,
    DualInfeasible,
    BothInfeasible,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            CaseTag::Optimal => "optimal",
            CaseTag::PrimalInfeasible => "primal_infeasible",
            CaseTag::DualInfeasible => "dual_infeasible",
            CaseTag::BothInfeasible => "both_infeasible",
        };
        f.write_str(name)
    }
}

impl Outcome {
    pub fn case(&self) -> CaseTag {
        match self {
            Outcome::Optimal { .. } => CaseTag::Optimal,
            Outcome::PrimalInfeasible { .. } => CaseTag::PrimalInfeasible,
            Outcome::DualInfeasible { .. } => CaseTag::DualInfeasible,
            Outcome::BothInfeasible { .. } => CaseTag::BothInfeasible,
        }
    }
}

/// A reason a certificate fails verification. The first violated condition
/// is reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertError {
    Dimension { vector: &'static str, expected: usize, found: usize },
    /// `x` has a negative entry.
    PrimalNegative { index: usize },
    /// `(A x)(row) != b(row)`.
    PrimalResidual { row: usize },
    /// `(y^T A)(col) > c(col)`.
    DualViolated { col: usize },
    /// `z^T A` has a positive entry.
    FarkasPrimalPositive { col: usize },
    /// `z^T b <= 0`.
    FarkasPrimalObjective,
    /// `r` has a negative entry.
    FarkasDualNegative { index: usize },
    /// `(A r)(row) != 0`.
    FarkasDualResidual { row: usize },
    /// `c^T r >= 0`.
    FarkasDualObjective,
    /// Optimal outcome with `c^T x != b^T y`.
    ObjectiveMismatch,
}

impl fmt::Display for CertError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertError::Dimension { vector, expected, found } => {
                write!(f, "{} has length {}, expected {}", vector, found, expected)
            }
            CertError::PrimalNegative { index } => write!(f, "x({}) < 0", index + 1),
            CertError::PrimalResidual { row } => write!(f, "(A x)({}) != b({})", row + 1, row + 1),
            CertError::DualViolated { col } => write!(f, "(y^T A)({0}) > c({0})", col + 1),
            CertError::FarkasPrimalPositive { col } => write!(f, "(z^T A)({}) > 0", col + 1),
            CertError::FarkasPrimalObjective => write!(f, "z^T b <= 0"),
            CertError::FarkasDualNegative { index } => write!(f, "r({}) < 0", index + 1),
            CertError::FarkasDualResidual { row } => write!(f, "(A r)({}) != 0", row + 1),
            CertError::FarkasDualObjective => write!(f, "c^T r >= 0"),
            CertError::ObjectiveMismatch => write!(f, "c^T x != b^T y"),
        }
    }
}

impl std::error::Error for CertError {}

fn check_len(vector: &'static str, expected: usize, found: usize) -> Result<(), CertError> {
    if expected == found {
        Ok(())
    } else {
        Err(CertError::Dimension { vector, expected, found })
    }
}

/// `x >= 0` and `A x = b`, exactly.
pub fn verify_primal_feasible(inst: &Instance, x: &[Rational]) -> Result<(), CertError> {
    check_len("x", inst.columns(), x.len())?;
    if let Some(index) = x.iter().position(|v| v.is_negative()) {
        return Err(CertError::PrimalNegative { index });
    }
    let ax = inst.mul_x(x);
    for (row, (lhs, rhs)) in ax.iter().zip(&inst.b).enumerate() {
        if lhs != rhs {
            return Err(CertError::PrimalResidual { row });
        }
    }
    Ok(())
}

/// `y^T A <= c^T`, exactly.
pub fn verify_dual_feasible(inst: &Instance, y: &[Rational]) -> Result<(), CertError> {
    check_len("y", inst.rows(), y.len())?;
    let yta = inst.mul_yt(y);
    for (col, (lhs, rhs)) in yta.iter().zip(&inst.c).enumerate() {
        if lhs > rhs {
            return Err(CertError::DualViolated { col });
        }
    }
    Ok(())
}

/// `z^T A <= 0` and `z^T b > 0`, exactly.
pub fn verify_farkas_primal(inst: &Instance, z: &[Rational]) -> Result<(), CertError> {
    check_len("z", inst.rows(), z.len())?;
    let zta = inst.mul_yt(z);
    if let Some(col) = zta.iter().position(|v| v.is_positive()) {
        return Err(CertError::FarkasPrimalPositive { col });
    }
    let ztb: Rational = z.iter().zip(&inst.b).map(|(zi, bi)| zi * bi).sum();
    if !ztb.is_positive() {
        return Err(CertError::FarkasPrimalObjective);
    }
    Ok(())
}

/// `r >= 0`, `A r = 0`, and `c^T r < 0`, exactly.
pub fn verify_farkas_dual(inst: &Instance, r: &[Rational]) -> Result<(), CertError> {
    check_len("r", inst.columns(), r.len())?;
    if let Some(index) = r.iter().position(|v| v.is_negative()) {
        return Err(CertError::FarkasDualNegative { index });
    }
    let ar = inst.mul_x(r);
    if let Some(row) = ar.iter().position(|v| !v.is_zero()) {
        return Err(CertError::FarkasDualResidual { row });
    }
    if !inst.objective(r).is_negative() {
        return Err(CertError::FarkasDualObjective);
    }
    Ok(())
}

/// Dispatches to the per-certificate verifiers and, for the optimal case,
/// additionally checks that the two objective values agree.
pub fn verify_outcome(inst: &Instance, outcome: &Outcome) -> Result<(), CertError> {
    match outcome {
        Outcome::Optimal { x, y } => {
            verify_primal_feasible(inst, x)?;
            verify_dual_feasible(inst, y)?;
            let bty: Rational = y.iter().zip(&inst.b).map(|(yi, bi)| yi * bi).sum();
            if inst.objective(x) != bty {
                return Err(CertError::ObjectiveMismatch);
            }
            Ok(())
        }
        Outcome::PrimalInfeasible { z, y } => {
            verify_farkas_primal(inst, z)?;
            verify_dual_feasible(inst, y)
        }
        Outcome::DualInfeasible { x, r } => {
            verify_primal_feasible(inst, x)?;
            verify_farkas_dual(inst, r)
        }
        Outcome::BothInfeasible { z, r } => {
            verify_farkas_primal(inst, z)?;
            verify_farkas_dual(inst, r)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveError {
    /// Some column has more than one positive entry.
    NotLeontief { col: usize },
    /// Some right-hand side entry is negative.
    NegativeB { row: usize },
    /// The hypergraph has a cycle of gain above one.
    NotGainfree(CycleWitness),
    /// A produced certificate failed its own verification; no certificate is
    /// returned rather than a wrong one.
    CertificateCheck(CertError),
    /// An internal precondition broke; indicates a solver bug or a
    /// suppressed gainfree check on a non-gainfree instance.
    Internal(String),
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::NotLeontief { col } => {
                write!(f, "column {} has more than one positive entry", col + 1)
            }
            SolveError::NegativeB { row } => write!(f, "b({}) is negative", row + 1),
            SolveError::NotGainfree(witness) => {
                write!(f, "hypergraph has a cycle of gain above one: {}", witness)
            }
            SolveError::CertificateCheck(err) => {
                write!(f, "internal certificate verification failed: {}", err)
            }
            SolveError::Internal(msg) => write!(f, "internal error: {}", msg),
        }
    }
}

impl std::error::Error for SolveError {}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Verify gainfreeness up front (on by default). Callers that guarantee
    /// gainfreeness may skip the check; certificates are still verified
    /// before being returned.
    pub check_gainfree: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { check_gainfree: true }
    }
}

/// Solves the instance and returns the verified outcome. See [`solve_with`].
pub fn solve(inst: &Instance) -> Result<Outcome, SolveError> {
    solve_with(inst, &SolveOptions::default())
}

/// Validates, normalizes, checks gainfreeness, runs the dual and primal
/// subroutines, maps the certificates back to the original instance, and
/// verifies them before returning.
pub fn solve_with(inst: &Instance, options: &SolveOptions) -> Result<Outcome, SolveError> {
    for violation in validate(inst) {
        return Err(match violation {
            Violation::MultiplePositiveEntries { col, .. } => SolveError::NotLeontief { col },
            Violation::NegativeB { row } => SolveError::NegativeB { row },
        });
    }
    let (normalized, scaling) = normalize(inst);
    let h = build_hypergraph(&normalized);
    if options.check_gainfree {
        check_gainfree(&h).map_err(SolveError::NotGainfree)?;
    }

    let trace = dual_feasibility(&h);
    let dual_side = if trace.value {
        Ok(dual_solution(&h, trace.final_y()))
    } else {
        Err(farkas_dual(&h, &trace).map_err(|e| SolveError::Internal(e.to_string()))?)
    };
    let primal_side = if primal_feasibility(&normalized.b, trace.final_nontriv()) {
        Ok(primal_solution(&h, &normalized.b, &trace)
            .map_err(|e| SolveError::Internal(e.to_string()))?)
    } else {
        Err(farkas_primal(trace.final_y(), trace.final_nontriv()))
    };

    let outcome = match (primal_side, dual_side) {
        (Ok(x), Ok(y)) => Outcome::Optimal { x, y },
        (Err(z), Ok(y)) => Outcome::PrimalInfeasible { z, y },
        (Ok(x), Err(r)) => Outcome::DualInfeasible { x, r },
        (Err(z), Err(r)) => Outcome::BothInfeasible { z, r },
    };
    let outcome = denormalize_certificates(&scaling, outcome);
    verify_outcome(inst, &outcome).map_err(SolveError::CertificateCheck)?;
    Ok(outcome)
}
