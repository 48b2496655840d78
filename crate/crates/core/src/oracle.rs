//! Slow, independent, exact LP decision procedure used only for
//! cross-validation and test-data generation, plus a second primal
//! feasibility path through an auxiliary optimization with slack columns.
//!
//! The simplex here is a textbook dense two-phase method with Bland's rule
//! and exact rational pivots. It shares no code with the main solver; a bug
//! common to both would have to be a coincidence.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::certify::{solve, CaseTag, Outcome, SolveError};
use crate::model::Instance;
use crate::num::Rational;

/// Hard limit for [`simplex_solve`]; the oracle is quadratic-ish in memory
/// and meant for desk-scale cross-checks only.
pub const SIZE_GUARD_ROWS: usize = 8;
pub const SIZE_GUARD_COLS: usize = 16;

/// Same four-way classification the main solver produces, with the witness
/// vectors the simplex happens to construct along the way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleVerdict {
    Optimal { x: Vec<Rational>, y: Vec<Rational> },
    PrimalInfeasible { z: Vec<Rational>, y: Vec<Rational> },
    DualInfeasible { x: Vec<Rational>, r: Vec<Rational> },
    BothInfeasible { z: Vec<Rational>, r: Vec<Rational> },
}

impl OracleVerdict {
    pub fn case(&self) -> CaseTag {
        match self {
            OracleVerdict::Optimal { .. } => CaseTag::Optimal,
            OracleVerdict::PrimalInfeasible { .. } => CaseTag::PrimalInfeasible,
            OracleVerdict::DualInfeasible { .. } => CaseTag::DualInfeasible,
            OracleVerdict::BothInfeasible { .. } => CaseTag::BothInfeasible,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    SizeGuard { rows: usize, cols: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::SizeGuard { rows, cols } => write!(
                f,
                "instance {}x{} exceeds the oracle size guard ({}x{})",
                rows, cols, SIZE_GUARD_ROWS, SIZE_GUARD_COLS
            ),
        }
    }
}

impl std::error::Error for OracleError {}

/// Classifies a general equality-form LP `min c^T x, A x = b, x >= 0` into
/// the four duality cases by exact primal simplex. Not Leontief-restricted.
pub fn simplex_solve(inst: &Instance) -> Result<OracleVerdict, OracleError> {
    let (m, n) = (inst.rows(), inst.columns());
    if m > SIZE_GUARD_ROWS || n > SIZE_GUARD_COLS {
        return Err(OracleError::SizeGuard { rows: m, cols: n });
    }
    let a = dense_rows(inst);
    Ok(match lp_solve(&a, &inst.b, &inst.c) {
        LpResult::Optimal { x, y } => OracleVerdict::Optimal { x, y },
        LpResult::Unbounded { x, ray } => OracleVerdict::DualInfeasible { x, r: ray },
        LpResult::Infeasible { z } => {
            // The primal is infeasible; decide the dual side by testing
            // feasibility of y^T A <= c^T written as
            // A^T y+ - A^T y- + s = c with y+, y-, s >= 0.
            let mut aux = vec![vec![Rational::zero(); 2 * m + n]; n];
            for j in 0..n {
                for i in 0..m {
                    aux[j][i] = a[i][j].clone();
                    aux[j][m + i] = -&a[i][j];
                }
                aux[j][2 * m + j] = Rational::one();
            }
            let zero_costs = vec![Rational::zero(); 2 * m + n];
            match lp_solve(&aux, &inst.c, &zero_costs) {
                LpResult::Optimal { x: w, .. } => {
                    let y: Vec<Rational> =
                        (0..m).map(|i| &w[i] - &w[m + i]).collect();
                    OracleVerdict::PrimalInfeasible { z, y }
                }
                LpResult::Infeasible { z: v } => {
                    let r: Vec<Rational> = v.into_iter().map(|vi| -vi).collect();
                    OracleVerdict::BothInfeasible { z, r }
                }
                LpResult::Unbounded { .. } => {
                    unreachable!("a zero objective cannot be unbounded")
                }
            }
        }
    })
}

fn dense_rows(inst: &Instance) -> Vec<Vec<Rational>> {
    let mut a = vec![vec![Rational::zero(); inst.columns()]; inst.rows()];
    for j in 0..inst.columns() {
        for (i, v) in inst.column(j) {
            a[*i][j] = v.clone();
        }
    }
    a
}

enum LpResult {
    /// Optimal basic solution with its dual vector (`y^T A <= c^T`,
    /// `c^T x = y^T b`).
    Optimal { x: Vec<Rational>, y: Vec<Rational> },
    /// Feasible point and an improving ray (`A ray = 0`, `ray >= 0`,
    /// `c^T ray < 0`).
    Unbounded { x: Vec<Rational>, ray: Vec<Rational> },
    /// Farkas certificate (`z^T A <= 0`, `z^T b > 0`).
    Infeasible { z: Vec<Rational> },
}

/// Dense exact two-phase primal simplex with Bland's rule.
fn lp_solve(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> LpResult {
    let n = c.len();
    let mut rows: Vec<Vec<Rational>> = a.to_vec();
    let mut rhs: Vec<Rational> = b.to_vec();
    let mut flip: Vec<bool> = vec![false; rows.len()];
    for (i, row) in rows.iter_mut().enumerate() {
        if rhs[i].is_negative() {
            for v in row.iter_mut() {
                *v = -&*v;
            }
            rhs[i] = -&rhs[i];
            flip[i] = true;
        }
    }
    let m = rows.len();

    // Phase 1: artificials with identity columns, cost 1 each.
    let mut ext = rows.clone();
    for (i, row) in ext.iter_mut().enumerate() {
        for k in 0..m {
            row.push(if k == i { Rational::one() } else { Rational::zero() });
        }
    }
    let mut cost1 = vec![Rational::zero(); n];
    cost1.extend(std::iter::repeat_with(Rational::one).take(m));
    let mut basis: Vec<usize> = (n..n + m).collect();
    let phase1 = bland(&ext, &rhs, &cost1, &mut basis);
    let (x1, y1) = match phase1 {
        BlandResult::Optimal { x, y } => (x, y),
        BlandResult::Unbounded { .. } => unreachable!("phase 1 is bounded below by zero"),
    };
    let objective1: Rational = x1[n..].iter().sum();
    if objective1.is_positive() {
        let z = (0..m)
            .map(|i| if flip[i] { -&y1[i] } else { y1[i].clone() })
            .collect();
        return LpResult::Infeasible { z };
    }

    // Drive artificials out of the basis; rows that cannot pivot on any
    // original column are redundant and dropped.
    let mut keep: Vec<bool> = vec![true; m];
    for pos in 0..m {
        let art = basis[pos];
        if art < n {
            continue;
        }
        // positions are only overwritten in place, so a surviving artificial
        // still sits at its starting position and owns constraint row `pos`
        debug_assert_eq!(art, n + pos);
        let tableau_row = basis_row(&ext, &basis, pos);
        match (0..n).find(|j| !tableau_row[*j].is_zero()) {
            Some(j) => basis[pos] = j,
            // the artificial's own row is implied by the others: the dual
            // vector of its tableau row annihilates A with weight 1 there
            None => keep[pos] = false,
        }
    }
    let kept_rows: Vec<usize> = (0..m).filter(|&pos| keep[pos]).collect();
    let rows2: Vec<Vec<Rational>> = kept_rows.iter().map(|&i| rows[i].clone()).collect();
    let rhs2: Vec<Rational> = kept_rows.iter().map(|&i| rhs[i].clone()).collect();
    let mut basis2: Vec<usize> = kept_rows.iter().map(|&pos| basis[pos]).collect();
    debug_assert!(basis2.iter().all(|&j| j < n));

    // Phase 2 on the original columns.
    match bland(&rows2, &rhs2, c, &mut basis2) {
        BlandResult::Optimal { x, y } => {
            let mut y_full = vec![Rational::zero(); m];
            for (slot, value) in kept_rows.iter().zip(y) {
                y_full[*slot] = value;
            }
            for i in 0..m {
                if flip[i] {
                    y_full[i] = -&y_full[i];
                }
            }
            LpResult::Optimal { x, y: y_full }
        }
        BlandResult::Unbounded { x, ray } => LpResult::Unbounded { x, ray },
    }
}

enum BlandResult {
    Optimal { x: Vec<Rational>, y: Vec<Rational> },
    Unbounded { x: Vec<Rational>, ray: Vec<Rational> },
}

/// Primal simplex iterations from a feasible basis, entering the
/// lowest-index column with negative reduced cost and leaving on the
/// lowest-index ratio tie. Bland's rule cannot cycle, so the iteration cap
/// only guards against implementation bugs.
fn bland(
    a: &[Vec<Rational>],
    b: &[Rational],
    c: &[Rational],
    basis: &mut Vec<usize>,
) -> BlandResult {
    let m = a.len();
    let n = c.len();
    assert_eq!(basis.len(), m);
    let columns = |j: usize| -> Vec<Rational> { (0..m).map(|i| a[i][j].clone()).collect() };

    for _iteration in 0..100_000 {
        let basis_matrix: Vec<Vec<Rational>> = basis.iter().map(|&j| columns(j)).collect();
        // basis_matrix[k] is the k-th basic column; solve for the basic
        // values and the duals.
        let x_basic = solve_columns(&basis_matrix, b);
        debug_assert!(x_basic.iter().all(|v| !v.is_negative()), "basis must stay feasible");
        let c_basic: Vec<Rational> = basis.iter().map(|&j| c[j].clone()).collect();
        let y = solve_rows(&basis_matrix, &c_basic);

        let entering = (0..n).find(|&j| {
            if basis.contains(&j) {
                return false;
            }
            let reduced = &c[j] - &dot(&y, &columns(j));
            reduced.is_negative()
        });
        let entering = match entering {
            None => {
                let mut x = vec![Rational::zero(); n];
                for (&j, value) in basis.iter().zip(x_basic) {
                    x[j] = value;
                }
                return BlandResult::Optimal { x, y };
            }
            Some(j) => j,
        };

        let direction = solve_columns(&basis_matrix, &columns(entering));
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if !direction[i].is_positive() {
                continue;
            }
            let ratio = &x_basic[i] / &direction[i];
            let better = match &leave {
                None => true,
                Some((pos, best)) => {
                    ratio < *best || (ratio == *best && basis[i] < basis[*pos])
                }
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        match leave {
            None => {
                let mut x = vec![Rational::zero(); n];
                let mut ray = vec![Rational::zero(); n];
                ray[entering] = Rational::one();
                for (i, &j) in basis.iter().enumerate() {
                    x[j] = x_basic[i].clone();
                    ray[j] = -&direction[i];
                }
                return BlandResult::Unbounded { x, ray };
            }
            Some((pos, _)) => basis[pos] = entering,
        }
    }
    panic!("simplex exceeded the iteration cap; Bland's rule should terminate");
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Row `pos` of `B^{-1} A`: solve `B^T w = e_pos`, then take `w^T A_j`.
fn basis_row(a: &[Vec<Rational>], basis: &[usize], pos: usize) -> Vec<Rational> {
    let m = a.len();
    let basis_matrix: Vec<Vec<Rational>> =
        basis.iter().map(|&j| (0..m).map(|i| a[i][j].clone()).collect()).collect();
    let mut unit = vec![Rational::zero(); m];
    unit[pos] = Rational::one();
    let w = solve_rows(&basis_matrix, &unit);
    (0..a[0].len()).map(|j| (0..m).map(|i| &w[i] * &a[i][j]).sum()).collect()
}

/// Solves `B x = rhs` where `cols[k]` is the k-th column of `B`.
fn solve_columns(cols: &[Vec<Rational>], rhs: &[Rational]) -> Vec<Rational> {
    let m = cols.len();
    let matrix: Vec<Vec<Rational>> =
        (0..m).map(|i| (0..m).map(|k| cols[k][i].clone()).collect()).collect();
    gauss(matrix, rhs.to_vec())
}

/// Solves `B^T x = rhs` where `cols[k]` is the k-th column of `B`.
fn solve_rows(cols: &[Vec<Rational>], rhs: &[Rational]) -> Vec<Rational> {
    gauss(cols.to_vec(), rhs.to_vec())
}

/// Exact Gaussian elimination; panics on a singular matrix, which would mean
/// a broken basis invariant.
fn gauss(mut a: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Vec<Rational> {
    let m = a.len();
    let mut order: Vec<usize> = (0..m).collect();
    for col in 0..m {
        let pivot = (col..m)
            .find(|&r| !a[order[r]][col].is_zero())
            .expect("basis matrix must be nonsingular");
        order.swap(col, pivot);
        let prow = order[col];
        let pivot_value = a[prow][col].clone();
        for r in col + 1..m {
            let row = order[r];
            if a[row][col].is_zero() {
                continue;
            }
            let factor = &a[row][col] / &pivot_value;
            for k in col..m {
                a[row][k] = &a[row][k] - &(&factor * &a[prow][k]);
            }
            rhs[row] = &rhs[row] - &(&factor * &rhs[prow]);
        }
    }
    let mut x = vec![Rational::zero(); m];
    for col in (0..m).rev() {
        let row = order[col];
        let mut acc = rhs[row].clone();
        for k in col + 1..m {
            acc -= &a[row][k] * &x[k];
        }
        x[col] = acc / &a[row][col];
    }
    x
}

/// Result of the auxiliary-LP feasibility test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoPhaseResult {
    Feasible { x: Vec<Rational> },
    Infeasible { z: Vec<Rational> },
}

/// The auxiliary instance `min sum(s) + sum(t), A x + s - t = b`: the `s`
/// columns are unit heads without tails, the `t` columns unit tails without
/// heads, so the matrix stays Leontief and contributes no new cycles.
pub fn two_phase_auxiliary(inst: &Instance) -> Instance {
    let (m, n) = (inst.rows(), inst.columns());
    let mut entries = inst.triplets();
    let mut c = inst.c.iter().map(|_| Rational::zero()).collect::<Vec<_>>();
    for i in 0..m {
        entries.push((i, n + i, Rational::one()));
        entries.push((i, n + m + i, -Rational::one()));
    }
    c.extend(std::iter::repeat_with(Rational::one).take(2 * m));
    Instance::from_triplets(m, n + 2 * m, &entries, inst.b.clone(), c)
        .expect("auxiliary instance is well formed")
}

/// Decides primal feasibility through the auxiliary optimization: the
/// original system is feasible iff the auxiliary optimum is zero, in which
/// case the `x` part of the auxiliary solution solves it; otherwise the
/// auxiliary dual solution is a Farkas certificate (`y^T A <= 0` from the
/// `x` columns, `b^T y` equal to the positive optimum).
pub fn two_phase_primal_feasibility(inst: &Instance) -> Result<TwoPhaseResult, SolveError> {
    let aux = two_phase_auxiliary(inst);
    let outcome = solve(&aux)?;
    let (x_aux, y_aux) = match outcome {
        Outcome::Optimal { x, y } => (x, y),
        other => {
            return Err(SolveError::Internal(format!(
                "auxiliary problem must have an optimum, got {}",
                other.case()
            )))
        }
    };
    let optimum = aux.objective(&x_aux);
    if optimum.is_zero() {
        Ok(TwoPhaseResult::Feasible { x: x_aux[..inst.columns()].to_vec() })
    } else {
        Ok(TwoPhaseResult::Infeasible { z: y_aux })
    }
}
