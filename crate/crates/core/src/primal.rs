//! Primal-side certifying machinery: feasibility test, solution retrieval,
//! and Farkas certificate from the M-coefficients of the dual bounds.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::dual::{dual_feasibility, DualTrace};
use crate::model::Hypergraph;
use crate::num::{MAffine, Rational};

/// The primal system `A x = b, x >= 0` is feasible iff `b` vanishes on every
/// vertex whose dual bound still carries `M` after the iteration.
pub fn primal_feasibility(b: &[Rational], nontriv_final: &[bool]) -> bool {
    b.iter()
        .zip(nontriv_final)
        .all(|(bv, nontriv)| *nontriv || bv.is_zero())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimalStateError {
    /// `primal_solution` was called although `b` is positive on a vertex the
    /// iteration never resolved; the primal is infeasible.
    Infeasible { vertex: usize },
}

impl fmt::Display for PrimalStateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimalStateError::Infeasible { vertex } => write!(
                f,
                "b({}) > 0 on an unresolved vertex; the primal system is infeasible",
                vertex + 1
            ),
        }
    }
}

impl std::error::Error for PrimalStateError {}

/// Retrieves a primal solution `x >= 0` with `A x = b` by distributing the
/// demand `b` backwards through the recorded updates.
///
/// Nontrivial vertices are settled in order of decreasing `q` (ties to the
/// lowest vertex index): the arc that last resolved the vertex absorbs its
/// accumulated demand, which in turn pushes `gain * x` onto each tail. When
/// the trace proves dual infeasibility its bookkeeping may stop early, so
/// the iteration is re-run with all lengths zero; which vertices are
/// nontrivial depends only on the matrix, so the original flags carry over.
pub fn primal_solution(
    h: &Hypergraph,
    b: &[Rational],
    trace: &DualTrace,
) -> Result<Vec<Rational>, PrimalStateError> {
    assert_eq!(b.len(), h.vertex_count);
    let nontriv = trace.final_nontriv().to_vec();
    if let Some(vertex) = (0..h.vertex_count).find(|v| !nontriv[*v] && !b[*v].is_zero()) {
        return Err(PrimalStateError::Infeasible { vertex });
    }

    let rerun;
    let schedule: &DualTrace = if trace.value {
        trace
    } else {
        rerun = dual_feasibility(&h.with_zero_lengths());
        debug_assert_eq!(rerun.final_nontriv(), &nontriv[..]);
        &rerun
    };

    let mut x = vec![Rational::zero(); h.arcs.len()];
    let mut demand = b.to_vec();
    let mut remaining: Vec<usize> = (0..h.vertex_count).filter(|v| nontriv[*v]).collect();
    // decreasing q, ties to the lowest vertex index
    remaining.sort_by(|a, b| schedule.q[*b].cmp(&schedule.q[*a]).then(a.cmp(b)));

    for v in remaining {
        let k = schedule.q[v];
        let e = schedule.p[k][v].expect("a nontrivial vertex records its resolving arc");
        x[e] = demand[v].clone();
        for (u, gain) in &h.arcs[e].tails {
            let push = gain * &x[e];
            demand[*u] += push;
        }
    }
    Ok(x)
}

/// Reads a Farkas certificate of primal infeasibility off the final bounds:
/// the M-coefficients on unresolved vertices, zero elsewhere. Gainfreeness
/// guarantees `z^T A <= 0`, and any positive demand on an unresolved vertex
/// makes `z^T b > 0`.
pub fn farkas_primal(y_final: &[MAffine], nontriv_final: &[bool]) -> Vec<Rational> {
    y_final
        .iter()
        .zip(nontriv_final)
        .map(|(y, nontriv)| {
            if *nontriv {
                Rational::zero()
            } else {
                debug_assert!(y.alpha.is_positive());
                y.alpha.clone()
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::model::{build_hypergraph, normalize, Instance};
    use crate::num::{int, rat};

    fn setup(inst: &Instance) -> (Hypergraph, DualTrace) {
        let (norm, _) = normalize(inst);
        let h = build_hypergraph(&norm);
        let trace = dual_feasibility(&h);
        (h, trace)
    }

    #[test]
    fn feasibility_needs_b_zero_exactly_on_unresolved_vertices() {
        let (_, trace) = setup(&gain_cycle_infeasible_instance([0; 3]));
        // every vertex keeps M, so only b = 0 is feasible
        assert!(primal_feasibility(&[int(0), int(0), int(0)], trace.final_nontriv()));
        assert!(!primal_feasibility(&[int(1), int(0), int(0)], trace.final_nontriv()));

        let (_, trace) = setup(&empty_head_instance([1, 1, 1]));
        // every vertex resolves, so any nonnegative b is feasible
        assert!(primal_feasibility(&[int(5), int(0), int(7)], trace.final_nontriv()));
    }

    #[test]
    fn retrieval_matches_closed_form_on_acyclic_instance() {
        // x = (0, b1, 2 b1 + b2, 5 b1 + 2 b2 + b3), checked at unit demands
        // and at b = (1, 1, 1)
        let cases = [
            ([1, 0, 0], [0, 1, 2, 5]),
            ([0, 1, 0], [0, 0, 1, 2]),
            ([0, 0, 1], [0, 0, 0, 1]),
            ([1, 1, 1], [0, 1, 3, 8]),
        ];
        for (b, expected) in cases {
            let inst = empty_head_instance(b);
            let (h, trace) = setup(&inst);
            let x = primal_solution(&h, &inst.b, &trace).unwrap();
            assert_eq!(x, expected.map(int).to_vec(), "b = {:?}", b);
            assert_eq!(inst.mul_x(&x), inst.b);
        }
    }

    #[test]
    fn retrieval_uses_zero_length_rerun_when_dual_infeasible() {
        let inst = unit_horn_infeasible_instance([3, 5, 7, 11]);
        let (h, trace) = setup(&inst);
        assert!(!trace.value);
        let x = primal_solution(&h, &inst.b, &trace).unwrap();
        assert_eq!(x, vec![int(0), int(0), int(0), int(3), int(5), int(7), int(11)]);
        assert_eq!(inst.mul_x(&x), inst.b);
    }

    #[test]
    fn zero_demand_retrieves_zero() {
        let inst = empty_head_instance([0, 0, 0]);
        let (h, trace) = setup(&inst);
        let x = primal_solution(&h, &inst.b, &trace).unwrap();
        assert!(x.iter().all(|v| v.is_zero()));
    }

    #[test]
    fn retrieval_rejects_infeasible_demand() {
        let inst = gain_cycle_infeasible_instance([1, 0, 0]);
        let (h, trace) = setup(&inst);
        assert!(matches!(
            primal_solution(&h, &inst.b, &trace),
            Err(PrimalStateError::Infeasible { vertex: 0 })
        ));
    }

    #[test]
    fn farkas_reads_m_coefficients() {
        for inst in [
            gain_cycle_infeasible_instance([1, 1, 1]),
            gain_cycle_feasible_instance([1, 1, 1]),
        ] {
            let (_, trace) = setup(&inst);
            let z = farkas_primal(trace.final_y(), trace.final_nontriv());
            assert_eq!(z, vec![int(1), rat(1, 2), rat(1, 6)]);
            assert_eq!(inst.mul_yt(&z), vec![int(0); 3]);
        }
    }

    #[test]
    fn farkas_on_single_unreachable_row() {
        let inst = Instance::dense(&[Vec::new()], vec![int(1)], vec![]);
        let (h, trace) = setup(&inst);
        let z = farkas_primal(trace.final_y(), trace.final_nontriv());
        assert_eq!(z, vec![int(1)]);
        assert!(matches!(
            primal_solution(&h, &inst.b, &trace),
            Err(PrimalStateError::Infeasible { vertex: 0 })
        ));
    }

    #[test]
    fn farkas_is_zero_when_everything_resolves() {
        let (_, trace) = setup(&empty_head_instance([1, 1, 1]));
        let z = farkas_primal(trace.final_y(), trace.final_nontriv());
        assert!(z.iter().all(|v| v.is_zero()));
    }
}
