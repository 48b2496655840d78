//! Dual-side certifying machinery: value iteration over symbolic upper
//! bounds, feasible-solution extraction, and Farkas-certificate extraction
//! by cycle traceback.
//!
//! The dual of the LP is `maximize y^T b subject to y^T A <= c^T`. Written on
//! the hypergraph, the constraint of arc `E` reads
//! `y(h(E)) <= l(E) + sum_{u in T(E)} gain(E,u) * y(u)` (with `y(empty) = 0`
//! for arcs without a head, giving `0 <= l(E) + ...`). [`dual_feasibility`]
//! starts every vertex at the symbol `M` and lowers these upper bounds for
//! `m` rounds; on gainfree inputs the bounds are then either consistent (the
//! dual is feasible, [`dual_solution`] turns the bounds into a concrete
//! solution) or a specific violation remains from which [`farkas_dual`]
//! extracts a vector `r >= 0` with `A r = 0` and `c^T r < 0`.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::model::Hypergraph;
use crate::num::{MAffine, Rational};

/// Full history of one value-iteration run.
///
/// Indices run `k = 0..=rounds` (with `rounds` equal to the vertex count) and
/// `v` over vertices. The per-round certificate vectors `r[k][v]` are shared
/// between rounds when unchanged. The traceback in [`farkas_dual`]
/// dereferences arbitrary past rounds, which is why the whole history is
/// kept.
#[derive(Debug, Clone)]
pub struct DualTrace {
    pub rounds: usize,
    /// `y[k][v]`: upper bound on dual variable `v` after round `k`.
    pub y: Vec<Vec<MAffine>>,
    /// `r[k][v]`: how `y[k][v]` was derived from the constraints; a
    /// nonnegative column multiplier vector of length `n`.
    pub r: Vec<Vec<Arc<Vec<Rational>>>>,
    /// `change[k][v]`: whether round `k` strictly lowered `y(v)`.
    pub change: Vec<Vec<bool>>,
    /// `p[k][v]`: the arc that lowered `y(v)` in round `k`, if any.
    pub p: Vec<Vec<Option<usize>>>,
    /// `nontriv[k][v]`: whether `y[k][v]` is free of `M`.
    pub nontriv: Vec<Vec<bool>>,
    /// `q[v]`: the last round in which `v` was lowered through an arc whose
    /// tails were all nontrivial (0 if never).
    pub q: Vec<usize>,
    /// False when some bound is still improvable after all rounds or an
    /// empty-head constraint is violated; the dual is infeasible then.
    pub value: bool,
}

impl DualTrace {
    pub fn final_y(&self) -> &[MAffine] {
        &self.y[self.rounds]
    }

    pub fn final_nontriv(&self) -> &[bool] {
        &self.nontriv[self.rounds]
    }

    pub fn final_r(&self, v: usize) -> &[Rational] {
        &self.r[self.rounds][v]
    }

    /// Checks every invariant the iteration maintains, against the
    /// hypergraph it was computed from. Used by tests and debug builds.
    ///
    /// Per round `k` and vertex `v`:
    /// - `y[k][v] <= y[k-1][v]`, strictly iff `change[k][v]`;
    /// - `y[k][v]` contains `M` iff `nontriv[k][v]` is false, and the
    ///   M-coefficient is never negative;
    /// - `r[k][v] >= 0`, `A r[k][v] <= e_v`, `c^T r[k][v]` equals the
    ///   constant term of `y[k][v]`, and `A r[k][v] = e_v` when nontrivial;
    /// - once two consecutive nontrivial vertex sets coincide they stay
    ///   fixed for all later rounds.
    pub fn check_invariants(&self, h: &Hypergraph) -> Result<(), String> {
        let m = h.vertex_count;
        for k in 1..=self.rounds {
            for v in 0..m {
                let cur = &self.y[k][v];
                let prev = &self.y[k - 1][v];
                if cur > prev {
                    return Err(format!("y[{k}][{v}] increased"));
                }
                if (cur < prev) != self.change[k][v] {
                    return Err(format!("change[{k}][{v}] does not match y strictness"));
                }
                if cur.alpha.is_negative() {
                    return Err(format!("y[{k}][{v}] has a negative M-coefficient"));
                }
                if cur.is_constant() != self.nontriv[k][v] {
                    return Err(format!("nontriv[{k}][{v}] does not match M-freeness"));
                }

                let r = &self.r[k][v];
                if r.iter().any(|x| x.is_negative()) {
                    return Err(format!("r[{k}][{v}] has a negative entry"));
                }
                let ar = apply_columns(h, r);
                for (i, value) in ar.iter().enumerate() {
                    let bound = if i == v { Rational::one() } else { Rational::zero() };
                    if *value > bound {
                        return Err(format!("A r[{k}][{v}] exceeds e_v at row {i}"));
                    }
                    if self.nontriv[k][v] && *value != bound {
                        return Err(format!("A r[{k}][{v}] != e_v for nontrivial vertex"));
                    }
                }
                let cost: Rational = h
                    .arcs
                    .iter()
                    .zip(r.iter())
                    .map(|(arc, rj)| &arc.length * rj)
                    .sum();
                if cost != cur.beta {
                    return Err(format!("c^T r[{k}][{v}] differs from the constant term"));
                }
            }
        }
        for k in 0..self.rounds {
            if self.nontriv[k] == self.nontriv[k + 1] {
                for later in k + 1..=self.rounds {
                    if self.nontriv[later] != self.nontriv[k] {
                        return Err(format!(
                            "nontrivial set changed at round {later} after stabilizing at {k}"
                        ));
                    }
                }
                break;
            }
        }
        Ok(())
    }
}

/// `A r` for the normalized matrix the hypergraph encodes.
fn apply_columns(h: &Hypergraph, r: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); h.vertex_count];
    for (arc, rj) in h.arcs.iter().zip(r) {
        if rj.is_zero() {
            continue;
        }
        if let Some(head) = arc.head {
            out[head] += rj;
        }
        for (u, gain) in &arc.tails {
            out[*u] -= gain * rj;
        }
    }
    out
}

/// `l(E) + sum_{u in T(E)} gain(E,u) * y(u)` for one arc.
fn arc_candidate(h: &Hypergraph, arc: usize, y: &[MAffine]) -> MAffine {
    let arc = &h.arcs[arc];
    let mut value = MAffine::constant(arc.length.clone());
    for (u, gain) in &arc.tails {
        value = &value + &y[*u].scale(gain);
    }
    value
}

/// Runs `m` rounds of value iteration on the hypergraph and records the full
/// update history.
///
/// Each round is Jacobi: every candidate minimum is computed against the
/// previous round's bounds. A vertex with no incoming arc keeps `M` forever
/// (the minimum over an empty set imposes no bound). After the rounds,
/// `value` is false iff some vertex is still improvable against the final
/// bounds or some empty-head arc's constraint is violated.
pub fn dual_feasibility(h: &Hypergraph) -> DualTrace {
    let m = h.vertex_count;
    let incoming = h.incoming();
    let zero_r = Arc::new(vec![Rational::zero(); h.arcs.len()]);

    let mut trace = DualTrace {
        rounds: m,
        y: vec![vec![MAffine::symbol_m(); m]],
        r: vec![vec![zero_r; m]],
        change: vec![vec![false; m]],
        p: vec![vec![None; m]],
        nontriv: vec![vec![false; m]],
        q: vec![0; m],
        value: true,
    };

    for k in 1..=m {
        let prev_y = &trace.y[k - 1];
        let mut y = prev_y.clone();
        let mut r = trace.r[k - 1].clone();
        let mut change = vec![false; m];
        let mut p = vec![None; m];
        let mut nontriv = trace.nontriv[k - 1].clone();

        for v in 0..m {
            // ties in the candidate minimum resolve to the lowest arc index
            let best = incoming[v]
                .iter()
                .map(|&e| (arc_candidate(h, e, prev_y), e))
                .min_by(|(a, ea), (b, eb)| a.cmp(b).then(ea.cmp(eb)));
            let (candidate, e) = match best {
                Some(found) => found,
                None => continue,
            };
            if prev_y[v] <= candidate {
                continue;
            }
            let arc = &h.arcs[e];
            let mut rv: Vec<Rational> = vec![Rational::zero(); h.arcs.len()];
            rv[e] = Rational::one();
            for (u, gain) in &arc.tails {
                for (slot, ru) in rv.iter_mut().zip(trace.r[k - 1][*u].iter()) {
                    *slot += gain * ru;
                }
            }
            y[v] = candidate;
            r[v] = Arc::new(rv);
            change[v] = true;
            p[v] = Some(e);
            if arc.tails.iter().all(|(u, _)| trace.nontriv[k - 1][*u]) {
                nontriv[v] = true;
                trace.q[v] = k;
            }
        }

        trace.y.push(y);
        trace.r.push(r);
        trace.change.push(change);
        trace.p.push(p);
        trace.nontriv.push(nontriv);
    }

    let final_y = &trace.y[m];
    let improvable = (0..m).any(|v| {
        incoming[v]
            .iter()
            .any(|&e| final_y[v] > arc_candidate(h, e, final_y))
    });
    let empty_head_violated = h.arcs.iter().enumerate().any(|(e, arc)| {
        arc.head.is_none() && arc_candidate(h, e, final_y) < MAffine::zero()
    });
    trace.value = !(improvable || empty_head_violated);

    #[cfg(debug_assertions)]
    trace
        .check_invariants(h)
        .expect("value iteration must maintain its invariants");

    trace
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DualStateError {
    /// `farkas_dual` was called on a trace that proves dual feasibility.
    TraceFeasible,
}

impl fmt::Display for DualStateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualStateError::TraceFeasible => {
                write!(f, "the trace proves dual feasibility; there is no Farkas certificate")
            }
        }
    }
}

impl std::error::Error for DualStateError {}

/// Turns final bounds into a concrete dual solution.
///
/// For every arc the slack `y(h(E)) - l(E) - sum gain * y(u)` is an M-affine
/// value `alpha(E) M + beta(E)`; choosing
/// `lambda = max { beta(E) / -alpha(E) : alpha(E) < 0 }` (or 0 when no
/// `alpha(E)` is negative) and evaluating the bounds at `M = lambda` yields a
/// vector satisfying `y^T A <= c^T`, provided the bounds came from a run
/// that established feasibility (every slack is then nonpositive, so every
/// `alpha(E) <= 0` and larger `lambda` only loosens the slacks). When all
/// gains and lengths are integral, `lambda` is rounded up to the next
/// integer, which makes the returned vector integral and keeps every
/// constraint satisfied.
pub fn dual_solution(h: &Hypergraph, y_final: &[MAffine]) -> Vec<Rational> {
    assert_eq!(y_final.len(), h.vertex_count);
    let mut lambda: Option<Rational> = None;
    for (e, arc) in h.arcs.iter().enumerate() {
        let head_value = match arc.head {
            Some(v) => y_final[v].clone(),
            None => MAffine::zero(),
        };
        let slack = &head_value - &arc_candidate(h, e, y_final);
        if slack.alpha.is_negative() {
            let ratio = &slack.beta / -&slack.alpha;
            if lambda.as_ref().is_none_or(|cur| ratio > *cur) {
                lambda = Some(ratio);
            }
        }
    }
    let mut lambda = lambda.unwrap_or_else(Rational::zero);
    let integral_data = h
        .arcs
        .iter()
        .all(|arc| arc.length.is_integer() && arc.tails.iter().all(|(_, g)| g.is_integer()));
    if integral_data {
        lambda = lambda.ceil();
    }
    y_final.iter().map(|y| y.eval(&lambda)).collect()
}

/// Extracts a Farkas certificate of dual infeasibility from a failed run.
///
/// If some vertex is still improvable against the final bounds, the walk
/// back through the recorded updates must revisit a vertex within `m + 1`
/// steps; the difference of the two certificate vectors at the revisited
/// vertex is the certificate. Otherwise a violated empty-head arc yields it
/// directly. Ties (which vertex, which arc, which tail) always resolve to
/// the lowest index.
pub fn farkas_dual(h: &Hypergraph, trace: &DualTrace) -> Result<Vec<Rational>, DualStateError> {
    if trace.value {
        return Err(DualStateError::TraceFeasible);
    }
    let m = h.vertex_count;
    let incoming = h.incoming();
    let final_y = trace.final_y();

    let improvable = (0..m).find_map(|v| {
        incoming[v]
            .iter()
            .map(|&e| (arc_candidate(h, e, final_y), e))
            .min_by(|(a, ea), (b, eb)| a.cmp(b).then(ea.cmp(eb)))
            .filter(|(best, _)| final_y[v] > *best)
            .map(|(_, e)| (v, e))
    });

    if let Some((v, e)) = improvable {
        // Cycle branch. The walk is indexed by rounds k = m+1 down to the
        // break: w[k] was lowered in round k through arc[k], and the arc's
        // chosen tail was lowered one round earlier.
        let r_start = combine(h, e, &trace.r[m]);
        let mut walk: Vec<(usize, usize)> = vec![(m + 1, v)]; // (round, vertex)
        let mut current_arc = e;
        let mut k = m + 1;
        loop {
            assert!(k >= 2, "walk exhausted the recorded rounds without closing a cycle");
            let tail = h.arcs[current_arc]
                .tails
                .iter()
                .map(|(u, _)| *u)
                .find(|u| trace.change[k - 1][*u])
                .expect("an improving arc has a tail lowered in the previous round");
            if let Some(&(t, _)) = walk.iter().find(|(_, w)| *w == tail) {
                let s = k - 1;
                let r_t: &[Rational] = if t == m + 1 { &r_start } else { trace.r[t][tail].as_ref() };
                let r_s = trace.r[s][tail].as_ref();
                let certificate: Vec<Rational> =
                    r_t.iter().zip(r_s).map(|(a, b)| a - b).collect();
                return Ok(certificate);
            }
            walk.push((k - 1, tail));
            current_arc = trace.p[k - 1][tail].expect("a lowered vertex records its arc");
            k -= 1;
        }
    }

    // Empty-head branch: some arc without a head has a violated constraint.
    // Its tails are all nontrivial, otherwise the candidate would contain M
    // with a positive coefficient and could not be negative.
    let (e, arc) = h
        .arcs
        .iter()
        .enumerate()
        .find(|(e, arc)| arc.head.is_none() && arc_candidate(h, *e, final_y) < MAffine::zero())
        .expect("a failed trace without improvable vertex has a violated empty-head arc");
    assert!(
        arc.tails.iter().all(|(u, _)| trace.final_nontriv()[*u]),
        "tails of a violated empty-head arc must be nontrivial"
    );
    Ok(combine(h, e, &trace.r[m]))
}

/// `e_E + sum_{u in T(E)} gain(E,u) * r[u]`.
fn combine(h: &Hypergraph, e: usize, r: &[Arc<Vec<Rational>>]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); h.arcs.len()];
    out[e] = Rational::one();
    for (u, gain) in &h.arcs[e].tails {
        for (slot, ru) in out.iter_mut().zip(r[*u].iter()) {
            *slot += gain * ru;
        }
    }
    out
}
