//! Problem instances, their hypergraph representation, normalization to unit
//! positive entries, validation, and the gainfreeness check.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::certify::Outcome;
use crate::num::Rational;

/// An LP instance `minimize c^T x subject to A x = b, x >= 0`.
///
/// `A` is stored column-wise as sorted `(row, value)` pairs; columns map to
/// hyperarcs and rows to vertices of the associated hypergraph. The struct
/// itself accepts arbitrary data; [`validate`] checks the Leontief
/// substitution system invariants (at most one positive entry per column,
/// `b >= 0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    m: usize,
    n: usize,
    cols: Vec<Vec<(usize, Rational)>>,
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceError {
    DimensionMismatch { what: &'static str, expected: usize, found: usize },
    EntryOutOfRange { row: usize, col: usize },
    DuplicateEntry { row: usize, col: usize },
}

impl fmt::Display for InstanceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceError::DimensionMismatch { what, expected, found } => {
                write!(f, "{} has length {}, expected {}", what, found, expected)
            }
            InstanceError::EntryOutOfRange { row, col } => {
                write!(f, "entry ({}, {}) outside the matrix", row + 1, col + 1)
            }
            InstanceError::DuplicateEntry { row, col } => {
                write!(f, "duplicate entry at ({}, {})", row + 1, col + 1)
            }
        }
    }
}

impl std::error::Error for InstanceError {}

impl Instance {
    /// Builds an instance from 0-based `(row, col, value)` triplets.
    /// Zero-valued triplets are dropped; duplicates are an error.
    pub fn from_triplets(
        m: usize,
        n: usize,
        entries: &[(usize, usize, Rational)],
        b: Vec<Rational>,
        c: Vec<Rational>,
    ) -> Result<Instance, InstanceError> {
        if b.len() != m {
            return Err(InstanceError::DimensionMismatch { what: "b", expected: m, found: b.len() });
        }
        if c.len() != n {
            return Err(InstanceError::DimensionMismatch { what: "c", expected: n, found: c.len() });
        }
        let mut cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); n];
        let mut seen = std::collections::HashSet::new();
        for (i, j, v) in entries {
            if *i >= m || *j >= n {
                return Err(InstanceError::EntryOutOfRange { row: *i, col: *j });
            }
            if !seen.insert((*i, *j)) {
                return Err(InstanceError::DuplicateEntry { row: *i, col: *j });
            }
            if !v.is_zero() {
                cols[*j].push((*i, v.clone()));
            }
        }
        for col in &mut cols {
            col.sort_by_key(|(row, _)| *row);
        }
        Ok(Instance { m, n, cols, b, c })
    }

    /// Convenience constructor from dense rows of integer pairs is not
    /// provided; tests build instances from triplets or via [`dense`].
    pub fn dense(rows: &[Vec<Rational>], b: Vec<Rational>, c: Vec<Rational>) -> Instance {
        let m = rows.len();
        let n = rows.first().map_or(c.len(), |r| r.len());
        let mut entries = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "ragged dense matrix");
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    entries.push((i, j, v.clone()));
                }
            }
        }
        Instance::from_triplets(m, n, &entries, b, c).expect("dense matrix is well formed")
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn columns(&self) -> usize {
        self.n
    }

    pub fn column(&self, j: usize) -> &[(usize, Rational)] {
        &self.cols[j]
    }

    /// All nonzero entries as `(row, col, value)`, sorted by `(row, col)`.
    pub fn triplets(&self) -> Vec<(usize, usize, Rational)> {
        let mut out = Vec::new();
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                out.push((*i, j, v.clone()));
            }
        }
        out.sort_by_key(|(i, j, _)| (*i, *j));
        out
    }

    /// `A x`, exact.
    pub fn mul_x(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.n);
        let mut out = vec![Rational::zero(); self.m];
        for (j, col) in self.cols.iter().enumerate() {
            if x[j].is_zero() {
                continue;
            }
            for (i, v) in col {
                out[*i] += v * &x[j];
            }
        }
        out
    }

    /// `y^T A`, exact.
    pub fn mul_yt(&self, y: &[Rational]) -> Vec<Rational> {
        assert_eq!(y.len(), self.m);
        let mut out = vec![Rational::zero(); self.n];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                out[j] += v * &y[*i];
            }
        }
        out
    }

    /// `c^T x`, exact.
    pub fn objective(&self, x: &[Rational]) -> Rational {
        assert_eq!(x.len(), self.n);
        self.c.iter().zip(x).map(|(cj, xj)| cj * xj).sum()
    }
}

/// A violated Leontief substitution system invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Some column carries more than one strictly positive entry.
    MultiplePositiveEntries { col: usize, rows: Vec<usize> },
    /// Some right-hand side entry is negative.
    NegativeB { row: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MultiplePositiveEntries { col, rows } => write!(
                f,
                "column {} has {} positive entries (rows {:?}); at most one is allowed",
                col + 1,
                rows.len(),
                rows.iter().map(|r| r + 1).collect::<Vec<_>>()
            ),
            Violation::NegativeB { row } => {
                write!(f, "b is not nonnegative at row {}", row + 1)
            }
        }
    }
}

/// Reports every violated instance invariant; an empty list means the
/// instance is a Leontief substitution system.
pub fn validate(inst: &Instance) -> Vec<Violation> {
    let mut out = Vec::new();
    for j in 0..inst.columns() {
        let rows: Vec<usize> = inst
            .column(j)
            .iter()
            .filter(|(_, v)| v.is_positive())
            .map(|(i, _)| *i)
            .collect();
        if rows.len() > 1 {
            out.push(Violation::MultiplePositiveEntries { col: j, rows });
        }
    }
    for (i, bi) in inst.b.iter().enumerate() {
        if bi.is_negative() {
            out.push(Violation::NegativeB { row: i });
        }
    }
    out
}

/// Per-column scale factors recorded by [`normalize`]: `a_j` is the positive
/// entry of column `j` in the original instance, or 1 if the column has none.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalingRecord(pub Vec<Rational>);

impl ScalingRecord {
    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|a| a.is_one())
    }
}

/// Rescales every column so that its positive entry (if any) becomes 1,
/// dividing the column and its cost by the recorded factor. `b` is unchanged.
pub fn normalize(inst: &Instance) -> (Instance, ScalingRecord) {
    let mut cols = Vec::with_capacity(inst.columns());
    let mut c = Vec::with_capacity(inst.columns());
    let mut scales = Vec::with_capacity(inst.columns());
    for j in 0..inst.columns() {
        let scale = inst
            .column(j)
            .iter()
            .find(|(_, v)| v.is_positive())
            .map_or_else(Rational::one, |(_, v)| v.clone());
        let col = inst
            .column(j)
            .iter()
            .map(|(i, v)| (*i, v / &scale))
            .collect();
        cols.push(col);
        c.push(&inst.c[j] / &scale);
        scales.push(scale);
    }
    let normalized = Instance {
        m: inst.rows(),
        n: inst.columns(),
        cols,
        b: inst.b.clone(),
        c,
    };
    (normalized, ScalingRecord(scales))
}

/// Maps an outcome computed on the normalized twin back to the original
/// instance: primal vectors and Farkas-dual vectors pick up the column
/// scales (`x_j = x'_j / a_j`), dual vectors and Farkas-primal vectors pass
/// through unchanged.
pub fn denormalize_certificates(scaling: &ScalingRecord, outcome: Outcome) -> Outcome {
    let unscale = |v: Vec<Rational>| -> Vec<Rational> {
        v.into_iter()
            .zip(&scaling.0)
            .map(|(value, a)| value / a)
            .collect()
    };
    match outcome {
        Outcome::Optimal { x, y } => Outcome::Optimal { x: unscale(x), y },
        Outcome::PrimalInfeasible { z, y } => Outcome::PrimalInfeasible { z, y },
        Outcome::DualInfeasible { x, r } => Outcome::DualInfeasible { x: unscale(x), r: unscale(r) },
        Outcome::BothInfeasible { z, r } => Outcome::BothInfeasible { z, r: unscale(r) },
    }
}

/// One hyperarc: at most one head vertex, tail vertices with strictly
/// positive gains, and a length (the column's cost).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperarc {
    pub head: Option<usize>,
    pub tails: Vec<(usize, Rational)>,
    pub length: Rational,
}

/// The hypergraph of a normalized instance: vertex `i` per row, hyperarc `j`
/// per column with head at the row holding the unit positive entry, tails at
/// the rows with negative entries (`gain = -A_ij`), and `length = c_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    pub vertex_count: usize,
    pub arcs: Vec<Hyperarc>,
}

impl Hypergraph {
    /// Reconstructs the normalized `(A, c)` the hypergraph encodes, paired
    /// with the given right-hand side.
    pub fn to_instance(&self, b: Vec<Rational>) -> Instance {
        let mut entries = Vec::new();
        let mut c = Vec::with_capacity(self.arcs.len());
        for (j, arc) in self.arcs.iter().enumerate() {
            if let Some(h) = arc.head {
                entries.push((h, j, Rational::one()));
            }
            for (u, gain) in &arc.tails {
                entries.push((*u, j, -gain.clone()));
            }
            c.push(arc.length.clone());
        }
        Instance::from_triplets(self.vertex_count, self.arcs.len(), &entries, b, c)
            .expect("hypergraph encodes a well-formed matrix")
    }

    /// Arc indices grouped by head vertex, in increasing arc order.
    pub(crate) fn incoming(&self) -> Vec<Vec<usize>> {
        let mut incoming = vec![Vec::new(); self.vertex_count];
        for (j, arc) in self.arcs.iter().enumerate() {
            if let Some(h) = arc.head {
                incoming[h].push(j);
            }
        }
        incoming
    }

    /// Same arcs with every length set to zero.
    pub(crate) fn with_zero_lengths(&self) -> Hypergraph {
        Hypergraph {
            vertex_count: self.vertex_count,
            arcs: self
                .arcs
                .iter()
                .map(|arc| Hyperarc {
                    head: arc.head,
                    tails: arc.tails.clone(),
                    length: Rational::zero(),
                })
                .collect(),
        }
    }
}

/// Builds the hypergraph of a normalized instance.
///
/// Panics if some column carries a positive entry other than 1; run
/// [`normalize`] first.
pub fn build_hypergraph(inst: &Instance) -> Hypergraph {
    let arcs = (0..inst.columns())
        .map(|j| {
            let mut head = None;
            let mut tails = Vec::new();
            for (i, v) in inst.column(j) {
                if v.is_positive() {
                    assert!(v.is_one(), "column {} has a non-unit positive entry", j + 1);
                    assert!(head.is_none(), "column {} has two positive entries", j + 1);
                    head = Some(*i);
                } else {
                    tails.push((*i, -v));
                }
            }
            Hyperarc { head, tails, length: inst.c[j].clone() }
        })
        .collect();
    Hypergraph { vertex_count: inst.rows(), arcs }
}

/// A directed cycle `v_1 E_1 v_2 ... E_k v_1` in the hypergraph together with
/// the product of the traversed tail gains. The cycle's gain is
/// `1 / gain_product`, so `gain_product < 1` exhibits a gainfreeness
/// violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitness {
    /// `vertices[i]` is the tail of `arcs[i]`; the head of `arcs[i]` is
    /// `vertices[(i + 1) % len]`.
    pub vertices: Vec<usize>,
    pub arcs: Vec<usize>,
    pub gain_product: Rational,
}

impl CycleWitness {
    pub fn gain(&self) -> Rational {
        Rational::one() / &self.gain_product
    }
}

impl fmt::Display for CycleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, e) in self.vertices.iter().zip(&self.arcs) {
            write!(f, "v{} -E{}-> ", v + 1, e + 1)?;
        }
        write!(
            f,
            "v{} (gain {})",
            self.vertices[0] + 1,
            crate::num::format_rational(&self.gain())
        )
    }
}

/// Projection of the hypergraph used by the cycle searches: one weighted arc
/// `u -> head(E)` per `(E, u in T(E))` pair with a head. A hypergraph cycle
/// traverses one tail per hyperarc, so directed cycles of this digraph are
/// exactly the cycles gainfreeness quantifies over.
struct ProjectedArc {
    from: usize,
    to: usize,
    weight: Rational,
    arc: usize,
}

fn project(h: &Hypergraph) -> Vec<ProjectedArc> {
    let mut out = Vec::new();
    for (j, arc) in h.arcs.iter().enumerate() {
        if let Some(head) = arc.head {
            for (u, gain) in &arc.tails {
                out.push(ProjectedArc { from: *u, to: head, weight: gain.clone(), arc: j });
            }
        }
    }
    out
}

/// Decides gainfreeness: `Ok(())` iff every directed cycle has gain at most
/// one, i.e. every cycle's gain product is at least one. Otherwise returns a
/// cycle whose gain product is strictly below one.
///
/// Multiplicative Bellman-Ford over the projected digraph: all potentials
/// start at 1 and are relaxed for `vertex_count` Jacobi rounds; a further
/// improving relaxation proves a product-below-one cycle, which a traceback
/// through the per-round update history recovers. All comparisons are exact.
pub fn check_gainfree(h: &Hypergraph) -> Result<(), CycleWitness> {
    let m = h.vertex_count;
    let arcs = project(h);
    if arcs.is_empty() {
        return Ok(());
    }

    // dist[v] after round k = min over walks of <= k arcs ending at v of the
    // walk's weight product (starting anywhere at 1). pred[k][v] is the arc
    // that updated v in round k, recorded only on strict improvement.
    let mut dist: Vec<Rational> = vec![Rational::one(); m];
    let mut pred: Vec<Vec<Option<usize>>> = Vec::with_capacity(m + 1);
    pred.push(vec![None; m]);
    let mut changed: Vec<Vec<bool>> = Vec::with_capacity(m + 1);
    changed.push(vec![false; m]);

    for _round in 1..=m {
        let mut next = dist.clone();
        let mut pred_round = vec![None; m];
        let mut changed_round = vec![false; m];
        for (idx, arc) in arcs.iter().enumerate() {
            let candidate = &dist[arc.from] * &arc.weight;
            if candidate < next[arc.to] {
                next[arc.to] = candidate;
                pred_round[arc.to] = Some(idx);
                changed_round[arc.to] = true;
            }
        }
        dist = next;
        pred.push(pred_round);
        changed.push(changed_round);
    }

    // Check round m+1: a fixpoint here rules every cycle product >= 1 in;
    // any improvement implies a product-below-one cycle exists.
    let improving = arcs
        .iter()
        .enumerate()
        .find(|(_, arc)| &dist[arc.from] * &arc.weight < dist[arc.to]);
    let (start_idx, _) = match improving {
        None => return Ok(()),
        Some(found) => found,
    };

    // Traceback as in the certificate extraction of the dual solver: the arc
    // improving w at round k has a tail that changed at round k-1, so the
    // chain never sticks and must revisit a vertex within m+1 steps.
    let mut chain: Vec<(usize, usize)> = Vec::new(); // (vertex, projected arc into it)
    let mut cur_arc = start_idx;
    let mut round = m;
    loop {
        let tail = arcs[cur_arc].from;
        if let Some(seen) = chain.iter().position(|(v, _)| *v == tail) {
            // the chain lists (vertex, arc out of it) walking backwards;
            // cur_arc leaves the revisited vertex, so the forward cycle is
            // cur_arc followed by the suffix after `seen` in reverse
            let mut cycle: Vec<(usize, usize)> = vec![(tail, cur_arc)];
            cycle.extend(chain[seen + 1..].iter().rev().copied());
            let vertices: Vec<usize> = cycle.iter().map(|(v, _)| *v).collect();
            let arc_ids: Vec<usize> = cycle.iter().map(|(_, a)| arcs[*a].arc).collect();
            let gain_product: Rational = cycle
                .iter()
                .map(|(_, a)| arcs[*a].weight.clone())
                .product();
            assert!(
                gain_product < Rational::one(),
                "traceback must close a product-below-one cycle"
            );
            let witness = CycleWitness { vertices, arcs: arc_ids, gain_product };
            debug_assert!(witness_is_consistent(h, &witness));
            return Err(witness);
        }
        chain.push((tail, cur_arc));
        assert!(round >= 1, "cycle traceback exceeded the round history");
        assert!(
            changed[round][tail],
            "improving arc's tail must have changed in the previous round"
        );
        cur_arc = pred[round][tail].expect("changed vertex has a predecessor arc");
        round -= 1;
    }
}

fn witness_is_consistent(h: &Hypergraph, w: &CycleWitness) -> bool {
    let len = w.vertices.len();
    if len == 0 || w.arcs.len() != len {
        return false;
    }
    let mut product = Rational::one();
    for i in 0..len {
        let arc = &h.arcs[w.arcs[i]];
        if arc.head != Some(w.vertices[(i + 1) % len]) {
            return false;
        }
        match arc.tails.iter().find(|(u, _)| *u == w.vertices[i]) {
            Some((_, gain)) => product *= gain,
            None => return false,
        }
    }
    product == w.gain_product
}

/// Maximum cycle gain of a gainfree hypergraph, or `None` when the projected
/// digraph is acyclic. Walk-product dynamic programming: with every cycle
/// product >= 1, the minimum over closed walks of at most `vertex_count` arcs
/// equals the minimum over simple cycles.
pub fn max_cycle_gain(h: &Hypergraph) -> Option<Rational> {
    let m = h.vertex_count;
    let arcs = project(h);
    let mut dist: Vec<Vec<Option<Rational>>> = vec![vec![None; m]; m];
    for arc in &arcs {
        let slot = &mut dist[arc.from][arc.to];
        if slot.as_ref().is_none_or(|cur| arc.weight < *cur) {
            *slot = Some(arc.weight.clone());
        }
    }
    for _ in 1..m {
        let mut next = dist.clone();
        for arc in &arcs {
            for w in 0..m {
                if let Some(via) = &dist[w][arc.from] {
                    let candidate = via * &arc.weight;
                    let slot = &mut next[w][arc.to];
                    if slot.as_ref().is_none_or(|cur| candidate < *cur) {
                        *slot = Some(candidate);
                    }
                }
            }
        }
        dist = next;
    }
    let min_product = (0..m).filter_map(|v| dist[v][v].clone()).min()?;
    Some(Rational::one() / min_product)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{empty_head_instance, gainfree_cycle_instance};
    use crate::num::{int, rat};

    #[test]
    fn validate_accepts_leontief_instances() {
        assert!(validate(&empty_head_instance([1, 1, 1])).is_empty());
        assert!(validate(&gainfree_cycle_instance()).is_empty());
    }

    #[test]
    fn validate_reports_negative_b() {
        let inst = Instance::dense(
            &[vec![int(1)], vec![int(0)]],
            vec![int(-1), int(0)],
            vec![int(0)],
        );
        assert_eq!(validate(&inst), vec![Violation::NegativeB { row: 0 }]);
    }

    #[test]
    fn validate_reports_multiple_positive_entries() {
        let inst = Instance::dense(
            &[vec![int(1)], vec![int(2)], vec![int(-1)]],
            vec![int(0); 3],
            vec![int(0)],
        );
        assert_eq!(
            validate(&inst),
            vec![Violation::MultiplePositiveEntries { col: 0, rows: vec![0, 1] }]
        );
    }

    #[test]
    fn normalize_scales_positive_entries_to_one() {
        let inst = Instance::dense(
            &[vec![int(2)], vec![int(-4)]],
            vec![int(0), int(0)],
            vec![int(6)],
        );
        let (norm, scaling) = normalize(&inst);
        assert_eq!(norm.column(0), &[(0, int(1)), (1, int(-2))]);
        assert_eq!(norm.c, vec![int(3)]);
        assert_eq!(scaling.0, vec![int(2)]);
    }

    #[test]
    fn normalize_is_identity_on_unit_instances() {
        let inst = gainfree_cycle_instance();
        let (norm, scaling) = normalize(&inst);
        assert_eq!(norm, inst);
        assert!(scaling.is_identity());
    }

    #[test]
    fn hypergraph_of_worked_example() {
        let h = build_hypergraph(&gainfree_cycle_instance());
        assert_eq!(h.vertex_count, 4);
        assert_eq!(h.arcs[0].head, Some(1));
        assert_eq!(h.arcs[0].tails, vec![(0, rat(1, 2)), (3, rat(1, 3))]);
        assert_eq!(h.arcs[0].length, int(-6));
        assert_eq!(h.arcs[3].head, Some(0));
        assert!(h.arcs[3].tails.is_empty());
    }

    #[test]
    fn hypergraph_empty_head_and_zero_columns() {
        let h = build_hypergraph(&empty_head_instance([1, 1, 1]));
        assert_eq!(h.arcs[0].head, None);
        assert_eq!(h.arcs[0].tails, vec![(0, int(2)), (1, int(5)), (2, int(3))]);
        assert_eq!(h.arcs[0].length, int(-64));

        let zero_col = Instance::dense(&[vec![int(0)]], vec![int(0)], vec![int(7)]);
        let h = build_hypergraph(&zero_col);
        assert_eq!(h.arcs[0].head, None);
        assert!(h.arcs[0].tails.is_empty());
    }

    #[test]
    fn hypergraph_round_trips_to_instance() {
        let inst = gainfree_cycle_instance();
        let h = build_hypergraph(&inst);
        assert_eq!(h.to_instance(inst.b.clone()), inst);
    }

    #[test]
    fn worked_example_is_gainfree_with_cycle_gain_two_thirds() {
        let h = build_hypergraph(&gainfree_cycle_instance());
        assert!(check_gainfree(&h).is_ok());
        assert_eq!(max_cycle_gain(&h), Some(rat(2, 3)));
    }

    #[test]
    fn acyclic_hypergraph_is_gainfree() {
        let h = build_hypergraph(&empty_head_instance([1, 1, 1]));
        assert!(check_gainfree(&h).is_ok());
        assert_eq!(max_cycle_gain(&h), None);
    }

    #[test]
    fn small_gain_cycle_is_reported_with_witness() {
        // two vertices, cycle with gains 1/2 and 1/2: product 1/4 < 1
        let inst = Instance::dense(
            &[vec![int(1), rat(-1, 2)], vec![rat(-1, 2), int(1)]],
            vec![int(0), int(0)],
            vec![int(0), int(0)],
        );
        let h = build_hypergraph(&inst);
        let witness = check_gainfree(&h).unwrap_err();
        assert_eq!(witness.gain_product, rat(1, 4));
        assert_eq!(witness.gain(), int(4));
        assert!(witness_is_consistent(&h, &witness));
    }

    #[test]
    fn gain_exactly_one_cycle_is_gainfree() {
        let inst = Instance::dense(
            &[vec![int(1), int(-2)], vec![rat(-1, 2), int(1)]],
            vec![int(0), int(0)],
            vec![int(0), int(0)],
        );
        let h = build_hypergraph(&inst);
        assert!(check_gainfree(&h).is_ok());
        assert_eq!(max_cycle_gain(&h), Some(int(1)));
    }

    #[test]
    fn mul_helpers_are_exact() {
        let inst = empty_head_instance([1, 1, 1]);
        let x = vec![int(0), int(1), int(3), int(8)];
        assert_eq!(inst.mul_x(&x), vec![int(1), int(1), int(1)]);
        let r = vec![int(1), int(2), int(9), int(23)];
        assert_eq!(inst.mul_x(&r), vec![int(0), int(0), int(0)]);
        assert_eq!(inst.objective(&r), int(-3));
    }
}
