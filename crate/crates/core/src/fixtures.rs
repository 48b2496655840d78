//! Hand-checked instances shared by the unit tests.

use crate::model::Instance;
use crate::num::{int, rat, Rational};

/// 4x5 instance with a single directed cycle of gain 2/3; gainfree.
pub(crate) fn gainfree_cycle_instance() -> Instance {
    Instance::dense(
        &[
            vec![rat(-1, 2), int(0), int(1), int(1), int(0)],
            vec![int(1), rat(-1, 3), int(0), int(0), int(0)],
            vec![int(0), int(1), int(-9), int(0), int(1)],
            vec![rat(-1, 3), int(-3), int(-1), int(0), int(0)],
        ],
        vec![int(0); 4],
        vec![int(-6), int(5), int(3), int(-4), int(2)],
    )
}

/// 4x7 unit Horn instance (gains all 1, upper-bound columns for every
/// vertex); the dual system is infeasible through a negative cycle.
pub(crate) fn unit_horn_infeasible_instance(b: [i64; 4]) -> Instance {
    Instance::dense(
        &[
            vec![int(-1), int(0), int(1), int(1), int(0), int(0), int(0)],
            vec![int(1), int(-1), int(0), int(0), int(1), int(0), int(0)],
            vec![int(0), int(1), int(-1), int(0), int(0), int(1), int(0)],
            vec![int(-1), int(-1), int(-1), int(0), int(0), int(0), int(1)],
        ],
        b.iter().map(|v| int(*v)).collect(),
        vec![int(-1), int(0), int(0), int(0), int(0), int(0), int(0)],
    )
}

/// 3x4 acyclic instance whose dual is infeasible through its empty-head
/// column.
pub(crate) fn empty_head_instance(b: [i64; 3]) -> Instance {
    Instance::dense(
        &[
            vec![int(-2), int(1), int(0), int(0)],
            vec![int(-5), int(-2), int(1), int(0)],
            vec![int(-3), int(-1), int(-2), int(1)],
        ],
        b.iter().map(|v| int(*v)).collect(),
        vec![int(-64), int(3), int(1), int(2)],
    )
}

/// 3x3 instance whose hypergraph is a single gain-1 cycle; the dual is
/// infeasible (the cycle is "negative"), the primal feasible only at b = 0.
pub(crate) fn gain_cycle_infeasible_instance(b: [i64; 3]) -> Instance {
    gain_cycle_instance(int(-2), b)
}

/// Same matrix as [`gain_cycle_infeasible_instance`] with the third cost
/// +2 instead of -2, which makes the dual feasible.
pub(crate) fn gain_cycle_feasible_instance(b: [i64; 3]) -> Instance {
    gain_cycle_instance(int(2), b)
}

fn gain_cycle_instance(c3: Rational, b: [i64; 3]) -> Instance {
    Instance::dense(
        &[
            vec![rat(-1, 2), int(0), int(1)],
            vec![int(1), rat(-1, 3), int(0)],
            vec![int(0), int(1), int(-6)],
        ],
        b.iter().map(|v| int(*v)).collect(),
        vec![int(-3), int(1), c3],
    )
}
