//! Deterministic instance generators: difference-constraint systems, the
//! two-variable family with reciprocal gains, and random gainfree instances.
//! Every generator is a pure function of its parameters and seed.

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::{build_hypergraph, check_gainfree, normalize, validate, Instance};
use crate::num::{int, rat, Rational};

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Random difference-constraint system in primal Leontief form.
///
/// Each of the `num_constraints` difference columns encodes `y_i - y_j <= w`
/// with a weight drawn from `weight_lo..=weight_hi`; one unit upper-bound
/// column per variable (`y_i <= u`, `u` in `0..=max(weight_hi, 0)`) gives
/// every vertex an incoming hyperarc. All gains are 1, so every cycle has
/// gain exactly 1 and the instance is gainfree by construction.
pub fn gen_dc(
    num_vars: usize,
    num_constraints: usize,
    weight_lo: i64,
    weight_hi: i64,
    seed: u64,
) -> Instance {
    assert!(num_vars >= 2, "difference constraints need at least two variables");
    assert!(weight_lo <= weight_hi);
    let mut rng = rng_for(seed, 0xdc);
    let m = num_vars;
    let n = num_constraints + m;
    let mut entries = Vec::new();
    let mut c = Vec::with_capacity(n);
    for col in 0..num_constraints {
        let i = rng.gen_range(0..m);
        let j = loop {
            let j = rng.gen_range(0..m);
            if j != i {
                break j;
            }
        };
        entries.push((i, col, int(1)));
        entries.push((j, col, int(-1)));
        c.push(int(rng.gen_range(weight_lo..=weight_hi)));
    }
    let bound_hi = weight_hi.max(0);
    for i in 0..m {
        entries.push((i, num_constraints + i, int(1)));
        c.push(int(rng.gen_range(0..=bound_hi)));
    }
    let b = (0..m).map(|_| int(rng.gen_range(0..=9))).collect();
    let inst = Instance::from_triplets(m, n, &entries, b, c).expect("generator output is well formed");
    debug_assert!(validate(&inst).is_empty());
    inst
}

/// The two-variable, four-column family with gains `(a+1)/a` and `a/(a+1)`:
/// its unique cycle has gain exactly 1, yet an integer-rounding variant of
/// the value iteration would need on the order of `a` rounds on it. The LP
/// solves in at most `m = 2` rounds regardless of `a`.
pub fn gen_expfamily(a: u64) -> Instance {
    assert!(a >= 1);
    let a = BigInt::from(a);
    let up = Rational::new(&a + 1, a.clone());     // (a+1)/a
    let down = Rational::new(a.clone(), &a + 1);   // a/(a+1)
    Instance::from_triplets(
        2,
        4,
        &[
            (0, 0, -up),
            (1, 0, Rational::one()),
            (0, 1, Rational::one()),
            (1, 1, -&down),
            (0, 2, Rational::one()),
            (1, 3, Rational::one()),
        ],
        vec![int(1), int(1)],
        vec![int(1), -down, int(0), int(0)],
    )
    .expect("family instance is well formed")
}

/// Random gainfree Leontief instance, deterministic per seed.
///
/// Columns draw a head (or none), a density-controlled tail set with gains
/// of small numerator and denominator, and a random cost; a random subset of
/// columns is then rescaled away from unit positive entries so that
/// normalization has work to do. Draws whose hypergraph has a cycle of gain
/// above one are redrawn from a derived stream; if that keeps failing, tail
/// gains are clamped to at least one, which kills every gainy cycle.
pub fn gen_random_gainfree(m: usize, n: usize, seed: u64, density: f64) -> Instance {
    assert!(m >= 1 && n >= 1);
    assert!((0.0..=1.0).contains(&density));
    for attempt in 0..64 {
        let inst = random_leontief(m, n, seed, attempt, density, false);
        if check_gainfree(&build_hypergraph(&normalize(&inst).0)).is_ok() {
            return inst;
        }
    }
    let inst = random_leontief(m, n, seed, 64, density, true);
    debug_assert!(check_gainfree(&build_hypergraph(&normalize(&inst).0)).is_ok());
    inst
}

fn random_leontief(
    m: usize,
    n: usize,
    seed: u64,
    attempt: u64,
    density: f64,
    clamp_gains: bool,
) -> Instance {
    let mut rng = rng_for(seed, 0x6f00 + attempt);
    let mut entries = Vec::new();
    let mut c = Vec::with_capacity(n);
    for j in 0..n {
        let has_head = rng.gen_bool(0.8);
        let head = has_head.then(|| rng.gen_range(0..m));
        let mut scale = int(1);
        if has_head && rng.gen_bool(0.3) {
            scale = int(rng.gen_range(2..=3));
        }
        if let Some(h) = head {
            entries.push((h, j, scale.clone()));
        }
        for i in 0..m {
            if Some(i) == head || !rng.gen_bool(density) {
                continue;
            }
            let mut gain = rat(rng.gen_range(1..=3), rng.gen_range(1..=3));
            if clamp_gains && gain < int(1) {
                gain = int(1) / gain;
            }
            entries.push((i, j, -(gain * &scale)));
        }
        // every emitted numerator and denominator stays within single digits
        c.push(rat(rng.gen_range(-9..=9), rng.gen_range(1..=3)));
    }
    let b = (0..m)
        .map(|_| {
            if rng.gen_bool(0.25) {
                int(0)
            } else {
                rat(rng.gen_range(0..=9), rng.gen_range(1..=3))
            }
        })
        .collect();
    let inst = Instance::from_triplets(m, n, &entries, b, c).expect("generator output is well formed");
    debug_assert!(validate(&inst).is_empty());
    inst
}

/// Random unit-positive Horn-transpose instance: integral matrix, positive
/// entries 1, integral costs. Tail gains are integers of at least 1, so the
/// instance is gainfree outright. Used by the integrality checks.
pub fn gen_random_unit_positive(m: usize, n: usize, seed: u64) -> Instance {
    assert!(m >= 1 && n >= 1);
    let mut rng = rng_for(seed, 0x0b1);
    let mut entries = Vec::new();
    let mut c = Vec::with_capacity(n);
    for j in 0..n {
        let head = rng.gen_bool(0.8).then(|| rng.gen_range(0..m));
        if let Some(h) = head {
            entries.push((h, j, int(1)));
        }
        for i in 0..m {
            if Some(i) == head || !rng.gen_bool(0.4) {
                continue;
            }
            entries.push((i, j, int(-rng.gen_range(1..=3))));
        }
        c.push(int(rng.gen_range(-4..=9)));
    }
    let b = (0..m).map(|_| int(rng.gen_range(0..=9))).collect();
    let inst = Instance::from_triplets(m, n, &entries, b, c).expect("generator output is well formed");
    debug_assert!(validate(&inst).is_empty());
    inst
}
