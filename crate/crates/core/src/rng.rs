//! Seeded, platform-independent randomness.
//!
//! Every run is keyed by a 64-bit seed. The generator is ChaCha with eight
//! rounds; trial `i` of a batch draws from stream `i` of the seeded generator,
//! so batches can be split across threads without changing any sample.
//! Rationals are drawn as integer numerators over a fixed or sampled
//! denominator; no floating point is involved.

use num_bigint::BigInt;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalar::Scalar;

pub type Rng = ChaCha8Rng;

pub fn seeded(seed: u64) -> Rng {
    Rng::seed_from_u64(seed)
}

/// Independent stream for trial `trial` of a run with seed `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> Rng {
    let mut r = Rng::seed_from_u64(seed);
    r.set_stream(trial);
    r
}

pub fn int_in(rng: &mut Rng, lo: i64, hi: i64) -> i64 {
    rng.random_range(lo..=hi)
}

pub fn index(rng: &mut Rng, n: usize) -> usize {
    rng.random_range(0..n)
}

pub fn coin(rng: &mut Rng) -> bool {
    rng.random()
}

/// Uniform on the grid `{p/den : lo <= p/den <= hi}`.
pub fn grid(rng: &mut Rng, lo: i64, hi: i64, den: i64) -> Scalar {
    let p = rng.random_range(lo * den..=hi * den);
    Scalar::ratio(p, den)
}

/// Uniform on the grid `{p/den}` within the closed interval `[-bound, bound]`.
pub fn symmetric(rng: &mut Rng, bound: &Scalar, den: i64) -> Scalar {
    let m = (bound * &Scalar::from_int(den)).floor();
    let m: i64 = i64::try_from(m).expect("bound fits in i64");
    let p = rng.random_range(-m..=m);
    Scalar::ratio(p, den)
}

/// A rational strictly inside `(lo, hi)`: the denominator is uniform in
/// `1..=max_den`, the numerator uniform among admissible integers.
pub fn rational_between(rng: &mut Rng, lo: &Scalar, hi: &Scalar, max_den: i64) -> Scalar {
    assert!(lo < hi, "empty interval");
    loop {
        let q = rng.random_range(1..=max_den);
        let qs = Scalar::from_int(q);
        let a: BigInt = (lo * &qs).floor() + 1;
        let b: BigInt = (hi * &qs).ceil() - 1;
        if a > b {
            continue;
        }
        let a = i64::try_from(a).expect("numerator fits in i64");
        let b = i64::try_from(b).expect("numerator fits in i64");
        return Scalar::ratio(rng.random_range(a..=b), q);
    }
}

/// Roughly log-uniform in `[lo, hi]` (`0 < lo < hi`): a uniformly chosen
/// doubling interval `[lo 2^j, lo 2^(j+1)]`, then a uniform grid point in it.
pub fn log_uniform(rng: &mut Rng, lo: i64, hi: i64, den: i64) -> Scalar {
    assert!(0 < lo && lo < hi);
    let mut octaves = 0;
    while lo << (octaves + 1) <= hi {
        octaves += 1;
    }
    let j = rng.random_range(0..=octaves);
    let a = lo << j;
    let b = (lo << (j + 1)).min(hi);
    grid(rng, a, b, den)
}
