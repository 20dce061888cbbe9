//! The random stream contract.
//!
//! Every random draw in the crate comes from a [`TrialRng`], which is
//! `ChaCha8Rng` from `rand_chacha`. A run with seed `s` gives trial `t` the
//! generator `ChaCha8Rng::seed_from_u64(s)` switched to stream `t` with
//! `set_stream(t)`, so trials are independent of scheduling and thread count.
//!
//! Integers are drawn only through [`uniform_below`], which consumes whole
//! `next_u64` outputs and applies Lemire's multiply-and-reject method:
//! `x * bound` as a 128-bit product, rejecting while the low word is below
//! `2^64 mod bound`, and returning the high word. Ports that follow these two
//! rules reproduce every draw bit for bit.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

pub type TrialRng = ChaCha8Rng;

/// Generator for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> TrialRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Uniform integer in `0..bound`. Panics if `bound == 0`.
pub fn uniform_below<R: RngCore + ?Sized>(rng: &mut R, bound: u64) -> u64 {
    assert!(bound > 0, "uniform_below needs a positive bound");
    let mut product = u128::from(rng.next_u64()) * u128::from(bound);
    let mut low = product as u64;
    if low < bound {
        let threshold = bound.wrapping_neg() % bound;
        while low < threshold {
            product = u128::from(rng.next_u64()) * u128::from(bound);
            low = product as u64;
        }
    }
    (product >> 64) as u64
}

/// Uniform index in `0..len`.
pub fn uniform_index<R: RngCore + ?Sized>(rng: &mut R, len: usize) -> usize {
    uniform_below(rng, len as u64) as usize
}
