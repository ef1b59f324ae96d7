//! Deterministic instance generators.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::family::SetFamily;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid generator parameters: {0}")]
pub struct GenError(pub String);

fn named(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// `m` sets `{x1, x(i+1)}`: every pair overlaps.
pub fn star(m: usize) -> Result<SetFamily, GenError> {
    if m == 0 {
        return Err(GenError("star needs m >= 1".into()));
    }
    let sets = (1..=m).map(|i| vec![0, i]).collect();
    Ok(SetFamily::with_tokens(named("x", m + 1), sets).expect("valid star"))
}

/// The chain `{e1} ⊂ {e1, e2} ⊂ ... ⊂ {e1..ek}`.
pub fn nested(k: usize) -> Result<SetFamily, GenError> {
    if k == 0 {
        return Err(GenError("nested needs k >= 1".into()));
    }
    let sets = (1..=k).map(|len| (0..len).collect()).collect();
    Ok(SetFamily::with_tokens(named("e", k), sets).expect("valid chain"))
}

/// `m` random sets over `n` elements. Sizes are uniform in
/// `1..=2·density·n - 1` (clamped to `1..=n`), so the mean size is about
/// `density · n`.
pub fn random(n: usize, m: usize, density: f64, seed: u64) -> Result<SetFamily, GenError> {
    if n == 0 || m == 0 {
        return Err(GenError("random needs n >= 1 and m >= 1".into()));
    }
    if !(density > 0.0 && density <= 1.0) {
        return Err(GenError(format!("density {density} outside (0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let top = ((2.0 * density * n as f64).round() as usize).saturating_sub(1).clamp(1, n);
    let sets = (0..m)
        .map(|_| {
            let k = rng.gen_range(1..=top);
            sample(&mut rng, n, k).into_vec()
        })
        .collect();
    Ok(SetFamily::with_tokens(named("e", n), sets).expect("valid random family"))
}

/// `blocks` disjoint groups of `block_size` elements. Each group holds the
/// sliding pairs `{b_i, b_(i+1)}` plus one random subset, so classes never
/// cross groups.
pub fn blocks(blocks: usize, block_size: usize, seed: u64) -> Result<SetFamily, GenError> {
    if blocks == 0 || block_size < 2 {
        return Err(GenError("blocks needs blocks >= 1 and block size >= 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sets = Vec::new();
    for b in 0..blocks {
        let base = b * block_size;
        for i in 0..block_size - 1 {
            sets.push(vec![base + i, base + i + 1]);
        }
        let k = rng.gen_range(1..=block_size);
        sets.push(sample(&mut rng, block_size, k).into_iter().map(|v| base + v).collect());
    }
    Ok(SetFamily::with_tokens(named("b", blocks * block_size), sets).expect("valid blocks"))
}
