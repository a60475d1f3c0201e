//! Choice of generic λ.
//!
//! No closed genericity criterion is available, so λ is drawn from a seeded
//! PRNG with numerators and denominators in `1..=50`. A draw is generic when
//! the number of singular places of the base reaches the modal value over a
//! batch of pilot draws; collisions of fibers only ever lower that number.

use super::{build_fibration, classify_fibers, lambda_arity, to_weierstrass, FiberConfiguration};
use crate::error::{Error, Result};
use crate::exactmath::{rat, Rat};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// Seed used when neither a flag nor `FANO_K3_SEED` provides one.
pub const DEFAULT_SEED: u64 = 1729;
pub const SEED_ENV: &str = "FANO_K3_SEED";
/// Pilot draws used to estimate the generic number of singular places.
pub const PILOT_DRAWS: usize = 7;
const MAX_ATTEMPTS_PER_DRAW: usize = 50;

/// `FANO_K3_SEED` if set and valid, else [`DEFAULT_SEED`].
pub fn seed_from_env() -> u64 {
    std::env::var(SEED_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_SEED)
}

pub struct LambdaSampler {
    rng: ChaCha8Rng,
}

impl LambdaSampler {
    /// Independent streams per `(seed, stream)`.
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        LambdaSampler { rng }
    }

    pub fn draw(&mut self, n: usize) -> Vec<Rat> {
        (0..n).map(|_| rat(self.rng.gen_range(1..=50), self.rng.gen_range(1..=50))).collect()
    }
}

fn configuration(k: u8, lambda: &[Rat]) -> Result<FiberConfiguration> {
    classify_fibers(&to_weierstrass(&build_fibration(k, lambda)?))
}

/// Modal number of singular places over the pilot draws, larger value on
/// ties.
pub fn reference_place_count(k: u8, seed: u64) -> Result<usize> {
    let n = lambda_arity(k)?;
    let mut sampler = LambdaSampler::new(seed, 2 * k as u64);
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for _ in 0..PILOT_DRAWS {
        if let Ok(c) = configuration(k, &sampler.draw(n)) {
            *counts.entry(c.place_count()).or_default() += 1;
        }
    }
    counts
        .into_iter()
        .max_by_key(|&(places, hits)| (hits, places))
        .map(|(places, _)| places)
        .ok_or_else(|| Error::Degenerate(format!("no pilot draw for k = {k} gave an elliptic K3")))
}

/// Classifies the fibers at λ and rejects λ whose number of singular places
/// falls short of `reference` (a collision of fibers).
pub fn is_generic(k: u8, lambda: &[Rat], reference: usize) -> Result<FiberConfiguration> {
    let c = configuration(k, lambda)?;
    if c.place_count() < reference {
        return Err(Error::Degenerate(format!(
            "degenerate parameter: {} singular places instead of {reference}",
            c.place_count()
        )));
    }
    Ok(c)
}

/// `count` generic λ for `P_k`, deterministic in `seed`.
pub fn generic_specializations(k: u8, seed: u64, count: usize) -> Result<Vec<Vec<Rat>>> {
    let reference = reference_place_count(k, seed)?;
    let n = lambda_arity(k)?;
    let mut sampler = LambdaSampler::new(seed, 2 * k as u64 + 1);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count {
        if attempts >= count * MAX_ATTEMPTS_PER_DRAW {
            return Err(Error::BoundExceeded(format!(
                "only {} generic λ for k = {k} after {attempts} draws",
                out.len()
            )));
        }
        attempts += 1;
        let l = sampler.draw(n);
        if is_generic(k, &l, reference).is_ok() {
            out.push(l);
        }
    }
    Ok(out)
}
