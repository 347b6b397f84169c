//! Exact computation with finite permutation groups: stabilizer chains,
//! subgroup lattices, structural series and predicates, modular
//! representations over prime fields, and the constructions and verdict
//! layer built on top of them.

pub mod caps;
pub mod error;
pub mod group;
pub mod perm;
pub mod primes;

pub use caps::Caps;
pub use error::{Error, Result};
pub use group::{coset_action, CosetAction, PermGroup, StabilizerChain};
pub use perm::Permutation;

/// Deterministic RNG for seeded searches and corpus generation.
///
/// Every randomized computation in the crate derives its stream from one of
/// these so identical seeds give identical runs.
pub fn seeded_rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

#[cfg(test)]
pub(crate) fn test_rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    seeded_rng(seed)
}
