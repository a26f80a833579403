//! Seeded randomness.
//!
//! All randomized checks draw from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded
//! through `SeedableRng::seed_from_u64`, which expands the 64-bit seed with
//! PCG32. Both algorithms are fixed by their published specifications, so a
//! seed reproduces the same trials on every platform.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream `stream` of the generator for `seed`.
pub fn seeded_stream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = seeded(seed);
    rng.set_stream(stream);
    rng
}
