//! Shared input generators for the benchmarks.

use gp_core::{GraphContext, Letter, Word};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// A reproducible random word over the non-identity letters of `ctx`.
pub fn random_word(ctx: &GraphContext, len: usize, seed: u64) -> Word {
    let alphabet: Vec<Letter> = (0..ctx.vertex_count())
        .flat_map(|v| (1..ctx.monoid(v).size()).map(move |e| Letter::new(v, e)))
        .collect();
    let mut rng = StdRng::seed_from_u64(seed);
    Word::new(
        (0..len)
            .map(|_| alphabet[rng.random_range(0..alphabet.len())])
            .collect(),
    )
}
