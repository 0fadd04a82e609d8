//! Helpers shared by the integration test suites.

use gp_core::{fixtures, words, GraphContext, ReducedWord, Word};

pub fn w(s: &str) -> Word {
    Word::parse(s).unwrap()
}

/// The four named fixture contexts, with labels for failure messages.
pub fn all_fixtures() -> Vec<(&'static str, GraphContext)> {
    vec![
        ("free2", fixtures::free2()),
        ("dir2", fixtures::dir2()),
        ("mix", fixtures::mix()),
        ("star3", fixtures::star3()),
    ]
}

/// Every reduced word over the non-identity letters, up to `max_len`.
pub fn reduced_words(ctx: &GraphContext, max_len: usize) -> Vec<ReducedWord> {
    gp_core::oracle::enumerate_words(ctx, max_len, false)
        .into_iter()
        .filter(|word| words::is_reduced(ctx, word))
        .map(|word| words::reduce(ctx, &word))
        .collect()
}
