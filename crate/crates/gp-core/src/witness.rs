//! Idempotent witnesses for elements of a graph product.
//!
//! When every vertex monoid is left abundant (respectively left Fountain),
//! every element of the graph product has an idempotent witness under R*
//! (respectively R-tilde), and the witness can be assembled from local
//! data: decompose the element as `a * x` with `a` the maximal left
//! invertible prefix, replace the first block of `x` by the letterwise
//! idempotent witnesses, and conjugate back by `a`. The witnesses produced
//! here are exactly those elements.

use crate::context::GraphContext;
use crate::error::{Error, Result};
use crate::foata::{self, decompose};
use crate::words::{self, Letter, ReducedWord, Word};

/// Assembles the standard idempotent `b . e . b'` where every letter of
/// `b` is left invertible, every letter of `e_block` is idempotent, and
/// `b'` is the reversed word of chosen letter inverses. The `e_block`
/// support must be a complete subgraph with distinct vertices, and the
/// assembled word must be reduced; the resulting element is idempotent.
pub fn make_standard_idempotent(
    ctx: &GraphContext,
    b: &[Letter],
    e_block: &[Letter],
) -> Result<ReducedWord> {
    let mut inverses = Vec::with_capacity(b.len());
    for &l in b {
        let inv = ctx
            .monoid(l.vertex)
            .left_inverse(l.elem)
            .ok_or(Error::NotLeftInvertible(l))?;
        inverses.push(Letter::new(l.vertex, inv));
    }
    for &l in e_block {
        if !ctx.monoid(l.vertex).is_idempotent(l.elem) {
            return Err(Error::NotIdempotentLetter(l));
        }
    }
    for (i, a) in e_block.iter().enumerate() {
        for z in &e_block[i + 1..] {
            if a.vertex == z.vertex || !ctx.adjacent(a.vertex, z.vertex) {
                return Err(Error::BlockNotComplete);
            }
        }
    }
    let mut letters: Vec<Letter> = b.to_vec();
    letters.extend_from_slice(e_block);
    letters.extend(inverses.into_iter().rev());
    let assembled = Word::new(letters);
    if !words::is_reduced(ctx, &assembled) {
        return Err(Error::NotReducedAssembly);
    }
    Ok(ReducedWord::from_letters_unchecked(
        assembled.letters().to_vec(),
    ))
}

/// Squares the element and compares.
pub fn is_idempotent(ctx: &GraphContext, x: &Word) -> bool {
    let square = words::multiply(ctx, x, x);
    foata::equal(ctx, &square.as_word(), x)
}

fn block_witness(
    ctx: &GraphContext,
    block: &[Letter],
    pick: impl Fn(&GraphContext, Letter) -> Result<usize>,
) -> Result<Vec<Letter>> {
    block
        .iter()
        .map(|&l| Ok(Letter::new(l.vertex, pick(ctx, l)?)))
        .collect()
}

fn assemble_witness(
    ctx: &GraphContext,
    block_wit: Vec<Letter>,
    prefix: Vec<Letter>,
) -> ReducedWord {
    let a = Word::new(prefix);
    let a_inv = words::left_inverse(ctx, &a)
        .expect("decomposition prefixes are letterwise left invertible");
    let front = words::multiply(ctx, &a, &Word::new(block_wit));
    words::multiply(ctx, &front.as_word(), &a_inv.as_word())
}

/// The idempotent R*-witness of the element of `u`: with `u = a * x` the
/// invertible-prefix decomposition and `v` the first block of `x`, this is
/// the element `a * v+ * a'`, where `v+` replaces each letter of `v` by
/// its least idempotent R*-witness in the vertex monoid. Fails when some
/// letter of the block has no such witness.
pub fn rstar_witness(ctx: &GraphContext, u: &Word) -> Result<ReducedWord> {
    let d = decompose(ctx, u);
    let first: &[Letter] = d.foata.blocks().first().map(Vec::as_slice).unwrap_or(&[]);
    let wit = block_witness(ctx, first, |ctx, l| {
        ctx.monoid(l.vertex)
            .rstar_idempotent_witness(l.elem)
            .ok_or(Error::NoRstarWitness {
                vertex: l.vertex,
                elem: l.elem,
            })
    })?;
    Ok(assemble_witness(ctx, wit, d.prefix))
}

/// The idempotent R-tilde-witness of the element of `u`; same shape as
/// [`rstar_witness`] with the letterwise R-tilde witnesses.
pub fn rtilde_witness(ctx: &GraphContext, u: &Word) -> Result<ReducedWord> {
    let d = decompose(ctx, u);
    let first: &[Letter] = d.foata.blocks().first().map(Vec::as_slice).unwrap_or(&[]);
    let wit = block_witness(ctx, first, |ctx, l| {
        ctx.monoid(l.vertex)
            .rtilde_idempotent_witness(l.elem)
            .ok_or(Error::NoRtildeWitness {
                vertex: l.vertex,
                elem: l.elem,
            })
    })?;
    Ok(assemble_witness(ctx, wit, d.prefix))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::words::multiply;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn standard_idempotent_assembles_and_squares() {
        let mix = fixtures::mix();
        let e = make_standard_idempotent(&mix, &[Letter::new(0, 1)], &[Letter::new(1, 1)]).unwrap();
        assert_eq!(e.to_string(), "0:1 1:1 0:1");
        assert!(is_idempotent(&mix, &e.as_word()));
        // Empty pieces give the identity.
        let unit = make_standard_idempotent(&mix, &[], &[]).unwrap();
        assert!(unit.is_empty());
    }

    #[test]
    fn standard_idempotent_validates_pieces() {
        let mix = fixtures::mix();
        // SL2's non-identity element is not left invertible.
        let err = make_standard_idempotent(&mix, &[Letter::new(1, 1)], &[]).unwrap_err();
        assert_eq!(err, Error::NotLeftInvertible(Letter::new(1, 1)));
        // Z2's non-identity element is not idempotent.
        let err = make_standard_idempotent(&mix, &[], &[Letter::new(0, 1)]).unwrap_err();
        assert_eq!(err, Error::NotIdempotentLetter(Letter::new(0, 1)));
        // Two idempotents at non-adjacent vertices cannot form a block.
        let graph = crate::context::Graph::new(2, &[]).unwrap();
        let two_sl2 =
            crate::context::GraphContext::new(graph, vec![fixtures::sl2(), fixtures::sl2()])
                .unwrap();
        let err = make_standard_idempotent(&two_sl2, &[], &[Letter::new(0, 1), Letter::new(1, 1)])
            .unwrap_err();
        assert_eq!(err, Error::BlockNotComplete);
        // A same-vertex b pair collapses: the assembly is not reduced.
        let mix = fixtures::mix();
        let err = make_standard_idempotent(&mix, &[Letter::new(0, 1), Letter::new(0, 1)], &[])
            .unwrap_err();
        assert_eq!(err, Error::NotReducedAssembly);
    }

    #[test]
    fn is_idempotent_on_small_examples() {
        let mix = fixtures::mix();
        assert!(is_idempotent(&mix, &Word::empty()));
        assert!(is_idempotent(&mix, &w("1:1")));
        assert!(!is_idempotent(&mix, &w("0:1")));
        assert!(!is_idempotent(&mix, &w("0:1 1:1")));
    }

    #[test]
    fn rstar_witness_on_mix() {
        let mix = fixtures::mix();
        let e = rstar_witness(&mix, &w("0:1 1:1")).unwrap();
        assert_eq!(e.to_string(), "0:1 1:1 0:1");
        assert!(is_idempotent(&mix, &e.as_word()));
        // The witness fixes u on the left.
        let eu = multiply(&mix, &e.as_word(), &w("0:1 1:1"));
        assert!(foata::equal(&mix, &eu.as_word(), &w("0:1 1:1")));
    }

    #[test]
    fn rtilde_witness_on_mix() {
        let mix = fixtures::mix();
        let e = rtilde_witness(&mix, &w("1:1 0:1")).unwrap();
        assert!(is_idempotent(&mix, &e.as_word()));
        let eu = multiply(&mix, &e.as_word(), &w("1:1 0:1"));
        assert!(foata::equal(&mix, &eu.as_word(), &w("1:1 0:1")));
    }

    #[test]
    fn witnesses_in_group_contexts_are_trivial() {
        let star3 = fixtures::star3();
        for s in ["-", "0:1", "1:1 0:1 2:1", "0:1 1:1 0:1"] {
            let e = rstar_witness(&star3, &w(s)).unwrap();
            assert!(e.is_empty(), "witness of {s} should be the identity");
            let e = rtilde_witness(&star3, &w(s)).unwrap();
            assert!(e.is_empty());
        }
    }
}
