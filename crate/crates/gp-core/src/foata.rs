//! Foata normal forms, the canonical form, and the invertible-prefix
//! decomposition.
//!
//! The left Foata form of an element groups a reduced representative into
//! maximal blocks of pairwise-commuting letters: block 1 collects every
//! letter that commutes with all letters before it, and the rest recurses.
//! Blocks have complete, duplicate-free supports, and each vertex in a
//! block is blocked by some non-adjacent vertex in the previous block. The
//! block sequence is unique elementwise, so sorting each block by vertex
//! yields a canonical word: two words represent the same element iff their
//! canonical forms are identical.

use std::fmt;

use crate::context::GraphContext;
use crate::words::{self, Letter, ReducedWord, Word};

/// A word presented as a sequence of blocks. Values produced by
/// [`left_foata`] and [`right_foata`] satisfy the normal-form conditions
/// (checkable with [`check_foata`]) and keep each block sorted by vertex;
/// the type itself is a plain container, so arbitrary block lists can be
/// assembled and checked.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FoataForm {
    blocks: Vec<Vec<Letter>>,
}

impl FoataForm {
    pub fn from_blocks(blocks: Vec<Vec<Letter>>) -> Self {
        FoataForm { blocks }
    }

    pub fn blocks(&self) -> &[Vec<Letter>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// All letters in order, as a raw word.
    pub fn concat(&self) -> Word {
        Word::new(self.blocks.iter().flatten().copied().collect())
    }
}

impl fmt::Display for FoataForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return write!(f, "-");
        }
        for block in &self.blocks {
            write!(f, "[")?;
            for (i, l) in block.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{l}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// Splits `rest` into the front block (letters adjacent to everything
/// before them) and the remainder, preserving order. Letters joining the
/// block must also be pairwise adjacent to earlier block members, which the
/// all-earlier-letters test covers.
fn peel_front_block(ctx: &GraphContext, rest: Vec<Letter>) -> (Vec<Letter>, Vec<Letter>) {
    let mut blocked = vec![false; ctx.vertex_count()];
    let mut block = Vec::new();
    let mut remainder = Vec::new();
    for l in rest {
        if blocked[l.vertex] {
            remainder.push(l);
        } else {
            block.push(l);
        }
        for (u, hit) in blocked.iter_mut().enumerate() {
            if !ctx.adjacent(l.vertex, u) {
                *hit = true;
            }
        }
    }
    (block, remainder)
}

/// The left Foata form of the element of `w`. Blocks are peeled greedily
/// from the front of the reduced form and sorted by vertex internally.
pub fn left_foata(ctx: &GraphContext, w: &Word) -> FoataForm {
    let mut rest = words::reduce(ctx, w).into_letters();
    let mut blocks = Vec::new();
    while !rest.is_empty() {
        let (mut block, remainder) = peel_front_block(ctx, rest);
        block.sort_by_key(|l| l.vertex);
        blocks.push(block);
        rest = remainder;
    }
    FoataForm { blocks }
}

/// The right Foata form: blocks peel from the back instead. Computed by
/// reversing the word, taking the left form, and reversing the block order.
pub fn right_foata(ctx: &GraphContext, w: &Word) -> FoataForm {
    let reversed = Word::new(w.letters().iter().rev().copied().collect());
    let mut rest = words::reduce(ctx, &reversed).into_letters();
    let mut blocks = Vec::new();
    while !rest.is_empty() {
        let (mut block, remainder) = peel_front_block(ctx, rest);
        block.sort_by_key(|l| l.vertex);
        blocks.push(block);
        rest = remainder;
    }
    blocks.reverse();
    FoataForm { blocks }
}

/// Verifies the normal-form conditions on an arbitrary block list: the
/// concatenation is reduced; every block is nonempty with pairwise
/// distinct, pairwise adjacent vertices; and every vertex of a block is
/// non-adjacent to some vertex of the preceding block.
pub fn check_foata(ctx: &GraphContext, form: &FoataForm) -> bool {
    if !words::is_reduced(ctx, &form.concat()) {
        return false;
    }
    for block in form.blocks() {
        if block.is_empty() {
            return false;
        }
        for (i, a) in block.iter().enumerate() {
            for b in &block[i + 1..] {
                if a.vertex == b.vertex || !ctx.adjacent(a.vertex, b.vertex) {
                    return false;
                }
            }
        }
    }
    for pair in form.blocks().windows(2) {
        let (prev, next) = (&pair[0], &pair[1]);
        for l in next {
            if !prev.iter().any(|m| !ctx.adjacent(l.vertex, m.vertex)) {
                return false;
            }
        }
    }
    true
}

/// The canonical reduced word of the element of `w`: the left Foata blocks
/// concatenated, each sorted by vertex. Two words represent the same
/// element iff their canonical forms are byte-identical.
pub fn canonical(ctx: &GraphContext, w: &Word) -> ReducedWord {
    let form = left_foata(ctx, w);
    let letters = form.blocks.into_iter().flatten().collect();
    // Canonical words are shuffles of a reduced word, hence reduced.
    ReducedWord::from_letters_unchecked(letters)
}

/// Decides equality of the elements of `x` and `y`.
pub fn equal(ctx: &GraphContext, x: &Word, y: &Word) -> bool {
    canonical(ctx, x) == canonical(ctx, y)
}

/// An element split as `prefix * remainder`: the longest left-invertible
/// prefix that can be shuffled to the front, and the Foata form of what is
/// left. The first block of the remainder never contains a left-invertible
/// letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub prefix: Vec<Letter>,
    pub foata: FoataForm,
}

impl Decomposition {
    pub fn prefix_word(&self) -> Word {
        Word::new(self.prefix.clone())
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.prefix_word(), self.foata)
    }
}

/// Computes the invertible-prefix decomposition of the element of `w`.
///
/// Scanning the reduced form left to right, a letter joins the prefix when
/// it is left invertible in its vertex monoid and every earlier letter
/// that stayed behind commutes with it. This greedy choice is the unique
/// maximum-length extraction.
pub fn decompose(ctx: &GraphContext, w: &Word) -> Decomposition {
    let reduced = words::reduce(ctx, w);
    let mut blocked = vec![false; ctx.vertex_count()];
    let mut prefix = Vec::new();
    let mut rest = Vec::new();
    for &l in reduced.letters() {
        if !blocked[l.vertex] && ctx.monoid(l.vertex).is_left_invertible(l.elem) {
            prefix.push(l);
        } else {
            rest.push(l);
            for (u, hit) in blocked.iter_mut().enumerate() {
                if !ctx.adjacent(l.vertex, u) {
                    *hit = true;
                }
            }
        }
    }
    Decomposition {
        prefix,
        foata: left_foata(ctx, &Word::new(rest)),
    }
}
