//! Words over a graph context and the reduction machinery.
//!
//! A word is a sequence of letters `vertex:elem`. Three rewriting moves
//! generate equality of the elements they present: deleting an identity
//! letter, merging two adjacent letters at the same vertex into their
//! product, and swapping two adjacent letters whose vertices share an edge.
//! A word is *reduced* when it contains no identity letter and any two
//! letters at the same vertex are separated by some letter at a
//! non-adjacent vertex. Reduced words are exactly the minimum-length
//! representatives, and two reduced words represent the same element iff
//! one can be shuffled into the other by swaps alone.
//!
//! [`reduce`] computes a reduced representative deterministically by
//! folding letters left to right into an accumulator; each insertion either
//! appends the letter, merges it with the rightmost mergeable letter, or
//! cancels that letter entirely.

use std::collections::BTreeSet;
use std::fmt;

use crate::context::GraphContext;
use crate::error::{Error, Result};

/// One letter of a word: an element of the monoid at one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub vertex: usize,
    pub elem: usize,
}

impl Letter {
    pub fn new(vertex: usize, elem: usize) -> Self {
        Letter { vertex, elem }
    }

    /// Identity letters represent the identity of their vertex monoid and
    /// vanish under reduction.
    pub fn is_identity(&self) -> bool {
        self.elem == 0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.vertex, self.elem)
    }
}

/// A raw word: any finite sequence of letters.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    /// Convenience constructor for tests and examples.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Self {
        Word::new(pairs.iter().map(|&(v, e)| Letter::new(v, e)).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Parses the text form: whitespace-separated `vertex:elem` tokens, or
    /// a single `-` for the empty word. Syntax only; use
    /// [`GraphContext::validate_word`] to range-check against a context.
    pub fn parse(s: &str) -> Result<Word> {
        let s = s.trim();
        if s == "-" {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let (v, e) = tok
                .split_once(':')
                .ok_or_else(|| Error::WordSyntax(tok.into()))?;
            let vertex = v.parse().map_err(|_| Error::WordSyntax(tok.into()))?;
            let elem = e.parse().map_err(|_| Error::WordSyntax(tok.into()))?;
            letters.push(Letter::new(vertex, elem));
        }
        Ok(Word::new(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_letters(&self.letters, f)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word::new(letters)
    }
}

impl From<ReducedWord> for Word {
    fn from(r: ReducedWord) -> Self {
        Word::new(r.letters)
    }
}

impl From<&ReducedWord> for Word {
    fn from(r: &ReducedWord) -> Self {
        Word::new(r.letters.clone())
    }
}

/// A word known to be reduced with respect to some context.
///
/// Values are only produced by the algorithms in this crate (reduction,
/// canonicalization, the analysis maps), which is what makes the invariant
/// trustworthy. The letters are plain data; the context is not captured.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReducedWord {
    letters: Vec<Letter>,
}

impl ReducedWord {
    pub fn empty() -> Self {
        ReducedWord::default()
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<Letter>) -> Self {
        ReducedWord { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn as_word(&self) -> Word {
        Word::new(self.letters.clone())
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_letters(&self.letters, f)
    }
}

fn render_letters(letters: &[Letter], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if letters.is_empty() {
        return write!(f, "-");
    }
    for (i, l) in letters.iter().enumerate() {
        if i > 0 {
            write!(f, " ")?;
        }
        write!(f, "{l}")?;
    }
    Ok(())
}

/// The set of vertices whose letters occur in `w`, identity letters
/// included. For the support of the element, take the support of a reduced
/// representative.
pub fn support(w: &Word) -> BTreeSet<usize> {
    w.letters().iter().map(|l| l.vertex).collect()
}

/// Checks the reducedness condition directly: no identity letters, and any
/// two letters at the same vertex have a letter at a non-adjacent vertex
/// strictly between them.
pub fn is_reduced(ctx: &GraphContext, w: &Word) -> bool {
    let ls = w.letters();
    for (i, l) in ls.iter().enumerate() {
        if l.is_identity() {
            return false;
        }
        // Walk right until something blocks vertex `l.vertex`. A second
        // letter at the same vertex before any blocker breaks reducedness.
        for later in &ls[i + 1..] {
            if later.vertex == l.vertex {
                return false;
            }
            if !ctx.adjacent(l.vertex, later.vertex) {
                break;
            }
        }
    }
    true
}

/// Inserts `q` at the right end of the reduced accumulator `acc`, keeping
/// it reduced. Returns true when an identity was deleted along the way
/// (either `q` itself or a merge that cancelled).
fn insert_right(ctx: &GraphContext, acc: &mut Vec<Letter>, q: Letter) -> bool {
    if q.is_identity() {
        return true;
    }
    let mut i = acc.len();
    while i > 0 {
        let prev = acc[i - 1];
        if prev.vertex == q.vertex {
            let m = ctx.monoid(q.vertex).mul(prev.elem, q.elem);
            if m == 0 {
                acc.remove(i - 1);
                return true;
            }
            acc[i - 1].elem = m;
            return false;
        }
        if !ctx.adjacent(prev.vertex, q.vertex) {
            break;
        }
        i -= 1;
    }
    acc.push(q);
    false
}

fn fold_letters<'a>(
    ctx: &GraphContext,
    letters: impl IntoIterator<Item = &'a Letter>,
) -> (Vec<Letter>, bool) {
    let mut acc = Vec::new();
    let mut deleted = false;
    for &l in letters {
        deleted |= insert_right(ctx, &mut acc, l);
    }
    (acc, deleted)
}

/// The deterministic reduced form of `w`.
///
/// Letters are folded left to right; a reduced input comes back unchanged.
/// The output has minimum length among all representatives of the element.
pub fn reduce(ctx: &GraphContext, w: &Word) -> ReducedWord {
    let (acc, _) = fold_letters(ctx, w.letters());
    debug_assert!(is_reduced(ctx, &Word::new(acc.clone())));
    ReducedWord::from_letters_unchecked(acc)
}

/// The reduced form of the concatenation `x . y`.
pub fn multiply(ctx: &GraphContext, x: &Word, y: &Word) -> ReducedWord {
    let (acc, _) = fold_letters(ctx, x.letters().iter().chain(y.letters()));
    ReducedWord::from_letters_unchecked(acc)
}

/// Left-multiplies the reduced word `x` by a single letter `p`, by cases:
/// an identity `p` changes nothing; if some letter of `x` can absorb `p`
/// (the first letter at `p`'s vertex, reachable across adjacent vertices
/// only), the two merge in place, cancelling when the product is the
/// identity; otherwise `p` is prepended.
pub fn left_mul_letter(ctx: &GraphContext, p: Letter, x: &ReducedWord) -> ReducedWord {
    if p.is_identity() {
        return x.clone();
    }
    for (i, l) in x.letters().iter().enumerate() {
        if l.vertex == p.vertex {
            let m = ctx.monoid(p.vertex).mul(p.elem, l.elem);
            let mut out = x.letters().to_vec();
            if m == 0 {
                out.remove(i);
            } else {
                out[i].elem = m;
            }
            return ReducedWord::from_letters_unchecked(out);
        }
        if !ctx.adjacent(p.vertex, l.vertex) {
            break;
        }
    }
    let mut out = Vec::with_capacity(x.len() + 1);
    out.push(p);
    out.extend_from_slice(x.letters());
    ReducedWord::from_letters_unchecked(out)
}

/// Drops the first letter of `x` at `vertex`, as an element: the remaining
/// letters are re-reduced. Returns `x` unchanged when the vertex is absent.
/// Constant on shuffle orbits.
pub fn drop_first(ctx: &GraphContext, x: &ReducedWord, vertex: usize) -> ReducedWord {
    match x.letters().iter().position(|l| l.vertex == vertex) {
        None => x.clone(),
        Some(i) => {
            let mut rest = x.letters().to_vec();
            rest.remove(i);
            reduce(ctx, &Word::new(rest))
        }
    }
}

/// The first letter of `x` at `vertex` as a one-letter word, or the empty
/// word when the vertex is absent. Constant on shuffle orbits.
pub fn first_letter(x: &ReducedWord, vertex: usize) -> ReducedWord {
    match x.letters().iter().find(|l| l.vertex == vertex) {
        None => ReducedWord::empty(),
        Some(&l) => ReducedWord::from_letters_unchecked(vec![l]),
    }
}

/// A word is good for `vertex` when every vertex in the support of its
/// reduced form is `vertex` itself or adjacent to it. Such elements act on
/// the rest of a word without obstruction from non-commuting letters.
pub fn is_good(ctx: &GraphContext, w: &Word, vertex: usize) -> bool {
    reduce(ctx, w)
        .letters()
        .iter()
        .all(|l| l.vertex == vertex || ctx.adjacent(l.vertex, vertex))
}

/// A word is absorbing for `vertex` when `vertex` is absent from the
/// support of its reduced form.
pub fn is_absorbing(ctx: &GraphContext, w: &Word, vertex: usize) -> bool {
    reduce(ctx, w).letters().iter().all(|l| l.vertex != vertex)
}

/// The amenability predicate for `vertex`, on raw words.
///
/// The word must be good for `vertex`. Words of length at most 2 pass.
/// Longer words pass when the strict interior has no letter at `vertex`,
/// or when every interior letter at `vertex` starts a suffix that is not
/// good for `vertex`.
pub fn is_amenable(ctx: &GraphContext, w: &Word, vertex: usize) -> bool {
    if !is_good(ctx, w, vertex) {
        return false;
    }
    let n = w.len();
    if n <= 2 {
        return true;
    }
    let interior = &w.letters()[1..n - 1];
    if interior.iter().all(|l| l.vertex != vertex) {
        return true;
    }
    (1..n - 1).all(|k| {
        w.letters()[k].vertex != vertex
            || !is_good(ctx, &Word::new(w.letters()[k..].to_vec()), vertex)
    })
}

/// The 1-based positions of letters at `vertex` whose suffix (from that
/// letter to the end) is good for `vertex`. These are exactly the letters
/// that can be carried to the right end of the word, so the list drives
/// [`extract_movable`] and the factorization maps.
pub fn movable_positions(ctx: &GraphContext, w: &Word, vertex: usize) -> Vec<usize> {
    let ls = w.letters();
    let mut out = Vec::new();
    // Reduced suffix forms built right to left, each by one letter of
    // left multiplication into the previous one.
    let mut suffix = ReducedWord::empty();
    let mut good = vec![false; ls.len() + 1];
    good[ls.len()] = true;
    for k in (0..ls.len()).rev() {
        suffix = left_mul_letter(ctx, ls[k], &suffix);
        good[k] = suffix
            .letters()
            .iter()
            .all(|l| l.vertex == vertex || ctx.adjacent(l.vertex, vertex));
        if ls[k].vertex == vertex && good[k] {
            out.push(k + 1);
        }
    }
    out.reverse();
    out
}

/// Splits `w` into the letters left behind and the movable letters at
/// `vertex` (in order). The element of `w` is the product of the two parts.
pub fn extract_movable(ctx: &GraphContext, w: &Word, vertex: usize) -> (Word, Vec<Letter>) {
    let positions = movable_positions(ctx, w, vertex);
    let mut rest = Vec::new();
    let mut taken = Vec::new();
    let mut next = positions.iter().peekable();
    for (i, &l) in w.letters().iter().enumerate() {
        if next.peek() == Some(&&(i + 1)) {
            taken.push(l);
            next.next();
        } else {
            rest.push(l);
        }
    }
    (Word::new(rest), taken)
}

/// Replaces the movable letters at `vertex` by the given elements of that
/// vertex's monoid (one per movable position, in order) and returns the
/// element of the result: the product of the left-behind part and the
/// replacement letters.
pub fn replace_movable(
    ctx: &GraphContext,
    w: &Word,
    vertex: usize,
    replacements: &[usize],
) -> Result<ReducedWord> {
    let (rest, taken) = extract_movable(ctx, w, vertex);
    if replacements.len() != taken.len() {
        return Err(Error::LengthMismatch {
            expected: taken.len(),
            got: replacements.len(),
        });
    }
    let size = ctx.monoid(vertex).size();
    for &r in replacements {
        if r >= size {
            return Err(Error::IndexOutOfRange {
                index: r,
                bound: size,
            });
        }
    }
    let repl = Word::new(
        replacements
            .iter()
            .map(|&e| Letter::new(vertex, e))
            .collect(),
    );
    Ok(multiply(ctx, &rest, &repl))
}

/// The element of the letters left behind by [`extract_movable`]. Together
/// with [`right_factor`] this factorizes the element of `w` as
/// `left_factor * right_factor`. Both maps are constant on representatives
/// of the same element.
pub fn left_factor(ctx: &GraphContext, w: &Word, vertex: usize) -> ReducedWord {
    let (rest, _) = extract_movable(ctx, w, vertex);
    reduce(ctx, &rest)
}

/// The element of the movable letters at `vertex`, see [`left_factor`].
pub fn right_factor(ctx: &GraphContext, w: &Word, vertex: usize) -> ReducedWord {
    let (_, taken) = extract_movable(ctx, w, vertex);
    reduce(ctx, &Word::new(taken))
}

/// True when the deterministic reduction of `x . y` performs no identity
/// deletion: every step is a merge to a non-identity or a swap. This is the
/// regime in which semigroup products stay inside the semigroup letters.
pub fn is_semigroup_reducible(ctx: &GraphContext, x: &ReducedWord, y: &ReducedWord) -> bool {
    let mut acc = x.letters().to_vec();
    let mut deleted = false;
    for &l in y.letters() {
        deleted |= insert_right(ctx, &mut acc, l);
    }
    !deleted
}

/// An element is left invertible iff every letter of a reduced
/// representative is left invertible in its vertex monoid.
pub fn is_left_invertible(ctx: &GraphContext, w: &Word) -> bool {
    reduce(ctx, w)
        .letters()
        .iter()
        .all(|l| ctx.monoid(l.vertex).is_left_invertible(l.elem))
}

/// A left inverse of the element of `w`, if one exists: the chosen letter
/// inverses in reverse order. `multiply(inverse, w)` is the empty word.
pub fn left_inverse(ctx: &GraphContext, w: &Word) -> Option<ReducedWord> {
    let r = reduce(ctx, w);
    let mut inv = Vec::with_capacity(r.len());
    for l in r.letters().iter().rev() {
        let e = ctx.monoid(l.vertex).left_inverse(l.elem)?;
        inv.push(Letter::new(l.vertex, e));
    }
    // The reversal of a reduced word with each letter replaced by a
    // non-identity letter at the same vertex is reduced; fold anyway to
    // stay within the checked constructors.
    Some(reduce(ctx, &Word::new(inv)))
}
