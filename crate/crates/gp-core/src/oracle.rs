//! Brute-force ground truth for the fast algorithms.
//!
//! Everything here works by naive forward search over the rewriting moves:
//! delete an identity letter, merge an adjacent same-vertex pair, swap an
//! adjacent commuting pair. No canonical forms, no insertion strategy, no
//! shortcuts; that independence is the point. Searches are capped by an
//! [`OrbitBudget`], and running out of budget is always an error rather
//! than a silent `false`.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::context::GraphContext;
use crate::error::{Error, Result};
use crate::foata;
use crate::witness::make_standard_idempotent;
use crate::words::{self, Letter, ReducedWord, Word};

/// Caps for the search routines: `max_length` bounds the words a search
/// may start from, `max_states` bounds how many distinct words it may
/// visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitBudget {
    pub max_length: usize,
    pub max_states: usize,
}

impl Default for OrbitBudget {
    fn default() -> Self {
        OrbitBudget {
            max_length: 64,
            max_states: 200_000,
        }
    }
}

impl OrbitBudget {
    pub fn with_max_states(max_states: usize) -> Self {
        OrbitBudget {
            max_states,
            ..OrbitBudget::default()
        }
    }

    fn admit(&self, w: &Word) -> Result<()> {
        if w.len() > self.max_length {
            return Err(Error::OrbitTooLarge {
                limit: self.max_length,
            });
        }
        Ok(())
    }
}

fn successors(
    ctx: &GraphContext,
    w: &[Letter],
    allow_id: bool,
    out: &mut Vec<(Vec<Letter>, bool)>,
) {
    out.clear();
    for i in 0..w.len() {
        if allow_id && w[i].is_identity() {
            let mut next = w.to_vec();
            next.remove(i);
            out.push((next, true));
        }
        if i + 1 < w.len() {
            let (a, b) = (w[i], w[i + 1]);
            if a.vertex == b.vertex {
                let mut next = w.to_vec();
                next[i].elem = ctx.monoid(a.vertex).mul(a.elem, b.elem);
                next.remove(i + 1);
                out.push((next, false));
            } else if ctx.adjacent(a.vertex, b.vertex) {
                let mut next = w.to_vec();
                next.swap(i, i + 1);
                out.push((next, false));
            }
        }
    }
}

/// All words reachable from `w` (including `w`), by breadth-first search
/// over the given move set.
fn descendants(
    ctx: &GraphContext,
    w: &Word,
    budget: &OrbitBudget,
    allow_id: bool,
) -> Result<BTreeSet<Vec<Letter>>> {
    budget.admit(w)?;
    let mut seen = BTreeSet::from([w.letters().to_vec()]);
    let mut queue = VecDeque::from([w.letters().to_vec()]);
    let mut buf = Vec::new();
    while let Some(cur) = queue.pop_front() {
        successors(ctx, &cur, allow_id, &mut buf);
        for (next, _) in buf.drain(..) {
            if seen.insert(next.clone()) {
                if seen.len() > budget.max_states {
                    return Err(Error::OrbitTooLarge {
                        limit: budget.max_states,
                    });
                }
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

fn reduced_only(ctx: &GraphContext, set: &BTreeSet<Vec<Letter>>) -> BTreeSet<Vec<Letter>> {
    set.iter()
        .filter(|ls| words::is_reduced(ctx, &Word::new((*ls).clone())))
        .cloned()
        .collect()
}

/// The set of words reachable from the reduced word `x` by swaps alone.
/// Every member is reduced and represents the same element.
pub fn shuffle_orbit(
    ctx: &GraphContext,
    x: &ReducedWord,
    budget: &OrbitBudget,
) -> Result<BTreeSet<ReducedWord>> {
    budget.admit(&x.as_word())?;
    let mut seen = BTreeSet::from([x.letters().to_vec()]);
    let mut queue = VecDeque::from([x.letters().to_vec()]);
    while let Some(cur) = queue.pop_front() {
        for i in 0..cur.len().saturating_sub(1) {
            if ctx.adjacent(cur[i].vertex, cur[i + 1].vertex) {
                let mut next = cur.clone();
                next.swap(i, i + 1);
                if seen.insert(next.clone()) {
                    if seen.len() > budget.max_states {
                        return Err(Error::OrbitTooLarge {
                            limit: budget.max_states,
                        });
                    }
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen
        .into_iter()
        .map(ReducedWord::from_letters_unchecked)
        .collect())
}

fn minimal_reduced(
    ctx: &GraphContext,
    w: &Word,
    budget: &OrbitBudget,
    allow_id: bool,
) -> Result<BTreeSet<Vec<Letter>>> {
    let all = descendants(ctx, w, budget, allow_id)?;
    let reduced = reduced_only(ctx, &all);
    let min = reduced.iter().map(Vec::len).min().unwrap_or(0);
    Ok(reduced.into_iter().filter(|ls| ls.len() == min).collect())
}

/// Decides equality of the elements of `x` and `y` by exhaustive forward
/// search: compute every reduced descendant of each and intersect the
/// minimum-length sets. The minimum-length reduced descendants of a word
/// form exactly one shuffle orbit, so a nonempty intersection forces the
/// sets to coincide (asserted in debug builds).
pub fn equal_oracle(ctx: &GraphContext, x: &Word, y: &Word, budget: &OrbitBudget) -> Result<bool> {
    let a = minimal_reduced(ctx, x, budget, true)?;
    let b = minimal_reduced(ctx, y, budget, true)?;
    let meets = a.intersection(&b).next().is_some();
    debug_assert!(!meets || a == b, "intersecting minimal sets must be equal");
    Ok(meets)
}

/// Equality search that never deletes identity letters, for contexts built
/// from semigroups where identity letters never arise. On identity-free
/// words this agrees with [`equal_oracle`].
pub fn equal_oracle_semigroup(
    ctx: &GraphContext,
    x: &Word,
    y: &Word,
    budget: &OrbitBudget,
) -> Result<bool> {
    let a = minimal_reduced(ctx, x, budget, false)?;
    let b = minimal_reduced(ctx, y, budget, false)?;
    let meets = a.intersection(&b).next().is_some();
    debug_assert!(!meets || a == b, "intersecting minimal sets must be equal");
    Ok(meets)
}

/// What exhaustive reduction of one word looks like: whether all maximal
/// reduction paths land in a single shuffle orbit, and whether paths that
/// reach a reduced word can avoid the identity-deletion move.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathReport {
    /// Every reduced descendant lies in one shuffle orbit.
    pub agree: bool,
    /// Some path from the word to a reduced word uses no identity deletion.
    pub id_free_path_exists: bool,
    /// Some path from the word to a reduced word uses an identity deletion.
    pub id_path_exists: bool,
}

impl PathReport {
    /// True when the moves are forced: either every completion deletes an
    /// identity somewhere, or none does.
    pub fn id_usage_consistent(&self) -> bool {
        !(self.id_free_path_exists && self.id_path_exists)
    }
}

/// Explores every reduction path from `w`, tracking whether identity
/// deletions were used on the way to each state.
pub fn reduction_paths_agree(
    ctx: &GraphContext,
    w: &Word,
    budget: &OrbitBudget,
) -> Result<PathReport> {
    budget.admit(w)?;
    // Flag state: bit 0 = reachable without (id), bit 1 = reachable with.
    let mut seen: HashMap<Vec<Letter>, u8> = HashMap::new();
    seen.insert(w.letters().to_vec(), 1);
    let mut queue = VecDeque::from([(w.letters().to_vec(), false)]);
    let mut buf = Vec::new();
    while let Some((cur, used_id)) = queue.pop_front() {
        successors(ctx, &cur, true, &mut buf);
        for (next, was_id) in buf.drain(..) {
            let used = used_id || was_id;
            let bit = if used { 2 } else { 1 };
            let entry = seen.entry(next.clone()).or_insert(0);
            if *entry & bit == 0 {
                *entry |= bit;
                if seen.len() > budget.max_states {
                    return Err(Error::OrbitTooLarge {
                        limit: budget.max_states,
                    });
                }
                queue.push_back((next, used));
            }
        }
    }
    let mut id_free = false;
    let mut id_used = false;
    let mut reduced: Vec<&Vec<Letter>> = Vec::new();
    for (word, flags) in &seen {
        if words::is_reduced(ctx, &Word::new(word.clone())) {
            reduced.push(word);
            id_free |= flags & 1 != 0;
            id_used |= flags & 2 != 0;
        }
    }
    let agree = match reduced.first() {
        None => true,
        Some(first) => {
            let orbit = shuffle_orbit(
                ctx,
                &ReducedWord::from_letters_unchecked((**first).clone()),
                budget,
            )?;
            reduced
                .iter()
                .all(|r| orbit.contains(&ReducedWord::from_letters_unchecked((**r).clone())))
        }
    };
    Ok(PathReport {
        agree,
        id_free_path_exists: id_free,
        id_path_exists: id_used,
    })
}

/// Every word over the non-identity letters of `ctx` with length at most
/// `max_len`, in length-then-lexicographic order. With `with_identities`
/// the identity letters are included in the alphabet.
pub fn enumerate_words(ctx: &GraphContext, max_len: usize, with_identities: bool) -> Vec<Word> {
    let alphabet = if with_identities {
        ctx.letters()
    } else {
        ctx.non_identity_letters()
    };
    let mut out = vec![Word::empty()];
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next_layer = Vec::with_capacity(layer.len() * alphabet.len());
        for stem in &layer {
            for &l in &alphabet {
                let mut word = stem.clone();
                word.push(l);
                out.push(Word::new(word.clone()));
                next_layer.push(word);
            }
        }
        layer = next_layer;
    }
    out
}

/// Checks the defining property of R*-relatedness of `u` and `e` on all
/// test words up to `max_len`: `e` fixes `u` on the left, and whenever two
/// short words act equally on `u` they act equally on `e`. A bounded
/// consequence check, not a proof; `true` means no violation was found.
pub fn bounded_rstar_check(ctx: &GraphContext, u: &Word, e: &Word, max_len: usize) -> bool {
    let eu = words::multiply(ctx, e, u);
    if !foata::equal(ctx, &eu.as_word(), u) {
        return false;
    }
    // Group test words by the element of p*u; within a group, p*e must be
    // constant. That is exactly "p*u == q*u implies p*e == q*e".
    let mut classes: HashMap<ReducedWord, ReducedWord> = HashMap::new();
    for p in enumerate_words(ctx, max_len, false) {
        let pu = foata::canonical(ctx, &words::multiply(ctx, &p, u).as_word());
        let pe = foata::canonical(ctx, &words::multiply(ctx, &p, e).as_word());
        if let Some(previous) = classes.insert(pu, pe.clone()) {
            if previous != pe {
                return false;
            }
        }
    }
    true
}

/// Checks the defining property of R-tilde-relatedness of `u` and `e`
/// against every standard idempotent assembled from at most `b_cap`
/// invertible letters and `e_cap` idempotent letters: `e` fixes `u`, and
/// every standard idempotent fixing `u` also fixes `e`. Bounded, like
/// [`bounded_rstar_check`].
pub fn bounded_rtilde_check(
    ctx: &GraphContext,
    u: &Word,
    e: &Word,
    b_cap: usize,
    e_cap: usize,
) -> bool {
    let eu = words::multiply(ctx, e, u);
    if !foata::equal(ctx, &eu.as_word(), u) {
        return false;
    }
    let invertible: Vec<Letter> = ctx
        .non_identity_letters()
        .into_iter()
        .filter(|l| ctx.monoid(l.vertex).is_left_invertible(l.elem))
        .collect();
    let idempotent: Vec<Letter> = ctx
        .non_identity_letters()
        .into_iter()
        .filter(|l| ctx.monoid(l.vertex).is_idempotent(l.elem))
        .collect();
    for b in sequences_up_to(&invertible, b_cap) {
        for block in sequences_up_to(&idempotent, e_cap) {
            let Ok(f) = make_standard_idempotent(ctx, &b, &block) else {
                continue;
            };
            let fu = words::multiply(ctx, &f.as_word(), u);
            if !foata::equal(ctx, &fu.as_word(), u) {
                continue;
            }
            let fe = words::multiply(ctx, &f.as_word(), e);
            if !foata::equal(ctx, &fe.as_word(), e) {
                return false;
            }
        }
    }
    true
}

fn sequences_up_to(alphabet: &[Letter], max_len: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for stem in &layer {
            for &l in alphabet {
                let mut seq = stem.clone();
                seq.push(l);
                out.push(seq.clone());
                next.push(seq);
            }
        }
        layer = next;
    }
    out
}

/// Confirms by subset enumeration that [`foata::decompose`] found a
/// maximum-size extractable set of left-invertible letters, and that every
/// maximum extraction yields the same prefix element and remainder
/// element.
pub fn decompose_maximality_check(
    ctx: &GraphContext,
    w: &Word,
    budget: &OrbitBudget,
) -> Result<bool> {
    let reduced = words::reduce(ctx, w);
    let ls = reduced.letters();
    let n = ls.len();
    if n >= usize::BITS as usize || (1usize << n) > budget.max_states {
        return Err(Error::OrbitTooLarge {
            limit: budget.max_states,
        });
    }
    let invertible: Vec<bool> = ls
        .iter()
        .map(|l| ctx.monoid(l.vertex).is_left_invertible(l.elem))
        .collect();

    let valid = |mask: usize| -> bool {
        for i in 0..n {
            if mask & (1 << i) == 0 {
                continue;
            }
            if !invertible[i] {
                return false;
            }
            for j in 0..i {
                if mask & (1 << j) == 0 && !ctx.adjacent(ls[j].vertex, ls[i].vertex) {
                    return false;
                }
            }
        }
        true
    };

    let mut best = 0usize;
    let mut best_masks = Vec::new();
    for mask in 0..(1usize << n) {
        if !valid(mask) {
            continue;
        }
        let size = mask.count_ones() as usize;
        if size > best {
            best = size;
            best_masks.clear();
        }
        if size == best {
            best_masks.push(mask);
        }
    }

    let d = foata::decompose(ctx, w);
    if d.prefix.len() != best {
        return Ok(false);
    }
    let greedy_prefix = d.prefix_word();
    let greedy_rest = d.foata.concat();
    for mask in best_masks {
        let mut prefix = Vec::new();
        let mut rest = Vec::new();
        for (i, &l) in ls.iter().enumerate() {
            if mask & (1 << i) != 0 {
                prefix.push(l);
            } else {
                rest.push(l);
            }
        }
        if !foata::equal(ctx, &Word::new(prefix), &greedy_prefix)
            || !foata::equal(ctx, &Word::new(rest), &greedy_rest)
        {
            return Ok(false);
        }
    }
    Ok(true)
}
