//! The acceptance gate: one test per criterion, each printing a PASS line
//! once every assertion inside it has held. Run with `--nocapture` to see
//! the lines:
//!
//! ```text
//! cargo test -p gp-core --test acceptance -- --nocapture
//! ```
//!
//! The suite keeps its own breadth-first search over the rewriting moves
//! (delete an identity letter, merge a same-vertex adjacent pair, swap an
//! adjacent-vertex pair) so that reachability and minimality claims do not
//! lean on the library's search code.

mod common;

use std::collections::{BTreeSet, HashMap, VecDeque};

use common::{all_fixtures, reduced_words, w};
use gp_core::{
    fixtures, foata, oracle, witness, words, Graph, GraphContext, Letter, OrbitBudget, ReducedWord,
    Word,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Every word reachable from `start` by the three rewriting moves.
fn descendants(ctx: &GraphContext, start: &Word) -> BTreeSet<Vec<Letter>> {
    let mut seen = BTreeSet::from([start.letters().to_vec()]);
    let mut queue = VecDeque::from([start.letters().to_vec()]);
    while let Some(cur) = queue.pop_front() {
        let mut out = Vec::new();
        for i in 0..cur.len() {
            if cur[i].is_identity() {
                let mut next = cur.clone();
                next.remove(i);
                out.push(next);
            }
            if i + 1 < cur.len() {
                let (a, b) = (cur[i], cur[i + 1]);
                if a.vertex == b.vertex {
                    let mut next = cur.clone();
                    next[i] = Letter::new(a.vertex, ctx.monoid(a.vertex).mul(a.elem, b.elem));
                    next.remove(i + 1);
                    out.push(next);
                } else if ctx.adjacent(a.vertex, b.vertex) {
                    let mut next = cur.clone();
                    next.swap(i, i + 1);
                    out.push(next);
                }
            }
        }
        for next in out {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// The shortest length among reduced words reachable from `start`.
fn shortest_reduced_len(ctx: &GraphContext, start: &Word) -> usize {
    descendants(ctx, start)
        .into_iter()
        .filter(|ls| words::is_reduced(ctx, &Word::new(ls.clone())))
        .map(|ls| ls.len())
        .min()
        .expect("some reduced descendant always exists")
}

fn random_word(ctx: &GraphContext, rng: &mut StdRng, max_len: usize) -> Word {
    let alphabet = ctx.letters();
    let len = rng.random_range(0..=max_len);
    Word::new(
        (0..len)
            .map(|_| alphabet[rng.random_range(0..alphabet.len())])
            .collect(),
    )
}

/// Copies `word` with a few identity letters spliced in at random spots.
fn inject_identities(ctx: &GraphContext, word: &Word, rng: &mut StdRng) -> Word {
    let mut letters = word.letters().to_vec();
    for _ in 0..rng.random_range(1..=2) {
        let vertex = rng.random_range(0..ctx.vertex_count());
        let at = rng.random_range(0..=letters.len());
        letters.insert(at, Letter::new(vertex, 0));
    }
    Word::new(letters)
}

#[test]
fn a01_reduction_is_sound_and_minimal() {
    let budget = OrbitBudget::default();
    let mut rng = StdRng::seed_from_u64(11);
    for (name, ctx) in all_fixtures() {
        let mut pool = oracle::enumerate_words(&ctx, 5, false);
        for _ in 0..250 {
            pool.push(random_word(&ctx, &mut rng, 6));
        }
        for word in pool {
            let reduced = words::reduce(&ctx, &word);
            assert!(
                words::is_reduced(&ctx, &reduced.as_word()),
                "{name}: reduce({word}) = {reduced} is not reduced"
            );
            let reachable = descendants(&ctx, &word);
            assert!(
                reachable.contains(reduced.letters()),
                "{name}: {reduced} is not reachable from {word} by the rewriting moves"
            );
            assert_eq!(
                reduced.len(),
                shortest_reduced_len(&ctx, &word),
                "{name}: reduce({word}) is not of minimum length"
            );
            assert!(oracle::equal_oracle(&ctx, &word, &reduced.as_word(), &budget).unwrap());
        }
    }
    println!("A1 deterministic reduction is sound and length-minimal: PASS");
}

#[test]
fn a02_equality_agrees_with_the_oracle() {
    let budget = OrbitBudget::default();
    let mut rng = StdRng::seed_from_u64(23);
    for (name, ctx) in all_fixtures() {
        let pool = oracle::enumerate_words(&ctx, 4, false);
        for x in &pool {
            for y in &pool {
                assert_eq!(
                    foata::equal(&ctx, x, y),
                    oracle::equal_oracle(&ctx, x, y, &budget).unwrap(),
                    "{name}: equality of {x} and {y} disagrees with the oracle"
                );
            }
        }
        // Words with identity letters, both unrelated pairs and pairs that
        // are equal by construction.
        for _ in 0..150 {
            let x = random_word(&ctx, &mut rng, 4);
            let y = random_word(&ctx, &mut rng, 4);
            assert_eq!(
                foata::equal(&ctx, &x, &y),
                oracle::equal_oracle(&ctx, &x, &y, &budget).unwrap(),
                "{name}: random pair {x} / {y}"
            );
            let padded = inject_identities(&ctx, &x, &mut rng);
            assert!(
                foata::equal(&ctx, &x, &padded),
                "{name}: {x} != padded {padded}"
            );
            assert!(oracle::equal_oracle(&ctx, &x, &padded, &budget).unwrap());
        }
    }
    println!("A2 equality decision agrees with exhaustive search: PASS");
}

#[test]
fn a03_canonical_form_is_orbit_invariant() {
    let budget = OrbitBudget::default();
    for (name, ctx) in all_fixtures() {
        for x in reduced_words(&ctx, 6) {
            let canon = foata::canonical(&ctx, &x.as_word());
            for o in oracle::shuffle_orbit(&ctx, &x, &budget).unwrap() {
                assert_eq!(
                    foata::canonical(&ctx, &o.as_word()),
                    canon,
                    "{name}: canonical form differs across the orbit of {x}"
                );
                let form = foata::left_foata(&ctx, &o.as_word());
                assert!(
                    foata::check_foata(&ctx, &form),
                    "{name}: invalid form for {o}"
                );
            }
        }
    }
    println!("A3 canonical Foata form is constant on shuffle orbits: PASS");
}

#[test]
fn a04_left_multiplication_case_law() {
    let budget = OrbitBudget::default();
    for (name, ctx) in all_fixtures() {
        for x in reduced_words(&ctx, 4) {
            for p in ctx.letters() {
                let out = words::left_mul_letter(&ctx, p, &x);
                if p.is_identity() {
                    assert_eq!(out, x, "{name}: identity letter changed {x}");
                    continue;
                }
                let mut prepended = vec![p];
                prepended.extend_from_slice(x.letters());
                let prepended = Word::new(prepended);

                // The first same-vertex letter reachable through adjacent
                // vertices, as in the statement of the case split.
                let mut k = None;
                for (i, l) in x.letters().iter().enumerate() {
                    if l.vertex == p.vertex {
                        k = Some(i);
                        break;
                    }
                    if !ctx.adjacent(p.vertex, l.vertex) {
                        break;
                    }
                }
                assert_eq!(
                    k.is_some(),
                    !words::is_reduced(&ctx, &prepended),
                    "{name}: case split is not exclusive on {p} * {x}"
                );
                let expected = match k {
                    None => prepended.letters().to_vec(),
                    Some(i) => {
                        let merged = ctx.monoid(p.vertex).mul(p.elem, x.letters()[i].elem);
                        let mut ls = x.letters().to_vec();
                        if merged == 0 {
                            ls.remove(i);
                        } else {
                            ls[i] = Letter::new(p.vertex, merged);
                        }
                        ls
                    }
                };
                assert_eq!(out.letters(), expected, "{name}: wrong form for {p} * {x}");
                assert!(words::is_reduced(&ctx, &out.as_word()));
                assert!(
                    oracle::equal_oracle(&ctx, &prepended, &out.as_word(), &budget).unwrap(),
                    "{name}: {p} * {x} is not the element of {out}"
                );
            }
        }
    }
    println!("A4 one-letter left multiplication matches the case law: PASS");
}

#[test]
fn a05_equal_words_cancel_blockwise() {
    for (name, ctx) in all_fixtures() {
        let mut classes: HashMap<ReducedWord, Vec<ReducedWord>> = HashMap::new();
        for x in reduced_words(&ctx, 4) {
            classes
                .entry(foata::canonical(&ctx, &x.as_word()))
                .or_default()
                .push(x);
        }
        for group in classes.values() {
            for x in group {
                for y in group {
                    assert_eq!(x.len(), y.len());
                    for m in 0..=x.len() {
                        let (xp, xs) = x.letters().split_at(m);
                        let (yp, ys) = y.letters().split_at(m);
                        let prefixes =
                            foata::equal(&ctx, &Word::new(xp.to_vec()), &Word::new(yp.to_vec()));
                        let suffixes =
                            foata::equal(&ctx, &Word::new(xs.to_vec()), &Word::new(ys.to_vec()));
                        assert_eq!(
                            prefixes, suffixes,
                            "{name}: split at {m} of {x} and {y} is one-sided"
                        );
                    }
                }
            }
        }
    }
    println!("A5 equal reduced words cancel prefixwise iff suffixwise: PASS");
}

#[test]
fn a06_vertex_factorization_is_sound_and_orbit_constant() {
    let budget = OrbitBudget::default();
    for (name, ctx) in all_fixtures() {
        for word in oracle::enumerate_words(&ctx, 5, false) {
            let reduced = words::reduce(&ctx, &word);
            let orbit = oracle::shuffle_orbit(&ctx, &reduced, &budget).unwrap();
            for v in 0..ctx.vertex_count() {
                let psi = words::left_factor(&ctx, &word, v);
                let phi = words::right_factor(&ctx, &word, v);
                assert!(
                    phi.len() <= 1,
                    "{name}: right factor {phi} is not one letter"
                );
                assert!(phi.letters().iter().all(|l| l.vertex == v));
                let product = words::multiply(&ctx, &psi.as_word(), &phi.as_word());
                assert!(
                    foata::equal(&ctx, &product.as_word(), &word),
                    "{name}: {word} != psi * phi at vertex {v}"
                );
                for o in &orbit {
                    assert!(
                        foata::equal(
                            &ctx,
                            &words::left_factor(&ctx, &o.as_word(), v).as_word(),
                            &psi.as_word()
                        ),
                        "{name}: left factor at {v} differs across the orbit of {word}"
                    );
                    assert!(
                        foata::equal(
                            &ctx,
                            &words::right_factor(&ctx, &o.as_word(), v).as_word(),
                            &phi.as_word()
                        ),
                        "{name}: right factor at {v} differs across the orbit of {word}"
                    );
                }
            }
        }
    }
    println!("A6 vertex factorization multiplies back and is representative-free: PASS");
}

#[test]
fn a07_movable_positions_worked_example() {
    let ctx = fixtures::free2();
    let word = w("0:1 1:1 0:1 0:1 1:1 0:1");
    assert_eq!(words::movable_positions(&ctx, &word, 0), vec![1, 6]);
    let (rest, taken) = words::extract_movable(&ctx, &word, 0);
    assert_eq!(rest.to_string(), "1:1 0:1 0:1 1:1");
    assert_eq!(Word::new(taken).to_string(), "0:1 0:1");
    println!("A7 movable positions match the worked example: PASS");
}

#[test]
fn a08_amenability_examples_and_absorbed_interior() {
    let star3 = fixtures::star3();
    assert!(words::is_amenable(&star3, &w("0:1 1:1 2:1"), 0));
    assert!(words::is_good(&star3, &w("1:1 0:1 2:1"), 0));
    assert!(!words::is_amenable(&star3, &w("1:1 0:1 2:1"), 0));
    for (name, ctx) in all_fixtures() {
        for x in reduced_words(&ctx, 5) {
            for v in 0..ctx.vertex_count() {
                if !words::is_amenable(&ctx, &x.as_word(), v) || x.len() < 2 {
                    continue;
                }
                let interior = Word::new(x.letters()[1..x.len() - 1].to_vec());
                assert!(
                    words::is_absorbing(&ctx, &interior, v),
                    "{name}: interior of amenable {x} is not absorbing at {v}"
                );
            }
        }
    }
    println!("A8 amenability examples hold and amenable interiors absorb: PASS");
}

fn witness_fixtures() -> Vec<(&'static str, GraphContext)> {
    vec![
        ("mix", fixtures::mix()),
        ("free2", fixtures::free2()),
        ("dir2", fixtures::dir2()),
    ]
}

#[test]
fn a09_rstar_witnesses_pass_the_bounded_check() {
    for (name, ctx) in witness_fixtures() {
        for v in 0..ctx.vertex_count() {
            assert!(
                ctx.monoid(v).is_left_abundant(),
                "{name}: vertex {v} not left abundant"
            );
        }
        for u in oracle::enumerate_words(&ctx, 4, false) {
            let e = witness::rstar_witness(&ctx, &u).unwrap();
            assert!(
                witness::is_idempotent(&ctx, &e.as_word()),
                "{name}: {e} not idempotent"
            );
            let eu = words::multiply(&ctx, &e.as_word(), &u);
            assert!(
                foata::equal(&ctx, &eu.as_word(), &u),
                "{name}: {e} does not fix {u}"
            );
            assert!(
                oracle::bounded_rstar_check(&ctx, &u, &e.as_word(), 3),
                "{name}: bounded R* check failed for {u} with witness {e}"
            );
        }
    }
    println!("A9 R*-witnesses are idempotent and survive the bounded check: PASS");
}

#[test]
fn a10_rtilde_witnesses_pass_the_bounded_check() {
    for (name, ctx) in witness_fixtures() {
        for v in 0..ctx.vertex_count() {
            assert!(
                ctx.monoid(v).is_left_fountain(),
                "{name}: vertex {v} not left Fountain"
            );
        }
        for u in oracle::enumerate_words(&ctx, 4, false) {
            let e = witness::rtilde_witness(&ctx, &u).unwrap();
            assert!(
                witness::is_idempotent(&ctx, &e.as_word()),
                "{name}: {e} not idempotent"
            );
            let eu = words::multiply(&ctx, &e.as_word(), &u);
            assert!(
                foata::equal(&ctx, &eu.as_word(), &u),
                "{name}: {e} does not fix {u}"
            );
            assert!(
                oracle::bounded_rtilde_check(&ctx, &u, &e.as_word(), 2, 2),
                "{name}: bounded R-tilde check failed for {u} with witness {e}"
            );
        }
    }
    println!("A10 R-tilde witnesses are idempotent and survive the bounded check: PASS");
}

#[test]
fn a11_group_contexts_have_trivial_witnesses() {
    for (name, ctx) in [
        ("free2", fixtures::free2()),
        ("dir2", fixtures::dir2()),
        ("star3", fixtures::star3()),
    ] {
        for u in oracle::enumerate_words(&ctx, 4, false) {
            let rstar = witness::rstar_witness(&ctx, &u).unwrap();
            let rtilde = witness::rtilde_witness(&ctx, &u).unwrap();
            assert!(
                rstar.is_empty(),
                "{name}: R*-witness of {u} is {rstar}, not the identity"
            );
            assert!(
                rtilde.is_empty(),
                "{name}: R-tilde witness of {u} is {rtilde}"
            );
        }
    }
    println!("A11 all-group contexts give the identity as every witness: PASS");
}

#[test]
fn a12_retraction_onto_a_star_branch() {
    let ctx = fixtures::star3();
    let keep: BTreeSet<usize> = [0usize, 1].into_iter().collect();
    let (sub, r) = ctx.retract(&keep).unwrap();
    let pool = oracle::enumerate_words(&ctx, 4, false);
    for x in &pool {
        let px = r.project(x);
        sub.validate_word(&px).unwrap();
        for y in &pool {
            let pxy = r.project(&words::multiply(&ctx, x, y).as_word());
            let split = words::multiply(&sub, &px, &r.project(y));
            assert!(
                foata::equal(&sub, &pxy, &split.as_word()),
                "projection not multiplicative on {x}, {y}"
            );
            if foata::equal(&ctx, x, y) {
                assert!(
                    foata::equal(&sub, &px, &r.project(y)),
                    "projection split {x} = {y}"
                );
            }
        }
    }
    let sub_pool = oracle::enumerate_words(&sub, 4, false);
    for s in &sub_pool {
        let embedded = r.embed(s).unwrap();
        assert_eq!(r.project(&embedded), *s, "retract after embed changed {s}");
        for t in &sub_pool {
            assert_eq!(
                foata::equal(&sub, s, t),
                foata::equal(&ctx, &embedded, &r.embed(t).unwrap()),
                "embedding changed equality of {s} and {t}"
            );
        }
    }
    println!("A12 retraction onto a kept vertex set is a morphism section: PASS");
}

#[test]
fn a13_semigroup_contexts_decide_equality_identity_free() {
    let budget = OrbitBudget::default();
    let pair = Graph::new(2, &[]).unwrap();
    let edge = Graph::new(2, &[(0, 1)]).unwrap();
    let contexts = [
        (
            "two idempotents, no edge",
            GraphContext::from_semigroups(
                pair,
                &[fixtures::one_idempotent(), fixtures::one_idempotent()],
            )
            .unwrap(),
        ),
        (
            "left zero and idempotent, edge",
            GraphContext::from_semigroups(
                edge,
                &[fixtures::left_zero2(), fixtures::one_idempotent()],
            )
            .unwrap(),
        ),
    ];
    for (name, ctx) in contexts {
        let pool = oracle::enumerate_words(&ctx, 4, false);
        for x in &pool {
            let reduced = words::reduce(&ctx, x);
            assert!(reduced.letters().iter().all(|l| !l.is_identity()));
            assert_eq!(reduced.is_empty(), x.is_empty(), "{name}: {x} collapsed");
            for y in &pool {
                assert_eq!(
                    foata::equal(&ctx, x, y),
                    oracle::equal_oracle_semigroup(&ctx, x, y, &budget).unwrap(),
                    "{name}: equality of {x} and {y} differs from the identity-free search"
                );
            }
        }
    }
    println!("A13 semigroup-derived contexts stay identity-free and agree with search: PASS");
}

#[test]
fn a14_decompose_extracts_a_maximum_prefix() {
    let budget = OrbitBudget::default();
    for (name, ctx) in all_fixtures() {
        for word in oracle::enumerate_words(&ctx, 5, false) {
            assert!(
                oracle::decompose_maximality_check(&ctx, &word, &budget).unwrap(),
                "{name}: decompose({word}) is not a maximum extraction"
            );
        }
    }
    println!("A14 invertible-prefix decomposition is maximum by enumeration: PASS");
}
