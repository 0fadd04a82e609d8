//! Graph contexts: a finite simple graph with a vertex monoid at each node.
//!
//! A [`GraphContext`] fixes everything the word algorithms need: which
//! vertices commute (the edges) and how letters at a single vertex multiply
//! (the monoids). Contexts are immutable once built.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::vertex_monoid::{SemigroupTable, VertexMonoid};
use crate::words::{Letter, Word};

/// A finite simple graph on vertices `0..vertex_count`. No loops, no
/// multiplicity, edges unordered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    adj: Vec<bool>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let mut adj = vec![false; vertex_count * vertex_count];
        for &(a, b) in edges {
            if a >= vertex_count {
                return Err(Error::IndexOutOfRange {
                    index: a,
                    bound: vertex_count,
                });
            }
            if b >= vertex_count {
                return Err(Error::IndexOutOfRange {
                    index: b,
                    bound: vertex_count,
                });
            }
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            adj[a * vertex_count + b] = true;
            adj[b * vertex_count + a] = true;
        }
        Ok(Graph { vertex_count, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Edge test; false when `a == b`.
    #[inline]
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a * self.vertex_count + b]
    }

    /// All edges as `(min, max)` pairs, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.vertex_count {
            for b in a + 1..self.vertex_count {
                if self.adjacent(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

/// A graph together with one vertex monoid per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphContext {
    graph: Graph,
    monoids: Vec<VertexMonoid>,
}

impl GraphContext {
    pub fn new(graph: Graph, monoids: Vec<VertexMonoid>) -> Result<Self> {
        if graph.vertex_count() != monoids.len() {
            return Err(Error::VertexCountMismatch {
                vertices: graph.vertex_count(),
                monoids: monoids.len(),
            });
        }
        Ok(GraphContext { graph, monoids })
    }

    /// Builds a context from semigroup tables by adjoining a fresh identity
    /// to each, so that semigroup computations can ride on the monoid
    /// machinery.
    pub fn from_semigroups(graph: Graph, semigroups: &[SemigroupTable]) -> Result<Self> {
        let monoids = semigroups
            .iter()
            .map(SemigroupTable::adjoin_identity)
            .collect();
        GraphContext::new(graph, monoids)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn monoid(&self, vertex: usize) -> &VertexMonoid {
        &self.monoids[vertex]
    }

    #[inline]
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.graph.adjacent(a, b)
    }

    /// Checks that every letter of `w` names a real vertex and a real
    /// element of that vertex's monoid.
    pub fn validate_word(&self, w: &Word) -> Result<()> {
        for &l in w.letters() {
            self.validate_letter(l)?;
        }
        Ok(())
    }

    pub fn validate_letter(&self, l: Letter) -> Result<()> {
        if l.vertex >= self.vertex_count() {
            return Err(Error::IndexOutOfRange {
                index: l.vertex,
                bound: self.vertex_count(),
            });
        }
        let size = self.monoid(l.vertex).size();
        if l.elem >= size {
            return Err(Error::IndexOutOfRange {
                index: l.elem,
                bound: size,
            });
        }
        Ok(())
    }

    /// Every letter of the context, identity letters included, in
    /// `(vertex, elem)` order.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for v in 0..self.vertex_count() {
            for e in 0..self.monoid(v).size() {
                out.push(Letter::new(v, e));
            }
        }
        out
    }

    /// Like [`GraphContext::letters`] but skipping the identities.
    pub fn non_identity_letters(&self) -> Vec<Letter> {
        self.letters()
            .into_iter()
            .filter(|l| !l.is_identity())
            .collect()
    }

    /// Restricts the context to `keep`, returning the induced sub-context
    /// (vertices renumbered in ascending order of the originals) and the
    /// [`Retraction`] mapping words back and forth.
    pub fn retract(&self, keep: &BTreeSet<usize>) -> Result<(GraphContext, Retraction)> {
        if keep.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut new_to_old = Vec::with_capacity(keep.len());
        for &v in keep {
            if v >= self.vertex_count() {
                return Err(Error::IndexOutOfRange {
                    index: v,
                    bound: self.vertex_count(),
                });
            }
            new_to_old.push(v);
        }
        let mut old_to_new = vec![None; self.vertex_count()];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let mut edges = Vec::new();
        for a in 0..new_to_old.len() {
            for b in a + 1..new_to_old.len() {
                if self.adjacent(new_to_old[a], new_to_old[b]) {
                    edges.push((a, b));
                }
            }
        }
        let graph = Graph::new(new_to_old.len(), &edges)?;
        let monoids = new_to_old
            .iter()
            .map(|&v| self.monoids[v].clone())
            .collect();
        let sub = GraphContext::new(graph, monoids)?;
        Ok((
            sub,
            Retraction {
                old_to_new,
                new_to_old,
            },
        ))
    }
}

/// The word maps induced by restricting a context to a vertex subset.
///
/// `project` erases letters at dropped vertices and renumbers the rest; it
/// is a monoid morphism onto the sub-context. `embed` goes the other way
/// and is a section of `project`.
#[derive(Debug, Clone)]
pub struct Retraction {
    old_to_new: Vec<Option<usize>>,
    new_to_old: Vec<usize>,
}

impl Retraction {
    /// Kept vertices in the numbering of the original context, ascending.
    pub fn kept(&self) -> &[usize] {
        &self.new_to_old
    }

    /// Sends a word of the original context to the sub-context: letters at
    /// dropped vertices vanish, the rest are renumbered.
    pub fn project(&self, w: &Word) -> Word {
        let letters = w
            .letters()
            .iter()
            .filter_map(|l| self.old_to_new[l.vertex].map(|v| Letter::new(v, l.elem)))
            .collect();
        Word::new(letters)
    }

    /// Sends a word of the sub-context back into the original context.
    pub fn embed(&self, w: &Word) -> Result<Word> {
        let mut letters = Vec::with_capacity(w.len());
        for &l in w.letters() {
            let old = *self
                .new_to_old
                .get(l.vertex)
                .ok_or(Error::ContextMismatch {
                    vertex: l.vertex,
                    bound: self.new_to_old.len(),
                })?;
            letters.push(Letter::new(old, l.elem));
        }
        Ok(Word::new(letters))
    }
}
