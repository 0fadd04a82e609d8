//! Small named contexts used across the test suites, the benchmarks, and
//! the documentation examples.

use crate::context::{Graph, GraphContext};
use crate::vertex_monoid::{SemigroupTable, VertexMonoid};

/// The two-element group: 1*1 == 0.
pub fn z2() -> VertexMonoid {
    VertexMonoid::new(vec![vec![0, 1], vec![1, 0]]).unwrap()
}

/// The two-element semilattice: 1*1 == 1. Its non-identity element is
/// idempotent but not invertible.
pub fn sl2() -> VertexMonoid {
    VertexMonoid::new(vec![vec![0, 1], vec![1, 1]]).unwrap()
}

/// Two Z2 vertices, no edge: the free product regime.
pub fn free2() -> GraphContext {
    GraphContext::new(Graph::new(2, &[]).unwrap(), vec![z2(), z2()]).unwrap()
}

/// Two Z2 vertices joined by an edge: the direct product regime.
pub fn dir2() -> GraphContext {
    GraphContext::new(Graph::new(2, &[(0, 1)]).unwrap(), vec![z2(), z2()]).unwrap()
}

/// A Z2 vertex and an SL2 vertex, no edge. The smallest context mixing
/// invertible and non-invertible letters.
pub fn mix() -> GraphContext {
    GraphContext::new(Graph::new(2, &[]).unwrap(), vec![z2(), sl2()]).unwrap()
}

/// Three Z2 vertices with vertex 0 adjacent to 1 and 2 (but 1 and 2 not
/// adjacent to each other).
pub fn star3() -> GraphContext {
    GraphContext::new(
        Graph::new(3, &[(0, 1), (0, 2)]).unwrap(),
        vec![z2(), z2(), z2()],
    )
    .unwrap()
}

/// The one-element semigroup (a single idempotent, no identity).
pub fn one_idempotent() -> SemigroupTable {
    SemigroupTable::new(vec![vec![0]]).unwrap()
}

/// The two-element left-zero semigroup: x*y == x.
pub fn left_zero2() -> SemigroupTable {
    SemigroupTable::new(vec![vec![0, 0], vec![1, 1]]).unwrap()
}
