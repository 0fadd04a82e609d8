//! Crate-wide error type.

use crate::words::Letter;
use thiserror::Error;

/// Everything that can go wrong while building contexts or running the
/// fallible operations. Most of the library is total once inputs have been
/// validated, so this enum is dominated by construction-time checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The multiplication table violates associativity at the given triple.
    #[error("table is not associative at ({a}, {b}, {c}): ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },

    /// Element 0 fails to act as a two-sided identity on the witness.
    #[error("element 0 is not an identity (witness: {witness})")]
    NoIdentityAtZero { witness: usize },

    /// An element, vertex, or table entry fell outside its range.
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },

    /// A multiplication table with no elements at all.
    #[error("multiplication table is empty")]
    EmptyTable,

    /// The table is not square, or a row has the wrong length.
    #[error("multiplication table is not square: row {row} has length {len}, expected {expected}")]
    RaggedTable {
        row: usize,
        len: usize,
        expected: usize,
    },

    /// Graphs here are simple: an edge from a vertex to itself is rejected.
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    /// The graph and the monoid list disagree about how many vertices exist.
    #[error("graph has {vertices} vertices but {monoids} vertex monoids were supplied")]
    VertexCountMismatch { vertices: usize, monoids: usize },

    /// A context needs at least one vertex, and a retraction needs a
    /// nonempty set of kept vertices.
    #[error("vertex set is empty")]
    EmptyVertexSet,

    /// A word mentions a vertex that does not exist in the target context.
    #[error("word does not fit the context: vertex {vertex} out of range (bound {bound})")]
    ContextMismatch { vertex: usize, bound: usize },

    /// Replacement lists must match the number of movable positions.
    #[error("expected {expected} replacement elements, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    /// A letter required to be left invertible is not.
    #[error("letter {0} is not left invertible in its vertex monoid")]
    NotLeftInvertible(Letter),

    /// A letter required to be idempotent is not.
    #[error("letter {0} is not idempotent in its vertex monoid")]
    NotIdempotentLetter(Letter),

    /// The idempotent block of a standard idempotent must have pairwise
    /// distinct, pairwise adjacent vertices.
    #[error("idempotent block support is not a complete subgraph with distinct vertices")]
    BlockNotComplete,

    /// The assembled standard idempotent word failed the reducedness check.
    #[error("assembled word is not reduced")]
    NotReducedAssembly,

    /// No idempotent in the vertex monoid is R*-related to the letter.
    #[error("no R*-idempotent witness for element {elem} at vertex {vertex}")]
    NoRstarWitness { vertex: usize, elem: usize },

    /// No idempotent in the vertex monoid witnesses the letter under R-tilde.
    #[error("no R~-idempotent witness for element {elem} at vertex {vertex}")]
    NoRtildeWitness { vertex: usize, elem: usize },

    /// A brute-force search outgrew its budget. Never reported as `false`.
    #[error("search exceeded its budget ({limit} states)")]
    OrbitTooLarge { limit: usize },

    /// A word literal could not be parsed.
    #[error("invalid word syntax: {0:?}")]
    WordSyntax(String),
}

pub type Result<T> = std::result::Result<T, Error>;
