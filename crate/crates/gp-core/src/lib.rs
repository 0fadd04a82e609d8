//! Computing in graph products of finite monoids.
//!
//! Fix a finite simple graph and attach a finite monoid to each vertex.
//! The letters of all the monoids generate a product monoid in which
//! identity letters vanish, letters at one vertex multiply inside their
//! monoid, and letters at adjacent vertices commute. Special cases are the
//! free product (no edges) and the direct product (all edges); in between
//! sit the trace monoids, graph groups, and mixed structures this crate is
//! about.
//!
//! The crate answers the practical questions about such products:
//!
//! * [`words::reduce`] computes a minimum-length representative of a word,
//!   and [`foata::canonical`] a canonical one, so [`foata::equal`] decides
//!   the word problem.
//! * [`foata::left_foata`] and [`foata::right_foata`] compute the Foata
//!   normal forms (blocks of commuting letters), and [`foata::decompose`]
//!   splits an element into its maximal left-invertible prefix and the
//!   rest.
//! * [`witness::rstar_witness`] and [`witness::rtilde_witness`] build
//!   idempotent witnesses showing that left abundancy and the left
//!   Fountain property lift from the vertex monoids to the product.
//! * [`oracle`] re-derives all of the above by naive exhaustive search,
//!   so every fast path has independent ground truth to answer to.
//!
//! ```
//! use gp_core::{fixtures, foata, words, Word};
//!
//! // Two order-2 groups whose generators commute.
//! let ctx = fixtures::dir2();
//! let w = Word::parse("0:1 1:1 0:1").unwrap();
//! assert_eq!(words::reduce(&ctx, &w).to_string(), "1:1");
//! assert!(foata::equal(&ctx, &w, &Word::parse("1:1").unwrap()));
//! ```

pub mod context;
pub mod error;
pub mod fixtures;
pub mod foata;
pub mod oracle;
pub mod vertex_monoid;
pub mod witness;
pub mod words;

pub use context::{Graph, GraphContext, Retraction};
pub use error::{Error, Result};
pub use foata::{Decomposition, FoataForm};
pub use oracle::{OrbitBudget, PathReport};
pub use vertex_monoid::{SemigroupTable, VertexMonoid};
pub use words::{Letter, ReducedWord, Word};
