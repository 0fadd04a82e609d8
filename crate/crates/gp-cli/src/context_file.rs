//! The JSON context file format and its loader.
//!
//! ```json
//! {
//!   "vertices": [
//!     {"name": "alpha", "monoid": {"size": 2, "table": [[0, 1], [1, 0]]}},
//!     {"monoid": {"size": 2, "table": [[0, 1], [1, 1]]}}
//!   ],
//!   "edges": [[0, 1]]
//! }
//! ```
//!
//! `name` is optional and only used in `check` output. `size` must match
//! the table dimensions; element 0 must be the identity.

use std::path::Path;

use gp_core::{Graph, GraphContext, VertexMonoid};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid context file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("vertex {index}: declared size {declared} does not match table with {actual} rows")]
    SizeMismatch {
        index: usize,
        declared: usize,
        actual: usize,
    },
    #[error("vertex {vertex} out of range (context has {bound} vertices)")]
    BadVertex { vertex: usize, bound: usize },
    #[error(transparent)]
    Core(#[from] gp_core::Error),
}

#[derive(Deserialize)]
struct ContextFile {
    vertices: Vec<VertexEntry>,
    #[serde(default)]
    edges: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct VertexEntry {
    #[serde(default)]
    name: Option<String>,
    monoid: MonoidEntry,
}

#[derive(Deserialize)]
struct MonoidEntry {
    size: usize,
    table: Vec<Vec<usize>>,
}

/// A context plus the optional vertex names from the file.
pub struct LoadedContext {
    pub ctx: GraphContext,
    pub names: Vec<Option<String>>,
}

pub fn load_context(path: &Path) -> Result<LoadedContext, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_context(&text)
}

pub fn parse_context(text: &str) -> Result<LoadedContext, CliError> {
    let file: ContextFile = serde_json::from_str(text)?;
    let mut names = Vec::with_capacity(file.vertices.len());
    let mut monoids = Vec::with_capacity(file.vertices.len());
    for (index, entry) in file.vertices.into_iter().enumerate() {
        if entry.monoid.size != entry.monoid.table.len() {
            return Err(CliError::SizeMismatch {
                index,
                declared: entry.monoid.size,
                actual: entry.monoid.table.len(),
            });
        }
        monoids.push(VertexMonoid::new(entry.monoid.table)?);
        names.push(entry.name);
    }
    let graph = Graph::new(names.len().max(1), &file.edges)?;
    let ctx = GraphContext::new(graph, monoids)?;
    Ok(LoadedContext { ctx, names })
}
