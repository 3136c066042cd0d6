//! Graphs and hypergraphs, their exact invariants, the monomial ideals they
//! define, and structural recognition.

pub mod builtin;
pub mod classify;
pub mod enumerate;
pub mod format;
#[allow(clippy::module_inception)]
mod graph;
mod hypergraph;
pub mod invariants;
pub mod structure;

pub use builtin::builtin_graph;
pub use classify::{classify, EdgeClass, GraphClassification, GraphKind};
pub use graph::{Graph, MAX_VERTICES};
pub use hypergraph::Hypergraph;
