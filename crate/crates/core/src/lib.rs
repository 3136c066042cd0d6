//! Exact ordinary and symbolic powers of squarefree monomial ideals built
//! from graphs and hypergraphs, with containment certificates, resurgence
//! witnesses and class-specific exact values.

pub mod cli;
pub mod error;
pub mod graph;
pub mod ideal;
pub mod engine;
pub mod rational;
pub mod symbolic;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, Hypergraph};
pub use ideal::{Monomial, MonomialIdeal, VariableSet};
pub use rational::Rational;
