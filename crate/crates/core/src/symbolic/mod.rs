//! Symbolic powers of squarefree monomial ideals, structured fast paths, and
//! Waldschmidt constants.

mod power;
mod structure;
mod waldschmidt;

pub use power::{
    alpha_symbolic, symbolic_power, symbolic_power_cross_checked, symbolic_power_with, SymbolicEngine,
    SymbolicPowerSpec,
};
pub use structure::{
    cover_symbolic_fast, edge_alpha_formula, edge_class_of, edge_symbolic_decomposition,
    fractional_chromatic_for_class, jn_ideal,
};
pub use waldschmidt::{
    cover_alpha_from_independence, cover_waldschmidt, edge_class_waldschmidt, generic_waldschmidt, waldschmidt,
    WaldschmidtEstimate, WaldschmidtMode,
};
