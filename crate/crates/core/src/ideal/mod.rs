//! Monomials and monomial ideals over a fixed ordered set of variables.

pub mod format;
#[allow(clippy::module_inception)]
mod ideal;
mod membership;
mod monomial;
pub(crate) mod transversal;
mod variables;

pub use ideal::MonomialIdeal;
pub use membership::DEFAULT_NODE_BUDGET;
pub use monomial::Monomial;
pub use variables::VariableSet;
