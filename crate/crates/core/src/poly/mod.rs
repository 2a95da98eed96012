//! Polynomial-time solvers.

pub mod chain;
pub mod dynamic;
pub mod orlin;
pub mod traverse;

pub use chain::{chain_to_walk, solve_walk_fixed_tau, solve_walk_fixed_tau_with, validate_chain, ChainError, ChainOptions, ComponentChain};
pub use dynamic::{solve_dynamic_trail, solve_dynamic_walk, NotDynamicBased};
pub use orlin::{orlin_check, Arc, DynamicDigraph, OrlinFailure};
