//! Upper-bound certificates: the odd king blocks and weighted density
//! bounds with an exact pseudosnake solver.

pub mod blocks;
pub mod capacity;
pub mod cnf;
pub mod solver;

pub use blocks::{
    block_weight, build_odd_blocks, is_odd_cell, is_regular_edge, odd_upper_bound_certificate,
    path_weight_bound, Block, BlockDecomposition, BlockKind,
};
pub use capacity::{capacity_upper_bound, tau_n};
pub use cnf::{density_cnf, dpll, export_density_instance, instance_hash, parse_dimacs, Cnf};
pub use solver::{
    brute_force_max_weight, max_weight_pseudosnake, max_weight_pseudosnake_with, SolverOptions,
    SolverResult, MAX_PIECE_CELLS, MAX_SOLVER_CELLS,
};
