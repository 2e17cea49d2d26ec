//! Exhaustive oracles.

pub mod bijection;
pub(crate) mod checkpoint;
pub mod hamilton;
pub mod snake;

pub use bijection::{
    max_free_cycles, verify_cycle_lift_bijection, verify_lift_bijection, LiftReport,
};
pub use hamilton::{
    enumerate_grid_ham_cycles, enumerate_grid_ham_paths, enumerate_near_ham_cycles, GridEnumeration,
};
pub use snake::{
    enumerate_maxima, longest_snake, longest_snake_checkpointed, Mode, Objective, SearchOptions,
    SearchResult,
};
