//! Wazir, fers and general leaper pseudosnakes.

pub mod periodic;
pub mod snakes;

pub use periodic::{
    build_leaper_pseudosnake, free_counterpart, halffree_fold, halffree_unfold, upsilon_tile,
    PeriodicPattern,
};
pub use snakes::{
    build_fers_snake, build_wazir_pseudosnake, stitch_wazir_snake, SnakeMode, FERS_SLACK,
    WAZIR_SLACK,
};
