//! King-graph constructions and the grid-path machinery behind them.

pub mod gridpath;
pub mod spiral;
pub mod stamp;

pub use gridpath::{
    find_free_cycles, free_cycles_from_stamp, path_segments, stamp_to_ham_path, FreeCycleSpec,
    GridPath, Pass,
};
pub use spiral::{build_even_king_spiral, build_odd_king_comb};
pub use stamp::{enumerate_stamp_foldings, is_stamp_folding, StampFolding};
pub mod lift;

pub use lift::{all_lifts, lift, phi, psi, rectify_all, LiftSelection};
pub mod cycle;

pub use cycle::{build_d_n, build_king_0mod4_cycle, type_ii0_path};
