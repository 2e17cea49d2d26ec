//! Knight constructions: weighted graphs for the density bound and long
//! snake cycles.

pub mod skein;
pub mod weighted;

pub use skein::{
    build_knight_cycle, build_knight_u, build_twine, knight_cycle_path, splice, tie_off, Side,
    KNIGHT_CYCLE_SLACK,
};
pub use weighted::{
    aztec_diamond, build_pancake, build_tesseract_set, multiset_sum, pancake_cover, WeightedCellSet,
};
