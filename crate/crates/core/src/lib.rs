//! Snake (induced) paths and cycles in chess-piece graphs: constructions,
//! verification, upper-bound certificates and exhaustive search.

pub mod cell;
pub mod error;
pub mod graph;
pub mod rules;
pub mod symmetry;

pub use cell::{Board, Cell, CellPath, CellSet};
pub use error::{Error, Result};
pub use graph::{adjacent, PieceGraph, Violation};
pub use rules::MoveRule;
pub use symmetry::{canonicalize, Canonical, Symmetry};
pub mod bits;
pub mod certify;
pub mod king;
pub mod knight;
pub mod leaper;
pub mod search;
