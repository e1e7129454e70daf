//! Coordinates for the relabelled puzzle R and the subgroup H, their move and
//! symmetry tables, and the symmetry classes of R.

pub mod cache;
pub mod perm;
pub mod phase1;
pub mod phase2;
pub mod tables;
pub mod vertex;

pub use phase1::{Phase1Coord, N_FLIP, N_FLIPSLICE, N_SLICE, N_TWIST, R_SIZE};
pub use phase2::{Phase2Coord, H_SIZE, N_CORNER_PERM, N_MID_PERM, N_UD_EDGE_PERM};
pub use tables::MoveTables;
pub use vertex::{RVertex, VertexTable};
