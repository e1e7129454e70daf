//! Distance tables: exact phase-1 distances over the symmetry-reduced
//! relabelled puzzle, phase-2 bounds inside H, and the census of H by depth.

pub mod packed;
pub mod phase1;
pub mod phase2;

pub use packed::PackedDistanceTable;
pub use phase1::Phase1Table;
pub use phase2::{d2bound, Phase2BoundTables};
pub mod census;

pub use census::{census_tsv, table_one_census, MoveSet};
