//! The coset graph over symmetry classes of the relabelled puzzle, annotated
//! with proven upper bounds on the distance of each set.
//!
//! Moving a set by one move changes its distance by at most one, so a bound
//! `c` proven at one vertex implies `c + k` at every vertex `k` edges away.

mod ball;
mod cover;
pub mod known;
mod ledger;

pub use ball::{
    ball_size, ball_within, greedy_select, greedy_select_exhaustive, impact, BallOutcome,
    ImpactParams,
};
pub use cover::{
    axis_frames, odd_corner_count, partitions, validate_cover, AxisFrame, EliminationCover,
    Partition, CORNER_EDGES, N_PARTITIONS,
};
pub use ledger::{diameter_bound, BoundLedger, JournalEntry, LedgerReport, INITIAL_BOUND};

use crate::coords::{Phase1Coord, VertexTable};
use crate::cosets::representative_of;
use crate::cube::{CubieState, MoveSequence};

/// Vertex of the set containing the position reached by `a`.
pub fn vertex_of(a: &MoveSequence) -> u32 {
    VertexTable::get()
        .canonical(Phase1Coord::relabel(&CubieState::from_sequence(a)))
        .index
}

/// A representative sequence for a vertex, by phase-1 table descent from its
/// canonical coordinate.
pub fn representative(index: u32) -> MoveSequence {
    representative_of(VertexTable::get().coord(index))
}

/// The 18 neighbours of a vertex (self-loops and repeats included).
pub fn neighbors(index: u32) -> [u32; crate::cube::N_MOVES] {
    VertexTable::get().neighbors(index)
}
