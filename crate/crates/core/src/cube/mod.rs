//! Exact cube group arithmetic: moves, sequences, positions and the symmetry group.

mod moves;
mod notation;
mod state;
mod symmetry;

pub use moves::{may_follow, may_follow_index, Face, Move, Twist, A_MOVES, N_MOVES};
pub use notation::{MoveSequence, ParseError};
pub use state::{
    corner, edge, is_mid_edge, move_cube, CubieState, Violations, MID_SLOTS, UD_SLOTS,
};
pub use symmetry::{SymmetryIndex, N_SYM, N_SYM_UD};
