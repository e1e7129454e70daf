//! Coordinates of the relabelled puzzle: corner twist, edge flip, and which four
//! edge slots hold the middle-slice edges.

use std::fmt;

use super::perm::{rank_subset4, unrank_subset4};
use crate::cube::{is_mid_edge, CubieState};
use crate::error::{Error, Result};

pub const N_TWIST: usize = 2187;
pub const N_FLIP: usize = 2048;
pub const N_SLICE: usize = 495;
pub const N_FLIPSLICE: usize = N_FLIP * N_SLICE;
/// Size of the relabelled puzzle's state space.
pub const R_SIZE: u64 = (N_TWIST * N_FLIP * N_SLICE) as u64;

/// A point of the relabelled puzzle. The solved cube (and all of H) maps to `(0, 0, 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Phase1Coord {
    pub twist: u16,
    pub flip: u16,
    pub slice: u16,
}

/// Slot key used for slice ranking: middle slots first, so the solved
/// placement ranks 0.
#[inline]
fn slice_key(slot: usize) -> u8 {
    ((slot + 8) % 12) as u8
}

#[inline]
fn slot_of_key(key: u8) -> usize {
    (key as usize + 4) % 12
}

pub fn twist_of(s: &CubieState) -> u16 {
    (0..7).rev().fold(0u16, |acc, i| acc * 3 + s.co[i] as u16)
}

pub fn flip_of(s: &CubieState) -> u16 {
    (0..11).rev().fold(0u16, |acc, i| acc * 2 + s.eo[i] as u16)
}

/// Rank of the set of slots occupied by middle-slice edges.
pub fn slice_of(s: &CubieState) -> u16 {
    let mut keys = [0u8; 4];
    let mut n = 0;
    for slot in 0..12 {
        if is_mid_edge(s.ep[slot]) {
            keys[n] = slice_key(slot);
            n += 1;
        }
    }
    keys.sort_unstable();
    rank_subset4(keys) as u16
}

/// Edge slots selected by a slice coordinate, ascending.
pub fn slice_slots(slice: u16) -> [usize; 4] {
    let mut slots = unrank_subset4(slice as u32).map(slot_of_key);
    slots.sort_unstable();
    slots
}

/// Rank of an arbitrary 4-subset of edge slots in the slice-coordinate numbering.
pub fn slice_of_slots(slots: [usize; 4]) -> u16 {
    let mut keys = slots.map(slice_key);
    keys.sort_unstable();
    rank_subset4(keys) as u16
}

pub fn set_twist(s: &mut CubieState, mut twist: u16) {
    let mut total = 0;
    for i in 0..7 {
        s.co[i] = (twist % 3) as u8;
        total += s.co[i];
        twist /= 3;
    }
    s.co[7] = (3 - total % 3) % 3;
}

pub fn set_flip(s: &mut CubieState, mut flip: u16) {
    let mut total = 0;
    for i in 0..11 {
        s.eo[i] = (flip & 1) as u8;
        total += s.eo[i];
        flip >>= 1;
    }
    s.eo[11] = total & 1;
}

/// Place the four middle edges in the slots named by `slice` (in cubie order)
/// and the other eight edges in the remaining slots, keeping the permutation even.
pub fn set_slice(s: &mut CubieState, slice: u16) {
    let slots = slice_slots(slice);
    let mut mid = 4u8..8;
    let mut other = [0u8, 1, 2, 3, 8, 9, 10, 11].into_iter();
    for slot in 0..12 {
        s.ep[slot] = if slots.contains(&slot) {
            mid.next().unwrap()
        } else {
            other.next().unwrap()
        };
    }
    if s.corner_parity() != s.edge_parity() {
        let a = (0..12).find(|i| !slots.contains(i)).unwrap();
        let b = (a + 1..12).find(|i| !slots.contains(i)).unwrap();
        s.ep.swap(a, b);
    }
}

impl Phase1Coord {
    pub const SOLVED: Phase1Coord = Phase1Coord {
        twist: 0,
        flip: 0,
        slice: 0,
    };

    pub fn new(twist: u16, flip: u16, slice: u16) -> Result<Phase1Coord> {
        check("twist", twist as u64, N_TWIST as u64)?;
        check("flip", flip as u64, N_FLIP as u64)?;
        check("slice", slice as u64, N_SLICE as u64)?;
        Ok(Phase1Coord { twist, flip, slice })
    }

    /// The relabelling map: forget everything but orientations and where the
    /// middle-slice edges sit.
    pub fn relabel(s: &CubieState) -> Phase1Coord {
        Phase1Coord {
            twist: twist_of(s),
            flip: flip_of(s),
            slice: slice_of(s),
        }
    }

    /// A valid cube position with this coordinate.
    pub fn decode(self) -> CubieState {
        let mut s = CubieState::solved();
        set_twist(&mut s, self.twist);
        set_flip(&mut s, self.flip);
        set_slice(&mut s, self.slice);
        s
    }

    pub fn is_solved(self) -> bool {
        self == Phase1Coord::SOLVED
    }

    /// Index of the middle-slice placement and flip as one number (`slice * 2048 + flip`).
    pub fn flipslice(self) -> u32 {
        self.slice as u32 * N_FLIP as u32 + self.flip as u32
    }

    pub fn from_flipslice(fs: u32, twist: u16) -> Phase1Coord {
        Phase1Coord {
            twist,
            flip: (fs % N_FLIP as u32) as u16,
            slice: (fs / N_FLIP as u32) as u16,
        }
    }

    /// Dense index over all of R: `(slice * 2048 + flip) * 2187 + twist`.
    pub fn packed(self) -> u64 {
        self.flipslice() as u64 * N_TWIST as u64 + self.twist as u64
    }

    pub fn from_packed(v: u64) -> Result<Phase1Coord> {
        check("phase-1 index", v, R_SIZE)?;
        Ok(Phase1Coord::from_flipslice(
            (v / N_TWIST as u64) as u32,
            (v % N_TWIST as u64) as u16,
        ))
    }
}

impl fmt::Display for Phase1Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.twist, self.flip, self.slice)
    }
}

pub(crate) fn check(what: &'static str, value: u64, limit: u64) -> Result<()> {
    if value < limit {
        Ok(())
    } else {
        Err(Error::Range { what, value, limit })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::{Face, Move, MoveSequence, Twist, A_MOVES};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn space_size() {
        assert_eq!(R_SIZE, 2_217_093_120);
    }

    #[test]
    fn solved_maps_to_origin() {
        assert!(Phase1Coord::relabel(&CubieState::solved()).is_solved());
        assert_eq!(slice_slots(0), [4, 5, 6, 7]);
    }

    #[test]
    fn h_moves_stay_at_origin() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut s = CubieState::solved();
        for _ in 0..200 {
            let m = Move::from_index(A_MOVES[rng.random_range(0..10)]);
            s = s.apply_move(m);
            assert!(Phase1Coord::relabel(&s).is_solved());
            assert!(s.in_h());
        }
    }

    #[test]
    fn f_changes_flip() {
        let s = CubieState::solved().apply_move(Move::new(Face::F, Twist::Cw90));
        assert_ne!(Phase1Coord::relabel(&s).flip, 0);
        let r = CubieState::solved().apply_move(Move::new(Face::R, Twist::Cw90));
        assert_eq!(Phase1Coord::relabel(&r).flip, 0);
    }

    #[test]
    fn decode_encode_is_identity() {
        for t in 0..N_TWIST as u16 {
            let c = Phase1Coord {
                twist: t,
                flip: 0,
                slice: 0,
            };
            assert_eq!(Phase1Coord::relabel(&c.decode()), c);
        }
        for f in 0..N_FLIP as u16 {
            let c = Phase1Coord {
                twist: 5,
                flip: f,
                slice: 17,
            };
            assert_eq!(Phase1Coord::relabel(&c.decode()), c);
        }
        for sl in 0..N_SLICE as u16 {
            let c = Phase1Coord {
                twist: 0,
                flip: 3,
                slice: sl,
            };
            let s = c.decode();
            assert!(s.is_valid());
            assert_eq!(Phase1Coord::relabel(&s), c);
        }
    }

    #[test]
    fn relabel_is_a_coset_invariant() {
        // Positions of H applied first do not change the relabelling.
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let h = CubieState::from_sequence(&MoveSequence::parse("U R2 D' F2 L2 U2 B2 D").unwrap());
        assert!(h.in_h());
        for _ in 0..50 {
            let g = CubieState::random(&mut rng);
            assert_eq!(
                Phase1Coord::relabel(&h.multiply(&g)),
                Phase1Coord::relabel(&g)
            );
        }
    }

    #[test]
    fn range_errors() {
        assert!(Phase1Coord::new(2187, 0, 0).is_err());
        assert!(Phase1Coord::new(0, 2048, 0).is_err());
        assert!(Phase1Coord::new(0, 0, 495).is_err());
        assert!(Phase1Coord::from_packed(R_SIZE).is_err());
        let c = Phase1Coord::new(2186, 2047, 494).unwrap();
        assert_eq!(Phase1Coord::from_packed(c.packed()).unwrap(), c);
    }
}
