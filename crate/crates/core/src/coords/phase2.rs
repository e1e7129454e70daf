//! Coordinates of positions inside H: corner permutation, permutation of the
//! eight U/D-layer edges, permutation of the four middle edges.

use std::fmt;

use super::perm::{perm_parity, rank_perm, unrank_perm};
use super::phase1::check;
use crate::cube::{CubieState, MID_SLOTS, UD_SLOTS};
use crate::error::{Error, Result};

pub const N_CORNER_PERM: usize = 40320;
pub const N_UD_EDGE_PERM: usize = 40320;
pub const N_MID_PERM: usize = 24;
/// Number of positions in H: 8!·8!·4!/2.
pub const H_SIZE: u64 = (N_CORNER_PERM * N_UD_EDGE_PERM * N_MID_PERM / 2) as u64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Phase2Coord {
    pub corner: u16,
    pub ud_edge: u16,
    pub mid: u8,
}

/// Parity of a permutation from its Lehmer rank, for 4 elements.
#[inline]
pub fn mid_parity(mid: u8) -> u8 {
    let k = mid as u32 / 2;
    (((k / 3) + (k % 3) + (mid as u32 & 1)) & 1) as u8
}

/// Ud-edge cubie numbering: U-layer edges 0..4, D-layer edges 4..8.
#[inline]
fn ud_index(cubie: u8) -> u8 {
    if cubie < 4 {
        cubie
    } else {
        cubie - 4
    }
}

#[inline]
fn ud_cubie(index: u8) -> u8 {
    if index < 4 {
        index
    } else {
        index + 4
    }
}

pub fn parity_table_corner() -> &'static [u8] {
    use std::sync::OnceLock;
    static T: OnceLock<Vec<u8>> = OnceLock::new();
    T.get_or_init(|| {
        let mut buf = [0u8; 8];
        (0..N_CORNER_PERM as u32)
            .map(|r| {
                unrank_perm(r, &mut buf);
                perm_parity(&buf)
            })
            .collect()
    })
}

#[inline]
pub fn perm8_parity(idx: u16) -> u8 {
    parity_table_corner()[idx as usize]
}

impl Phase2Coord {
    pub const IDENTITY: Phase2Coord = Phase2Coord {
        corner: 0,
        ud_edge: 0,
        mid: 0,
    };

    pub fn new(corner: u16, ud_edge: u16, mid: u8) -> Result<Phase2Coord> {
        check("corner permutation", corner as u64, N_CORNER_PERM as u64)?;
        check("ud-edge permutation", ud_edge as u64, N_UD_EDGE_PERM as u64)?;
        check("middle-edge permutation", mid as u64, N_MID_PERM as u64)?;
        let c = Phase2Coord {
            corner,
            ud_edge,
            mid,
        };
        if !c.parity_ok() {
            return Err(Error::Invalid(format!(
                "{c} violates the permutation parity constraint"
            )));
        }
        Ok(c)
    }

    /// Coordinate of a position in H. Fails for positions outside H.
    pub fn encode(s: &CubieState) -> Result<Phase2Coord> {
        if !s.in_h() {
            return Err(Error::Invalid("position is not in H".into()));
        }
        Ok(Self::encode_unchecked(s))
    }

    pub(crate) fn encode_unchecked(s: &CubieState) -> Phase2Coord {
        let mut ud = [0u8; 8];
        for (j, &slot) in UD_SLOTS.iter().enumerate() {
            ud[j] = ud_index(s.ep[slot]);
        }
        let mut mid = [0u8; 4];
        for (j, &slot) in MID_SLOTS.iter().enumerate() {
            mid[j] = s.ep[slot] - 4;
        }
        Phase2Coord {
            corner: rank_perm(&s.cp) as u16,
            ud_edge: rank_perm(&ud) as u16,
            mid: rank_perm(&mid) as u8,
        }
    }

    pub fn decode(self) -> CubieState {
        let mut s = CubieState::solved();
        unrank_perm(self.corner as u32, &mut s.cp);
        let mut ud = [0u8; 8];
        unrank_perm(self.ud_edge as u32, &mut ud);
        for (j, &slot) in UD_SLOTS.iter().enumerate() {
            s.ep[slot] = ud_cubie(ud[j]);
        }
        let mut mid = [0u8; 4];
        unrank_perm(self.mid as u32, &mut mid);
        for (j, &slot) in MID_SLOTS.iter().enumerate() {
            s.ep[slot] = mid[j] + 4;
        }
        s
    }

    pub fn parity_ok(self) -> bool {
        perm8_parity(self.corner) == perm8_parity(self.ud_edge) ^ mid_parity(self.mid)
    }

    /// Dense index over the parity-valid triples:
    /// `(corner * 40320 + ud_edge) * 12 + mid / 2`.
    #[inline]
    pub fn pack(self) -> u64 {
        (self.corner as u64 * N_UD_EDGE_PERM as u64 + self.ud_edge as u64) * 12
            + (self.mid / 2) as u64
    }

    pub fn unpack(index: u64) -> Result<Phase2Coord> {
        check("H index", index, H_SIZE)?;
        Ok(Self::unpack_unchecked(index))
    }

    #[inline]
    pub(crate) fn unpack_unchecked(index: u64) -> Phase2Coord {
        let half = (index % 12) as u8;
        let ce = index / 12;
        let corner = (ce / N_UD_EDGE_PERM as u64) as u16;
        let ud_edge = (ce % N_UD_EDGE_PERM as u64) as u16;
        let want = perm8_parity(corner) ^ perm8_parity(ud_edge);
        Phase2Coord {
            corner,
            ud_edge,
            mid: mid_from_half(half, want),
        }
    }
}

/// The middle-edge permutation index with half-index `half` and the given parity.
#[inline]
pub fn mid_from_half(half: u8, parity: u8) -> u8 {
    let base = 2 * half;
    base + (mid_parity(base) ^ parity)
}

impl fmt::Display for Phase2Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.corner, self.ud_edge, self.mid)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coords::perm::perm_parity;
    use crate::cube::{Move, MoveSequence, A_MOVES};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_is_zero() {
        assert_eq!(
            Phase2Coord::encode(&CubieState::solved()).unwrap(),
            Phase2Coord::IDENTITY
        );
        assert_eq!(Phase2Coord::IDENTITY.pack(), 0);
    }

    #[test]
    fn h_size_and_parity_valid_count() {
        assert_eq!(H_SIZE, 19_508_428_800);
        // Count valid triples by parity classes of each component.
        let even8 = (0..N_CORNER_PERM as u16)
            .filter(|&c| perm8_parity(c) == 0)
            .count() as u64;
        let odd8 = N_CORNER_PERM as u64 - even8;
        let even4 = (0..24u8).filter(|&m| mid_parity(m) == 0).count() as u64;
        let odd4 = 24 - even4;
        let mut count = 0u64;
        for pc in 0..2u8 {
            for pe in 0..2u8 {
                for pm in 0..2u8 {
                    if pc == pe ^ pm {
                        let nc = if pc == 0 { even8 } else { odd8 };
                        let ne = if pe == 0 { even8 } else { odd8 };
                        let nm = if pm == 0 { even4 } else { odd4 };
                        count += nc * ne * nm;
                    }
                }
            }
        }
        assert_eq!(count, 19_508_428_800);
    }

    #[test]
    fn mid_parity_matches_direct() {
        let mut p = [0u8; 4];
        for m in 0..24u8 {
            unrank_perm(m as u32, &mut p);
            assert_eq!(mid_parity(m), perm_parity(&p));
        }
    }

    #[test]
    fn encode_decode_roundtrip_and_pack() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let mut s = CubieState::solved();
        for _ in 0..500 {
            s = s.apply_move(Move::from_index(A_MOVES[rng.random_range(0..10)]));
            let c = Phase2Coord::encode(&s).unwrap();
            assert!(c.parity_ok());
            assert_eq!(c.decode(), s);
            assert_eq!(Phase2Coord::unpack(c.pack()).unwrap(), c);
            assert!(c.pack() < H_SIZE);
        }
        let out = CubieState::from_sequence(&MoveSequence::parse("F").unwrap());
        assert!(Phase2Coord::encode(&out).is_err());
        assert!(Phase2Coord::unpack(H_SIZE).is_err());
        assert!(Phase2Coord::new(1, 0, 0).is_err());
    }
}
