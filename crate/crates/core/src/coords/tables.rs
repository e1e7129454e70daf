//! Move tables, left-multiplication tables and symmetry-conjugation tables for
//! every coordinate. All are derived from the cubie model once and then shared.

use std::sync::OnceLock;

use super::perm::{rank_perm, unrank_perm};
use super::phase1::{flip_of, set_flip, set_twist, slice_of, twist_of, N_FLIP, N_SLICE, N_TWIST};
use super::phase2::{Phase2Coord, N_CORNER_PERM, N_MID_PERM, N_UD_EDGE_PERM};
use crate::cube::{
    move_cube, CubieState, Move, SymmetryIndex, A_MOVES, N_MOVES, N_SYM_UD, UD_SLOTS,
};

/// Positions of four named edges, as an injective 4-tuple of slots.
pub const N_EDGE_GROUP: usize = 12 * 11 * 10 * 9;
pub const N_A: usize = 10;

pub const U_GROUP: [u8; 4] = [0, 1, 2, 3];
pub const D_GROUP: [u8; 4] = [8, 9, 10, 11];
pub const M_GROUP: [u8; 4] = [4, 5, 6, 7];

pub fn rank_slots4(pos: [u8; 4]) -> u16 {
    let mut r = 0u16;
    for k in 0..4 {
        let below = pos[..k].iter().filter(|&&p| p < pos[k]).count() as u16;
        r = r * (12 - k as u16) + (pos[k] as u16 - below);
    }
    r
}

pub fn unrank_slots4(mut r: u16) -> [u8; 4] {
    let mut digits = [0u16; 4];
    for k in (0..4).rev() {
        let base = 12 - k as u16;
        digits[k] = r % base;
        r /= base;
    }
    let mut used = [false; 12];
    let mut out = [0u8; 4];
    for k in 0..4 {
        let mut d = digits[k];
        let slot = (0..12).find(|&s| {
            if used[s] {
                return false;
            }
            if d == 0 {
                return true;
            }
            d -= 1;
            false
        });
        let slot = slot.unwrap();
        used[slot] = true;
        out[k] = slot as u8;
    }
    out
}

pub fn group_coord(s: &CubieState, group: [u8; 4]) -> u16 {
    let mut pos = [0u8; 4];
    for slot in 0..12 {
        if let Some(k) = group.iter().position(|&g| g == s.ep[slot]) {
            pos[k] = slot as u8;
        }
    }
    rank_slots4(pos)
}

fn state_with_group(group: [u8; 4], coord: u16) -> CubieState {
    let pos = unrank_slots4(coord);
    let mut s = CubieState::solved();
    let mut rest = (0u8..12).filter(|c| !group.contains(c));
    for slot in 0..12 {
        s.ep[slot] = match pos.iter().position(|&p| p as usize == slot) {
            Some(k) => group[k],
            None => rest.next().unwrap(),
        };
    }
    s
}

pub struct MoveTables {
    pub twist: Vec<u16>,
    pub flip: Vec<u16>,
    pub slice: Vec<u16>,
    /// Corner permutation under any of the 18 moves.
    pub corner: Vec<u16>,
    pub u_edges: Vec<u16>,
    pub d_edges: Vec<u16>,
    pub m_edges: Vec<u16>,
    /// Phase-2 tables, indexed by position in `A_MOVES`.
    pub corner_a: Vec<u16>,
    pub ud_edge_a: Vec<u16>,
    pub mid_a: Vec<u8>,
    /// Left multiplication `move · h` for the moves of A.
    pub corner_left: Vec<u16>,
    pub ud_edge_left: Vec<u16>,
    pub mid_left: Vec<u8>,
    pub corner_inv: Vec<u16>,
    pub ud_edge_inv: Vec<u16>,
    pub mid_inv: Vec<u8>,
    /// Conjugation by the 16 U/D-axis symmetries.
    pub twist_conj: Vec<u16>,
    pub corner_conj: Vec<u16>,
    pub ud_edge_conj: Vec<u16>,
    pub mid_conj: Vec<u8>,
    /// Slots of an edge-group coordinate.
    pub group_slots: Vec<[u8; 4]>,
    /// Middle-edge permutation of an `M_GROUP` coordinate, or 255 if some middle
    /// edge sits outside the middle slice.
    pub mid_of_group: Vec<u8>,
    /// Index into `A_MOVES` of each move, or 255.
    pub a_index: [u8; N_MOVES],
}

fn table<F: Fn(usize, usize) -> u16>(n: usize, moves: usize, f: F) -> Vec<u16> {
    let mut t = vec![0u16; n * moves];
    for v in 0..n {
        for m in 0..moves {
            t[v * moves + m] = f(v, m);
        }
    }
    t
}

fn corner_state(c: usize) -> CubieState {
    let mut s = CubieState::solved();
    unrank_perm(c as u32, &mut s.cp);
    s
}

fn ud_state(e: usize) -> CubieState {
    Phase2Coord {
        corner: 0,
        ud_edge: e as u16,
        mid: 0,
    }
    .decode()
}

fn mid_state(m: usize) -> CubieState {
    Phase2Coord {
        corner: 0,
        ud_edge: 0,
        mid: m as u8,
    }
    .decode()
}

fn ud_of(s: &CubieState) -> u16 {
    Phase2Coord::encode_unchecked(s).ud_edge
}

fn mid_of(s: &CubieState) -> u8 {
    Phase2Coord::encode_unchecked(s).mid
}

fn corner_of(s: &CubieState) -> u16 {
    rank_perm(&s.cp) as u16
}

impl MoveTables {
    fn build() -> MoveTables {
        let mv = |m: usize| move_cube(Move::from_index(m));
        let amv = |k: usize| move_cube(Move::from_index(A_MOVES[k]));
        let sym = |s: usize| SymmetryIndex(s as u8);

        let twist = table(N_TWIST, N_MOVES, |v, m| {
            let mut s = CubieState::solved();
            set_twist(&mut s, v as u16);
            twist_of(&s.multiply(mv(m)))
        });
        let flip = table(N_FLIP, N_MOVES, |v, m| {
            let mut s = CubieState::solved();
            set_flip(&mut s, v as u16);
            flip_of(&s.multiply(mv(m)))
        });
        let slice = table(N_SLICE, N_MOVES, |v, m| {
            let mut s = CubieState::solved();
            super::phase1::set_slice(&mut s, v as u16);
            slice_of(&s.multiply(mv(m)))
        });
        let corner = table(N_CORNER_PERM, N_MOVES, |v, m| {
            corner_of(&corner_state(v).multiply(mv(m)))
        });
        let group = |g: [u8; 4]| {
            table(N_EDGE_GROUP, N_MOVES, move |v, m| {
                group_coord(&state_with_group(g, v as u16).multiply(mv(m)), g)
            })
        };
        let u_edges = group(U_GROUP);
        let d_edges = group(D_GROUP);
        let m_edges = group(M_GROUP);

        let corner_a = table(N_CORNER_PERM, N_A, |v, k| corner[v * N_MOVES + A_MOVES[k]]);
        let ud_edge_a = table(N_UD_EDGE_PERM, N_A, |v, k| {
            ud_of(&ud_state(v).multiply(amv(k)))
        });
        let mid_a: Vec<u8> = table(N_MID_PERM, N_A, |v, k| {
            mid_of(&mid_state(v).multiply(amv(k))) as u16
        })
        .into_iter()
        .map(|x| x as u8)
        .collect();

        let corner_left = table(N_CORNER_PERM, N_A, |v, k| {
            corner_of(&amv(k).multiply(&corner_state(v)))
        });
        let ud_edge_left = table(N_UD_EDGE_PERM, N_A, |v, k| {
            ud_of(&amv(k).multiply(&ud_state(v)))
        });
        let mid_left: Vec<u8> = table(N_MID_PERM, N_A, |v, k| {
            mid_of(&amv(k).multiply(&mid_state(v))) as u16
        })
        .into_iter()
        .map(|x| x as u8)
        .collect();

        let corner_inv = (0..N_CORNER_PERM)
            .map(|v| corner_of(&corner_state(v).inverse()))
            .collect();
        let ud_edge_inv = (0..N_UD_EDGE_PERM)
            .map(|v| ud_of(&ud_state(v).inverse()))
            .collect();
        let mid_inv = (0..N_MID_PERM)
            .map(|v| mid_of(&mid_state(v).inverse()))
            .collect();

        let twist_conj = table(N_TWIST, N_SYM_UD, |v, s| {
            let mut c = CubieState::solved();
            set_twist(&mut c, v as u16);
            twist_of(&c.conjugate(sym(s)))
        });
        let corner_conj = table(N_CORNER_PERM, N_SYM_UD, |v, s| {
            corner_of(&corner_state(v).conjugate(sym(s)))
        });
        let ud_edge_conj = table(N_UD_EDGE_PERM, N_SYM_UD, |v, s| {
            ud_of(&ud_state(v).conjugate(sym(s)))
        });
        let mid_conj: Vec<u8> = table(N_MID_PERM, N_SYM_UD, |v, s| {
            mid_of(&mid_state(v).conjugate(sym(s))) as u16
        })
        .into_iter()
        .map(|x| x as u8)
        .collect();

        let group_slots: Vec<[u8; 4]> = (0..N_EDGE_GROUP as u16).map(unrank_slots4).collect();
        let mid_of_group = group_slots
            .iter()
            .map(|pos| {
                if pos.iter().all(|&p| (4..8).contains(&p)) {
                    let mut perm = [0u8; 4];
                    for (k, &p) in pos.iter().enumerate() {
                        perm[p as usize - 4] = k as u8;
                    }
                    rank_perm(&perm) as u8
                } else {
                    255
                }
            })
            .collect();
        let mut a_index = [255u8; N_MOVES];
        for (k, &m) in A_MOVES.iter().enumerate() {
            a_index[m] = k as u8;
        }

        MoveTables {
            twist,
            flip,
            slice,
            corner,
            u_edges,
            d_edges,
            m_edges,
            corner_a,
            ud_edge_a,
            mid_a,
            corner_left,
            ud_edge_left,
            mid_left,
            corner_inv,
            ud_edge_inv,
            mid_inv,
            twist_conj,
            corner_conj,
            ud_edge_conj,
            mid_conj,
            group_slots,
            mid_of_group,
            a_index,
        }
    }

    pub fn get() -> &'static MoveTables {
        static T: OnceLock<MoveTables> = OnceLock::new();
        T.get_or_init(MoveTables::build)
    }

    /// Phase-2 coordinate of a position in H given its corner permutation and
    /// the three edge-group coordinates. Returns `None` if the edges do not
    /// describe a position of H.
    pub fn phase2_from_groups(&self, corner: u16, u: u16, d: u16, m: u16) -> Option<Phase2Coord> {
        let mid = self.mid_of_group[m as usize];
        if mid == 255 {
            return None;
        }
        let mut ud = [0u8; 8];
        for (k, &slot) in self.group_slots[u as usize].iter().enumerate() {
            ud[ud_slot_index(slot)?] = k as u8;
        }
        for (k, &slot) in self.group_slots[d as usize].iter().enumerate() {
            ud[ud_slot_index(slot)?] = 4 + k as u8;
        }
        Some(Phase2Coord {
            corner,
            ud_edge: rank_perm(&ud) as u16,
            mid,
        })
    }

    /// Left multiplication of an H coordinate by the `k`-th move of A.
    #[inline]
    pub fn left_multiply(&self, c: Phase2Coord, k: usize) -> Phase2Coord {
        Phase2Coord {
            corner: self.corner_left[c.corner as usize * N_A + k],
            ud_edge: self.ud_edge_left[c.ud_edge as usize * N_A + k],
            mid: self.mid_left[c.mid as usize * N_A + k],
        }
    }

    /// Right multiplication (applying the `k`-th move of A).
    #[inline]
    pub fn apply_a(&self, c: Phase2Coord, k: usize) -> Phase2Coord {
        Phase2Coord {
            corner: self.corner_a[c.corner as usize * N_A + k],
            ud_edge: self.ud_edge_a[c.ud_edge as usize * N_A + k],
            mid: self.mid_a[c.mid as usize * N_A + k],
        }
    }

    #[inline]
    pub fn invert_h(&self, c: Phase2Coord) -> Phase2Coord {
        Phase2Coord {
            corner: self.corner_inv[c.corner as usize],
            ud_edge: self.ud_edge_inv[c.ud_edge as usize],
            mid: self.mid_inv[c.mid as usize],
        }
    }

    /// `s⁻¹ · h · s` for one of the 16 U/D-axis symmetries.
    #[inline]
    pub fn conjugate_h(&self, c: Phase2Coord, s: usize) -> Phase2Coord {
        Phase2Coord {
            corner: self.corner_conj[c.corner as usize * N_SYM_UD + s],
            ud_edge: self.ud_edge_conj[c.ud_edge as usize * N_SYM_UD + s],
            mid: self.mid_conj[c.mid as usize * N_SYM_UD + s],
        }
    }
}

#[inline]
fn ud_slot_index(slot: u8) -> Option<usize> {
    UD_SLOTS.iter().position(|&s| s == slot as usize)
}
