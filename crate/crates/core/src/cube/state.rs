//! Cubie-level cube positions.
//!
//! Slot numbering (fixed for the whole crate):
//!
//! ```text
//! corners: 0 URF  1 UFL  2 ULB  3 UBR  4 DFR  5 DLF  6 DBL  7 DRB
//! edges:   0 UR   1 UF   2 UL   3 UB      (U layer)
//!          4 FR   5 FL   6 BL   7 BR      (middle layer)
//!          8 DR   9 DF  10 DL  11 DB      (D layer)
//! ```
//!
//! `cp[i]` names the corner cubie sitting in slot `i`, and `co[i]` its twist in
//! units of 120 degrees clockwise, measured from the U/D facelet. Edge
//! orientation is the one preserved by U, D, R, L, F2 and B2.
//!
//! Composition follows sequence order: `a.multiply(&b)` is "do `a`, then `b`".

use std::fmt;

use rand::Rng;

use super::moves::{Move, N_MOVES};
use super::notation::MoveSequence;

pub mod corner {
    pub const URF: u8 = 0;
    pub const UFL: u8 = 1;
    pub const ULB: u8 = 2;
    pub const UBR: u8 = 3;
    pub const DFR: u8 = 4;
    pub const DLF: u8 = 5;
    pub const DBL: u8 = 6;
    pub const DRB: u8 = 7;
}

pub mod edge {
    pub const UR: u8 = 0;
    pub const UF: u8 = 1;
    pub const UL: u8 = 2;
    pub const UB: u8 = 3;
    pub const FR: u8 = 4;
    pub const FL: u8 = 5;
    pub const BL: u8 = 6;
    pub const BR: u8 = 7;
    pub const DR: u8 = 8;
    pub const DF: u8 = 9;
    pub const DL: u8 = 10;
    pub const DB: u8 = 11;
}

/// Edge slots of the middle (UD) slice.
pub const MID_SLOTS: [usize; 4] = [4, 5, 6, 7];
/// Edge slots of the U and D layers, in the order used by the phase-2 edge coordinate.
pub const UD_SLOTS: [usize; 8] = [0, 1, 2, 3, 8, 9, 10, 11];

#[inline]
pub fn is_mid_edge(e: u8) -> bool {
    (4..8).contains(&e)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubieState {
    pub cp: [u8; 8],
    pub co: [u8; 8],
    pub ep: [u8; 12],
    pub eo: [u8; 12],
}

/// Which of the three group invariants a state breaks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Violations {
    /// Arrays are not permutations, or orientation values are out of range.
    pub malformed: bool,
    pub corner_twist_sum: bool,
    pub edge_flip_sum: bool,
    pub permutation_parity: bool,
}

impl Violations {
    pub fn is_ok(&self) -> bool {
        *self == Violations::default()
    }
}

impl fmt::Display for Violations {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return f.write_str("ok");
        }
        let mut parts = Vec::new();
        if self.malformed {
            parts.push("malformed arrays");
        }
        if self.corner_twist_sum {
            parts.push("corner orientation sum not divisible by 3");
        }
        if self.edge_flip_sum {
            parts.push("edge orientation sum odd");
        }
        if self.permutation_parity {
            parts.push("corner and edge permutation parities differ");
        }
        f.write_str(&parts.join("; "))
    }
}

const SOLVED: CubieState = CubieState {
    cp: [0, 1, 2, 3, 4, 5, 6, 7],
    co: [0; 8],
    ep: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11],
    eo: [0; 12],
};

/// Clockwise quarter turns of U, F, R, D, B, L.
const BASIC_MOVES: [CubieState; 6] = {
    use corner::*;
    use edge::*;
    [
        // U
        CubieState {
            cp: [UBR, URF, UFL, ULB, DFR, DLF, DBL, DRB],
            co: [0; 8],
            ep: [UB, UR, UF, UL, FR, FL, BL, BR, DR, DF, DL, DB],
            eo: [0; 12],
        },
        // F
        CubieState {
            cp: [UFL, DLF, ULB, UBR, URF, DFR, DBL, DRB],
            co: [1, 2, 0, 0, 2, 1, 0, 0],
            ep: [UR, FL, UL, UB, UF, DF, BL, BR, DR, FR, DL, DB],
            eo: [0, 1, 0, 0, 1, 1, 0, 0, 0, 1, 0, 0],
        },
        // R
        CubieState {
            cp: [DFR, UFL, ULB, URF, DRB, DLF, DBL, UBR],
            co: [2, 0, 0, 1, 1, 0, 0, 2],
            ep: [FR, UF, UL, UB, DR, FL, BL, UR, BR, DF, DL, DB],
            eo: [0; 12],
        },
        // D
        CubieState {
            cp: [URF, UFL, ULB, UBR, DLF, DBL, DRB, DFR],
            co: [0; 8],
            ep: [UR, UF, UL, UB, FR, FL, BL, BR, DF, DL, DB, DR],
            eo: [0; 12],
        },
        // B
        CubieState {
            cp: [URF, UFL, UBR, DRB, DFR, DLF, ULB, DBL],
            co: [0, 0, 1, 2, 0, 0, 2, 1],
            ep: [UR, UF, UL, BR, FR, FL, UB, DB, DR, DF, DL, BL],
            eo: [0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 0, 1],
        },
        // L
        CubieState {
            cp: [URF, ULB, DBL, UBR, DFR, UFL, DLF, DRB],
            co: [0, 1, 2, 0, 0, 2, 1, 0],
            ep: [UR, UF, BL, UB, FR, UL, DL, BR, DR, DF, FL, DB],
            eo: [0; 12],
        },
    ]
};

fn build_move_cubes() -> [CubieState; N_MOVES] {
    let mut out = [SOLVED; N_MOVES];
    for (f, basic) in BASIC_MOVES.iter().enumerate() {
        let mut c = *basic;
        for t in 0..3 {
            out[f * 3 + t] = c;
            c = c.multiply(basic);
        }
    }
    out
}

pub fn move_cube(mv: Move) -> &'static CubieState {
    use std::sync::OnceLock;
    static CUBES: OnceLock<[CubieState; N_MOVES]> = OnceLock::new();
    &CUBES.get_or_init(build_move_cubes)[mv.index()]
}

fn parity<const N: usize>(p: &[u8; N]) -> u8 {
    let mut s = 0;
    for i in 0..N {
        for j in i + 1..N {
            if p[i] > p[j] {
                s ^= 1;
            }
        }
    }
    s
}

impl CubieState {
    pub const fn solved() -> CubieState {
        SOLVED
    }

    /// Every cubie in place, corners oriented, all twelve edges flipped.
    pub fn superflip() -> CubieState {
        CubieState {
            eo: [1; 12],
            ..SOLVED
        }
    }

    pub fn is_solved(&self) -> bool {
        *self == SOLVED
    }

    /// `self` followed by `other`.
    ///
    /// Corner orientations 3..5 mark mirrored cubies; they only arise for
    /// reflection symmetries and cancel out in any conjugate.
    pub fn multiply(&self, other: &CubieState) -> CubieState {
        let mut r = CubieState::solved();
        for i in 0..8 {
            let src = other.cp[i] as usize;
            r.cp[i] = self.cp[src];
            let a = self.co[src] as i8;
            let b = other.co[i] as i8;
            let o = if a < 3 && b < 3 {
                (a + b) % 3
            } else if a < 3 {
                let o = a + b;
                if o >= 6 {
                    o - 3
                } else {
                    o
                }
            } else if b < 3 {
                let o = a - b;
                if o < 3 {
                    o + 3
                } else {
                    o
                }
            } else {
                let o = a - b;
                if o < 0 {
                    o + 3
                } else {
                    o
                }
            };
            r.co[i] = o as u8;
        }
        for i in 0..12 {
            let src = other.ep[i] as usize;
            r.ep[i] = self.ep[src];
            r.eo[i] = (self.eo[src] + other.eo[i]) & 1;
        }
        r
    }

    pub fn inverse(&self) -> CubieState {
        let mut r = CubieState::solved();
        for i in 0..8 {
            r.cp[self.cp[i] as usize] = i as u8;
        }
        for i in 0..8 {
            let o = self.co[r.cp[i] as usize];
            r.co[i] = if o >= 3 { o } else { (3 - o) % 3 };
        }
        for i in 0..12 {
            r.ep[self.ep[i] as usize] = i as u8;
        }
        for i in 0..12 {
            r.eo[i] = self.eo[r.ep[i] as usize];
        }
        r
    }

    pub fn apply_move(&self, mv: Move) -> CubieState {
        self.multiply(move_cube(mv))
    }

    pub fn apply_sequence(&self, q: &MoveSequence) -> CubieState {
        q.moves().iter().fold(*self, |s, &m| s.apply_move(m))
    }

    pub fn from_sequence(q: &MoveSequence) -> CubieState {
        SOLVED.apply_sequence(q)
    }

    pub fn corner_parity(&self) -> u8 {
        parity(&self.cp)
    }

    pub fn edge_parity(&self) -> u8 {
        parity(&self.ep)
    }

    pub fn validate(&self) -> Violations {
        let mut v = Violations::default();
        let mut seen_c = [false; 8];
        for (&p, &o) in self.cp.iter().zip(&self.co) {
            if p >= 8 || seen_c[p as usize] || o >= 3 {
                v.malformed = true;
            } else {
                seen_c[p as usize] = true;
            }
        }
        let mut seen_e = [false; 12];
        for (&p, &o) in self.ep.iter().zip(&self.eo) {
            if p >= 12 || seen_e[p as usize] || o >= 2 {
                v.malformed = true;
            } else {
                seen_e[p as usize] = true;
            }
        }
        if v.malformed {
            return v;
        }
        v.corner_twist_sum = self.co.iter().map(|&x| x as u32).sum::<u32>() % 3 != 0;
        v.edge_flip_sum = self.eo.iter().map(|&x| x as u32).sum::<u32>() % 2 != 0;
        v.permutation_parity = self.corner_parity() != self.edge_parity();
        v
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Uniformly random reachable position.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> CubieState {
        let mut s = SOLVED;
        for i in (1..8).rev() {
            s.cp.swap(i, rng.random_range(0..=i));
        }
        for i in (1..12).rev() {
            s.ep.swap(i, rng.random_range(0..=i));
        }
        if s.corner_parity() != s.edge_parity() {
            s.ep.swap(0, 1);
        }
        let mut tw = 0;
        for i in 0..7 {
            s.co[i] = rng.random_range(0..3);
            tw += s.co[i];
        }
        s.co[7] = (3 - tw % 3) % 3;
        let mut fl = 0;
        for i in 0..11 {
            s.eo[i] = rng.random_range(0..2);
            fl += s.eo[i];
        }
        s.eo[11] = fl & 1;
        s
    }

    /// Whether the position lies in H: all orientations zero and the middle-slice
    /// edges inside the middle slice.
    pub fn in_h(&self) -> bool {
        self.co.iter().all(|&o| o == 0)
            && self.eo.iter().all(|&o| o == 0)
            && MID_SLOTS.iter().all(|&s| is_mid_edge(self.ep[s]))
    }
}

impl Default for CubieState {
    fn default() -> Self {
        SOLVED
    }
}

/// Four integer lists: corner permutation, corner orientation, edge permutation,
/// edge orientation.
impl fmt::Display for CubieState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(f: &mut fmt::Formatter<'_>, xs: &[u8]) -> fmt::Result {
            f.write_str("[")?;
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")
        }
        list(f, &self.cp)?;
        f.write_str(" ")?;
        list(f, &self.co)?;
        f.write_str(" ")?;
        list(f, &self.ep)?;
        f.write_str(" ")?;
        list(f, &self.eo)
    }
}

impl fmt::Debug for CubieState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CubieState({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::moves::{Face, Twist};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    fn seq(s: &str) -> MoveSequence {
        MoveSequence::parse(s).unwrap()
    }

    #[test]
    fn quarter_turn_has_order_four() {
        for f in Face::ALL {
            let m = Move::new(f, Twist::Cw90);
            let mut s = CubieState::solved();
            for _ in 0..4 {
                s = s.apply_move(m);
            }
            assert!(s.is_solved(), "{f:?}");
        }
    }

    #[test]
    fn f_flips_exactly_four_edges() {
        let s = CubieState::solved().apply_move(Move::new(Face::F, Twist::Cw90));
        assert_eq!(s.eo.iter().filter(|&&o| o == 1).count(), 4);
        let b = CubieState::solved().apply_move(Move::new(Face::B, Twist::Ccw90));
        assert_eq!(b.eo.iter().filter(|&&o| o == 1).count(), 4);
    }

    #[test]
    fn orientation_preservation_by_move_class() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let p = CubieState::random(&mut rng);
            for m in Move::all() {
                let q = p.apply_move(m);
                let keeps_corners = matches!(m.face, Face::U | Face::D) || m.twist == Twist::Half;
                let keeps_edges = matches!(m.face, Face::U | Face::D | Face::R | Face::L)
                    || m.twist == Twist::Half;
                // orientation multiset of the moved cubies, not slot-by-slot
                let sort = |mut v: Vec<(u8, u8)>| {
                    v.sort();
                    v
                };
                let pc = sort(p.cp.iter().copied().zip(p.co).collect());
                let qc = sort(q.cp.iter().copied().zip(q.co).collect());
                let pe = sort(p.ep.iter().copied().zip(p.eo).collect());
                let qe = sort(q.ep.iter().copied().zip(q.eo).collect());
                if keeps_corners {
                    assert_eq!(pc, qc, "{m}");
                }
                if keeps_edges {
                    assert_eq!(pe, qe, "{m}");
                }
            }
        }
    }

    #[test]
    fn pons_asinorum_changes_edge_permutation_only() {
        let p = CubieState::from_sequence(&seq("R2L2U2D2F2B2"));
        assert_eq!(p.cp, SOLVED.cp);
        assert_eq!(p.co, SOLVED.co);
        assert_eq!(p.eo, SOLVED.eo);
        assert_ne!(p.ep, SOLVED.ep);
        // every edge swapped with its opposite across the centre
        use edge::*;
        assert_eq!(p.ep, [DL, DB, DR, DF, BL, BR, FR, FL, UL, UB, UR, UF]);
    }

    #[test]
    fn sequence_and_inverse() {
        assert!(CubieState::from_sequence(&MoveSequence::new()).is_solved());
        assert!(CubieState::from_sequence(&seq("R R'")).is_solved());
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let p = CubieState::random(&mut rng);
            assert!(p.multiply(&p.inverse()).is_solved());
            assert!(p.inverse().multiply(&p).is_solved());
        }
        let q = seq("R U2 F' L D B2");
        assert_eq!(
            CubieState::from_sequence(&q.inverse()),
            CubieState::from_sequence(&q).inverse()
        );
        assert!(CubieState::solved().inverse().is_solved());
    }

    #[test]
    fn group_laws() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let a = CubieState::random(&mut rng);
            let b = CubieState::random(&mut rng);
            let c = CubieState::random(&mut rng);
            assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
            assert_eq!(a.multiply(&SOLVED), a);
            assert_eq!(SOLVED.multiply(&a), a);
            assert!(a.is_valid());
        }
    }

    #[test]
    fn validate_reports_each_invariant() {
        assert!(SOLVED.validate().is_ok());
        assert!(CubieState::superflip().validate().is_ok());
        let mut t = SOLVED;
        t.co[0] = 1;
        let v = t.validate();
        assert!(v.corner_twist_sum && !v.edge_flip_sum && !v.permutation_parity);
        let mut s = SOLVED;
        s.ep.swap(0, 1);
        let v = s.validate();
        assert!(v.permutation_parity && !v.corner_twist_sum && !v.edge_flip_sum);
        let mut f = SOLVED;
        f.eo[3] = 1;
        assert!(f.validate().edge_flip_sum);
        let mut m = SOLVED;
        m.cp[0] = 1;
        assert!(m.validate().malformed);
    }

    #[test]
    fn moves_keep_states_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let p = CubieState::random(&mut rng);
            for m in Move::all() {
                assert!(p.apply_move(m).is_valid());
            }
        }
    }

    /// Brute-force every sequence of length <= 4 and compare with a
    /// breadth-first enumeration built from single moves.
    #[test]
    fn ball_of_radius_four_matches_bfs() {
        let mut bfs: HashSet<CubieState> = HashSet::from([SOLVED]);
        let mut frontier = vec![SOLVED];
        let mut level_sizes = vec![1usize];
        for _ in 0..4 {
            let mut next = Vec::new();
            for s in &frontier {
                for m in Move::all() {
                    let t = s.apply_move(m);
                    if bfs.insert(t) {
                        next.push(t);
                    }
                }
            }
            level_sizes.push(next.len());
            frontier = next;
        }
        let mut brute: HashSet<CubieState> = HashSet::new();
        for len in 0..=4u32 {
            for code in 0..18usize.pow(len) {
                let mut c = code;
                let mut q = MoveSequence::new();
                for _ in 0..len {
                    q.0.push(Move::from_index(c % 18));
                    c /= 18;
                }
                brute.insert(CubieState::from_sequence(&q));
            }
        }
        assert_eq!(bfs, brute);
        assert_eq!(level_sizes, vec![1, 18, 243, 3240, 43239]);
    }

    #[test]
    fn dump_format() {
        assert_eq!(
            SOLVED.to_string(),
            "[0,1,2,3,4,5,6,7] [0,0,0,0,0,0,0,0] [0,1,2,3,4,5,6,7,8,9,10,11] [0,0,0,0,0,0,0,0,0,0,0,0]"
        );
    }
}
