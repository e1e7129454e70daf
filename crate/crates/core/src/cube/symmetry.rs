//! The 48 whole-cube symmetries (24 rotations, each optionally mirrored).
//!
//! Symmetry `i` is `URF3^a * F2^b * U4^c * LR2^d` with `i = 16a + 8b + 2c + d`:
//! `URF3` is the 120 degree turn about the URF-DBL diagonal, `F2` the half turn
//! about the F axis, `U4` the quarter turn about the U axis and `LR2` the
//! left-right mirror. Indices `0..16` are exactly the symmetries that keep the
//! U/D axis in place, which are the ones that map H onto itself.

use std::sync::OnceLock;

use super::moves::{Move, N_MOVES};
use super::state::{corner::*, edge::*, CubieState};

pub const N_SYM: usize = 48;
/// Symmetries fixing the U/D axis.
pub const N_SYM_UD: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymmetryIndex(pub u8);

impl SymmetryIndex {
    pub const IDENTITY: SymmetryIndex = SymmetryIndex(0);
    /// Quarter turn of the whole cube about the URF corner: a relabelling that
    /// moves the U/D axis onto another face axis.
    pub const URF3: SymmetryIndex = SymmetryIndex(16);
    pub const URF3_SQ: SymmetryIndex = SymmetryIndex(32);

    pub fn all() -> impl Iterator<Item = SymmetryIndex> {
        (0..N_SYM as u8).map(SymmetryIndex)
    }

    pub fn ud_preserving() -> impl Iterator<Item = SymmetryIndex> {
        (0..N_SYM_UD as u8).map(SymmetryIndex)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn inverse(self) -> SymmetryIndex {
        SymmetryIndex(tables().inverse[self.index()])
    }

    /// `self` followed by `other`.
    pub fn compose(self, other: SymmetryIndex) -> SymmetryIndex {
        SymmetryIndex(tables().product[self.index()][other.index()])
    }

    pub fn cube(self) -> &'static CubieState {
        &tables().cubes[self.index()]
    }

    pub fn is_reflection(self) -> bool {
        self.0 & 1 == 1
    }

    /// The move `m⁻¹ · mv · m` for symmetry `m = self`.
    pub fn conjugate_move(self, mv: Move) -> Move {
        Move::from_index(tables().move_conj[self.index()][mv.index()] as usize)
    }
}

const S_URF3: CubieState = CubieState {
    cp: [URF, DFR, DLF, UFL, UBR, DRB, DBL, ULB],
    co: [1, 2, 1, 2, 2, 1, 2, 1],
    ep: [UF, FR, DF, FL, UR, DR, DL, UL, UB, BR, DB, BL],
    eo: [1, 0, 1, 0, 1, 1, 1, 1, 1, 0, 1, 0],
};

const S_F2: CubieState = CubieState {
    cp: [DLF, DFR, DRB, DBL, UFL, URF, UBR, ULB],
    co: [0; 8],
    ep: [DL, DF, DR, DB, FL, FR, BR, BL, UL, UF, UR, UB],
    eo: [0; 12],
};

const S_U4: CubieState = CubieState {
    cp: [UBR, URF, UFL, ULB, DRB, DFR, DLF, DBL],
    co: [0; 8],
    ep: [UB, UR, UF, UL, BR, FR, FL, BL, DB, DR, DF, DL],
    eo: [0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0],
};

const S_LR2: CubieState = CubieState {
    cp: [UFL, URF, UBR, ULB, DLF, DFR, DRB, DBL],
    co: [3; 8],
    ep: [UL, UF, UR, UB, FL, FR, BR, BL, DL, DF, DR, DB],
    eo: [0; 12],
};

pub(crate) struct SymTables {
    pub cubes: [CubieState; N_SYM],
    pub inverse: [u8; N_SYM],
    pub product: [[u8; N_SYM]; N_SYM],
    pub move_conj: [[u8; N_MOVES]; N_SYM],
}

fn build() -> SymTables {
    let mut cubes = [CubieState::solved(); N_SYM];
    let mut c = CubieState::solved();
    let mut idx = 0;
    for _ in 0..3 {
        for _ in 0..2 {
            for _ in 0..4 {
                for _ in 0..2 {
                    cubes[idx] = c;
                    idx += 1;
                    c = c.multiply(&S_LR2);
                }
                c = c.multiply(&S_U4);
            }
            c = c.multiply(&S_F2);
        }
        c = c.multiply(&S_URF3);
    }
    let find = |x: &CubieState| cubes.iter().position(|y| y == x).expect("closed") as u8;
    let mut inverse = [0u8; N_SYM];
    let mut product = [[0u8; N_SYM]; N_SYM];
    for i in 0..N_SYM {
        inverse[i] = find(&cubes[i].inverse());
        for j in 0..N_SYM {
            product[i][j] = find(&cubes[i].multiply(&cubes[j]));
        }
    }
    let mut move_conj = [[0u8; N_MOVES]; N_SYM];
    for s in 0..N_SYM {
        for mv in Move::all() {
            let conj = cubes[inverse[s] as usize]
                .multiply(crate::cube::state::move_cube(mv))
                .multiply(&cubes[s]);
            let m2 = Move::all()
                .find(|&m| crate::cube::state::move_cube(m) == &conj)
                .expect("symmetries map moves to moves");
            move_conj[s][mv.index()] = m2.index() as u8;
        }
    }
    SymTables {
        cubes,
        inverse,
        product,
        move_conj,
    }
}

pub(crate) fn tables() -> &'static SymTables {
    static T: OnceLock<SymTables> = OnceLock::new();
    T.get_or_init(build)
}

impl CubieState {
    /// `m⁻¹ · self · m`. Positions related this way have equal distance.
    pub fn conjugate(&self, m: SymmetryIndex) -> CubieState {
        let t = tables();
        t.cubes[t.inverse[m.index()] as usize]
            .multiply(self)
            .multiply(&t.cubes[m.index()])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::moves::Face;
    use crate::cube::notation::MoveSequence;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    #[test]
    fn forty_eight_distinct_elements_forming_a_group() {
        let t = tables();
        let set: HashSet<CubieState> = t.cubes.iter().copied().collect();
        assert_eq!(set.len(), 48);
        assert!(t.cubes[0].is_solved());
        for i in 0..N_SYM {
            assert_eq!(t.product[i][t.inverse[i] as usize], 0);
            for j in 0..N_SYM {
                for k in 0..N_SYM {
                    let a = t.product[t.product[i][j] as usize][k];
                    let b = t.product[i][t.product[j][k] as usize];
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn reflections_reverse_twist_direction() {
        for s in SymmetryIndex::all() {
            for mv in Move::all() {
                let c = s.conjugate_move(mv);
                assert_eq!(c.twist == mv.twist, !s.is_reflection() || !mv.is_quarter());
            }
        }
    }

    #[test]
    fn ud_preserving_symmetries_fix_the_ud_axis() {
        for s in SymmetryIndex::all() {
            let u = s.conjugate_move(Move::new(Face::U, crate::cube::moves::Twist::Cw90));
            let keeps = matches!(u.face, Face::U | Face::D);
            assert_eq!(keeps, s.index() < N_SYM_UD, "sym {}", s.0);
        }
    }

    #[test]
    fn conjugation_fixes_solved_and_is_an_action() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let p = CubieState::random(&mut rng);
        for m in SymmetryIndex::all() {
            assert!(CubieState::solved().conjugate(m).is_solved());
            assert!(p.conjugate(m).is_valid());
            assert_eq!(p.conjugate(m).conjugate(m.inverse()), p);
            for m2 in SymmetryIndex::all() {
                assert_eq!(p.conjugate(m.compose(m2)), p.conjugate(m).conjugate(m2));
            }
        }
        assert_eq!(p.conjugate(SymmetryIndex::IDENTITY), p);
    }

    #[test]
    fn conjugating_a_sequence_moves_by_moves() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..20 {
            let q = MoveSequence::from_moves(
                (0..15).map(|_| Move::from_index(rand::Rng::random_range(&mut rng, 0..18))),
            );
            let p = CubieState::from_sequence(&q);
            for m in SymmetryIndex::all() {
                let q2 = MoveSequence::from_moves(q.moves().iter().map(|&mv| m.conjugate_move(mv)));
                assert_eq!(CubieState::from_sequence(&q2), p.conjugate(m));
            }
        }
    }

    #[test]
    fn superflip_is_fully_symmetric() {
        let sf = CubieState::superflip();
        let conj: HashSet<CubieState> = SymmetryIndex::all().map(|m| sf.conjugate(m)).collect();
        assert_eq!(conj.len(), 1);
    }

    #[test]
    fn random_position_has_48_distinct_conjugates() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let p = CubieState::random(&mut rng);
        let conj: HashSet<CubieState> = SymmetryIndex::all().map(|m| p.conjugate(m)).collect();
        assert_eq!(conj.len(), 48);
    }

    #[test]
    fn inverse_commutes_with_conjugation() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let p = CubieState::random(&mut rng);
        for m in SymmetryIndex::all() {
            assert_eq!(p.inverse().conjugate(m), p.conjugate(m).inverse());
        }
    }
}
