use std::collections::HashSet;

use cosetcube::coords::perm::{perm_parity, rank_perm, unrank_perm};
use cosetcube::coords::{
    MoveTables, Phase1Coord, Phase2Coord, VertexTable, H_SIZE, N_CORNER_PERM, N_FLIP, N_MID_PERM,
    N_SLICE, N_TWIST, N_UD_EDGE_PERM, R_SIZE,
};
use cosetcube::cube::{CubieState, Move, MoveSequence, SymmetryIndex, A_MOVES, N_MOVES};
use cosetcube::pruning::phase1::apply;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn space_sizes() {
    assert_eq!((N_TWIST, N_FLIP, N_SLICE), (2187, 2048, 495));
    assert_eq!(R_SIZE, 2_217_093_120);
    assert_eq!(
        (N_CORNER_PERM, N_UD_EDGE_PERM, N_MID_PERM),
        (40320, 40320, 24)
    );
    assert_eq!(H_SIZE, 19_508_428_800);
    // |G| = |R| * |H|
    let fact = |n: u128| (1..=n).product::<u128>();
    let g = fact(12) * fact(8) / 2 * 3u128.pow(8) / 3 * 2u128.pow(12) / 2;
    assert_eq!(g, R_SIZE as u128 * H_SIZE as u128);
    assert_eq!(g, 43_252_003_274_489_856_000);
}

#[test]
fn solved_coordinates() {
    assert!(Phase1Coord::relabel(&CubieState::solved()).is_solved());
    assert_eq!(
        Phase2Coord::encode(&CubieState::solved()).unwrap(),
        Phase2Coord::IDENTITY
    );
    assert!(Phase2Coord::encode(&CubieState::solved().apply_move(Move::from_index(3))).is_err());
}

#[test]
fn h_moves_keep_relabel_solved() {
    for m in Move::all() {
        let c = Phase1Coord::relabel(&CubieState::solved().apply_move(m));
        assert_eq!(c.is_solved(), A_MOVES.contains(&m.index()), "{m}");
    }
}

#[test]
fn permutation_ranking() {
    let mut seen = HashSet::new();
    let mut p = [0u8; 4];
    for r in 0..24 {
        unrank_perm(r, &mut p);
        assert_eq!(rank_perm(&p), r);
        seen.insert(p);
    }
    assert_eq!(seen.len(), 24);
    assert_eq!(perm_parity(&[0, 1, 2, 3]), 0);
    assert_eq!(perm_parity(&[1, 0, 2, 3]), 1);
}

#[test]
fn move_tables_agree_with_cubies() {
    let t = MoveTables::get();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..2000 {
        let p = CubieState::random(&mut rng);
        let m = rng.random_range(0..N_MOVES);
        let c = Phase1Coord::relabel(&p);
        assert_eq!(
            apply(t, c, m),
            Phase1Coord::relabel(&p.apply_move(Move::from_index(m)))
        );
    }
}

#[test]
fn phase2_tables_agree_with_cubies() {
    let t = MoveTables::get();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..500 {
        let seq = MoveSequence::from_moves(
            (0..20).map(|_| Move::from_index(A_MOVES[rng.random_range(0..10)])),
        );
        let h = CubieState::from_sequence(&seq);
        let c = Phase2Coord::encode(&h).unwrap();
        assert_eq!(c.decode(), h);
        assert!(c.parity_ok());
        for k in 0..10 {
            let m = Move::from_index(A_MOVES[k]);
            assert_eq!(
                t.apply_a(c, k),
                Phase2Coord::encode(&h.apply_move(m)).unwrap()
            );
            let left = CubieState::solved().apply_move(m).multiply(&h);
            assert_eq!(t.left_multiply(c, k), Phase2Coord::encode(&left).unwrap());
        }
        assert_eq!(t.invert_h(c), Phase2Coord::encode(&h.inverse()).unwrap());
    }
}

#[test]
fn vertex_counts() {
    let vt = VertexTable::get();
    assert_eq!(vt.count(), 138_639_780);
    assert_eq!(vt.solvable_count(), 282_828);
}

#[test]
fn vertices_are_symmetry_classes() {
    let vt = VertexTable::get();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..500 {
        let p = CubieState::random(&mut rng);
        let v = vt.canonical(Phase1Coord::relabel(&p));
        assert_eq!(vt.coord(v.index), v.coord);
        for s in SymmetryIndex::ud_preserving() {
            assert_eq!(vt.canonical(Phase1Coord::relabel(&p.conjugate(s))), v);
        }
        let n = vt.neighbors(v.index);
        for (m, &y) in n.iter().enumerate() {
            let q = v.coord.decode().apply_move(Move::from_index(m));
            assert_eq!(vt.canonical(Phase1Coord::relabel(&q)).index, y);
        }
    }
}

proptest! {
    #[test]
    fn phase1_roundtrip(tw in 0u16..2187, fl in 0u16..2048, sl in 0u16..495) {
        let c = Phase1Coord::new(tw, fl, sl).unwrap();
        prop_assert_eq!(Phase1Coord::relabel(&c.decode()), c);
        prop_assert_eq!(Phase1Coord::from_packed(c.packed()).unwrap(), c);
        prop_assert_eq!(Phase1Coord::from_flipslice(c.flipslice(), c.twist), c);
    }

    #[test]
    fn phase2_pack_is_bijective(i in 0u64..19_508_428_800) {
        let c = Phase2Coord::unpack(i).unwrap();
        prop_assert!(c.parity_ok());
        prop_assert_eq!(c.pack(), i);
        prop_assert_eq!(Phase2Coord::encode(&c.decode()).unwrap(), c);
    }
}

#[test]
fn out_of_range_coordinates() {
    assert!(Phase1Coord::new(2187, 0, 0).is_err());
    assert!(Phase2Coord::unpack(H_SIZE).is_err());
}
