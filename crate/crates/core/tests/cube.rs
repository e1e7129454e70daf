use std::collections::HashSet;

use cosetcube::cube::{CubieState, Face, Move, MoveSequence, SymmetryIndex, Twist};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn seq(s: &str) -> MoveSequence {
    MoveSequence::parse(s).unwrap()
}

#[test]
fn eighteen_moves() {
    let all: HashSet<Move> = Move::all().collect();
    assert_eq!(all.len(), 18);
}

#[test]
fn u_has_order_four() {
    let u = Move::new(Face::U, Twist::Cw90);
    let mut s = CubieState::solved();
    for _ in 0..4 {
        s = s.apply_move(u);
    }
    assert!(s.is_solved());
}

#[test]
fn f_flips_four_edges() {
    let s = CubieState::solved().apply_move(Move::new(Face::F, Twist::Cw90));
    assert_eq!(s.eo.iter().filter(|&&o| o == 1).count(), 4);
}

#[test]
fn orientation_preserving_moves() {
    for m in Move::all() {
        let s = CubieState::solved().apply_move(m);
        let half = m.twist == Twist::Half;
        if half || matches!(m.face, Face::U | Face::D) {
            assert!(s.co.iter().all(|&o| o == 0), "{m}");
        }
        if half || matches!(m.face, Face::U | Face::D | Face::R | Face::L) {
            assert!(s.eo.iter().all(|&o| o == 0), "{m}");
        }
    }
}

#[test]
fn pons_asinorum_moves_edges_only() {
    let s = CubieState::from_sequence(&seq("R2L2U2D2F2B2"));
    let solved = CubieState::solved();
    assert_eq!(s.cp, solved.cp);
    assert_eq!(s.co, solved.co);
    assert_eq!(s.eo, solved.eo);
    assert_ne!(s.ep, solved.ep);
}

#[test]
fn sequences() {
    assert!(CubieState::from_sequence(&MoveSequence::new()).is_solved());
    assert!(CubieState::from_sequence(&seq("R R'")).is_solved());
    let rep = CubieState::from_sequence(&seq("R'B2UB2U'R"));
    assert!(rep.is_valid());
    assert!(!rep.is_solved());
}

#[test]
fn inversion() {
    assert_eq!(seq("R U2").inverse().to_string(), "U2 R'");
    assert!(CubieState::solved().inverse().is_solved());
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..100 {
        let p = CubieState::random(&mut rng);
        assert!(p.multiply(&p.inverse()).is_solved());
    }
    let q = seq("F R' U2 B D' L");
    assert_eq!(
        CubieState::from_sequence(&q.inverse()),
        CubieState::from_sequence(&q).inverse()
    );
}

#[test]
fn conjugation() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for m in SymmetryIndex::all() {
        assert!(CubieState::solved().conjugate(m).is_solved());
    }
    let sf: HashSet<CubieState> = SymmetryIndex::all()
        .map(|m| CubieState::superflip().conjugate(m))
        .collect();
    assert_eq!(sf.len(), 1);
    let p = CubieState::random(&mut rng);
    let all: HashSet<CubieState> = SymmetryIndex::all().map(|m| p.conjugate(m)).collect();
    assert_eq!(all.len(), 48);
    for m in SymmetryIndex::all() {
        assert_eq!(p.conjugate(m).conjugate(m.inverse()), p);
        for n in SymmetryIndex::all() {
            assert_eq!(p.conjugate(m.compose(n)), p.conjugate(m).conjugate(n));
        }
    }
}

#[test]
fn validation() {
    assert!(CubieState::solved().validate().is_ok());
    assert!(CubieState::superflip().is_valid());
    let mut s = CubieState::solved();
    s.co[0] = 1;
    assert!(s.validate().corner_twist_sum);
    let mut s = CubieState::solved();
    s.ep.swap(0, 1);
    assert!(s.validate().permutation_parity);
}

#[test]
fn parsing() {
    assert_eq!(seq("R2L2U2D2F2B2").len(), 6);
    let r = seq("R'");
    assert_eq!(r.moves(), &[Move::new(Face::R, Twist::Ccw90)]);
    let e = MoveSequence::parse("X2").unwrap_err();
    assert_eq!(e.offset, 0);
    assert_eq!(seq("R'B2U").to_string(), "R' B2 U");
}

#[test]
fn ball_of_radius_four_matches_sequence_replay() {
    // Breadth-first over moves, against replaying every canonical sequence.
    let mut seen: HashSet<CubieState> = HashSet::from([CubieState::solved()]);
    let mut frontier = vec![CubieState::solved()];
    for _ in 0..4 {
        let mut next = Vec::new();
        for p in &frontier {
            for m in Move::all() {
                let q = p.apply_move(m);
                if seen.insert(q) {
                    next.push(q);
                }
            }
        }
        frontier = next;
    }
    let mut replay = HashSet::new();
    let mut stack = vec![MoveSequence::new()];
    while let Some(s) = stack.pop() {
        replay.insert(CubieState::from_sequence(&s));
        if s.len() < 4 {
            for m in Move::all() {
                let mut t = s.clone();
                t.0.push(m);
                stack.push(t);
            }
        }
    }
    assert_eq!(seen.len(), replay.len());
    assert_eq!(seen.len(), 1 + 18 + 243 + 3240 + 43239);
}

fn arb_seq() -> impl Strategy<Value = MoveSequence> {
    prop::collection::vec(0usize..18, 0..30)
        .prop_map(|v| MoveSequence::from_moves(v.into_iter().map(Move::from_index)))
}

proptest! {
    #[test]
    fn format_parse_roundtrip(q in arb_seq()) {
        prop_assert_eq!(MoveSequence::parse(&q.to_string()).unwrap(), q);
    }

    #[test]
    fn moves_keep_states_valid(q in arb_seq(), m in 0usize..18) {
        let p = CubieState::from_sequence(&q);
        prop_assert!(p.apply_move(Move::from_index(m)).is_valid());
    }

    #[test]
    fn multiplication_is_associative(a in arb_seq(), b in arb_seq(), c in arb_seq()) {
        let (a, b, c) = (CubieState::from_sequence(&a), CubieState::from_sequence(&b), CubieState::from_sequence(&c));
        prop_assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
    }
}
