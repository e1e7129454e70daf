use std::time::Duration;

use cosetcube::coords::Phase2Coord;
use cosetcube::cube::{CubieState, Move, MoveSequence};
use cosetcube::twophase::oracle::DistanceOracle;
use cosetcube::twophase::{phase2_solve, solve, solve_optimal, Mode, SolveOptions, PHASE2_MAX};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn seq(s: &str) -> MoveSequence {
    MoveSequence::parse(s).unwrap()
}

fn solves(p: &CubieState, s: &MoveSequence) -> bool {
    p.apply_sequence(s).is_solved()
}

#[test]
fn solved_needs_no_moves() {
    let r = solve(&CubieState::solved(), &SolveOptions::default()).unwrap();
    assert_eq!(r.length(), Some(0));
    let r = solve_optimal(&CubieState::solved(), &SolveOptions::default()).unwrap();
    assert_eq!(r.length(), Some(0));
}

#[test]
fn superflip_in_twenty() {
    let opts = SolveOptions {
        target_length: 20,
        ..SolveOptions::with_mode(Mode::Six)
    };
    let p = CubieState::superflip();
    let r = solve(&p, &opts).unwrap();
    let s = r.solution.unwrap();
    assert_eq!(s.len(), 20);
    assert!(solves(&p, &s));
}

#[test]
fn random_positions_all_modes() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for mode in [Mode::Single, Mode::Triple, Mode::Six] {
        for _ in 0..5 {
            let p = CubieState::random(&mut rng);
            let opts = SolveOptions {
                target_length: 22,
                time_budget: Some(Duration::from_secs(30)),
                ..SolveOptions::with_mode(mode)
            };
            let r = solve(&p, &opts).unwrap();
            let s = r.solution.unwrap();
            assert!(s.len() <= 22, "{mode:?}");
            assert!(solves(&p, &s));
            assert!(r.improved_at.windows(2).all(|w| w[0].0 > w[1].0));
        }
    }
}

#[test]
fn node_budget_stops_search() {
    let opts = SolveOptions {
        node_budget: Some(1000),
        ..SolveOptions::default()
    };
    let r = solve(&CubieState::superflip(), &opts).unwrap();
    assert!(!r.exhausted);
}

#[test]
fn phase2_solutions() {
    assert_eq!(
        phase2_solve(Phase2Coord::IDENTITY, PHASE2_MAX)
            .unwrap()
            .len(),
        0
    );
    let h = CubieState::from_sequence(&seq("U R2"));
    let s = phase2_solve(Phase2Coord::encode(&h).unwrap(), PHASE2_MAX).unwrap();
    assert!(s.len() <= 2);
    assert!(solves(&h, &s));
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..20 {
        let c = Phase2Coord::unpack(rng.random_range(0..19_508_428_800)).unwrap();
        let s = phase2_solve(c, PHASE2_MAX).unwrap();
        assert!(solves(&c.decode(), &s));
    }
}

#[test]
fn optimal_matches_oracle() {
    let oracle = DistanceOracle::new(4);
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..15 {
        let len = rng.random_range(1..=7);
        let q =
            MoveSequence::from_moves((0..len).map(|_| Move::from_index(rng.random_range(0..18))));
        let p = CubieState::from_sequence(&q);
        let r = solve_optimal(&p, &SolveOptions::default()).unwrap();
        let s = r.solution.unwrap();
        assert!(solves(&p, &s));
        assert_eq!(Some(s.len() as u8), oracle.distance(&p), "{q}");
    }
}

#[test]
fn pons_asinorum_optimal() {
    let p = CubieState::from_sequence(&seq("R2L2U2D2F2B2"));
    let r = solve_optimal(&p, &SolveOptions::default()).unwrap();
    assert_eq!(
        r.length().map(|l| l as u8),
        DistanceOracle::new(3).distance(&p)
    );
}
