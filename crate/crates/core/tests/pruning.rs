use std::collections::HashMap;

use cosetcube::coords::tables::N_A;
use cosetcube::coords::{MoveTables, Phase1Coord, Phase2Coord};
use cosetcube::cube::{CubieState, N_MOVES};
use cosetcube::pruning::census::census_a;
use cosetcube::pruning::phase1::apply;
use cosetcube::pruning::{d2bound, table_one_census, MoveSet, PackedDistanceTable, Phase1Table};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn packed_table_roundtrip() {
    let d: Vec<u8> = (0..1000u32).map(|i| (i % 13) as u8).collect();
    let t = PackedDistanceTable::from_distances(&d);
    assert_eq!(t.len(), 1000);
    assert_eq!(t.bytes().len(), 250);
    for (i, &x) in d.iter().enumerate() {
        assert_eq!(t.get(i as u64), x % 3);
    }
}

#[test]
fn packed_table_unpacks_a_path() {
    let n = 50u64;
    let d: Vec<u8> = (0..n as u8).collect();
    let t = PackedDistanceTable::from_distances(&d);
    let nb = |x: u64| [x.saturating_sub(1), (x + 1).min(n - 1)];
    assert_eq!(t.unpack(&[0], nb), d);
}

#[test]
fn phase1_distances_match_breadth_first_search() {
    // Oracle: plain breadth-first search over coordinates near H.
    let t = MoveTables::get();
    let table = Phase1Table::get();
    let mut dist: HashMap<Phase1Coord, u8> = HashMap::from([(Phase1Coord::default(), 0)]);
    let mut frontier = vec![Phase1Coord::default()];
    for d in 1..=5u8 {
        let mut next = Vec::new();
        for &c in &frontier {
            for m in 0..N_MOVES {
                let n = apply(t, c, m);
                if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(n) {
                    e.insert(d);
                    next.push(n);
                }
            }
        }
        frontier = next;
    }
    for (c, d) in dist {
        assert_eq!(table.distance(c), d, "{c}");
    }
}

#[test]
fn phase1_distance_is_at_most_position_distance() {
    let table = Phase1Table::get();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..2000 {
        let c = Phase1Coord::relabel(&CubieState::random(&mut rng));
        let d = table.distance(c);
        assert!(d <= 12);
        assert_eq!(table.descend(c).len(), d as usize);
    }
}

#[test]
fn phase2_bound_is_admissible() {
    let t = MoveTables::get();
    let mut dist: HashMap<Phase2Coord, u8> = HashMap::from([(Phase2Coord::IDENTITY, 0)]);
    let mut frontier = vec![Phase2Coord::IDENTITY];
    for d in 1..=5u8 {
        let mut next = Vec::new();
        for &c in &frontier {
            for k in 0..N_A {
                let n = t.apply_a(c, k);
                if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(n) {
                    e.insert(d);
                    next.push(n);
                }
            }
        }
        frontier = next;
    }
    assert_eq!(d2bound(Phase2Coord::IDENTITY), 0);
    for (c, d) in dist {
        assert!(d2bound(c) <= d);
    }
}

#[test]
fn census_over_a() {
    assert_eq!(census_a(4, 1 << 20).unwrap(), vec![1, 10, 67, 456, 3079]);
    assert!(census_a(4, 100).is_err());
}

#[test]
fn census_over_all_moves() {
    assert_eq!(
        table_one_census(4, MoveSet::S, 1 << 30).unwrap(),
        vec![1, 10, 67, 456, 3079]
    );
}
