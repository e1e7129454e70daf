use std::collections::{HashMap, HashSet};

use cosetcube::coords::MoveTables;
use cosetcube::coords::{Phase1Coord, VertexTable};
use cosetcube::cube::{MoveSequence, N_MOVES};
use cosetcube::pruning::phase1::apply;
use cosetcube::setgraph::{
    ball_size, diameter_bound, greedy_select, greedy_select_exhaustive, impact, neighbors,
    odd_corner_count, partitions, validate_cover, vertex_of, BoundLedger, EliminationCover,
    ImpactParams, JournalEntry, INITIAL_BOUND, N_PARTITIONS,
};
use cosetcube::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn scratch(name: &str) -> std::path::PathBuf {
    let d = std::env::temp_dir().join(format!("cosetcube-test-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d.join(name)
}

/// Vertex distances from `v` up to `radius`, by breadth-first search over raw
/// coordinates followed by canonicalization.
fn oracle_ball(v: u32, radius: u8) -> HashMap<u32, u8> {
    let vt = VertexTable::get();
    let t = MoveTables::get();
    let mut seen: HashSet<Phase1Coord> = HashSet::from([vt.coord(v)]);
    let mut out = HashMap::from([(v, 0)]);
    let mut frontier = vec![vt.coord(v)];
    for d in 1..=radius {
        let mut next = Vec::new();
        for &c in &frontier {
            for m in 0..N_MOVES {
                let n = apply(t, c, m);
                if seen.insert(n) {
                    out.entry(vt.canonical(n).index).or_insert(d);
                    next.push(n);
                }
            }
        }
        frontier = next;
    }
    out
}

fn random_vertices(n: usize, seed: u64) -> Vec<u32> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = VertexTable::get().count();
    (0..n).map(|_| rng.random_range(0..count)).collect()
}

#[test]
fn neighbor_relation_is_symmetric() {
    for v in random_vertices(1000, 31) {
        let n = neighbors(v);
        assert!(n.len() <= 18);
        for u in n {
            assert!(neighbors(u).contains(&v));
        }
    }
}

#[test]
fn h_is_vertex_zero() {
    assert_eq!(vertex_of(&MoveSequence::new()), 0);
    assert_eq!(vertex_of(&MoveSequence::parse("U R2 D'").unwrap()), 0);
}

#[test]
fn ball_sizes_match_oracle() {
    for v in random_vertices(10, 32) {
        assert_eq!(ball_size(v, 5), oracle_ball(v, 5).len());
    }
}

#[test]
fn fresh_ledger() {
    let l = BoundLedger::new();
    assert_eq!(l.len(), VertexTable::get().count() as usize);
    assert_eq!(diameter_bound(&l, &EliminationCover::empty()), 30);
    let r = l.report(&EliminationCover::empty());
    assert!(r
        .to_string()
        .starts_with("global bound 30, 0 sets recorded"));
}

#[test]
fn recording_rules() {
    let mut l = BoundLedger::new();
    assert_eq!(l.record_bound(5, 30, "x").unwrap(), 0);
    assert!(matches!(
        l.record_bound(5, 31, "x"),
        Err(Error::Range { .. })
    ));
    assert!(l.record_bound(u32::MAX, 20, "x").is_err());
    let v = random_vertices(1, 33)[0];
    l.record_bound(v, 27, "a").unwrap();
    let ball = oracle_ball(v, 3);
    for (u, d) in &ball {
        assert_eq!(l.bound(*u), 27 + d);
    }
    let lowered = l.histogram()[..30].iter().sum::<u64>();
    assert_eq!(
        lowered,
        ball.iter().filter(|(_, &d)| d < 3).count() as u64,
        "{:?}",
        &l.histogram()[26..]
    );
    let before = l.bounds().to_vec();
    l.record_bound(v, 29, "b").unwrap();
    assert_eq!(l.bounds(), &before[..]);
    assert_eq!(l.journal().len(), 3);
}

#[test]
fn impact_and_selection() {
    let l = BoundLedger::new();
    let p = ImpactParams::default();
    let cands: Vec<u32> = random_vertices(100, 34)
        .into_iter()
        .map(|v| v % VertexTable::get().solvable_count())
        .collect();
    for &v in &cands[..5] {
        assert_eq!(impact(&l, v, p) as usize, ball_size(v, 5));
    }
    let best = greedy_select(&l, 1, p, &cands);
    let max = cands.iter().map(|&v| ball_size(v, 5)).max().unwrap();
    assert_eq!(ball_size(best[0], 5), max);
    let two = greedy_select(&l, 2, p, &cands);
    assert_ne!(two[0], two[1]);

    let mut low = BoundLedger::new();
    low.record_bound(0, 28, "x").unwrap();
    let q = ImpactParams {
        assumed: 27,
        threshold: 29,
    };
    for v in neighbors(0) {
        assert!(impact(&low, v, q) < ball_size(v, 2) as u64);
    }
    assert_eq!(
        impact(
            &low,
            0,
            ImpactParams {
                assumed: 30,
                threshold: 25
            }
        ),
        0
    );
}

#[test]
fn lazy_selection_matches_exhaustive() {
    let l = BoundLedger::new();
    let p = ImpactParams {
        assumed: 27,
        threshold: 29,
    };
    let n = VertexTable::get().solvable_count();
    let mut rng = ChaCha8Rng::seed_from_u64(35);
    // Nearby candidates so that picks interact.
    let mut cands: Vec<u32> = (0..10_000)
        .map(|_| rng.random_range(0..n.min(20_000)))
        .collect();
    cands.sort_unstable();
    cands.dedup();
    assert_eq!(
        greedy_select(&l, 20, p, &cands),
        greedy_select_exhaustive(&l, 20, p, &cands)
    );
}

#[test]
fn save_load_and_replay() {
    let path = scratch("ledger.bin");
    let _ = std::fs::remove_file(BoundLedger::journal_path(&path));
    let mut l = BoundLedger::new();
    let vs = random_vertices(3, 36);
    l.record_bound(vs[0], 28, "a").unwrap();
    l.save(&path).unwrap();
    l.record_bound(vs[1], 27, "b c").unwrap();
    l.record_bound(vs[2], 29, "d").unwrap();
    l.save(&path).unwrap();
    let back = BoundLedger::load(&path).unwrap();
    assert_eq!(back.bounds(), l.bounds());
    assert_eq!(back.journal(), l.journal());
    assert_eq!(back.journal()[1].source, "b_c");
    let replayed = BoundLedger::replay(back.journal()).unwrap();
    assert_eq!(replayed.bounds(), l.bounds());

    let mut bytes = std::fs::read(&path).unwrap();
    bytes[0] ^= 0xff;
    let bad = scratch("bad.bin");
    std::fs::write(&bad, &bytes).unwrap();
    assert!(BoundLedger::load(&bad).is_err());
    bytes[0] ^= 0xff;
    bytes.truncate(bytes.len() - 10);
    std::fs::write(&bad, &bytes).unwrap();
    assert!(BoundLedger::load(&bad).is_err());
    let _ = std::fs::remove_dir_all(path.parent().unwrap());
}

#[test]
fn journal_lines() {
    let e = JournalEntry {
        vertex: 17,
        bound: 18,
        source: "R'_B2".into(),
        timestamp: 99,
    };
    assert_eq!(e.to_string().parse::<JournalEntry>().unwrap(), e);
    assert!("1\t2".parse::<JournalEntry>().is_err());
    assert_eq!(INITIAL_BOUND, 30);
}

#[test]
fn odd_corner_counts() {
    assert_eq!(odd_corner_count(0), 0);
    assert_eq!(odd_corner_count(0xfff), 8);
    assert_eq!(odd_corner_count(0b1111_0000), 8);
    for m in 0u16..4096 {
        assert_eq!(odd_corner_count(m) % 2, 0);
    }
}

#[test]
fn partition_theorem() {
    let mut n = 0;
    partitions(|p| {
        n += 1;
        let masks = p.map(|s| s.iter().fold(0u16, |m, &x| m | 1 << x));
        assert!(masks.iter().any(|&m| odd_corner_count(m) >= 3));
        true
    });
    assert_eq!(n, N_PARTITIONS);
}

#[test]
fn covers() {
    assert!(validate_cover(&EliminationCover::empty()).is_ok());
    let oc = EliminationCover::odd_corner();
    assert!(validate_cover(&oc).is_ok());
    let all: Vec<u16> = (0..495).collect();
    assert!(validate_cover(&EliminationCover::from_eliminated(&all).unwrap()).is_err());
    assert!(EliminationCover::from_eliminated(&[495]).is_err());
    let c = EliminationCover::compute();
    assert!(validate_cover(&c).is_ok());
    assert!(c.is_symmetric());
    assert!(c.keeps(0));
    assert!(c.eliminated_count() >= oc.eliminated_count());
}
