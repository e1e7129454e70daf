//! Impact scores and greedy set selection on a fresh ledger.

use std::time::Instant;

use cosetcube::coords::VertexTable;
use cosetcube::setgraph::{
    greedy_select, greedy_select_exhaustive, impact, representative, BoundLedger, ImpactParams,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let ledger = BoundLedger::new();
    let vt = VertexTable::get();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let p = ImpactParams::default();
    for _ in 0..3 {
        let v = rng.random_range(0..vt.solvable_count());
        let t = Instant::now();
        println!(
            "impact of {v}: {} ({:?})",
            impact(&ledger, v, p),
            t.elapsed()
        );
    }

    // A smaller radius keeps the candidate scan quick.
    let p = ImpactParams {
        assumed: 20,
        threshold: 22,
    };
    let candidates: Vec<u32> = (0..2000)
        .map(|_| rng.random_range(0..vt.solvable_count()))
        .collect();
    let t = Instant::now();
    let lazy = greedy_select(&ledger, 5, p, &candidates);
    println!("lazy {:?} ({:?})", lazy, t.elapsed());
    let t = Instant::now();
    let full = greedy_select_exhaustive(&ledger, 5, p, &candidates);
    println!("full {:?} ({:?})", full, t.elapsed());
    for v in lazy {
        println!("{v}\t{}", representative(v));
    }
}
