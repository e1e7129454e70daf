//! Record the known distance-18 sets in a fresh ledger, propagate, and
//! report the resulting global bounds.

use std::time::Instant;

use cosetcube::cosets::check_representative;
use cosetcube::cube::{CubieState, MoveSequence};
use cosetcube::setgraph::{
    ball_within, diameter_bound, known, vertex_of, BoundLedger, EliminationCover,
};

fn main() {
    let t = Instant::now();
    let mut ledger = BoundLedger::new();
    let cover = EliminationCover::compute();
    println!("{}", ledger.report(&cover));

    let eps = vertex_of(&MoveSequence::new());
    let r = ball_within(&[eps], 12);
    println!(
        "from the H vertex: levels {:?}, all within 12: {} ({:?})",
        r.levels,
        r.ok(),
        t.elapsed()
    );

    let mut items = Vec::new();
    for s in known::EIGHTEEN {
        let q: MoveSequence = s.parse().unwrap();
        let ok = check_representative(&CubieState::from_sequence(&q)).is_ok();
        let v = vertex_of(&q);
        println!("{v}\t{ok}\t{q}");
        items.push((v, 18));
    }
    let t = Instant::now();
    ledger.record_batch(&items, "known-18").unwrap();
    println!("propagated in {:?}", t.elapsed());
    println!("{}", ledger.report(&cover));

    let extra: Vec<(u32, u8)> = known::EXTRA
        .iter()
        .map(|(b, s)| (vertex_of(&s.parse().unwrap()), *b))
        .collect();
    ledger.record_batch(&extra, "known-extra").unwrap();
    println!(
        "with the four extra sets: global {}, kept {}",
        diameter_bound(&ledger, &EliminationCover::empty()),
        diameter_bound(&ledger, &cover)
    );
}
