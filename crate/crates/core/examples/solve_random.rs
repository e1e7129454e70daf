//! Solve seeded random positions with the two-phase solver and report the
//! first and final solution lengths.

use std::time::{Duration, Instant};

use cosetcube::cube::CubieState;
use cosetcube::twophase::{solve, Mode, SolveOptions};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let count: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let target: usize = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(20);
    let mode: Mode = args
        .get(3)
        .and_then(|s| s.parse().ok())
        .unwrap_or(Mode::Six);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for i in 0..count {
        let p = CubieState::random(&mut rng);
        let opts = SolveOptions {
            mode,
            target_length: target,
            time_budget: Some(Duration::from_secs(60)),
            ..Default::default()
        };
        let start = Instant::now();
        let r = solve(&p, &opts).expect("solve");
        println!(
            "{i}\tfirst {:?}\t{}\t{:.2?}",
            r.improved_at.first().map(|x| x.0),
            r.line(),
            start.elapsed()
        );
    }
}
