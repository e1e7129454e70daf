//! Solve the superflip in six-axis mode down to 20 moves, then solve the Pons
//! Asinorum position optimally.

use std::time::Instant;

use cosetcube::cube::{CubieState, MoveSequence};
use cosetcube::twophase::{solve, solve_optimal, Mode, SolveOptions};

fn main() {
    let start = Instant::now();
    let opts = SolveOptions {
        target_length: 20,
        ..SolveOptions::with_mode(Mode::Six)
    };
    let r = solve(&CubieState::superflip(), &opts).expect("solve");
    println!("superflip\t{}\t{:.2?}", r.line(), start.elapsed());
    for (len, nodes) in &r.improved_at {
        println!("  improved to {len} after {nodes} nodes");
    }

    let pons = CubieState::from_sequence(&MoveSequence::parse("R2L2U2D2F2B2").unwrap());
    let start = Instant::now();
    let r = solve_optimal(&pons, &SolveOptions::default()).expect("solve");
    println!("pons asinorum\t{}\t{:.2?}", r.line(), start.elapsed());
}
