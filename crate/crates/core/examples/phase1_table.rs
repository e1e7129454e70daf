//! Build (or load) the phase-1 distance table and print the distance histogram.

use std::time::Instant;

use cosetcube::pruning::phase1::phase1_distances;

fn main() {
    let start = Instant::now();
    let d = phase1_distances();
    let mut hist = [0u64; 16];
    for &x in &d {
        hist[x as usize] += 1;
    }
    for (k, n) in hist.iter().enumerate().filter(|(_, &n)| n > 0) {
        println!("{k}\t{n}");
    }
    println!("built in {:.1?}", start.elapsed());
}
