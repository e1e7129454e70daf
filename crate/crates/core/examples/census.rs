//! Count the positions of H at each distance, over all moves and over the
//! moves that preserve H.

use cosetcube::pruning::census_tsv;

fn main() {
    let depth: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    print!(
        "depth\tS\tA\n{}",
        census_tsv(depth, 2 << 30).expect("census")
    );
}
