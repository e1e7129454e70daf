//! Compare the fast set solver with the plain hash-table oracle on random
//! cosets, depth by depth.

use cosetcube::cosets::{
    compare_with_oracle, random_representative, CosetJob, MemoryMode, OracleBall,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let depth: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    let ball = OracleBall::new(depth, 20_000_000).expect("oracle ball");
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..5 {
        let rep = random_representative(&mut rng, 8 + i, depth as u8);
        for mode in [MemoryMode::Hash, MemoryMode::Symmetric] {
            let job = CosetJob {
                mode,
                ..CosetJob::new(rep.clone())
            };
            let c = compare_with_oracle(&job, &ball).expect("solve");
            println!(
                "{}\t{:?}\tfast {:?}\toracle {:?}\t{}",
                rep,
                mode,
                c.fast_counts,
                c.oracle_counts,
                if c.agrees() { "ok" } else { "MISMATCH" }
            );
        }
    }
}
