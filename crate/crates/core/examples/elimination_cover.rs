//! Build and validate the slice-configuration elimination cover.

use cosetcube::setgraph::{
    odd_corner_count, partitions, validate_cover, EliminationCover, N_PARTITIONS,
};

fn main() {
    let mut n = 0;
    let mut min_max_f = u8::MAX;
    partitions(|p| {
        n += 1;
        let f = p.map(|part| odd_corner_count(part.iter().fold(0, |m, &s| m | 1 << s)));
        min_max_f = min_max_f.min(*f.iter().max().unwrap());
        true
    });
    println!(
        "partitions {n} (expected {N_PARTITIONS}), smallest largest odd corner count {min_max_f}"
    );

    let odd = EliminationCover::odd_corner();
    println!(
        "odd-corner cover: {} eliminated, valid {}",
        odd.eliminated_count(),
        validate_cover(&odd).is_ok()
    );

    let t = std::time::Instant::now();
    let cover = EliminationCover::compute();
    println!(
        "greedy cover: {} of 495 eliminated (symmetric {}), valid {}, {:?}",
        cover.eliminated_count(),
        cover.is_symmetric(),
        validate_cover(&cover).is_ok(),
        t.elapsed()
    );
    println!("eliminated: {:?}", cover.eliminated());
}
