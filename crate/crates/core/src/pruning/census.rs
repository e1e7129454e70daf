//! Counts of the positions of H by distance, over all 18 moves and over the
//! moves of A only.

use std::collections::HashSet;

use crate::coords::tables::N_A;
use crate::coords::{MoveTables, Phase2Coord};
use crate::cosets::{solve_set, CosetJob, MemoryMode};
use crate::cube::MoveSequence;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MoveSet {
    /// All 18 moves.
    S,
    /// The ten moves that preserve H.
    A,
}

/// Breadth-first counts over A from the identity, in a hash set of packed
/// indices. `max_positions` bounds the set size.
pub fn census_a(depth: usize, max_positions: u64) -> Result<Vec<u64>> {
    let t = MoveTables::get();
    let id = Phase2Coord::IDENTITY.pack();
    let mut seen: HashSet<u64> = [id].into_iter().collect();
    let mut frontier = vec![id];
    let mut counts = vec![1u64];
    for _ in 0..depth {
        let mut next = Vec::new();
        for &x in &frontier {
            let c = Phase2Coord::unpack_unchecked(x);
            for k in 0..N_A {
                let y = t.apply_a(c, k).pack();
                if seen.insert(y) {
                    next.push(y);
                }
            }
        }
        if seen.len() as u64 > max_positions {
            return Err(Error::Resource(format!(
                "census exceeds {max_positions} positions"
            )));
        }
        counts.push(next.len() as u64);
        frontier = next;
    }
    Ok(counts)
}

/// Counts over all 18 moves, from the set solver run on the trivial coset.
pub fn census_s(depth: usize, memory_budget: u64) -> Result<Vec<u64>> {
    let job = CosetJob {
        mode: MemoryMode::Hash,
        memory_budget,
        depth_limit: Some(depth),
        ..CosetJob::new(MoveSequence::new())
    };
    let mut counts = solve_set(&job)?.new_counts();
    counts.truncate(depth + 1);
    Ok(counts)
}

/// Per-depth counts of positions of H at exactly distance d for the given
/// move set.
pub fn table_one_census(depth: usize, moves: MoveSet, memory_budget: u64) -> Result<Vec<u64>> {
    match moves {
        MoveSet::A => census_a(depth, memory_budget / 24),
        MoveSet::S => census_s(depth, memory_budget),
    }
}

/// TSV rows `depth<TAB>countS<TAB>countA`.
pub fn census_tsv(depth: usize, memory_budget: u64) -> Result<String> {
    let s = table_one_census(depth, MoveSet::S, memory_budget)?;
    let a = table_one_census(depth, MoveSet::A, memory_budget)?;
    let mut out = String::new();
    for d in 0..=depth {
        out += &format!("{d}\t{}\t{}\n", s[d], a[d]);
    }
    Ok(out)
}
