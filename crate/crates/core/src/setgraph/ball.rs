use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use super::ledger::BoundLedger;
use crate::coords::VertexTable;
use crate::cube::N_MOVES;

/// Vertices within `radius` edges of `v`, including `v`.
fn ball(v: u32, radius: u8) -> Vec<u32> {
    let vt = VertexTable::get();
    let mut seen: HashSet<u32> = HashSet::from([v]);
    let mut out = vec![v];
    let mut start = 0;
    for _ in 0..radius {
        let end = out.len();
        for i in start..end {
            let c = vt.coord(out[i]);
            for m in 0..N_MOVES {
                let y = vt.neighbor(c, m);
                if seen.insert(y) {
                    out.push(y);
                }
            }
        }
        start = end;
    }
    out
}

pub fn ball_size(v: u32, radius: u8) -> usize {
    ball(v, radius).len()
}

/// Parameters of the impact score.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ImpactParams {
    /// Bound the candidate set is assumed to reach.
    pub assumed: u8,
    /// Vertices counted are those brought from above this value to at most it.
    pub threshold: u8,
}

impl Default for ImpactParams {
    fn default() -> Self {
        ImpactParams {
            assumed: 20,
            threshold: 25,
        }
    }
}

impl ImpactParams {
    pub fn radius(&self) -> u8 {
        self.threshold.saturating_sub(self.assumed)
    }
}

/// Number of vertices whose bound would fall from above the threshold to at
/// most it if `v` were proven to have the assumed bound.
pub fn impact(ledger: &BoundLedger, v: u32, p: ImpactParams) -> u64 {
    impact_with(ledger, v, p, &HashSet::new())
}

fn impact_with(ledger: &BoundLedger, v: u32, p: ImpactParams, covered: &HashSet<u32>) -> u64 {
    if p.assumed > p.threshold {
        return 0;
    }
    ball(v, p.radius())
        .into_iter()
        .filter(|&u| ledger.bound(u) > p.threshold && !covered.contains(&u))
        .count() as u64
}

/// Choose up to `n` vertices from `candidates` by repeated maximum impact.
/// Each pick is assumed solved at `p.assumed` before the next. Scores only
/// fall as picks accumulate, so a candidate whose stale score is below the
/// best fresh score is never re-scored. Ties go to the smaller index.
pub fn greedy_select(
    ledger: &BoundLedger,
    n: usize,
    p: ImpactParams,
    candidates: &[u32],
) -> Vec<u32> {
    let mut covered = HashSet::new();
    let mut heap: BinaryHeap<(u64, Reverse<u32>)> = candidates
        .iter()
        .map(|&v| (impact_with(ledger, v, p, &covered), Reverse(v)))
        .collect();
    let mut out = Vec::new();
    while out.len() < n {
        let Some((_, Reverse(v))) = heap.pop() else {
            break;
        };
        let fresh = impact_with(ledger, v, p, &covered);
        if fresh == 0 {
            continue;
        }
        if let Some(&top) = heap.peek() {
            if (fresh, Reverse(v)) < top {
                heap.push((fresh, Reverse(v)));
                continue;
            }
        }
        covered.extend(ball(v, p.radius()));
        out.push(v);
    }
    out
}

/// The same selection, re-scoring every candidate at every step.
pub fn greedy_select_exhaustive(
    ledger: &BoundLedger,
    n: usize,
    p: ImpactParams,
    candidates: &[u32],
) -> Vec<u32> {
    let mut covered = HashSet::new();
    let mut out: Vec<u32> = Vec::new();
    while out.len() < n {
        let best = candidates
            .iter()
            .filter(|v| !out.contains(v))
            .map(|&v| (impact_with(ledger, v, p, &covered), Reverse(v)))
            .max();
        match best {
            Some((score, Reverse(v))) if score > 0 => {
                covered.extend(ball(v, p.radius()));
                out.push(v);
            }
            _ => break,
        }
    }
    out
}

/// Result of a breadth-first sweep from a set of source vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallOutcome {
    pub radius: u8,
    /// Vertices first reached at each distance.
    pub levels: Vec<u64>,
    /// Vertices not reached within the radius.
    pub unreached: u64,
    /// Some of the unreached vertices (or of the last level when all were reached).
    pub farthest: Vec<u32>,
}

impl BallOutcome {
    pub fn ok(&self) -> bool {
        self.unreached == 0
    }

    /// Largest distance from the sources, when every vertex was reached.
    pub fn max_distance(&self) -> Option<usize> {
        self.ok().then(|| self.levels.len() - 1)
    }
}

/// Breadth-first search from `sources` over the whole graph, stopping after
/// `radius` levels.
pub fn ball_within(sources: &[u32], radius: u8) -> BallOutcome {
    const SAMPLE: usize = 10;
    let vt = VertexTable::get();
    let n = vt.count();
    let mut dist = vec![u8::MAX; n as usize];
    let mut frontier: Vec<u32> = Vec::new();
    for &s in sources {
        if dist[s as usize] == u8::MAX {
            dist[s as usize] = 0;
            frontier.push(s);
        }
    }
    let mut levels = vec![frontier.len() as u64];
    let mut reached = frontier.len() as u64;
    let mut last = frontier.clone();
    for d in 0..radius {
        if frontier.is_empty() {
            break;
        }
        if frontier.len() > 1 << 16 {
            frontier.sort_unstable();
        }
        let mut next = Vec::new();
        for &x in &frontier {
            let c = vt.coord(x);
            for m in 0..N_MOVES {
                let y = vt.neighbor(c, m);
                if dist[y as usize] == u8::MAX {
                    dist[y as usize] = d + 1;
                    next.push(y);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        reached += next.len() as u64;
        levels.push(next.len() as u64);
        last = next.iter().take(SAMPLE).copied().collect();
        frontier = next;
    }
    let unreached = n as u64 - reached;
    let farthest = if unreached > 0 {
        dist.iter()
            .enumerate()
            .filter(|(_, &d)| d == u8::MAX)
            .take(SAMPLE)
            .map(|(i, _)| i as u32)
            .collect()
    } else {
        last.sort_unstable();
        last.truncate(SAMPLE);
        last
    };
    BallOutcome {
        radius,
        levels,
        unreached,
        farthest,
    }
}
