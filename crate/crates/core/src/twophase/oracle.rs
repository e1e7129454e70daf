//! Exact distances of shallow positions by meet-in-the-middle over plain
//! cubie states. Independent of every coordinate and table.

use std::collections::HashMap;

use crate::cube::{CubieState, Move};

pub struct DistanceOracle {
    radius: u8,
    ball: HashMap<CubieState, u8>,
}

/// All positions within `radius` moves of `p`, with their distances from `p`.
pub fn ball(p: &CubieState, radius: u8) -> HashMap<CubieState, u8> {
    let mut seen = HashMap::new();
    seen.insert(*p, 0);
    let mut frontier = vec![*p];
    for d in 1..=radius {
        let mut next = Vec::new();
        for x in &frontier {
            for m in Move::all() {
                let y = x.apply_move(m);
                if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(y) {
                    e.insert(d);
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    seen
}

impl DistanceOracle {
    pub fn new(radius: u8) -> DistanceOracle {
        DistanceOracle {
            radius,
            ball: ball(&CubieState::solved(), radius),
        }
    }

    /// Distance of `p` if it is at most twice the radius.
    pub fn distance(&self, p: &CubieState) -> Option<u8> {
        if let Some(&d) = self.ball.get(p) {
            return Some(d);
        }
        let around = ball(p, self.radius);
        around
            .iter()
            .filter_map(|(x, &k)| self.ball.get(x).map(|&d| d + k))
            .min()
    }
}
