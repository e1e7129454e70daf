//! The simplest possible set solver: a breadth-first ball of plain cubie
//! states around solved, filtered by coset membership.

use std::collections::{HashMap, HashSet};

use crate::coords::Phase2Coord;
use crate::cube::{CubieState, Move};
use crate::error::{Error, Result};

/// Positions within `depth` moves of solved, layer by layer.
pub struct OracleBall {
    layers: Vec<Vec<CubieState>>,
}

/// Per-depth counts and the covered positions (as packed H indices) of one coset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub per_depth_new: Vec<u64>,
    /// Covered indices at each depth, cumulative and sorted.
    pub covered: Vec<Vec<u64>>,
}

impl OracleBall {
    /// Fails if the ball would exceed `max_states`.
    pub fn new(depth: usize, max_states: usize) -> Result<OracleBall> {
        // Moves are invertible, so a new neighbor of layer d can only collide
        // with layers d-1 and d.
        let solved = CubieState::solved();
        let mut prev: HashSet<CubieState> = HashSet::new();
        let mut cur: HashSet<CubieState> = [solved].into_iter().collect();
        let mut layers = vec![vec![solved]];
        let mut total = 1;
        for _ in 0..depth {
            let mut next_set = HashSet::new();
            let mut next = Vec::new();
            for x in layers.last().unwrap() {
                for m in Move::all() {
                    let y = x.apply_move(m);
                    if !prev.contains(&y) && !cur.contains(&y) && next_set.insert(y) {
                        next.push(y);
                    }
                }
            }
            total += next.len();
            if total > max_states {
                return Err(Error::Resource(format!(
                    "oracle ball exceeds {max_states} positions"
                )));
            }
            layers.push(next);
            prev = std::mem::replace(&mut cur, next_set);
        }
        Ok(OracleBall { layers })
    }

    pub fn depth(&self) -> usize {
        self.layers.len() - 1
    }

    /// Positions x of Ha with distance at most the ball's depth, grouped by
    /// distance. Each x is recorded by the H-part `x·a⁻¹`.
    pub fn solve_set(&self, a: &CubieState) -> OracleReport {
        let ainv = a.inverse();
        let mut per_depth_new = Vec::new();
        let mut covered = Vec::new();
        let mut acc: Vec<u64> = Vec::new();
        for layer in &self.layers {
            let mut n = 0;
            for x in layer {
                let h = x.multiply(&ainv);
                if h.in_h() {
                    acc.push(Phase2Coord::encode_unchecked(&h).pack());
                    n += 1;
                }
            }
            acc.sort_unstable();
            per_depth_new.push(n);
            covered.push(acc.clone());
        }
        OracleReport {
            per_depth_new,
            covered,
        }
    }

    /// Exact distances of every position in the ball.
    pub fn distances(&self) -> HashMap<CubieState, u8> {
        let mut m = HashMap::new();
        for (d, layer) in self.layers.iter().enumerate() {
            for x in layer {
                m.insert(*x, d as u8);
            }
        }
        m
    }
}

/// Oracle set solve of `a` truncated at `depth`.
pub fn oracle_solve_set(a: &CubieState, depth: usize, max_states: usize) -> Result<OracleReport> {
    Ok(OracleBall::new(depth, max_states)?.solve_set(a))
}
