//! The phase-1 depth-first search shared by the single-position solvers.

use std::collections::HashMap;

use crate::coords::perm::rank_perm;
use crate::coords::tables::{group_coord, D_GROUP, M_GROUP, N_A, U_GROUP};
use crate::coords::{MoveTables, Phase1Coord, Phase2Coord, VertexTable, N_FLIP};
use crate::cube::{may_follow_index, CubieState, A_MOVES, N_MOVES};
use crate::pruning::packed::step_distance;
use crate::pruning::{Phase1Table, Phase2BoundTables};

/// Everything the phase-1 search tracks about a position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Node {
    pub twist: u16,
    pub flip: u16,
    pub slice: u16,
    pub corner: u16,
    pub u_edges: u16,
    pub d_edges: u16,
    pub m_edges: u16,
    /// Exact phase-1 distance.
    pub dist: u8,
}

impl Node {
    pub fn new(p: &CubieState) -> Node {
        let c = Phase1Coord::relabel(p);
        Node {
            twist: c.twist,
            flip: c.flip,
            slice: c.slice,
            corner: rank_perm(&p.cp) as u16,
            u_edges: group_coord(p, U_GROUP),
            d_edges: group_coord(p, D_GROUP),
            m_edges: group_coord(p, M_GROUP),
            dist: Phase1Table::get().distance(c),
        }
    }

    #[inline]
    pub fn child(&self, t: &MoveTables, v: &VertexTable, p1: &Phase1Table, m: usize) -> Node {
        let twist = t.twist[self.twist as usize * N_MOVES + m];
        let flip = t.flip[self.flip as usize * N_MOVES + m];
        let slice = t.slice[self.slice as usize * N_MOVES + m];
        let idx = v.index_of(slice as u32 * N_FLIP as u32 + flip as u32, twist);
        Node {
            twist,
            flip,
            slice,
            corner: t.corner[self.corner as usize * N_MOVES + m],
            u_edges: t.u_edges[self.u_edges as usize * N_MOVES + m],
            d_edges: t.d_edges[self.d_edges as usize * N_MOVES + m],
            m_edges: t.m_edges[self.m_edges as usize * N_MOVES + m],
            dist: step_distance(self.dist, p1.packed().get(idx as u64)),
        }
    }

    /// The phase-2 coordinate, if the position lies in H.
    pub fn phase2(&self, t: &MoveTables) -> Option<Phase2Coord> {
        if self.dist != 0 {
            return None;
        }
        t.phase2_from_groups(self.corner, self.u_edges, self.d_edges, self.m_edges)
    }
}

/// Stop conditions polled during search.
pub trait Control {
    /// Count one node; return true to abort.
    fn tick(&mut self) -> bool;
}

/// Shortest solution of `c` over A with at most `max_len` moves, whose first
/// move may follow `last` (a move index, or `N_MOVES` for none).
pub fn phase2_search<C: Control>(
    c: Phase2Coord,
    max_len: usize,
    last: usize,
    ctl: &mut C,
) -> Option<Vec<usize>> {
    let t = MoveTables::get();
    let p2 = Phase2BoundTables::get();
    let lb = p2.d2bound(c) as usize;
    let mut path = Vec::new();
    for len in lb..=max_len {
        match dfs2(t, p2, c, len, last, &mut path, ctl) {
            Step::Found => return Some(path),
            Step::Abort => return None,
            Step::Continue => {}
        }
    }
    None
}

enum Step {
    Found,
    Continue,
    Abort,
}

fn dfs2<C: Control>(
    t: &MoveTables,
    p2: &Phase2BoundTables,
    c: Phase2Coord,
    togo: usize,
    last: usize,
    path: &mut Vec<usize>,
    ctl: &mut C,
) -> Step {
    if ctl.tick() {
        return Step::Abort;
    }
    if togo == 0 {
        return if c == Phase2Coord::IDENTITY {
            Step::Found
        } else {
            Step::Continue
        };
    }
    for k in 0..N_A {
        let m = A_MOVES[k];
        if !may_follow_index(last, m) {
            continue;
        }
        let n = t.apply_a(c, k);
        if p2.d2bound(n) as usize >= togo {
            continue;
        }
        path.push(m);
        match dfs2(t, p2, n, togo - 1, m, path, ctl) {
            Step::Continue => {
                path.pop();
            }
            other => return other,
        }
    }
    Step::Continue
}

/// Children of a node that can still reach H, cached near the root so later
/// iterations skip recomputing them.
pub struct CandidateCache {
    depth: usize,
    map: HashMap<Vec<u8>, Vec<(u8, Node)>>,
}

impl CandidateCache {
    pub fn new(depth: usize) -> CandidateCache {
        CandidateCache {
            depth,
            map: HashMap::new(),
        }
    }
}

/// What to do with each phase-1 leaf.
pub trait Leaf {
    /// Called with the phase-1 path and the leaf. Return true to stop the search.
    fn leaf(&mut self, path: &[usize], node: &Node) -> bool;
    fn tick(&mut self) -> bool;
}

pub struct Phase1Search<'a> {
    t: &'a MoveTables,
    v: &'a VertexTable,
    p1: &'a Phase1Table,
    /// Forbid strict prefixes that reach H.
    pub restrict_prefix: bool,
    /// Forbid sequences whose last move is in A.
    pub forbid_a_ending: bool,
    pub cache: Option<CandidateCache>,
}

impl Phase1Search<'static> {
    pub fn new(restrict_prefix: bool, cache_depth: Option<usize>) -> Phase1Search<'static> {
        Phase1Search {
            t: MoveTables::get(),
            v: VertexTable::get(),
            p1: Phase1Table::get(),
            restrict_prefix,
            forbid_a_ending: false,
            cache: cache_depth.map(CandidateCache::new),
        }
    }
}

impl Phase1Search<'_> {
    /// Enumerate every canonical sequence of exactly `depth` moves that takes
    /// `root` into H. Returns true if the visitor stopped the search.
    pub fn run<L: Leaf>(&mut self, root: &Node, depth: usize, visitor: &mut L) -> bool {
        if root.dist as usize > depth {
            return false;
        }
        if self.restrict_prefix && root.dist == 0 && depth > 0 {
            return false;
        }
        let mut path = Vec::with_capacity(depth);
        let mut key = Vec::new();
        self.dfs(root, depth, &mut path, &mut key, visitor)
    }

    fn dfs<L: Leaf>(
        &mut self,
        node: &Node,
        togo: usize,
        path: &mut Vec<usize>,
        key: &mut Vec<u8>,
        visitor: &mut L,
    ) -> bool {
        if visitor.tick() {
            return true;
        }
        if togo == 0 {
            return visitor.leaf(path, node);
        }
        let last = path.last().copied().unwrap_or(N_MOVES);
        let cached = match &self.cache {
            Some(c) if path.len() < c.depth => Some(c.map.get(key.as_slice()).cloned()),
            _ => None,
        };
        let children: Vec<(u8, Node)> = match cached {
            Some(Some(list)) => list,
            Some(None) => {
                let list: Vec<(u8, Node)> = (0..N_MOVES)
                    .filter(|&m| may_follow_index(last, m))
                    .map(|m| (m as u8, node.child(self.t, self.v, self.p1, m)))
                    .collect();
                self.cache
                    .as_mut()
                    .unwrap()
                    .map
                    .insert(key.clone(), list.clone());
                list
            }
            None => {
                for m in 0..N_MOVES {
                    if !may_follow_index(last, m) {
                        continue;
                    }
                    if togo == 1 && self.forbid_a_ending && self.t.a_index[m] != 255 {
                        continue;
                    }
                    let child = node.child(self.t, self.v, self.p1, m);
                    if self.prune(&child, togo) {
                        continue;
                    }
                    path.push(m);
                    let stop = self.dfs(&child, togo - 1, path, key, visitor);
                    path.pop();
                    if stop {
                        return true;
                    }
                }
                return false;
            }
        };
        for (m, child) in children {
            if self.prune(&child, togo)
                || (togo == 1 && self.forbid_a_ending && self.t.a_index[m as usize] != 255)
            {
                continue;
            }
            path.push(m as usize);
            key.push(m);
            let stop = self.dfs(&child, togo - 1, path, key, visitor);
            key.pop();
            path.pop();
            if stop {
                return true;
            }
        }
        false
    }

    #[inline]
    fn prune(&self, child: &Node, togo: usize) -> bool {
        let d = child.dist as usize;
        d > togo - 1 || (self.restrict_prefix && d == 0 && togo > 1)
    }
}
