//! Lower bounds on the distance to solved inside H, from two projections of H
//! each searched exactly under the moves of A.

use std::sync::OnceLock;

use crate::coords::tables::N_A;
use crate::coords::{MoveTables, Phase2Coord, N_CORNER_PERM, N_MID_PERM, N_UD_EDGE_PERM};

pub struct Phase2BoundTables {
    /// Indexed `corner * 24 + mid`.
    pub corner_by_mid: Vec<u8>,
    /// Indexed `ud_edge * 24 + mid`.
    pub ud_edge_by_mid: Vec<u8>,
}

fn project_bfs(perm_a: &[u16], n_perm: usize, mid_a: &[u8]) -> Vec<u8> {
    let mut dist = vec![u8::MAX; n_perm * N_MID_PERM];
    dist[0] = 0;
    let mut frontier = vec![0u32];
    let mut d = 0u8;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &x in &frontier {
            let (p, m) = (x as usize / N_MID_PERM, x as usize % N_MID_PERM);
            for k in 0..N_A {
                let y = perm_a[p * N_A + k] as usize * N_MID_PERM + mid_a[m * N_A + k] as usize;
                if dist[y] == u8::MAX {
                    dist[y] = d + 1;
                    next.push(y as u32);
                }
            }
        }
        frontier = next;
        d += 1;
    }
    dist
}

impl Phase2BoundTables {
    pub fn build() -> Phase2BoundTables {
        let t = MoveTables::get();
        Phase2BoundTables {
            corner_by_mid: project_bfs(&t.corner_a, N_CORNER_PERM, &t.mid_a),
            ud_edge_by_mid: project_bfs(&t.ud_edge_a, N_UD_EDGE_PERM, &t.mid_a),
        }
    }

    pub fn get() -> &'static Phase2BoundTables {
        static T: OnceLock<Phase2BoundTables> = OnceLock::new();
        T.get_or_init(Self::build)
    }

    /// Lower bound on the number of moves of A needed to solve `c`.
    #[inline]
    pub fn d2bound(&self, c: Phase2Coord) -> u8 {
        let m = c.mid as usize;
        self.corner_by_mid[c.corner as usize * N_MID_PERM + m]
            .max(self.ud_edge_by_mid[c.ud_edge as usize * N_MID_PERM + m])
    }
}

/// Shorthand for the shared tables.
pub fn d2bound(c: Phase2Coord) -> u8 {
    Phase2BoundTables::get().d2bound(c)
}
