//! Exact distance to H for every vertex of the relabelled puzzle.

use std::sync::OnceLock;

use super::packed::{step_distance, PackedDistanceTable};
use crate::coords::{cache, MoveTables, Phase1Coord, VertexTable, N_FLIP};
use crate::cube::N_MOVES;

const MAGIC: &[u8; 4] = b"P1DT";
const VERSION: u8 = 1;

pub struct Phase1Table {
    table: PackedDistanceTable,
}

/// Breadth-first distances from the H vertex over all vertices, one byte each.
/// Levels switch from forward expansion to backward checking once more than
/// half the vertices are reached.
pub fn phase1_distances() -> Vec<u8> {
    let v = VertexTable::get();
    let n = v.count();
    let mut depth = vec![u8::MAX; n as usize];
    depth[0] = 0;
    let mut reached = 1u64;
    let mut d = 0u8;
    loop {
        let mut added = 0u64;
        if reached * 2 < n as u64 {
            v.for_each(0..n, |i, c| {
                if depth[i as usize] != d {
                    return;
                }
                for m in 0..N_MOVES {
                    let j = v.neighbor(c, m) as usize;
                    if depth[j] == u8::MAX {
                        depth[j] = d + 1;
                        added += 1;
                    }
                }
            });
        } else {
            v.for_each(0..n, |i, c| {
                if depth[i as usize] != u8::MAX {
                    return;
                }
                for m in 0..N_MOVES {
                    if depth[v.neighbor(c, m) as usize] == d {
                        depth[i as usize] = d + 1;
                        added += 1;
                        return;
                    }
                }
            });
        }
        if added == 0 {
            break;
        }
        reached += added;
        d += 1;
    }
    depth
}

impl Phase1Table {
    pub fn build() -> Phase1Table {
        Phase1Table {
            table: PackedDistanceTable::from_distances(&phase1_distances()),
        }
    }

    pub fn load_or_build() -> Phase1Table {
        let v = VertexTable::get();
        let n = v.count() as u64;
        let path = cache::dir().join("phase1.bin");
        if let Ok(mut s) = cache::load(&path, MAGIC, VERSION, &[n.div_ceil(4)]) {
            if let Some(table) = PackedDistanceTable::from_bytes(n, s.pop().unwrap()) {
                return Phase1Table { table };
            }
        }
        let t = Self::build();
        let _ = cache::save(&path, MAGIC, VERSION, &[t.table.bytes()]);
        t
    }

    pub fn get() -> &'static Phase1Table {
        static T: OnceLock<Phase1Table> = OnceLock::new();
        T.get_or_init(Self::load_or_build)
    }

    pub fn packed(&self) -> &PackedDistanceTable {
        &self.table
    }

    /// Distance modulo 3 of a raw coordinate.
    #[inline]
    pub fn residue(&self, fs: u32, twist: u16) -> u8 {
        self.table
            .get(VertexTable::get().index_of(fs, twist) as u64)
    }

    /// Exact distance of a coordinate, by walking down to H.
    pub fn distance(&self, c: Phase1Coord) -> u8 {
        let t = MoveTables::get();
        let (mut tw, mut fl, mut sl) = (c.twist as usize, c.flip as usize, c.slice as usize);
        let mut d = 0u8;
        let mut r = self.residue((sl * N_FLIP + fl) as u32, tw as u16);
        while (tw, fl, sl) != (0, 0, 0) {
            let want = (r + 2) % 3;
            let m = (0..N_MOVES)
                .find(|&m| {
                    let (a, b, s) = (
                        t.twist[tw * N_MOVES + m] as usize,
                        t.flip[fl * N_MOVES + m] as usize,
                        t.slice[sl * N_MOVES + m] as usize,
                    );
                    self.residue((s * N_FLIP + b) as u32, a as u16) == want
                })
                .expect("distance table has a descending neighbor");
            tw = t.twist[tw * N_MOVES + m] as usize;
            fl = t.flip[fl * N_MOVES + m] as usize;
            sl = t.slice[sl * N_MOVES + m] as usize;
            r = want;
            d += 1;
        }
        d
    }

    /// Exact distance of a vertex index.
    pub fn vertex_distance(&self, index: u32) -> u8 {
        self.distance(VertexTable::get().coord(index))
    }

    /// A shortest move sequence (as move indices) taking `c` into H.
    pub fn descend(&self, c: Phase1Coord) -> Vec<usize> {
        let t = MoveTables::get();
        let mut cur = c;
        let mut d = self.distance(c);
        let mut out = Vec::new();
        while d > 0 {
            let m = (0..N_MOVES)
                .find(|&m| {
                    let n = apply(t, cur, m);
                    step_distance(d, self.residue(n.flipslice(), n.twist)) == d - 1
                })
                .expect("descending neighbor");
            cur = apply(t, cur, m);
            out.push(m);
            d -= 1;
        }
        out
    }
}

#[inline]
pub fn apply(t: &MoveTables, c: Phase1Coord, m: usize) -> Phase1Coord {
    Phase1Coord {
        twist: t.twist[c.twist as usize * N_MOVES + m],
        flip: t.flip[c.flip as usize * N_MOVES + m],
        slice: t.slice[c.slice as usize * N_MOVES + m],
    }
}
