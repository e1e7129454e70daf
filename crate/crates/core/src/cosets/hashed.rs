//! Covered-position sets held in hash tables: plain, or reduced by the
//! symmetries that map the coset onto itself.

use std::collections::HashSet;

use crate::coords::perm::{rank_perm, unrank_perm};
use crate::coords::tables::N_A;
use crate::coords::{MoveTables, Phase2Coord, N_CORNER_PERM, N_MID_PERM, N_UD_EDGE_PERM};
use crate::cube::{CubieState, SymmetryIndex};
use crate::error::{Error, Result};

/// Rough bytes per stored index, used to turn a memory budget into a limit.
pub const BYTES_PER_ENTRY: u64 = 24;

pub struct HashCover {
    set: HashSet<u64>,
    limit: u64,
}

impl HashCover {
    pub fn new(memory_budget: u64) -> HashCover {
        HashCover {
            set: HashSet::new(),
            limit: memory_budget / BYTES_PER_ENTRY,
        }
    }

    pub fn count(&self) -> u64 {
        self.set.len() as u64
    }

    pub fn contains(&self, index: u64) -> bool {
        self.set.contains(&index)
    }

    pub fn insert(&mut self, index: u64) -> Result<bool> {
        if self.set.len() as u64 >= self.limit && !self.set.contains(&index) {
            return Err(Error::Resource(format!(
                "hash coset set exceeds its budget of {} positions",
                self.limit
            )));
        }
        Ok(self.set.insert(index))
    }

    pub fn prepass(&mut self) -> Result<()> {
        let t = MoveTables::get();
        let snapshot: Vec<u64> = self.set.iter().copied().collect();
        for i in snapshot {
            let c = Phase2Coord::unpack_unchecked(i);
            for k in 0..N_A {
                self.insert(t.left_multiply(c, k).pack())?;
            }
        }
        Ok(())
    }

    pub fn covered(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.set.iter().copied().collect();
        v.sort_unstable();
        v
    }
}

/// One symmetry of the coset: `h ↦ conj(h, t) · g` with `g = t⁻¹ a t a⁻¹`.
struct CosetSymmetry {
    sym: usize,
    corner: Vec<u16>,
    ud_edge: Vec<u16>,
    mid: Vec<u8>,
}

/// Right multiplication tables for a fixed element `g` of H.
fn right_tables(g: &CubieState) -> (Vec<u16>, Vec<u16>, Vec<u8>) {
    let mut corner = vec![0u16; N_CORNER_PERM];
    let mut buf = [0u8; 8];
    for (c, out) in corner.iter_mut().enumerate() {
        unrank_perm(c as u32, &mut buf);
        let prod: [u8; 8] = std::array::from_fn(|i| buf[g.cp[i] as usize]);
        *out = rank_perm(&prod) as u16;
    }
    let gc = Phase2Coord::encode_unchecked(g);
    let ud_edge = (0..N_UD_EDGE_PERM)
        .map(|u| {
            let h = Phase2Coord {
                corner: 0,
                ud_edge: u as u16,
                mid: 0,
            }
            .decode();
            Phase2Coord::encode_unchecked(
                &h.multiply(
                    &Phase2Coord {
                        corner: 0,
                        ud_edge: gc.ud_edge,
                        mid: 0,
                    }
                    .decode(),
                ),
            )
            .ud_edge
        })
        .collect();
    let mid = (0..N_MID_PERM)
        .map(|m| {
            let h = Phase2Coord {
                corner: 0,
                ud_edge: 0,
                mid: m as u8,
            }
            .decode();
            Phase2Coord::encode_unchecked(
                &h.multiply(
                    &Phase2Coord {
                        corner: 0,
                        ud_edge: 0,
                        mid: gc.mid,
                    }
                    .decode(),
                ),
            )
            .mid
        })
        .collect();
    (corner, ud_edge, mid)
}

/// Symmetries `t` among the 16 that fix the U/D axis with `t⁻¹ a t ∈ H a`.
pub fn coset_symmetries(a: &CubieState) -> Vec<SymmetryIndex> {
    let ainv = a.inverse();
    SymmetryIndex::ud_preserving()
        .filter(|&t| a.conjugate(t).multiply(&ainv).in_h())
        .collect()
}

pub struct SymmetricCover {
    set: HashSet<u64>,
    syms: Vec<CosetSymmetry>,
    count: u64,
    limit: u64,
}

impl SymmetricCover {
    pub fn new(a: &CubieState, memory_budget: u64) -> SymmetricCover {
        let ainv = a.inverse();
        let syms = coset_symmetries(a)
            .into_iter()
            .map(|t| {
                let g = a.conjugate(t).multiply(&ainv);
                let (corner, ud_edge, mid) = right_tables(&g);
                CosetSymmetry {
                    sym: t.index(),
                    corner,
                    ud_edge,
                    mid,
                }
            })
            .collect();
        SymmetricCover {
            set: HashSet::new(),
            syms,
            count: 0,
            limit: memory_budget / BYTES_PER_ENTRY,
        }
    }

    pub fn symmetry_count(&self) -> usize {
        self.syms.len()
    }

    /// All images of `h` under the coset's symmetries (with repeats).
    fn images(&self, h: Phase2Coord) -> impl Iterator<Item = u64> + '_ {
        let t = MoveTables::get();
        self.syms.iter().map(move |s| {
            let c = t.conjugate_h(h, s.sym);
            Phase2Coord {
                corner: s.corner[c.corner as usize],
                ud_edge: s.ud_edge[c.ud_edge as usize],
                mid: s.mid[c.mid as usize],
            }
            .pack()
        })
    }

    /// Smallest index in the orbit, and the orbit size.
    fn canonical(&self, h: Phase2Coord) -> (u64, u64) {
        let mut orbit: Vec<u64> = self.images(h).collect();
        orbit.sort_unstable();
        orbit.dedup();
        (orbit[0], orbit.len() as u64)
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn stored(&self) -> usize {
        self.set.len()
    }

    pub fn contains(&self, index: u64) -> bool {
        self.set
            .contains(&self.canonical(Phase2Coord::unpack_unchecked(index)).0)
    }

    pub fn insert(&mut self, index: u64) -> Result<bool> {
        let (rep, size) = self.canonical(Phase2Coord::unpack_unchecked(index));
        if self.set.contains(&rep) {
            return Ok(false);
        }
        if self.set.len() as u64 >= self.limit {
            return Err(Error::Resource(format!(
                "symmetric coset set exceeds its budget of {} orbits",
                self.limit
            )));
        }
        self.set.insert(rep);
        self.count += size;
        Ok(true)
    }

    pub fn prepass(&mut self) -> Result<()> {
        let t = MoveTables::get();
        let snapshot: Vec<u64> = self.set.iter().copied().collect();
        for i in snapshot {
            let c = Phase2Coord::unpack_unchecked(i);
            for k in 0..N_A {
                self.insert(t.left_multiply(c, k).pack())?;
            }
        }
        Ok(())
    }

    /// Every covered index, orbits expanded.
    pub fn covered(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self
            .set
            .iter()
            .flat_map(|&i| {
                self.images(Phase2Coord::unpack_unchecked(i))
                    .collect::<Vec<_>>()
            })
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}
