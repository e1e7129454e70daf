//! One bit per element of H, in two alternating buffers.

use crate::coords::phase2::{mid_from_half, perm8_parity};
use crate::coords::tables::N_A;
use crate::coords::{MoveTables, Phase2Coord, H_SIZE, N_UD_EDGE_PERM};
use crate::error::{Error, Result};

pub const WORDS: usize = H_SIZE.div_ceil(64) as usize;
/// Bytes used by the two buffers.
pub const FULL_BYTES: u64 = 2 * 8 * WORDS as u64;
const BLOCKS: u64 = H_SIZE / 12;

/// `GROUP[k][parity][bits]`: the 12 middle-edge bits of one (corner, ud-edge)
/// block after left multiplication by the `k`-th move of A, given the parity
/// the middle-edge permutations of the source block must have.
fn group_table() -> Vec<u16> {
    let t = MoveTables::get();
    let mut out = vec![0u16; N_A * 2 * 4096];
    for k in 0..N_A {
        for parity in 0..2u8 {
            let single: Vec<u16> = (0..12u8)
                .map(|h| {
                    let mid = mid_from_half(h, parity);
                    1 << (t.mid_left[mid as usize * N_A + k] / 2)
                })
                .collect();
            for bits in 0..4096usize {
                let mut v = 0u16;
                for (h, s) in single.iter().enumerate() {
                    if bits >> h & 1 == 1 {
                        v |= s;
                    }
                }
                out[(k * 2 + parity as usize) * 4096 + bits] = v;
            }
        }
    }
    out
}

pub struct CosetBitmap {
    src: Vec<u64>,
    dst: Vec<u64>,
    count: u64,
    group: Vec<u16>,
}

#[inline]
fn read12(v: &[u64], block: u64) -> u16 {
    let bit = block * 12;
    let (w, s) = ((bit / 64) as usize, bit % 64);
    let mut x = v[w] >> s;
    if s > 52 {
        x |= v[w + 1] << (64 - s);
    }
    (x & 0xfff) as u16
}

/// OR `bits` into a block; returns the number of bits newly set.
#[inline]
fn or12(v: &mut [u64], block: u64, bits: u16) -> u32 {
    let bit = block * 12;
    let (w, s) = ((bit / 64) as usize, bit % 64);
    let b = bits as u64;
    let lo = b << s;
    let mut added = (lo & !v[w]).count_ones();
    v[w] |= lo;
    if s > 52 {
        let hi = b >> (64 - s);
        added += (hi & !v[w + 1]).count_ones();
        v[w + 1] |= hi;
    }
    added
}

impl CosetBitmap {
    /// Allocate both buffers. Fails if they do not fit in `memory_budget` bytes.
    pub fn new(memory_budget: u64) -> Result<CosetBitmap> {
        if memory_budget < FULL_BYTES {
            return Err(Error::Resource(format!(
                "full coset bitmaps need {FULL_BYTES} bytes, budget is {memory_budget}"
            )));
        }
        let alloc = || -> Result<Vec<u64>> {
            let mut v = Vec::new();
            v.try_reserve_exact(WORDS)
                .map_err(|e| Error::Resource(format!("bitmap allocation failed: {e}")))?;
            v.resize(WORDS, 0);
            Ok(v)
        };
        Ok(CosetBitmap {
            src: alloc()?,
            dst: alloc()?,
            count: 0,
            group: group_table(),
        })
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    #[inline]
    pub fn contains(&self, index: u64) -> bool {
        self.src[(index / 64) as usize] >> (index % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, index: u64) -> bool {
        let (w, b) = ((index / 64) as usize, 1u64 << (index % 64));
        if self.src[w] & b != 0 {
            return false;
        }
        self.src[w] |= b;
        self.dst[w] |= b;
        self.count += 1;
        true
    }

    /// `f ← f ∪ A·f` by left multiplication, twelve middle-edge bits at a time.
    pub fn prepass(&mut self) {
        let t = MoveTables::get();
        let mut last_block = u64::MAX;
        for w in 0..WORDS {
            if self.src[w] == 0 {
                continue;
            }
            let first = (w as u64 * 64) / 12;
            let end = ((w as u64 * 64 + 63) / 12 + 1).min(BLOCKS);
            for block in first.max(last_block.wrapping_add(1))..end {
                last_block = block;
                let bits = read12(&self.src, block);
                if bits == 0 {
                    continue;
                }
                let corner = (block / N_UD_EDGE_PERM as u64) as usize;
                let ud = (block % N_UD_EDGE_PERM as u64) as usize;
                let parity = (perm8_parity(corner as u16) ^ perm8_parity(ud as u16)) as usize;
                for k in 0..N_A {
                    let c2 = t.corner_left[corner * N_A + k] as u64;
                    let u2 = t.ud_edge_left[ud * N_A + k] as u64;
                    let moved = self.group[(k * 2 + parity) * 4096 + bits as usize];
                    self.count +=
                        or12(&mut self.dst, c2 * N_UD_EDGE_PERM as u64 + u2, moved) as u64;
                }
            }
        }
        for w in 0..WORDS {
            if self.dst[w] != 0 {
                self.src[w] |= self.dst[w];
            }
        }
    }

    /// Indices of all covered positions, in increasing order.
    pub fn covered(&self) -> Vec<u64> {
        self.scan(true)
    }

    /// Indices of all positions not yet covered.
    pub fn uncovered(&self) -> Vec<u64> {
        self.scan(false)
    }

    fn scan(&self, set: bool) -> Vec<u64> {
        let mut out = Vec::new();
        for (w, &word) in self.src.iter().enumerate() {
            let mut x = if set { word } else { !word };
            while x != 0 {
                let i = w as u64 * 64 + x.trailing_zeros() as u64;
                x &= x - 1;
                if i < H_SIZE {
                    out.push(i);
                }
            }
        }
        out
    }
}

/// Packed index of a coordinate (re-exported for callers that hold raw indices).
#[inline]
pub fn index(c: Phase2Coord) -> u64 {
    c.pack()
}
