//! Symmetry classes of the relabelled puzzle under the 16 symmetries that fix
//! the U/D axis, with a dense index over the classes.
//!
//! A class is identified by its lexicographically smallest member, comparing
//! (slice, flip, twist). Classes are numbered in increasing order of that
//! member, so the H vertex is index 0 and every class containing a coordinate
//! with the middle edges in the middle slice comes before all others.

use std::fmt;
use std::sync::OnceLock;

use super::cache;
use super::phase1::{Phase1Coord, N_FLIP, N_FLIPSLICE, N_TWIST};
use super::tables::MoveTables;
use crate::cube::{SymmetryIndex, N_MOVES, N_SYM_UD};
use crate::error::Result;

/// A class of the relabelled puzzle under the U/D-axis symmetries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RVertex {
    pub coord: Phase1Coord,
    pub index: u32,
}

impl fmt::Display for RVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{} {}", self.index, self.coord)
    }
}

pub struct VertexTable {
    /// Flipslice class of every flipslice value.
    fs_class: Vec<u32>,
    /// A symmetry taking each flipslice value to its class representative.
    fs_sym: Vec<u8>,
    class_rep: Vec<u32>,
    /// Stabilizer of the representative, as a bit mask over the 16 symmetries.
    class_stab: Vec<u16>,
    /// First vertex index of each class; one extra trailing entry.
    class_offset: Vec<u32>,
    /// For classes with a nontrivial stabilizer: row into `sym_rank`, else `u32::MAX`.
    class_sym_row: Vec<u32>,
    /// Rank of each minimal twist within its class, `u16::MAX` for the rest.
    sym_rank: Vec<u16>,
    /// The minimal twists of each symmetric class, in order; row `r` starts at
    /// `sym_twist_start[r]`.
    sym_twists: Vec<u16>,
    sym_twist_start: Vec<u32>,
    solvable: u32,
}

const MAGIC: &[u8; 4] = b"RVTX";
const VERSION: u8 = 1;

/// `conj(fs, s)` computed on cubies.
pub fn conjugate_flipslice(fs: u32, s: usize) -> u32 {
    let c = Phase1Coord::from_flipslice(fs, 0).decode();
    Phase1Coord::relabel(&c.conjugate(SymmetryIndex(s as u8))).flipslice()
}

impl VertexTable {
    fn build() -> VertexTable {
        let t = MoveTables::get();
        let mut fs_class = vec![u32::MAX; N_FLIPSLICE];
        let mut fs_sym = vec![0u8; N_FLIPSLICE];
        let mut class_rep = Vec::new();
        let mut class_stab = Vec::new();
        for fs in 0..N_FLIPSLICE as u32 {
            if fs_class[fs as usize] != u32::MAX {
                continue;
            }
            let c = class_rep.len() as u32;
            class_rep.push(fs);
            let mut stab = 0u16;
            for s in 0..N_SYM_UD {
                let img = conjugate_flipslice(fs, s);
                if img == fs {
                    stab |= 1 << s;
                }
                if fs_class[img as usize] == u32::MAX {
                    fs_class[img as usize] = c;
                    fs_sym[img as usize] = SymmetryIndex(s as u8).inverse().0;
                }
            }
            class_stab.push(stab);
        }

        let mut class_offset = Vec::with_capacity(class_rep.len() + 1);
        let mut class_sym_row = vec![u32::MAX; class_rep.len()];
        let mut sym_rank = Vec::new();
        let mut sym_twists = Vec::new();
        let mut sym_twist_start = Vec::new();
        let mut next = 0u32;
        let mut solvable = None;
        for c in 0..class_rep.len() {
            if solvable.is_none() && class_rep[c] >= N_FLIP as u32 {
                solvable = Some(next);
            }
            class_offset.push(next);
            let stab = class_stab[c];
            if stab == 1 {
                next += N_TWIST as u32;
                continue;
            }
            class_sym_row[c] = sym_twist_start.len() as u32;
            sym_twist_start.push(sym_twists.len() as u32);
            let mut rank = 0u16;
            for tw in 0..N_TWIST {
                let minimal = (1..N_SYM_UD)
                    .filter(|&u| stab >> u & 1 == 1)
                    .all(|u| t.twist_conj[tw * N_SYM_UD + u] as usize >= tw);
                if minimal {
                    sym_rank.push(rank);
                    sym_twists.push(tw as u16);
                    rank += 1;
                } else {
                    sym_rank.push(u16::MAX);
                }
            }
            next += rank as u32;
        }
        class_offset.push(next);
        VertexTable {
            fs_class,
            fs_sym,
            class_rep,
            class_stab,
            class_offset,
            class_sym_row,
            sym_rank,
            sym_twists,
            sym_twist_start,
            solvable: solvable.unwrap_or(next),
        }
    }

    fn sections(&self) -> Vec<Vec<u8>> {
        vec![
            cache::u32s_to_bytes(&self.fs_class),
            self.fs_sym.clone(),
            cache::u32s_to_bytes(&self.class_rep),
            cache::u16s_to_bytes(&self.class_stab),
            cache::u32s_to_bytes(&self.class_offset),
            cache::u32s_to_bytes(&self.class_sym_row),
            cache::u16s_to_bytes(&self.sym_rank),
            cache::u16s_to_bytes(&self.sym_twists),
            cache::u32s_to_bytes(&self.sym_twist_start),
            self.solvable.to_le_bytes().to_vec(),
        ]
    }

    fn from_sections(s: Vec<Vec<u8>>) -> VertexTable {
        VertexTable {
            fs_class: cache::bytes_to_u32s(&s[0]),
            fs_sym: s[1].clone(),
            class_rep: cache::bytes_to_u32s(&s[2]),
            class_stab: cache::bytes_to_u16s(&s[3]),
            class_offset: cache::bytes_to_u32s(&s[4]),
            class_sym_row: cache::bytes_to_u32s(&s[5]),
            sym_rank: cache::bytes_to_u16s(&s[6]),
            sym_twists: cache::bytes_to_u16s(&s[7]),
            sym_twist_start: cache::bytes_to_u32s(&s[8]),
            solvable: u32::from_le_bytes(s[9][..4].try_into().unwrap()),
        }
    }

    /// Load from the cache directory, or enumerate and store.
    pub fn load_or_build() -> VertexTable {
        let path = cache::dir().join("vertices.bin");
        if let Some(sizes) = Self::cached_sizes(&path) {
            if let Ok(s) = cache::load(&path, MAGIC, VERSION, &sizes) {
                return Self::from_sections(s);
            }
        }
        let v = Self::build();
        // A read-only cache location only costs a rebuild next time.
        let _ = v.store(&path);
        v
    }

    /// Section sizes are data dependent; read them from the header and check
    /// the fixed ones.
    fn cached_sizes(path: &std::path::Path) -> Option<Vec<u64>> {
        use std::io::Read;
        let mut f = std::fs::File::open(path).ok()?;
        let mut head = [0u8; 9 + 8 * 10];
        f.read_exact(&mut head).ok()?;
        if u32::from_le_bytes(head[5..9].try_into().unwrap()) != 10 {
            return None;
        }
        let sizes: Vec<u64> = (0..10)
            .map(|i| u64::from_le_bytes(head[9 + 8 * i..17 + 8 * i].try_into().unwrap()))
            .collect();
        (sizes[0] == 4 * N_FLIPSLICE as u64 && sizes[1] == N_FLIPSLICE as u64).then_some(sizes)
    }

    fn store(&self, path: &std::path::Path) -> Result<()> {
        let s = self.sections();
        let refs: Vec<&[u8]> = s.iter().map(|v| v.as_slice()).collect();
        cache::save(path, MAGIC, VERSION, &refs)
    }

    pub fn get() -> &'static VertexTable {
        static V: OnceLock<VertexTable> = OnceLock::new();
        V.get_or_init(Self::load_or_build)
    }

    /// Number of vertices.
    pub fn count(&self) -> u32 {
        *self.class_offset.last().unwrap()
    }

    /// Number of flipslice classes.
    pub fn flipslice_classes(&self) -> usize {
        self.class_rep.len()
    }

    /// Vertices whose class contains a coordinate with the middle edges in the
    /// middle slice. They are exactly the indices below this count.
    pub fn solvable_count(&self) -> u32 {
        self.solvable
    }

    pub fn is_solvable(&self, index: u32) -> bool {
        index < self.solvable
    }

    /// Dense index of the class of `(fs, twist)`.
    #[inline]
    pub fn index_of(&self, fs: u32, twist: u16) -> u32 {
        let (c, tw) = self.canonical_parts(fs, twist);
        let row = self.class_sym_row[c as usize];
        if row == u32::MAX {
            self.class_offset[c as usize] + tw as u32
        } else {
            self.class_offset[c as usize]
                + self.sym_rank[row as usize * N_TWIST + tw as usize] as u32
        }
    }

    /// Class number and minimal twist.
    #[inline]
    fn canonical_parts(&self, fs: u32, twist: u16) -> (u32, u16) {
        let t = MoveTables::get();
        let c = self.fs_class[fs as usize];
        let s = self.fs_sym[fs as usize] as usize;
        let tw = t.twist_conj[twist as usize * N_SYM_UD + s];
        let stab = self.class_stab[c as usize];
        if stab == 1 {
            return (c, tw);
        }
        let mut best = tw;
        let mut bits = stab & !1;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            best = best.min(t.twist_conj[tw as usize * N_SYM_UD + u]);
        }
        (c, best)
    }

    pub fn canonical(&self, c: Phase1Coord) -> RVertex {
        let (class, tw) = self.canonical_parts(c.flipslice(), c.twist);
        let rep = self.class_rep[class as usize];
        let coord = Phase1Coord::from_flipslice(rep, tw);
        RVertex {
            coord,
            index: self.index_of(rep, tw),
        }
    }

    /// Canonical coordinate of a vertex index.
    pub fn coord(&self, index: u32) -> Phase1Coord {
        let c = self.class_offset.partition_point(|&o| o <= index) - 1;
        self.coord_in_class(c, index - self.class_offset[c])
    }

    fn coord_in_class(&self, c: usize, k: u32) -> Phase1Coord {
        let row = self.class_sym_row[c];
        let tw = if row == u32::MAX {
            k as u16
        } else {
            self.sym_twists[(self.sym_twist_start[row as usize] + k) as usize]
        };
        Phase1Coord::from_flipslice(self.class_rep[c], tw)
    }

    pub fn vertex(&self, index: u32) -> RVertex {
        RVertex {
            coord: self.coord(index),
            index,
        }
    }

    /// Visit every vertex in index order with its canonical coordinate.
    pub fn for_each<F: FnMut(u32, Phase1Coord)>(&self, range: std::ops::Range<u32>, mut f: F) {
        if range.is_empty() {
            return;
        }
        let mut c = self.class_offset.partition_point(|&o| o <= range.start) - 1;
        let mut i = range.start;
        while i < range.end {
            while self.class_offset[c + 1] <= i {
                c += 1;
            }
            let end = self.class_offset[c + 1].min(range.end);
            for k in i..end {
                f(k, self.coord_in_class(c, k - self.class_offset[c]));
            }
            i = end;
        }
    }

    /// Number of coordinates of R in the class of this canonical coordinate.
    pub fn class_size(&self, c: Phase1Coord) -> u32 {
        let t = MoveTables::get();
        let class = self.fs_class[c.flipslice() as usize];
        let stab = self.class_stab[class as usize];
        let fixed = (0..N_SYM_UD)
            .filter(|&u| {
                stab >> u & 1 == 1 && t.twist_conj[c.twist as usize * N_SYM_UD + u] == c.twist
            })
            .count() as u32;
        N_SYM_UD as u32 / fixed
    }

    /// Index of the class reached from a canonical coordinate by one move.
    #[inline]
    pub fn neighbor(&self, c: Phase1Coord, mv: usize) -> u32 {
        let t = MoveTables::get();
        let tw = t.twist[c.twist as usize * N_MOVES + mv];
        let fl = t.flip[c.flip as usize * N_MOVES + mv];
        let sl = t.slice[c.slice as usize * N_MOVES + mv];
        self.index_of(sl as u32 * N_FLIP as u32 + fl as u32, tw)
    }

    /// Indices of the classes reached by each of the 18 moves.
    pub fn neighbors(&self, index: u32) -> [u32; N_MOVES] {
        let c = self.coord(index);
        std::array::from_fn(|m| self.neighbor(c, m))
    }
}

/// Conjugate of a coordinate by one of the 16 U/D-axis symmetries.
pub fn conjugate_coord(c: Phase1Coord, s: usize) -> Phase1Coord {
    let t = MoveTables::get();
    Phase1Coord::from_flipslice(
        conjugate_flipslice(c.flipslice(), s),
        t.twist_conj[c.twist as usize * N_SYM_UD + s],
    )
}
