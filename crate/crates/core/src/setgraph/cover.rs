use crate::coords::phase1::{slice_of_slots, slice_slots};
use crate::coords::{MoveTables, N_SLICE};
use crate::cube::{SymmetryIndex, MID_SLOTS, N_MOVES};
use crate::error::{Error, Result};

/// Edge slots adjacent to each corner slot (URF UFL ULB UBR DFR DLF DBL DRB).
pub const CORNER_EDGES: [[u8; 3]; 8] = [
    [0, 1, 4],
    [1, 2, 5],
    [2, 3, 6],
    [3, 0, 7],
    [9, 8, 4],
    [10, 9, 5],
    [11, 10, 6],
    [8, 11, 7],
];

/// Ordered partitions of the 12 edge slots into three groups of four.
pub const N_PARTITIONS: usize = 34_650;

/// Number of corners touching an odd number of the slots in `mask`.
pub fn odd_corner_count(mask: u16) -> u8 {
    CORNER_EDGES
        .iter()
        .filter(|e| e.iter().filter(|&&s| mask >> s & 1 == 1).count() % 2 == 1)
        .count() as u8
}

fn mask_of(slots: &[usize]) -> u16 {
    slots.iter().fold(0, |m, &s| m | 1 << s)
}

/// How one whole-cube orientation sees the middle slice: which cubies it
/// treats as middle edges, and where their slots land in its frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AxisFrame {
    pub sym: SymmetryIndex,
    /// Home slots of the cubies that are middle edges in this frame.
    pub cubies: [u8; 4],
    /// `slot_map[i]`: slot of the conjugated position that slot `i` becomes.
    pub slot_map: [u8; 12],
}

impl AxisFrame {
    fn new(sym: SymmetryIndex) -> AxisFrame {
        let ep = sym.cube().ep;
        let mut cubies = MID_SLOTS.map(|m| ep[m]);
        cubies.sort_unstable();
        let mut slot_map = [0u8; 12];
        for (i, &e) in ep.iter().enumerate() {
            slot_map[e as usize] = i as u8;
        }
        AxisFrame {
            sym,
            cubies,
            slot_map,
        }
    }

    /// Slice configuration, in this frame, of a position whose frame cubies
    /// sit in `slots`.
    pub fn config(&self, slots: [usize; 4]) -> u16 {
        slice_of_slots(slots.map(|s| self.slot_map[s] as usize))
    }
}

/// The identity frame and the two frames turning the R/L and F/B axes to U/D.
pub fn axis_frames() -> [AxisFrame; 3] {
    [
        AxisFrame::new(SymmetryIndex::IDENTITY),
        AxisFrame::new(SymmetryIndex::URF3),
        AxisFrame::new(SymmetryIndex::URF3_SQ),
    ]
}

/// Slots of each frame's middle cubies in one position, in frame order.
pub type Partition = [[usize; 4]; 3];

/// Visit all ordered partitions; stops early if `f` returns false.
pub fn partitions<F: FnMut(&Partition) -> bool>(mut f: F) -> bool {
    let subsets: Vec<[usize; 4]> = (0..12)
        .flat_map(|a| {
            (a + 1..12).flat_map(move |b| {
                (b + 1..12).flat_map(move |c| (c + 1..12).map(move |d| [a, b, c, d]))
            })
        })
        .collect();
    for a in &subsets {
        let ma = mask_of(a);
        for b in &subsets {
            if mask_of(b) & ma != 0 {
                continue;
            }
            let rest = !(ma | mask_of(b)) & 0xfff;
            let c: Vec<usize> = (0..12).filter(|&s| rest >> s & 1 == 1).collect();
            if !f(&[*a, *b, [c[0], c[1], c[2], c[3]]]) {
                return false;
            }
        }
    }
    true
}

/// Slice configurations (in the U/D frame) whose sets need not be solved,
/// because every position has some orientation landing in a kept one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationCover {
    eliminated: Vec<bool>,
}

/// The orbit of a slice configuration under the 16 symmetries fixing U/D.
fn slice_orbit(slice: u16) -> Vec<u16> {
    let mut v: Vec<u16> = SymmetryIndex::ud_preserving()
        .map(|s| {
            let f = AxisFrame::new(s);
            f.config(slice_slots(slice))
        })
        .collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Fewest moves taking the middle edges from configuration 0 to each slice
/// configuration.
fn slice_distances() -> Vec<u8> {
    let t = MoveTables::get();
    let mut d = vec![u8::MAX; N_SLICE];
    d[0] = 0;
    let mut frontier = vec![0u16];
    let mut level = 0;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &s in &frontier {
            for m in 0..N_MOVES {
                let n = t.slice[s as usize * N_MOVES + m];
                if d[n as usize] == u8::MAX {
                    d[n as usize] = level + 1;
                    next.push(n);
                }
            }
        }
        frontier = next;
        level += 1;
    }
    d
}

impl EliminationCover {
    pub fn empty() -> EliminationCover {
        EliminationCover {
            eliminated: vec![false; N_SLICE],
        }
    }

    /// Eliminate exactly the given configurations.
    pub fn from_eliminated(slices: &[u16]) -> Result<EliminationCover> {
        let mut c = EliminationCover::empty();
        for &s in slices {
            if s as usize >= N_SLICE {
                return Err(Error::Range {
                    what: "slice configuration",
                    value: s as u64,
                    limit: N_SLICE as u64,
                });
            }
            c.eliminated[s as usize] = true;
        }
        Ok(c)
    }

    /// Keep exactly the configurations with an odd corner count of 3 or more.
    pub fn odd_corner() -> EliminationCover {
        EliminationCover {
            eliminated: (0..N_SLICE as u16)
                .map(|s| odd_corner_count(mask_of(&slice_slots(s))) < 3)
                .collect(),
        }
    }

    #[inline]
    pub fn keeps(&self, slice: u16) -> bool {
        !self.eliminated[slice as usize]
    }

    pub fn eliminated(&self) -> Vec<u16> {
        (0..N_SLICE as u16)
            .filter(|&s| self.eliminated[s as usize])
            .collect()
    }

    pub fn eliminated_count(&self) -> usize {
        self.eliminated.iter().filter(|&&e| e).count()
    }

    /// Whether every configuration's U/D-symmetry orbit is kept or eliminated
    /// as a whole.
    pub fn is_symmetric(&self) -> bool {
        (0..N_SLICE as u16).all(|s| {
            slice_orbit(s)
                .iter()
                .all(|&t| self.eliminated[t as usize] == self.eliminated[s as usize])
        })
    }

    /// Greedy elimination: whole U/D-symmetry orbits, farthest from the
    /// middle-edges-in-middle configuration first, each kept only if the
    /// cover stays valid.
    pub fn compute() -> EliminationCover {
        let dist = slice_distances();
        let mut seen = vec![false; N_SLICE];
        let mut orbits: Vec<Vec<u16>> = Vec::new();
        for s in 0..N_SLICE as u16 {
            if !seen[s as usize] {
                let o = slice_orbit(s);
                for &t in &o {
                    seen[t as usize] = true;
                }
                orbits.push(o);
            }
        }
        orbits.sort_by_key(|o| {
            let s = o[0];
            (
                std::cmp::Reverse(dist[s as usize]),
                odd_corner_count(mask_of(&slice_slots(s))),
                s,
            )
        });
        let mut cover = EliminationCover::empty();
        for o in orbits {
            for &s in &o {
                cover.eliminated[s as usize] = true;
            }
            if validate_cover(&cover).is_err() {
                for &s in &o {
                    cover.eliminated[s as usize] = false;
                }
            }
        }
        cover
    }
}

/// Check that every ordered partition has some frame whose configuration is
/// kept; returns the first partition that has none.
pub fn validate_cover(cover: &EliminationCover) -> std::result::Result<(), Partition> {
    let frames = axis_frames();
    let mut bad = None;
    partitions(|p| {
        if frames
            .iter()
            .zip(p)
            .any(|(f, &slots)| cover.keeps(f.config(slots)))
        {
            true
        } else {
            bad = Some(*p);
            false
        }
    });
    match bad {
        None => Ok(()),
        Some(p) => Err(p),
    }
}
