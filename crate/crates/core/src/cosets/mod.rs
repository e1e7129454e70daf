//! The set solver: bounds the distance of every position of a coset Ha at
//! once, with a membership set over H, a left-multiplication prepass and a
//! phase-1 search from `a`.

pub mod bitmap;
pub mod hashed;
pub mod oracle;
pub mod polish;

use std::fmt;
use std::time::{Duration, Instant};

use crate::coords::{MoveTables, Phase1Coord, Phase2Coord, H_SIZE};
use crate::cube::{CubieState, Move, MoveSequence};
use crate::error::{Error, Result};
use crate::twophase::search::{Leaf, Node, Phase1Search};
use crate::twophase::{phase2_solve, PHASE2_MAX};
pub use bitmap::CosetBitmap;
pub use hashed::{coset_symmetries, HashCover, SymmetricCover};
pub use oracle::{oracle_solve_set, OracleBall, OracleReport};

pub const DEFAULT_LOG_THRESHOLD: u64 = 65_536;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MemoryMode {
    /// Two bitmaps over all of H.
    Full,
    /// A hash table of covered indices.
    #[default]
    Hash,
    /// A hash table of orbit representatives under the coset's symmetries.
    Symmetric,
}

impl std::str::FromStr for MemoryMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<MemoryMode> {
        match s {
            "full" => Ok(MemoryMode::Full),
            "hash" | "oracle" => Ok(MemoryMode::Hash),
            "symmetric" => Ok(MemoryMode::Symmetric),
            _ => Err(Error::Invalid(format!("unknown memory mode {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CosetJob {
    pub representative: MoveSequence,
    /// Deepest phase-1 search `m`; beyond it only the prepass runs.
    pub search_limit: usize,
    pub mode: MemoryMode,
    pub log_threshold: u64,
    pub memory_budget: u64,
    /// Stop after this depth even if the set is not complete.
    pub depth_limit: Option<usize>,
    /// Let the phase-1 search pass through H and leave it again.
    pub allow_reentry: bool,
    /// Skip search sequences ending in a move of A; the prepass covers them.
    pub skip_a_ending: bool,
}

impl CosetJob {
    pub fn new(representative: MoveSequence) -> CosetJob {
        CosetJob {
            representative,
            search_limit: usize::MAX,
            mode: MemoryMode::Hash,
            log_threshold: DEFAULT_LOG_THRESHOLD,
            memory_budget: 2 << 30,
            depth_limit: None,
            allow_reentry: true,
            skip_a_ending: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthStats {
    pub depth: usize,
    /// Positions first covered at this depth.
    pub new: u64,
    /// Positions added by the prepass.
    pub prepass_new: u64,
    /// Search leaves that reached H (including already-covered positions).
    pub insertions: u64,
    pub nodes: u64,
    pub elapsed: Duration,
}

/// One uncovered position written to the residual log.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualLine {
    pub representative: MoveSequence,
    pub index: u64,
    /// A sequence taking solved to the position.
    pub witness: MoveSequence,
}

impl fmt::Display for ResidualLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}",
            self.representative, self.index, self.witness
        )
    }
}

impl std::str::FromStr for ResidualLine {
    type Err = Error;
    fn from_str(s: &str) -> Result<ResidualLine> {
        let parts: Vec<&str> = s.split('\t').collect();
        if parts.len() != 3 {
            return Err(Error::Format(format!(
                "residual line needs 3 fields: {s:?}"
            )));
        }
        Ok(ResidualLine {
            representative: MoveSequence::parse(parts[0])?,
            index: parts[1]
                .parse()
                .map_err(|_| Error::Format(format!("bad index {:?}", parts[1])))?,
            witness: MoveSequence::parse(parts[2])?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetReport {
    pub representative: MoveSequence,
    pub per_depth: Vec<DepthStats>,
    /// The depth at which every position was covered.
    pub final_bound: Option<usize>,
    /// Every depth up to the final one was fully searched, so the bound is the
    /// exact distance of the set.
    pub exact: bool,
    pub covered: u64,
    pub residual: Vec<ResidualLine>,
}

impl CosetReport {
    pub fn new_counts(&self) -> Vec<u64> {
        self.per_depth.iter().map(|s| s.new).collect()
    }

    /// TSV: one `depth<TAB>new<TAB>nodes` row per depth, then a summary line.
    pub fn tsv(&self) -> String {
        let mut s = String::from("depth\tnew\tnodes\n");
        for d in &self.per_depth {
            s += &format!("{}\t{}\t{}\n", d.depth, d.new, d.nodes);
        }
        s += &format!(
            "# {}\tbound {}\t{}\tcovered {}\n",
            self.representative,
            self.final_bound.map_or("-".to_string(), |b| b.to_string()),
            if self.exact { "exact" } else { "upper bound" },
            self.covered
        );
        s
    }
}

/// The coset's membership set in any of the three representations.
pub enum Cover {
    Full(Box<CosetBitmap>),
    Hash(HashCover),
    Symmetric(SymmetricCover),
}

impl Cover {
    pub fn new(mode: MemoryMode, a: &CubieState, memory_budget: u64) -> Result<Cover> {
        Ok(match mode {
            MemoryMode::Full => Cover::Full(Box::new(CosetBitmap::new(memory_budget)?)),
            MemoryMode::Hash => Cover::Hash(HashCover::new(memory_budget)),
            MemoryMode::Symmetric => Cover::Symmetric(SymmetricCover::new(a, memory_budget)),
        })
    }

    pub fn count(&self) -> u64 {
        match self {
            Cover::Full(b) => b.count(),
            Cover::Hash(h) => h.count(),
            Cover::Symmetric(s) => s.count(),
        }
    }

    pub fn insert(&mut self, index: u64) -> Result<bool> {
        match self {
            Cover::Full(b) => Ok(b.insert(index)),
            Cover::Hash(h) => h.insert(index),
            Cover::Symmetric(s) => s.insert(index),
        }
    }

    pub fn contains(&self, index: u64) -> bool {
        match self {
            Cover::Full(b) => b.contains(index),
            Cover::Hash(h) => h.contains(index),
            Cover::Symmetric(s) => s.contains(index),
        }
    }

    /// `f ← f ∪ A·f`.
    pub fn prepass(&mut self) -> Result<()> {
        match self {
            Cover::Full(b) => {
                b.prepass();
                Ok(())
            }
            Cover::Hash(h) => h.prepass(),
            Cover::Symmetric(s) => s.prepass(),
        }
    }

    /// All covered indices, sorted.
    pub fn covered(&self) -> Vec<u64> {
        match self {
            Cover::Full(b) => b.covered(),
            Cover::Hash(h) => h.covered(),
            Cover::Symmetric(s) => s.covered(),
        }
    }

    /// Uncovered indices, when the representation can list them.
    pub fn uncovered(&self) -> Option<Vec<u64>> {
        match self {
            Cover::Full(b) => Some(b.uncovered()),
            _ => None,
        }
    }
}

struct Inserter<'a> {
    cover: &'a mut Cover,
    t: &'static MoveTables,
    insertions: u64,
    nodes: u64,
    error: Option<Error>,
}

impl Leaf for Inserter<'_> {
    fn leaf(&mut self, _path: &[usize], node: &Node) -> bool {
        let Some(h) = node.phase2(self.t) else {
            return false;
        };
        // The sequence s solves s⁻¹ = (a·s)⁻¹·a, whose H-part is (a·s)⁻¹.
        let idx = self.t.invert_h(h).pack();
        self.insertions += 1;
        match self.cover.insert(idx) {
            Ok(_) => false,
            Err(e) => {
                self.error = Some(e);
                true
            }
        }
    }

    #[inline]
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        false
    }
}

/// Insert every position solved by a canonical sequence of exactly `depth`
/// moves `s` with `r(a·s) = e`. Returns `(insertions, nodes)`.
pub fn search_depth(
    a: &CubieState,
    depth: usize,
    cover: &mut Cover,
    search: &mut Phase1Search,
) -> Result<(u64, u64)> {
    let mut ins = Inserter {
        cover,
        t: MoveTables::get(),
        insertions: 0,
        nodes: 0,
        error: None,
    };
    search.run(&Node::new(a), depth, &mut ins);
    match ins.error {
        Some(e) => Err(e),
        None => Ok((ins.insertions, ins.nodes)),
    }
}

pub fn check_representative(a: &CubieState) -> Result<()> {
    if Phase1Coord::relabel(a).slice != 0 {
        return Err(Error::Restriction(
            "the middle-slice edges must lie in the middle slice".into(),
        ));
    }
    Ok(())
}

/// A move sequence taking solved to the position of Ha whose H-part has
/// index `index`.
pub fn witness(a: &MoveSequence, index: u64) -> MoveSequence {
    let h = Phase2Coord::unpack_unchecked(index);
    let to_h = phase2_solve(h, PHASE2_MAX).expect("every position of H has a phase-2 solution");
    to_h.inverse().concat(a)
}

/// The set solver. Each iteration runs the prepass, then (while `d ≤ m`) the
/// depth-`d` search, and returns `d` once the whole coset is covered.
pub fn solve_set(job: &CosetJob) -> Result<CosetReport> {
    solve_set_with(job, |_| {})
}

/// As [`solve_set`], calling `progress` after each depth.
pub fn solve_set_with<F: FnMut(&DepthStats)>(
    job: &CosetJob,
    mut progress: F,
) -> Result<CosetReport> {
    let a = CubieState::from_sequence(&job.representative);
    check_representative(&a)?;
    let mut cover = Cover::new(job.mode, &a, job.memory_budget)?;
    let mut search = Phase1Search::new(!job.allow_reentry, None);
    search.forbid_a_ending = job.skip_a_ending;
    let mut report = CosetReport {
        representative: job.representative.clone(),
        per_depth: Vec::new(),
        final_bound: None,
        exact: false,
        covered: 0,
        residual: Vec::new(),
    };
    let mut logged = false;
    let mut d = 0usize;
    loop {
        let start = Instant::now();
        let before = cover.count();
        if !logged && H_SIZE - before < job.log_threshold {
            if let Some(list) = cover.uncovered() {
                report.residual = list
                    .into_iter()
                    .map(|index| ResidualLine {
                        representative: job.representative.clone(),
                        index,
                        witness: witness(&job.representative, index),
                    })
                    .collect();
                logged = true;
            }
        }
        cover.prepass()?;
        let after_prepass = cover.count();
        let (mut insertions, mut nodes) = (0, 0);
        if after_prepass < H_SIZE && d <= job.search_limit {
            (insertions, nodes) = search_depth(&a, d, &mut cover, &mut search)?;
        }
        let stats = DepthStats {
            depth: d,
            new: cover.count() - before,
            prepass_new: after_prepass - before,
            insertions,
            nodes,
            elapsed: start.elapsed(),
        };
        progress(&stats);
        report.per_depth.push(stats);
        if cover.count() == H_SIZE {
            report.final_bound = Some(d);
            report.exact = d <= job.search_limit;
            break;
        }
        if job.depth_limit == Some(d) {
            break;
        }
        d += 1;
    }
    report.covered = cover.count();
    Ok(report)
}

/// Run the set solver up to `depth` and also return the covered indices.
pub fn solve_set_covered(job: &CosetJob, depth: usize) -> Result<(CosetReport, Vec<Vec<u64>>)> {
    let a = CubieState::from_sequence(&job.representative);
    check_representative(&a)?;
    let mut cover = Cover::new(job.mode, &a, job.memory_budget)?;
    let mut search = Phase1Search::new(!job.allow_reentry, None);
    search.forbid_a_ending = job.skip_a_ending;
    let mut per_depth = Vec::new();
    let mut sets = Vec::new();
    for d in 0..=depth {
        let start = Instant::now();
        let before = cover.count();
        cover.prepass()?;
        let after_prepass = cover.count();
        let (insertions, nodes) = if d <= job.search_limit {
            search_depth(&a, d, &mut cover, &mut search)?
        } else {
            (0, 0)
        };
        per_depth.push(DepthStats {
            depth: d,
            new: cover.count() - before,
            prepass_new: after_prepass - before,
            insertions,
            nodes,
            elapsed: start.elapsed(),
        });
        sets.push(cover.covered());
    }
    let covered = cover.count();
    Ok((
        CosetReport {
            representative: job.representative.clone(),
            per_depth,
            final_bound: None,
            exact: false,
            covered,
            residual: Vec::new(),
        },
        sets,
    ))
}

/// Replay check for one inserted index: the witness lands in Ha.
pub fn in_coset(a: &CubieState, x: &CubieState) -> bool {
    x.multiply(&a.inverse()).in_h()
}

/// Parse a representative given as a move sequence or a packed phase-1
/// coordinate in hexadecimal (`0x...`). Coordinates are turned into a
/// sequence by descending the phase-1 table.
pub fn parse_representative(s: &str) -> Result<MoveSequence> {
    let s = s.trim();
    if let Some(hex) = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        let v = u64::from_str_radix(hex, 16)
            .map_err(|_| Error::Invalid(format!("bad hex coordinate {s:?}")))?;
        let c = Phase1Coord::from_packed(v)?;
        return Ok(representative_of(c));
    }
    Ok(MoveSequence::parse(s)?)
}

/// A sequence `a` with `r(a) = c`.
pub fn representative_of(c: Phase1Coord) -> MoveSequence {
    let down = crate::pruning::Phase1Table::get().descend(c);
    MoveSequence::from_moves(down.into_iter().map(Move::from_index)).inverse()
}

/// Outcome of comparing the fast set solver with the oracle on one coset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub representative: MoveSequence,
    pub fast_counts: Vec<u64>,
    pub oracle_counts: Vec<u64>,
    /// First depth whose covered sets differ.
    pub first_set_mismatch: Option<usize>,
}

impl Comparison {
    pub fn agrees(&self) -> bool {
        self.fast_counts == self.oracle_counts && self.first_set_mismatch.is_none()
    }
}

/// Per-depth counts and covered sets of the fast solver against the oracle,
/// for depths `0..=ball.depth()`.
pub fn compare_with_oracle(job: &CosetJob, ball: &OracleBall) -> Result<Comparison> {
    let depth = ball.depth();
    let (report, sets) = solve_set_covered(job, depth)?;
    let a = CubieState::from_sequence(&job.representative);
    let oracle = ball.solve_set(&a);
    let first_set_mismatch = (0..=depth).find(|&d| sets[d] != oracle.covered[d]);
    Ok(Comparison {
        representative: job.representative.clone(),
        fast_counts: report.new_counts(),
        oracle_counts: oracle.per_depth_new,
        first_set_mismatch,
    })
}

/// A random representative outside H with the middle edges in the middle
/// slice and phase-1 distance at most `max_phase1`, made of `len` random
/// moves (rejection sampled).
pub fn random_representative<R: rand::Rng + ?Sized>(
    rng: &mut R,
    len: usize,
    max_phase1: u8,
) -> MoveSequence {
    loop {
        let seq =
            MoveSequence::from_moves((0..len).map(|_| Move::from_index(rng.random_range(0..18))));
        let a = CubieState::from_sequence(&seq);
        if !a.in_h()
            && check_representative(&a).is_ok()
            && crate::pruning::Phase1Table::get().distance(Phase1Coord::relabel(&a)) <= max_phase1
        {
            return seq;
        }
    }
}
