//! Near-optimal single-position solving by two-phase search, with the
//! three-axis and six-axis variants, plus an exact optimal solver.

pub mod oracle;
pub mod search;

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::coords::{MoveTables, Phase1Coord, Phase2Coord, VertexTable, N_FLIP};
use crate::cube::{may_follow_index, CubieState, Move, MoveSequence, SymmetryIndex, N_MOVES};
use crate::error::{Error, Result};
use crate::pruning::packed::step_distance;
use crate::pruning::Phase1Table;
use search::{phase2_search, Control, Leaf, Node, Phase1Search};

/// Longest phase-2 search ever needed: every position of H is within 18 moves of A.
pub const PHASE2_MAX: usize = 18;

/// Deepest iteration of the optimal solver.
const MAX_DEPTH: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Single,
    /// The position in all three axis orientations.
    Triple,
    /// The position and its inverse in all three axis orientations.
    Six,
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "single" => Ok(Mode::Single),
            "triple" => Ok(Mode::Triple),
            "six" => Ok(Mode::Six),
            _ => Err(Error::Invalid(format!("unknown mode {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub mode: Mode,
    /// Stop as soon as a solution of at most this many moves is known.
    pub target_length: usize,
    pub max_phase1_depth: usize,
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
    /// Worker threads for the axis variants; 1 runs them interleaved on the
    /// calling thread, deterministically.
    pub threads: usize,
    /// Cache the surviving children of nodes this close to the root.
    pub candidate_cache: Option<usize>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            mode: Mode::Single,
            target_length: 0,
            max_phase1_depth: 30,
            node_budget: None,
            time_budget: None,
            threads: 1,
            candidate_cache: None,
        }
    }
}

impl SolveOptions {
    pub fn with_mode(mode: Mode) -> Self {
        SolveOptions {
            mode,
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub solution: Option<MoveSequence>,
    pub nodes: u64,
    /// `(length, nodes expanded so far)` at each improvement.
    pub improved_at: Vec<(usize, u64)>,
    /// The search ran to completion rather than stopping on a target or budget.
    pub exhausted: bool,
}

impl SolveResult {
    pub fn length(&self) -> Option<usize> {
        self.solution.as_ref().map(|s| s.len())
    }

    /// `length<TAB>solution<TAB>nodes`
    pub fn line(&self) -> String {
        match &self.solution {
            Some(s) => format!("{}\t{}\t{}", s.len(), s, self.nodes),
            None => format!("-\t-\t{}", self.nodes),
        }
    }
}

struct Variant {
    sym: SymmetryIndex,
    inverse: bool,
    root: Node,
}

impl Variant {
    /// Translate a solution found in this variant's frame back to the input's.
    fn translate(&self, moves: &[usize]) -> MoveSequence {
        let back = self.sym.inverse();
        let seq = MoveSequence::from_moves(
            moves
                .iter()
                .map(|&m| back.conjugate_move(Move::from_index(m))),
        );
        if self.inverse {
            seq.inverse()
        } else {
            seq
        }
    }
}

fn variants(p: &CubieState, mode: Mode) -> Vec<Variant> {
    let syms: &[SymmetryIndex] = match mode {
        Mode::Single => &[SymmetryIndex::IDENTITY],
        _ => &[
            SymmetryIndex::IDENTITY,
            SymmetryIndex::URF3,
            SymmetryIndex::URF3_SQ,
        ],
    };
    let inverses: &[bool] = if mode == Mode::Six {
        &[false, true]
    } else {
        &[false]
    };
    let inv = p.inverse();
    let mut out = Vec::new();
    for &inverse in inverses {
        for &sym in syms {
            let base = if inverse { &inv } else { p };
            out.push(Variant {
                sym,
                inverse,
                root: Node::new(&base.conjugate(sym)),
            });
        }
    }
    out
}

/// State shared by all workers of one solve call.
struct Shared {
    best_len: AtomicUsize,
    best: Mutex<(Option<MoveSequence>, Vec<(usize, u64)>)>,
    stop: AtomicBool,
    nodes: AtomicU64,
}

struct Budget<'a> {
    shared: &'a Shared,
    local: u64,
    node_budget: Option<u64>,
    deadline: Option<Instant>,
}

impl Budget<'_> {
    fn flush(&mut self) {
        self.shared.nodes.fetch_add(self.local, Ordering::Relaxed);
        self.local = 0;
    }
}

impl Control for Budget<'_> {
    #[inline]
    fn tick(&mut self) -> bool {
        self.local += 1;
        if self.local & 1023 != 0 {
            return false;
        }
        self.flush();
        if self.shared.stop.load(Ordering::Relaxed) {
            return true;
        }
        let over_nodes = self
            .node_budget
            .is_some_and(|b| self.shared.nodes.load(Ordering::Relaxed) >= b);
        let over_time = self.deadline.is_some_and(|d| Instant::now() >= d);
        if over_nodes || over_time {
            self.shared.stop.store(true, Ordering::Relaxed);
            return true;
        }
        false
    }
}

struct Worker<'a> {
    p: &'a CubieState,
    variant: &'a Variant,
    budget: Budget<'a>,
    target: usize,
    depth: usize,
    error: Option<Error>,
}

impl Leaf for Worker<'_> {
    fn leaf(&mut self, path: &[usize], node: &Node) -> bool {
        let shared = self.budget.shared;
        let best = shared.best_len.load(Ordering::Relaxed);
        if self.depth >= best {
            return true;
        }
        let Some(c) = node.phase2(MoveTables::get()) else {
            return false;
        };
        let max_len = (best - self.depth - 1).min(PHASE2_MAX);
        let last = path.last().copied().unwrap_or(N_MOVES);
        let Some(tail) = phase2_search(c, max_len, last, &mut self.budget) else {
            return false;
        };
        let moves: Vec<usize> = path.iter().copied().chain(tail).collect();
        let seq = self.variant.translate(&moves);
        if !self.p.apply_sequence(&seq).is_solved() {
            self.error = Some(Error::Verification(format!(
                "solution {seq} does not solve the position"
            )));
            shared.stop.store(true, Ordering::Relaxed);
            return true;
        }
        let len = seq.len();
        {
            let mut guard = shared.best.lock().unwrap();
            if len < shared.best_len.load(Ordering::Relaxed) {
                shared.best_len.store(len, Ordering::Relaxed);
                self.budget.flush();
                guard.1.push((len, shared.nodes.load(Ordering::Relaxed)));
                guard.0 = Some(seq);
            }
        }
        if len <= self.target {
            shared.stop.store(true, Ordering::Relaxed);
            return true;
        }
        self.depth >= shared.best_len.load(Ordering::Relaxed)
    }

    #[inline]
    fn tick(&mut self) -> bool {
        self.budget.tick()
    }
}

/// Run one variant's phase-1 search at a single depth. Returns an error only
/// if a solution failed replay.
fn run_depth(
    p: &CubieState,
    variant: &Variant,
    search: &mut Phase1Search<'_>,
    shared: &Shared,
    opts: &SolveOptions,
    deadline: Option<Instant>,
    depth: usize,
) -> Result<()> {
    let mut w = Worker {
        p,
        variant,
        budget: Budget {
            shared,
            local: 0,
            node_budget: opts.node_budget,
            deadline,
        },
        target: opts.target_length,
        depth,
        error: None,
    };
    search.run(&variant.root, depth, &mut w);
    w.budget.flush();
    match w.error {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

/// Two-phase search. Phase-1 depths are tried in increasing order; at each
/// depth every phase-1 solution without a strict prefix in H is completed by
/// the shortest phase-2 solution that improves on the best total so far. In
/// triple and six-axis mode all variants are searched at a depth before the
/// next depth starts.
pub fn solve(p: &CubieState, opts: &SolveOptions) -> Result<SolveResult> {
    if !p.is_valid() {
        return Err(Error::Invalid(
            "position violates the cube invariants".into(),
        ));
    }
    let deadline = opts.time_budget.map(|b| Instant::now() + b);
    let shared = Shared {
        best_len: AtomicUsize::new(usize::MAX),
        best: Mutex::new((None, Vec::new())),
        stop: AtomicBool::new(false),
        nodes: AtomicU64::new(0),
    };
    let vars = variants(p, opts.mode);
    let mut completed = true;
    if opts.threads > 1 && vars.len() > 1 {
        let results: Vec<Result<bool>> = std::thread::scope(|scope| {
            let handles: Vec<_> = vars
                .iter()
                .map(|var| {
                    let shared = &shared;
                    scope.spawn(move || {
                        let mut search = Phase1Search::new(true, opts.candidate_cache);
                        for d in 0..=opts.max_phase1_depth {
                            if d >= shared.best_len.load(Ordering::Relaxed) {
                                return Ok(true);
                            }
                            run_depth(p, var, &mut search, shared, opts, deadline, d)?;
                            if shared.stop.load(Ordering::Relaxed) {
                                return Ok(false);
                            }
                        }
                        Ok(false)
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        for r in results {
            completed &= r?;
        }
    } else {
        let mut searches: Vec<Phase1Search> = vars
            .iter()
            .map(|_| Phase1Search::new(true, opts.candidate_cache))
            .collect();
        completed = false;
        'outer: for d in 0..=opts.max_phase1_depth {
            if d >= shared.best_len.load(Ordering::Relaxed) {
                completed = true;
                break;
            }
            for (var, search) in vars.iter().zip(searches.iter_mut()) {
                run_depth(p, var, search, &shared, opts, deadline, d)?;
                if shared.stop.load(Ordering::Relaxed) {
                    break 'outer;
                }
            }
        }
    }
    let (solution, improved_at) = shared.best.into_inner().unwrap();
    let stopped = shared.stop.load(Ordering::Relaxed);
    Ok(SolveResult {
        solution,
        nodes: shared.nodes.load(Ordering::Relaxed),
        improved_at,
        exhausted: completed && !stopped,
    })
}

struct Counter(u64);

impl Control for Counter {
    fn tick(&mut self) -> bool {
        self.0 += 1;
        false
    }
}

/// Shortest sequence of moves of A, at most `max_len` long, that solves the
/// position of H with coordinate `c`.
pub fn phase2_solve(c: Phase2Coord, max_len: usize) -> Option<MoveSequence> {
    phase2_search(c, max_len, N_MOVES, &mut Counter(0))
        .map(|m| MoveSequence::from_moves(m.into_iter().map(Move::from_index)))
}

/// Every canonical phase-1 solution of exactly `depth` moves for `p`; with
/// `restrict_prefix`, only those without a strict prefix that reaches H.
pub fn phase1_solutions(p: &CubieState, depth: usize, restrict_prefix: bool) -> Vec<MoveSequence> {
    struct Collect(Vec<MoveSequence>);
    impl Leaf for Collect {
        fn leaf(&mut self, path: &[usize], _: &Node) -> bool {
            self.0.push(MoveSequence::from_moves(
                path.iter().map(|&m| Move::from_index(m)),
            ));
            false
        }
        fn tick(&mut self) -> bool {
            false
        }
    }
    let mut c = Collect(Vec::new());
    Phase1Search::new(restrict_prefix, None).run(&Node::new(p), depth, &mut c);
    c.0
}

const AXES: [SymmetryIndex; 3] = [
    SymmetryIndex::IDENTITY,
    SymmetryIndex::URF3,
    SymmetryIndex::URF3_SQ,
];

#[derive(Clone, Copy)]
struct AxisState {
    coord: Phase1Coord,
    dist: u8,
}

struct Optimal<'a> {
    p: &'a CubieState,
    t: &'static MoveTables,
    v: &'static VertexTable,
    p1: &'static Phase1Table,
    /// Move conjugated into each axis frame.
    move_in: [[usize; N_MOVES]; 3],
    path: Vec<usize>,
    budget: Budget<'a>,
}

impl Optimal<'_> {
    fn step(&self, s: &AxisState, m: usize) -> AxisState {
        let c = search_apply(self.t, s.coord, m);
        let idx = self
            .v
            .index_of(c.slice as u32 * N_FLIP as u32 + c.flip as u32, c.twist);
        AxisState {
            coord: c,
            dist: step_distance(s.dist, self.p1.packed().get(idx as u64)),
        }
    }

    fn dfs(&mut self, states: &[AxisState; 3], togo: usize) -> Option<bool> {
        if self.budget.tick() {
            return None;
        }
        if togo == 0 {
            let seq = MoveSequence::from_moves(self.path.iter().map(|&m| Move::from_index(m)));
            return Some(self.p.apply_sequence(&seq).is_solved());
        }
        let last = self.path.last().copied().unwrap_or(N_MOVES);
        for m in 0..N_MOVES {
            if !may_follow_index(last, m) {
                continue;
            }
            let next: [AxisState; 3] =
                std::array::from_fn(|k| self.step(&states[k], self.move_in[k][m]));
            if next.iter().any(|s| s.dist as usize > togo - 1) {
                continue;
            }
            self.path.push(m);
            match self.dfs(&next, togo - 1) {
                Some(false) => {
                    self.path.pop();
                }
                other => return other,
            }
        }
        Some(false)
    }
}

#[inline]
fn search_apply(t: &MoveTables, c: Phase1Coord, m: usize) -> Phase1Coord {
    crate::pruning::phase1::apply(t, c, m)
}

/// Provably shortest solution by iterative deepening over all 18 moves, with
/// the largest phase-1 distance over the three axis orientations as the bound.
pub fn solve_optimal(p: &CubieState, opts: &SolveOptions) -> Result<SolveResult> {
    if !p.is_valid() {
        return Err(Error::Invalid(
            "position violates the cube invariants".into(),
        ));
    }
    let p1 = Phase1Table::get();
    let shared = Shared {
        best_len: AtomicUsize::new(usize::MAX),
        best: Mutex::new((None, Vec::new())),
        stop: AtomicBool::new(false),
        nodes: AtomicU64::new(0),
    };
    let roots: [AxisState; 3] = std::array::from_fn(|k| {
        let coord = Phase1Coord::relabel(&p.conjugate(AXES[k]));
        AxisState {
            coord,
            dist: p1.distance(coord),
        }
    });
    let mut o = Optimal {
        p,
        t: MoveTables::get(),
        v: VertexTable::get(),
        p1,
        move_in: std::array::from_fn(|k| {
            std::array::from_fn(|m| AXES[k].conjugate_move(Move::from_index(m)).index())
        }),
        path: Vec::new(),
        budget: Budget {
            shared: &shared,
            local: 0,
            node_budget: opts.node_budget,
            deadline: opts.time_budget.map(|b| Instant::now() + b),
        },
    };
    let lb = roots.iter().map(|s| s.dist as usize).max().unwrap();
    let mut solution = None;
    let mut exhausted = false;
    for bound in lb..=MAX_DEPTH {
        match o.dfs(&roots, bound) {
            Some(true) => {
                let seq = MoveSequence::from_moves(o.path.iter().map(|&m| Move::from_index(m)));
                solution = Some(seq);
                exhausted = true;
                break;
            }
            Some(false) => {}
            None => break,
        }
    }
    o.budget.flush();
    let nodes = shared.nodes.load(Ordering::Relaxed);
    let improved_at = solution
        .iter()
        .map(|s: &MoveSequence| (s.len(), nodes))
        .collect();
    Ok(SolveResult {
        solution,
        nodes,
        improved_at,
        exhausted,
    })
}
