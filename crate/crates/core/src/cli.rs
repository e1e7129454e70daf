//! Command-line front end: argument parsing, configuration and the commands
//! that drive the library through a campaign (solve sets, polish residual
//! positions, propagate bounds, select the next sets).

use std::fmt;
use std::fs;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coords::{cache, VertexTable};
use crate::cosets::polish::{polish, PolishOutcome};
use crate::cosets::{
    compare_with_oracle, parse_representative, random_representative, solve_set_with, CosetJob,
    MemoryMode, OracleBall,
};
use crate::cube::{CubieState, Move, MoveSequence};
use crate::error::{Error, Result};
use crate::pruning::census_tsv;
use crate::setgraph::{
    greedy_select, representative, validate_cover, vertex_of, BoundLedger, EliminationCover,
    ImpactParams,
};
use crate::twophase::{solve, solve_optimal, Mode, SolveOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "cosetcube",
    version,
    about = "Rubik's cube set solving and diameter bounding"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: Config,
    #[command(subcommand)]
    pub command: Command,
}

/// Settings shared by every command. Each flag can also come from the
/// environment.
#[derive(Args, Clone, Debug)]
pub struct Config {
    /// Memory budget for set solving, e.g. `2G`, `512M` or a byte count.
    #[arg(long, global = true, env = "COSETCUBE_MEMORY", default_value = "2G", value_parser = parse_bytes)]
    pub memory: u64,
    /// Directory for generated tables.
    #[arg(long, global = true, env = "COSETCUBE_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Bound ledger file.
    #[arg(
        long,
        global = true,
        env = "COSETCUBE_LEDGER",
        default_value = "cosetcube.ledger"
    )]
    pub ledger: PathBuf,
    /// Deepest phase-1 search of the set solver.
    #[arg(long = "m", global = true, env = "COSETCUBE_M")]
    pub m: Option<usize>,
    /// Uncovered-position count below which a set solve logs its residual.
    #[arg(long, global = true, env = "COSETCUBE_LOG_THRESHOLD", default_value_t = crate::cosets::DEFAULT_LOG_THRESHOLD)]
    pub log_threshold: u64,
    #[arg(long, global = true, env = "COSETCUBE_THREADS", default_value_t = 1)]
    pub threads: usize,
    #[arg(long, global = true, env = "COSETCUBE_SEED", default_value_t = 1)]
    pub seed: u64,
    /// Ignore wall-clock budgets and run single-threaded, so output depends
    /// only on the inputs.
    #[arg(long, global = true, env = "COSETCUBE_DETERMINISTIC")]
    pub deterministic: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Two-phase solve of one scramble or of seeded random positions.
    Solve {
        #[arg(long)]
        seq: Option<String>,
        /// Solve this many random positions instead.
        #[arg(long, conflicts_with = "seq")]
        random: Option<usize>,
        #[arg(long, env = "COSETCUBE_MODE", default_value = "six")]
        mode: String,
        #[arg(long, env = "COSETCUBE_TARGET", default_value_t = 20)]
        target: usize,
        /// Seconds per position.
        #[arg(long)]
        time: Option<f64>,
        /// Node budget per position.
        #[arg(long)]
        nodes: Option<u64>,
        /// Append `scramble<TAB>solution` records here.
        #[arg(long)]
        db: Option<PathBuf>,
    },
    /// Optimal solve.
    Optimal {
        #[arg(long)]
        seq: Option<String>,
        /// Solve this many random scrambles of `--length` moves instead.
        #[arg(long, conflicts_with = "seq")]
        random: Option<usize>,
        #[arg(long, default_value_t = 7)]
        length: usize,
        #[arg(long)]
        db: Option<PathBuf>,
    },
    /// Bound the distance of every position of one set.
    Coset {
        /// Move sequence, or a packed phase-1 coordinate as `0x...`.
        representative: String,
        /// Memory representation: full, hash or symmetric.
        #[arg(long, env = "COSETCUBE_MODE", default_value = "hash")]
        mode: String,
        /// Stop after this depth.
        #[arg(long, env = "COSETCUBE_DEPTH")]
        depth: Option<usize>,
        /// Write residual positions here.
        #[arg(long)]
        log: Option<PathBuf>,
        /// Try to solve residual positions within the target.
        #[arg(long)]
        polish: bool,
        #[arg(long, env = "COSETCUBE_TARGET", default_value_t = 20)]
        target: usize,
        /// Record the resulting bound in the ledger.
        #[arg(long)]
        record: bool,
    },
    /// Compare the set solver with the oracle on random sets.
    CosetVerify {
        #[arg(long, env = "COSETCUBE_DEPTH", default_value_t = 6)]
        depth: usize,
        #[arg(long, default_value_t = 5)]
        count: usize,
        /// Length of the random representatives.
        #[arg(long, default_value_t = 8)]
        length: usize,
    },
    /// Distance counts within H over all moves and over the moves of A.
    Census {
        #[arg(long, env = "COSETCUBE_DEPTH", default_value_t = 6)]
        depth: usize,
    },
    /// Bound ledger over the set graph.
    Graph {
        #[command(subcommand)]
        command: GraphCommand,
    },
    /// Replay every record of a solution file.
    VerifyDb { path: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum GraphCommand {
    /// Create a fresh ledger.
    Init {
        #[arg(long)]
        force: bool,
    },
    /// Record a proven bound for a set and propagate it.
    Record {
        representative: String,
        bound: u8,
        #[arg(long)]
        source: Option<String>,
    },
    /// Choose sets to solve next by impact.
    Select {
        #[arg(short, long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        assumed: u8,
        #[arg(long, default_value_t = 25)]
        threshold: u8,
        /// Score only this many random solvable vertices.
        #[arg(long)]
        sample: Option<usize>,
    },
    /// Print global bounds and the bound histogram.
    Status,
    /// Build and validate the slice-configuration elimination cover.
    Cover,
}

/// `2G`, `512M`, `64K` or a plain byte count.
pub fn parse_bytes(s: &str) -> std::result::Result<u64, String> {
    let s = s.trim();
    let (num, mult) = match s.chars().last().map(|c| c.to_ascii_uppercase()) {
        Some('K') => (&s[..s.len() - 1], 1u64 << 10),
        Some('M') => (&s[..s.len() - 1], 1 << 20),
        Some('G') => (&s[..s.len() - 1], 1 << 30),
        Some('T') => (&s[..s.len() - 1], 1 << 40),
        _ => (s, 1),
    };
    num.trim()
        .parse::<f64>()
        .ok()
        .filter(|v| *v >= 0.0)
        .map(|v| (v * mult as f64) as u64)
        .ok_or_else(|| format!("bad size {s:?}"))
}

/// One line of a solution database.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionRecord {
    pub scramble: MoveSequence,
    pub solution: MoveSequence,
}

impl SolutionRecord {
    pub fn verify(&self) -> bool {
        CubieState::from_sequence(&self.scramble)
            .apply_sequence(&self.solution)
            .is_solved()
    }
}

impl fmt::Display for SolutionRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t{}", self.scramble, self.solution)
    }
}

impl FromStr for SolutionRecord {
    type Err = Error;
    fn from_str(s: &str) -> Result<SolutionRecord> {
        let (a, b) = s
            .split_once('\t')
            .ok_or_else(|| Error::Format(format!("expected scramble<TAB>solution: {s:?}")))?;
        Ok(SolutionRecord {
            scramble: MoveSequence::parse(a)?,
            solution: MoveSequence::parse(b)?,
        })
    }
}

/// Replay every record; returns `(records, failing line numbers)`.
pub fn verify_db(path: &Path) -> Result<(usize, Vec<(usize, String)>)> {
    let f = BufReader::new(fs::File::open(path)?);
    let mut n = 0;
    let mut bad = Vec::new();
    for (i, line) in f.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        n += 1;
        match line.parse::<SolutionRecord>() {
            Ok(r) if r.verify() => {}
            Ok(_) => bad.push((i + 1, "solution does not solve the scramble".to_string())),
            Err(e) => bad.push((i + 1, e.to_string())),
        }
    }
    Ok((n, bad))
}

fn append_records(path: &Path, records: &[SolutionRecord]) -> Result<()> {
    let mut f = fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)?;
    for r in records {
        writeln!(f, "{r}")?;
    }
    Ok(())
}

fn random_scramble(rng: &mut ChaCha8Rng, len: usize) -> MoveSequence {
    MoveSequence::from_moves((0..len).map(|_| Move::from_index(rng.random_range(0..18))))
}

/// The scrambles a solve command works on. Random positions are given by a
/// 40-move random sequence, which is enough to mix the cube thoroughly.
fn scrambles(
    seq: &Option<String>,
    random: Option<usize>,
    len: usize,
    seed: u64,
) -> Result<Vec<MoveSequence>> {
    match (seq, random) {
        (Some(s), _) => Ok(vec![MoveSequence::parse(s)?]),
        (None, Some(n)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok((0..n).map(|_| random_scramble(&mut rng, len)).collect())
        }
        (None, None) => Err(Error::Invalid("give --seq or --random".into())),
    }
}

fn load_ledger(path: &Path) -> Result<BoundLedger> {
    if path.exists() {
        BoundLedger::load(path)
    } else {
        Err(Error::Invalid(format!(
            "no ledger at {} (run `graph init` first)",
            path.display()
        )))
    }
}

/// Run one parsed command, writing results to `out`.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    let cfg = &cli.config;
    if let Some(d) = &cfg.cache_dir {
        cache::set_dir(d);
    }
    let threads = if cfg.deterministic {
        1
    } else {
        cfg.threads.max(1)
    };
    match &cli.command {
        Command::Solve {
            seq,
            random,
            mode,
            target,
            time,
            nodes,
            db,
        } => {
            let opts = SolveOptions {
                mode: mode.parse()?,
                target_length: *target,
                node_budget: *nodes,
                time_budget: if cfg.deterministic {
                    None
                } else {
                    time.map(Duration::from_secs_f64)
                },
                threads,
                ..SolveOptions::default()
            };
            let mut records = Vec::new();
            for s in scrambles(seq, *random, 40, cfg.seed)? {
                let r = solve(&CubieState::from_sequence(&s), &opts)?;
                writeln!(out, "{}\t{}", s, r.line())?;
                if let Some(sol) = r.solution {
                    records.push(SolutionRecord {
                        scramble: s,
                        solution: sol,
                    });
                }
            }
            if let Some(p) = db {
                append_records(p, &records)?;
            }
        }
        Command::Optimal {
            seq,
            random,
            length,
            db,
        } => {
            let opts = SolveOptions {
                threads,
                ..SolveOptions::with_mode(Mode::Single)
            };
            let mut records = Vec::new();
            for s in scrambles(seq, *random, *length, cfg.seed)? {
                let r = solve_optimal(&CubieState::from_sequence(&s), &opts)?;
                writeln!(out, "{}\t{}", s, r.line())?;
                if let Some(sol) = r.solution {
                    records.push(SolutionRecord {
                        scramble: s,
                        solution: sol,
                    });
                }
            }
            if let Some(p) = db {
                append_records(p, &records)?;
            }
        }
        Command::Coset {
            representative,
            mode,
            depth,
            log,
            polish: do_polish,
            target,
            record,
        } => {
            let rep = parse_representative(representative)?;
            let job = CosetJob {
                mode: mode.parse::<MemoryMode>()?,
                search_limit: cfg.m.unwrap_or(usize::MAX),
                log_threshold: cfg.log_threshold,
                memory_budget: cfg.memory,
                depth_limit: *depth,
                ..CosetJob::new(rep.clone())
            };
            writeln!(out, "depth\tnew\tnodes\tseconds")?;
            let report = solve_set_with(&job, |s| {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{:.2}",
                    s.depth,
                    s.new,
                    s.nodes,
                    s.elapsed.as_secs_f64()
                );
            })?;
            let mut bound = report.final_bound;
            writeln!(
                out,
                "# {}\tbound {}\t{}\tcovered {}\tresidual {}",
                rep,
                bound.map_or("-".into(), |b| b.to_string()),
                if report.exact { "exact" } else { "upper bound" },
                report.covered,
                report.residual.len()
            )?;
            if let Some(p) = log {
                let mut f = fs::File::create(p)?;
                for l in &report.residual {
                    writeln!(f, "{l}")?;
                }
            }
            if *do_polish && !report.residual.is_empty() {
                let outcomes = polish(&report.residual, *target, Duration::from_secs(60))?;
                let solved = outcomes.iter().filter(|o| o.solved()).count();
                let worst = outcomes
                    .iter()
                    .any(|o| matches!(o, PolishOutcome::Exceeds(_) | PolishOutcome::Unresolved));
                writeln!(
                    out,
                    "# polished {solved} of {} residual positions within {target}",
                    outcomes.len()
                )?;
                // Positions logged at the first depth with few enough left are
                // the ones above that depth; if all of them are within the
                // target, the whole set is.
                let logged_at = report
                    .per_depth
                    .iter()
                    .scan(0u64, |acc, s| {
                        *acc += s.new;
                        Some((s.depth, *acc))
                    })
                    .find(|&(_, c)| crate::coords::H_SIZE - c < cfg.log_threshold)
                    .map(|(d, _)| d);
                if !worst {
                    if let Some(d) = logged_at {
                        let polished = d.max(*target);
                        bound = Some(bound.map_or(polished, |b| b.min(polished)));
                        writeln!(out, "# set bound after polishing {}", bound.unwrap())?;
                    }
                }
            }
            if *record {
                let b = bound.ok_or_else(|| {
                    Error::Invalid("no bound to record: the set was not completed".into())
                })?;
                let mut ledger = load_ledger(&cfg.ledger)?;
                ledger.record_bound(vertex_of(&rep), b.min(30) as u8, &rep.to_string())?;
                ledger.save(&cfg.ledger)?;
                writeln!(out, "# recorded {b} in {}", cfg.ledger.display())?;
            }
        }
        Command::CosetVerify {
            depth,
            count,
            length,
        } => {
            let ball = OracleBall::new(*depth, (cfg.memory / 64) as usize)?;
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let mut failed = Vec::new();
            for _ in 0..*count {
                let rep = random_representative(&mut rng, *length, *depth as u8);
                let job = CosetJob {
                    memory_budget: cfg.memory,
                    ..CosetJob::new(rep.clone())
                };
                let c = compare_with_oracle(&job, &ball)?;
                writeln!(
                    out,
                    "{}\t{}\t{:?}\t{:?}",
                    if c.agrees() { "ok" } else { "MISMATCH" },
                    rep,
                    c.fast_counts,
                    c.oracle_counts
                )?;
                if !c.agrees() {
                    failed.push(rep.to_string());
                }
            }
            if !failed.is_empty() {
                return Err(Error::Verification(format!(
                    "set solver disagrees with oracle on {}",
                    failed.join(", ")
                )));
            }
        }
        Command::Census { depth } => {
            writeln!(out, "d\tS\tA")?;
            write!(out, "{}", census_tsv(*depth, cfg.memory)?)?;
        }
        Command::Graph { command } => graph(cfg, command, out)?,
        Command::VerifyDb { path } => {
            let (n, bad) = verify_db(path)?;
            for (line, why) in &bad {
                writeln!(out, "line {line}: {why}")?;
            }
            writeln!(out, "{} records, {} failed", n, bad.len())?;
            if let Some((line, _)) = bad.first() {
                return Err(Error::Verification(format!(
                    "{}: {} bad records, first at line {line}",
                    path.display(),
                    bad.len()
                )));
            }
        }
    }
    Ok(())
}

fn graph(cfg: &Config, cmd: &GraphCommand, out: &mut dyn Write) -> Result<()> {
    match cmd {
        GraphCommand::Init { force } => {
            if cfg.ledger.exists() && !force {
                writeln!(out, "{} exists; leaving it unchanged", cfg.ledger.display())?;
                return Ok(());
            }
            let jp = BoundLedger::journal_path(&cfg.ledger);
            if jp.exists() {
                fs::remove_file(jp)?;
            }
            let mut l = BoundLedger::new();
            l.save(&cfg.ledger)?;
            writeln!(
                out,
                "initialized {} with {} vertices",
                cfg.ledger.display(),
                l.len()
            )?;
        }
        GraphCommand::Record {
            representative,
            bound,
            source,
        } => {
            let rep = parse_representative(representative)?;
            let mut l = load_ledger(&cfg.ledger)?;
            let v = vertex_of(&rep);
            let tag = source.clone().unwrap_or_else(|| {
                if rep.is_empty() {
                    "e".into()
                } else {
                    rep.to_string()
                }
            });
            let changed = l.record_bound(v, *bound, &tag)?;
            l.save(&cfg.ledger)?;
            writeln!(out, "vertex {v}: bound {}, {changed} updates", l.bound(v))?;
        }
        GraphCommand::Select {
            n,
            assumed,
            threshold,
            sample,
        } => {
            let l = load_ledger(&cfg.ledger)?;
            let solvable = VertexTable::get().solvable_count();
            let candidates: Vec<u32> = match sample {
                Some(k) => {
                    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
                    let mut v: Vec<u32> = (0..*k).map(|_| rng.random_range(0..solvable)).collect();
                    v.sort_unstable();
                    v.dedup();
                    v
                }
                None => (0..solvable).collect(),
            };
            let p = ImpactParams {
                assumed: *assumed,
                threshold: *threshold,
            };
            for v in greedy_select(&l, *n, p, &candidates) {
                writeln!(out, "{}", representative(v))?;
            }
        }
        GraphCommand::Status => {
            let l = load_ledger(&cfg.ledger)?;
            write!(out, "{}", l.report(&EliminationCover::compute()))?;
        }
        GraphCommand::Cover => {
            let c = EliminationCover::compute();
            let valid = validate_cover(&c);
            writeln!(
                out,
                "eliminated {} of 495 slice configurations (reference figure 94)",
                c.eliminated_count()
            )?;
            writeln!(out, "{:?}", c.eliminated())?;
            if let Err(p) = valid {
                return Err(Error::Verification(format!("cover misses partition {p:?}")));
            }
            writeln!(out, "valid over all 34650 partitions")?;
        }
    }
    Ok(())
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Resource(_) => EXIT_RESOURCE,
        Error::Verification(_) => EXIT_VERIFICATION,
        _ => EXIT_USAGE,
    }
}

/// Parse `args`, run, and return the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    EXIT_OK
                }
                _ => EXIT_USAGE,
            };
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match execute(&cli, &mut out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
