use std::fmt;
use std::fs::{self, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use super::cover::EliminationCover;
use crate::coords::{cache, VertexTable};
use crate::cube::N_MOVES;
use crate::error::{Error, Result};

/// Every position is known to be solvable in this many moves.
pub const INITIAL_BOUND: u8 = 30;

const MAGIC: &[u8; 4] = b"RCGL";
const VERSION: u8 = 1;

/// One explicitly recorded bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JournalEntry {
    pub vertex: u32,
    pub bound: u8,
    pub source: String,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
}

impl fmt::Display for JournalEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}",
            self.vertex, self.bound, self.source, self.timestamp
        )
    }
}

impl std::str::FromStr for JournalEntry {
    type Err = Error;
    fn from_str(s: &str) -> Result<JournalEntry> {
        let p: Vec<&str> = s.split('\t').collect();
        let bad = || Error::Format(format!("bad journal line {s:?}"));
        if p.len() != 4 {
            return Err(bad());
        }
        Ok(JournalEntry {
            vertex: p[0].parse().map_err(|_| bad())?,
            bound: p[1].parse().map_err(|_| bad())?,
            source: p[2].to_string(),
            timestamp: p[3].parse().map_err(|_| bad())?,
        })
    }
}

/// Proven upper bounds, one byte per vertex, with the journal of recorded
/// bounds that produced them.
#[derive(Clone)]
pub struct BoundLedger {
    bounds: Vec<u8>,
    journal: Vec<JournalEntry>,
    /// Journal entries already on disk.
    persisted: usize,
}

fn now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map_or(0, |d| d.as_secs())
}

impl BoundLedger {
    pub fn new() -> BoundLedger {
        BoundLedger {
            bounds: vec![INITIAL_BOUND; VertexTable::get().count() as usize],
            journal: Vec::new(),
            persisted: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.bounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_empty()
    }

    #[inline]
    pub fn bound(&self, v: u32) -> u8 {
        self.bounds[v as usize]
    }

    pub fn bounds(&self) -> &[u8] {
        &self.bounds
    }

    pub fn journal(&self) -> &[JournalEntry] {
        &self.journal
    }

    /// Record that the set at `v` has distance at most `c`, and propagate.
    /// Returns the number of bound updates made.
    pub fn record_bound(&mut self, v: u32, c: u8, source: &str) -> Result<u64> {
        self.record_batch(&[(v, c)], source)
    }

    /// Record several bounds and propagate them together.
    pub fn record_batch(&mut self, items: &[(u32, u8)], source: &str) -> Result<u64> {
        for &(v, c) in items {
            if c > INITIAL_BOUND {
                return Err(Error::Range {
                    what: "bound",
                    value: c as u64,
                    limit: INITIAL_BOUND as u64,
                });
            }
            if v as usize >= self.bounds.len() {
                return Err(Error::Range {
                    what: "vertex",
                    value: v as u64,
                    limit: self.bounds.len() as u64,
                });
            }
        }
        let source: String = source
            .chars()
            .map(|c| if c.is_whitespace() { '_' } else { c })
            .collect();
        let ts = now();
        for &(v, c) in items {
            self.journal.push(JournalEntry {
                vertex: v,
                bound: c,
                source: source.clone(),
                timestamp: ts,
            });
        }
        Ok(relax(&mut self.bounds, items))
    }

    /// Replay a journal onto a fresh ledger.
    pub fn replay(entries: &[JournalEntry]) -> Result<BoundLedger> {
        let mut l = BoundLedger::new();
        let items: Vec<(u32, u8)> = entries.iter().map(|e| (e.vertex, e.bound)).collect();
        l.record_batch(&items, "")?;
        l.journal = entries.to_vec();
        Ok(l)
    }

    pub fn journal_path(path: &Path) -> PathBuf {
        let mut p = path.as_os_str().to_owned();
        p.push(".journal");
        PathBuf::from(p)
    }

    /// Write the bounds file and append new journal entries to its journal.
    pub fn save(&mut self, path: &Path) -> Result<()> {
        cache::save(path, MAGIC, VERSION, &[&self.bounds])?;
        if self.persisted < self.journal.len() {
            let mut f = OpenOptions::new()
                .create(true)
                .append(true)
                .open(Self::journal_path(path))?;
            for e in &self.journal[self.persisted..] {
                writeln!(f, "{e}")?;
            }
            self.persisted = self.journal.len();
        }
        Ok(())
    }

    pub fn load(path: &Path) -> Result<BoundLedger> {
        let n = VertexTable::get().count() as u64;
        let bounds = cache::load(path, MAGIC, VERSION, &[n])?.pop().unwrap();
        if let Some(&b) = bounds.iter().find(|&&b| b > INITIAL_BOUND) {
            return Err(Error::Format(format!(
                "{}: bound {b} out of range",
                path.display()
            )));
        }
        let jp = Self::journal_path(path);
        let journal = if jp.exists() {
            read_journal(&jp)?
        } else {
            Vec::new()
        };
        let persisted = journal.len();
        Ok(BoundLedger {
            bounds,
            journal,
            persisted,
        })
    }

    /// Number of vertices at each bound.
    pub fn histogram(&self) -> [u64; INITIAL_BOUND as usize + 1] {
        let mut h = [0u64; INITIAL_BOUND as usize + 1];
        for &b in &self.bounds {
            h[b as usize] += 1;
        }
        h
    }

    pub fn report(&self, cover: &EliminationCover) -> LedgerReport {
        let solvable = VertexTable::get().solvable_count() as usize;
        let mut solvable_hist = [0u64; INITIAL_BOUND as usize + 1];
        for &b in &self.bounds[..solvable] {
            solvable_hist[b as usize] += 1;
        }
        let mut best: std::collections::BTreeMap<u32, u8> = std::collections::BTreeMap::new();
        for e in &self.journal {
            let b = best.entry(e.vertex).or_insert(e.bound);
            *b = (*b).min(e.bound);
        }
        let mut recorded = [0u64; INITIAL_BOUND as usize + 1];
        for &b in best.values() {
            recorded[b as usize] += 1;
        }
        LedgerReport {
            global_bound: diameter_bound(self, &EliminationCover::empty()),
            kept_bound: diameter_bound(self, cover),
            eliminated: cover.eliminated_count(),
            journal_len: self.journal.len(),
            recorded,
            histogram: self.histogram(),
            solvable_histogram: solvable_hist,
        }
    }
}

impl Default for BoundLedger {
    fn default() -> Self {
        BoundLedger::new()
    }
}

fn read_journal(path: &Path) -> Result<Vec<JournalEntry>> {
    let f = BufReader::new(fs::File::open(path)?);
    let mut out = Vec::new();
    for line in f.lines() {
        let line = line?;
        if !line.is_empty() {
            out.push(line.parse()?);
        }
    }
    Ok(out)
}

/// Multi-source relaxation `bound(u) ← min(bound(u), c + dist(u, v))`, level
/// by level in increasing bound order.
fn relax(bounds: &mut [u8], seeds: &[(u32, u8)]) -> u64 {
    let vt = VertexTable::get();
    let mut buckets: Vec<Vec<u32>> = vec![Vec::new(); INITIAL_BOUND as usize + 1];
    let mut changed = 0u64;
    for &(v, c) in seeds {
        if c < bounds[v as usize] {
            changed += 1;
            bounds[v as usize] = c;
            buckets[c as usize].push(v);
        }
    }
    let mut frontier: Vec<u32> = Vec::new();
    let mut next: Vec<u32> = Vec::new();
    for b in 0..INITIAL_BOUND {
        frontier.append(&mut buckets[b as usize]);
        if frontier.is_empty() {
            continue;
        }
        if frontier.len() > 1 << 16 {
            frontier.sort_unstable();
        }
        for &x in &frontier {
            if bounds[x as usize] != b {
                continue;
            }
            let c = vt.coord(x);
            for m in 0..N_MOVES {
                let y = vt.neighbor(c, m) as usize;
                if bounds[y] > b + 1 {
                    changed += 1;
                    bounds[y] = b + 1;
                    next.push(y as u32);
                }
            }
        }
        frontier.clear();
        std::mem::swap(&mut frontier, &mut next);
    }
    changed
}

/// Largest bound over vertices whose slice configuration the cover keeps.
pub fn diameter_bound(ledger: &BoundLedger, cover: &EliminationCover) -> u8 {
    if cover.eliminated_count() == 0 {
        return ledger.bounds.iter().copied().max().unwrap_or(0);
    }
    let vt = VertexTable::get();
    let mut best = 0;
    vt.for_each(0..vt.count(), |i, c| {
        let b = ledger.bounds[i as usize];
        if b > best && cover.keeps(c.slice) {
            best = b;
        }
    });
    best
}

/// Summary of a ledger for operators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerReport {
    /// Bound over all vertices.
    pub global_bound: u8,
    /// Bound over vertices kept by the elimination cover.
    pub kept_bound: u8,
    pub eliminated: usize,
    pub journal_len: usize,
    /// Distinct recorded vertices by their best recorded bound.
    pub recorded: [u64; INITIAL_BOUND as usize + 1],
    pub histogram: [u64; INITIAL_BOUND as usize + 1],
    pub solvable_histogram: [u64; INITIAL_BOUND as usize + 1],
}

impl fmt::Display for LedgerReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sets: u64 = self.recorded.iter().sum();
        writeln!(
            f,
            "global bound {}, {} sets recorded",
            self.global_bound, sets
        )?;
        writeln!(
            f,
            "bound over kept vertices {} ({} of 495 slice configurations eliminated)",
            self.kept_bound, self.eliminated
        )?;
        writeln!(f, "journal entries {}", self.journal_len)?;
        let mut cum = 0;
        for (b, &n) in self.recorded.iter().enumerate() {
            cum += n;
            if n > 0 {
                writeln!(f, "{cum} sets at {b} or less")?;
            }
        }
        writeln!(f, "bound\tvertices\tsolvable")?;
        for b in 0..=INITIAL_BOUND as usize {
            if self.histogram[b] > 0 {
                writeln!(
                    f,
                    "{b}\t{}\t{}",
                    self.histogram[b], self.solvable_histogram[b]
                )?;
            }
        }
        Ok(())
    }
}
