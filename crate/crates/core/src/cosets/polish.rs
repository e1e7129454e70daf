//! Reducing a set bound by solving its last few positions one at a time.

use std::time::Duration;

use super::ResidualLine;
use crate::cube::{CubieState, MoveSequence};
use crate::error::Result;
use crate::twophase::{solve, solve_optimal, Mode, SolveOptions};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolishOutcome {
    /// Solved within the target by the two-phase solver.
    TwoPhase(MoveSequence),
    /// Solved within the target by the optimal solver.
    Optimal(MoveSequence),
    /// The optimal solver proved the position needs more than the target.
    Exceeds(usize),
    /// Neither solver finished within its budget.
    Unresolved,
}

impl PolishOutcome {
    pub fn solved(&self) -> bool {
        matches!(self, PolishOutcome::TwoPhase(_) | PolishOutcome::Optimal(_))
    }
}

/// Try to solve each residual position in at most `target` moves: six-axis
/// two-phase first, the optimal solver for holdouts.
pub fn polish(
    lines: &[ResidualLine],
    target: usize,
    budget: Duration,
) -> Result<Vec<PolishOutcome>> {
    let mut out = Vec::with_capacity(lines.len());
    for line in lines {
        let p = CubieState::from_sequence(&line.witness);
        let opts = SolveOptions {
            mode: Mode::Six,
            target_length: target,
            time_budget: Some(budget),
            ..Default::default()
        };
        let r = solve(&p, &opts)?;
        if let Some(s) = r.solution.filter(|s| s.len() <= target) {
            out.push(PolishOutcome::TwoPhase(s));
            continue;
        }
        let r = solve_optimal(
            &p,
            &SolveOptions {
                time_budget: Some(budget),
                ..Default::default()
            },
        )?;
        out.push(match (r.exhausted, r.solution) {
            (true, Some(s)) if s.len() <= target => PolishOutcome::Optimal(s),
            (true, Some(s)) => PolishOutcome::Exceeds(s.len()),
            _ => PolishOutcome::Unresolved,
        });
    }
    Ok(out)
}
