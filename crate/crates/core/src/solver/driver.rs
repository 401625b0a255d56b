//! Solver selection, the max-H loop, and the improvement decision.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::model::{singleton_h_index, Instance, Measure};

use super::cautious::{cautious_max_h, decide_cautious_clique_scites};
use super::component_dp::decide_manipulation;
use super::oracle::{brute_force_decide, brute_force_pairs_decide, brute_force_with, OracleLimits};

const MAX_PAIRS: usize = 24;
use super::{Answer, SolveResult, SolveStats, SolverConfig};

/// Decides `inst.target` with the best applicable exact solver.
///
/// Without a budget, sum and union go through the component DP. With a
/// budget, sum on a clique goes through the cautious DP. Everything else
/// (fused, or union with a budget) falls to the oracle, which switches to
/// pair enumeration when every compatibility component has two members.
pub fn decide(inst: &Instance, measure: Measure, cfg: &SolverConfig) -> Result<SolveResult> {
    match (inst.budget, measure) {
        (None, Measure::Sum | Measure::Union) => decide_manipulation(inst, measure, cfg),
        (Some(_), Measure::Sum) if inst.own_is_clique() => decide_cautious_clique_scites(inst, cfg),
        _ => {
            let start = Instant::now();
            let w = match brute_force_decide(inst, measure, inst.target, OracleLimits::default()) {
                // Pair components keep the search at 2^pairs even when W is large.
                Err(e @ Error::TooLargeForOracle { .. }) => {
                    brute_force_pairs_decide(inst, measure, inst.target, MAX_PAIRS).map_err(|_| e)?
                }
                other => other?,
            };
            Ok(SolveResult {
                answer: Answer::from_bool(w.is_some()),
                witness: w,
                stats: SolveStats {
                    solver: "oracle",
                    elapsed: start.elapsed(),
                    ..Default::default()
                },
            })
        }
    }
}

/// Largest H-index reachable by a complying partition (within `inst.budget` merges if set).
///
/// Ignores `inst.target`; tries `h = 1, 2, …` until the first no.
pub fn max_h_index(inst: &Instance, measure: Measure, cfg: &SolverConfig) -> Result<SolveResult> {
    match (inst.budget, measure) {
        (None, Measure::Sum | Measure::Union) => {
            let start = Instant::now();
            let mut stats = SolveStats {
                solver: "component-dp",
                ..Default::default()
            };
            let mut best = None;
            for h in 1..=inst.own().len() {
                let r = decide_manipulation(&inst.clone().with_target(h), measure, cfg)?;
                stats.absorb(&r.stats);
                if !r.answer.is_yes() {
                    break;
                }
                best = Some((h, r.witness));
            }
            stats.elapsed = start.elapsed();
            let (h, witness) = best.unwrap_or_else(|| (0, Some(crate::model::Partition::singletons(inst.own()))));
            Ok(SolveResult {
                answer: Answer::Optimum(h),
                witness,
                stats,
            })
        }
        (Some(_), Measure::Sum) if inst.own_is_clique() => cautious_max_h(inst, cfg),
        _ => {
            let start = Instant::now();
            let out = brute_force_with(inst, measure, OracleLimits::default())?;
            Ok(SolveResult {
                answer: Answer::Optimum(out.best_h),
                witness: Some(out.witness),
                stats: SolveStats {
                    solver: "oracle",
                    nodes_explored: out.leaves,
                    elapsed: start.elapsed(),
                    ..Default::default()
                },
            })
        }
    }
}

/// Is there a complying partition whose H-index beats the unmerged profile?
pub fn decide_improvement(inst: &Instance, measure: Measure, cfg: &SolverConfig) -> Result<SolveResult> {
    let base = singleton_h_index(inst, measure);
    decide(&inst.clone().with_target(base + 1), measure, cfg)
}
