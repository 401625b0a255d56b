//! Merging with a budget of `k` merges when all own articles are pairwise compatible.
//!
//! Articles with at least `h` citations are already good and are never
//! merged. Among the rest, only the `2k` most-cited (ties by ascending id)
//! can matter: `k` merges touch at most `2k` articles, and any article of a
//! merged part can be swapped for a more-cited unused one. A table
//! `T[S][b]` over subsets `S` of those candidates gives the most good parts
//! obtainable from `S` with at most `b` merges.

use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{partition_h_index, ArticleId, Instance, Measure, Partition};

use super::{Answer, SolveResult, SolveStats, SolverConfig};

/// Bounds on the best union H-index reachable within the budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CautiousBounds {
    pub lower: usize,
    pub upper: usize,
    /// A partition within the budget whose union H-index is `lower`.
    pub lower_witness: Partition,
}

fn check_preconditions(inst: &Instance) -> Result<usize> {
    let k = inst.budget.ok_or(Error::MissingBudget)?;
    if !inst.own_is_clique() {
        return Err(Error::NotAClique);
    }
    Ok(k)
}

struct Outcome {
    reached: bool,
    witness: Partition,
    entries: u64,
}

/// Runs the budgeted DP for target `h`, judging parts by `measure` (sum or union).
fn budgeted_dp(inst: &Instance, h: usize, k: usize, measure: Measure, cfg: &SolverConfig) -> Result<Outcome> {
    let d = inst.citations();
    let singletons = || Partition::singletons(inst.own());
    let already = inst.own().iter().filter(|&&v| d.in_degree(v) >= h).count();
    if already >= h {
        return Ok(Outcome {
            reached: true,
            witness: singletons(),
            entries: 0,
        });
    }
    let mut rest: Vec<ArticleId> = inst.own().iter().copied().filter(|&v| d.in_degree(v) < h).collect();
    rest.sort_by_key(|&v| (std::cmp::Reverse(d.in_degree(v)), v));
    rest.truncate(2 * k);
    let m = rest.len();
    if m > cfg.max_component_bits {
        return Err(Error::ComponentTooLarge {
            size: m,
            cap: cfg.max_component_bits,
        });
    }
    let size = 1usize << m;
    let mut value = vec![0u32; size];
    let mut stamp = vec![0u32; d.n()];
    for s in 1..size {
        value[s] = match measure {
            Measure::Sum => {
                let low = s.trailing_zeros() as usize;
                value[s & (s - 1)] + d.in_degree(rest[low]) as u32
            }
            _ => {
                let mut count = 0;
                for (i, &v) in rest.iter().enumerate() {
                    if s & (1 << i) != 0 {
                        for &u in d.citers(v) {
                            if stamp[u.index()] != s as u32 {
                                stamp[u.index()] = s as u32;
                                count += 1;
                            }
                        }
                    }
                }
                count
            }
        };
    }

    let w = k + 1;
    let mut table = vec![0u8; size * w];
    for s in 1..size {
        let low = s & s.wrapping_neg();
        let others = s ^ low;
        let mut r = others;
        loop {
            let sub = r | low;
            let cost = sub.count_ones() as usize - 1;
            if cost <= k {
                let good = u8::from(value[sub] as usize >= h);
                let from = (s ^ sub) * w;
                for b in cost..=k {
                    let cand = table[from + b - cost] + good;
                    if cand > table[s * w + b] {
                        table[s * w + b] = cand;
                    }
                }
            }
            if r == 0 {
                break;
            }
            r = (r - 1) & others;
        }
        if s & 0xFFF == 0 {
            cfg.check_deadline()?;
        }
    }

    let total = already + table[(size - 1) * w + k] as usize;
    let mut parts: Vec<Vec<ArticleId>> = Vec::new();
    let (mut s, mut b) = (size - 1, k);
    while s != 0 {
        let low = s & s.wrapping_neg();
        let others = s ^ low;
        let target = table[s * w + b];
        let mut r = others;
        let chosen = loop {
            let sub = r | low;
            let cost = sub.count_ones() as usize - 1;
            if cost <= b && table[(s ^ sub) * w + b - cost] + u8::from(value[sub] as usize >= h) == target {
                break sub;
            }
            r = (r - 1) & others;
        };
        parts.push((0..m).filter(|&i| chosen & (1 << i) != 0).map(|i| rest[i]).collect());
        b -= chosen.count_ones() as usize - 1;
        s ^= chosen;
    }
    let in_dp: Vec<ArticleId> = parts.iter().flatten().copied().collect();
    parts.extend(inst.own().iter().filter(|v| !in_dp.contains(v)).map(|&v| vec![v]));
    Ok(Outcome {
        reached: total >= h,
        witness: Partition::from_canonical_unchecked(parts),
        entries: (size * w) as u64,
    })
}

/// Decides `inst.target` under the sum measure with at most `inst.budget` merges.
pub fn decide_cautious_clique_scites(inst: &Instance, cfg: &SolverConfig) -> Result<SolveResult> {
    let k = check_preconditions(inst)?;
    let start = Instant::now();
    let out = budgeted_dp(inst, inst.target, k, Measure::Sum, cfg)?;
    Ok(SolveResult {
        answer: Answer::from_bool(out.reached),
        witness: out.reached.then_some(out.witness),
        stats: SolveStats {
            solver: "cautious-dp",
            table_entries: out.entries,
            elapsed: start.elapsed(),
            ..Default::default()
        },
    })
}

/// Largest sum H-index reachable with at most `inst.budget` merges.
pub fn cautious_max_h(inst: &Instance, cfg: &SolverConfig) -> Result<SolveResult> {
    let k = check_preconditions(inst)?;
    let start = Instant::now();
    let mut stats = SolveStats {
        solver: "cautious-dp",
        ..Default::default()
    };
    let mut best = (0, Partition::singletons(inst.own()));
    for h in 1..=inst.own().len() {
        let out = budgeted_dp(inst, h, k, Measure::Sum, cfg)?;
        stats.table_entries += out.entries;
        if !out.reached {
            break;
        }
        best = (h, out.witness);
    }
    stats.elapsed = start.elapsed();
    Ok(SolveResult {
        answer: Answer::Optimum(best.0),
        witness: Some(best.1),
        stats,
    })
}

/// Lower and upper bounds on the union H-index reachable with at most `inst.budget` merges.
///
/// The lower bound runs the DP with parts judged by the union measure and
/// keeps the best target whose witness re-checks. The upper bound is the
/// sum optimum, since the union never exceeds the sum.
pub fn cautious_bounds_ucites(inst: &Instance, cfg: &SolverConfig) -> Result<CautiousBounds> {
    let k = check_preconditions(inst)?;
    let upper = match cautious_max_h(inst, cfg)?.answer {
        Answer::Optimum(h) => h,
        _ => unreachable!(),
    };
    let mut lower = (0, Partition::singletons(inst.own()));
    for h in 1..=upper {
        let out = budgeted_dp(inst, h, k, Measure::Union, cfg)?;
        if out.reached && partition_h_index(inst, &out.witness, Measure::Union) >= h {
            lower = (h, out.witness);
        }
    }
    Ok(CautiousBounds {
        lower: lower.0,
        upper,
        lower_witness: lower.1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::gen_square;
    use crate::model::{fig1, ids, merge_count, singleton_h_index, CitationGraph, CompatibilityGraph};

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    #[test]
    fn square_budgets() {
        let yes = decide_cautious_clique_scites(&gen_square(2).with_budget(Some(2)), &cfg()).unwrap();
        assert_eq!(yes.answer, Answer::Yes);
        assert!(merge_count(yes.witness.as_ref().unwrap()) <= 2);
        let no = decide_cautious_clique_scites(&gen_square(2).with_budget(Some(1)), &cfg()).unwrap();
        assert_eq!(no.answer, Answer::No);
        let b = cautious_bounds_ucites(&gen_square(2).with_budget(Some(2)), &cfg()).unwrap();
        assert_eq!((b.lower, b.upper), (2, 2));
    }

    #[test]
    fn ties_below_target() {
        // Degrees 3, 3, 2, 1 with h = 3 and one merge: only {2, 1} helps.
        let mut arcs = Vec::new();
        let mut next = 4;
        for (v, deg) in [(0usize, 3usize), (1, 3), (2, 2), (3, 1)] {
            for _ in 0..deg {
                arcs.push((next, v));
                next += 1;
            }
        }
        let n = next;
        let d = CitationGraph::from_pairs(n, &arcs).unwrap();
        let own = ids(&[0, 1, 2, 3]);
        let g = CompatibilityGraph::clique_on(n, &own);
        let inst = Instance::new(d, g, own, 3, Some(1)).unwrap();
        assert!(decide_cautious_clique_scites(&inst, &cfg()).unwrap().answer.is_yes());
    }

    #[test]
    fn shared_citer_gap() {
        // a, b share their only citer; d has two citers of its own.
        let d = CitationGraph::from_pairs(6, &[(3, 0), (3, 1), (4, 2), (5, 2)]).unwrap();
        let own = ids(&[0, 1, 2]);
        let g = CompatibilityGraph::clique_on(6, &own);
        let inst = Instance::new(d, g, own, 2, Some(1)).unwrap();
        let b = cautious_bounds_ucites(&inst, &cfg()).unwrap();
        assert_eq!((b.lower, b.upper), (1, 2));
    }

    #[test]
    fn zero_budget_is_baseline() {
        let sq = gen_square(3).with_budget(Some(0));
        let b = cautious_bounds_ucites(&sq, &cfg()).unwrap();
        let base = singleton_h_index(&sq, Measure::Union);
        assert_eq!((b.lower, b.upper), (base, base));
    }

    #[test]
    fn preconditions() {
        assert_eq!(decide_cautious_clique_scites(&gen_square(2), &cfg()).unwrap_err(), Error::MissingBudget);
        assert_eq!(
            decide_cautious_clique_scites(&fig1().with_budget(Some(1)), &cfg()).unwrap_err(),
            Error::NotAClique
        );
    }
}
