//! Subset dynamic program over one compatibility component.
//!
//! For sum and union, merging inside one component never changes the value
//! of parts elsewhere, so the maximum number of parts with `μ ≥ h` is
//! additive over components. Within a component of `c` own articles the
//! table `good[S]` marks cliques with `μ(S) ≥ h` and
//! `T[S] = max_{S' ∋ min S, S' clique} T[S \ S'] + good[S']`, which costs
//! `O(3^c)` over all `S`.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::model::{ArticleId, Instance, Measure, Partition};

use super::{clique_enum, require_additive, Answer, SolveResult, SolveStats, SolverConfig};

const CLIQUE: u8 = 1;
const GOOD: u8 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSolution {
    /// Maximum number of parts with `μ ≥ h` over complying partitions of the component.
    pub good_parts: usize,
    /// A partition of the component's own articles attaining `good_parts`.
    pub parts: Vec<Vec<ArticleId>>,
    pub stats: SolveStats,
}

/// Connected components of the compatibility graph restricted to the own articles.
pub fn own_components(inst: &Instance) -> Vec<Vec<ArticleId>> {
    inst.own_compat()
        .connected_components()
        .into_iter()
        .filter(|c| inst.is_own(c[0]))
        .collect()
}

/// Runs the subset DP on `component`. Non-own members are dropped.
pub fn max_good_parts_dp(
    component: &[ArticleId],
    inst: &Instance,
    h: usize,
    measure: Measure,
    cfg: &SolverConfig,
) -> Result<ComponentSolution> {
    require_additive(measure)?;
    let members: Vec<ArticleId> = component.iter().copied().filter(|&v| inst.is_own(v)).collect();
    let c = members.len();
    let cap = cfg.max_component_bits.min(usize::BITS as usize - 2);
    if c > cap {
        return Err(Error::ComponentTooLarge { size: c, cap });
    }
    let d = inst.citations();
    let g = inst.compat();
    let size = 1usize << c;

    let adj: Vec<usize> = members
        .iter()
        .map(|&a| {
            members
                .iter()
                .enumerate()
                .filter(|&(_, &b)| g.are_compatible(a, b))
                .fold(0usize, |m, (j, _)| m | (1 << j))
        })
        .collect();

    let mut flags = vec![0u8; size];
    flags[0] = CLIQUE;
    let mut sums = if measure == Measure::Sum { vec![0u32; size] } else { Vec::new() };
    let mut stamp = vec![0u32; d.n()];
    let mut epoch = 0u32;
    for s in 1..size {
        let low = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        if flags[rest] & CLIQUE == 0 || adj[low] & rest != rest {
            continue;
        }
        let value = match measure {
            Measure::Sum => {
                let v = sums[rest] + d.in_degree(members[low]) as u32;
                sums[s] = v;
                v as usize
            }
            _ => {
                epoch += 1;
                let mut count = 0;
                let mut bits = s;
                while bits != 0 {
                    let i = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    for &u in d.citers(members[i]) {
                        if stamp[u.index()] != epoch {
                            stamp[u.index()] = epoch;
                            count += 1;
                        }
                    }
                }
                count
            }
        };
        flags[s] = CLIQUE | if value >= h { GOOD } else { 0 };
    }
    drop(sums);
    cfg.check_deadline()?;

    let mut table = vec![0u8; size];
    let mut nodes = 0u64;
    for s in 1..size {
        let (best, _, visited) = best_split(s, &flags, &table);
        nodes += visited;
        table[s] = best;
        if s & 0xFFFF == 0 {
            cfg.check_deadline()?;
        }
    }

    let mut parts = Vec::new();
    let mut s = size - 1;
    while s != 0 {
        let (_, sub, _) = best_split(s, &flags, &table);
        parts.push(
            (0..c)
                .filter(|&i| sub & (1 << i) != 0)
                .map(|i| members[i])
                .collect::<Vec<_>>(),
        );
        s ^= sub;
    }

    Ok(ComponentSolution {
        good_parts: table[size - 1] as usize,
        parts,
        stats: SolveStats {
            solver: "component-dp",
            nodes_explored: nodes,
            table_entries: 2 * size as u64,
            ..Default::default()
        },
    })
}

/// Best `(value, part containing the lowest member, submasks visited)` for `s`.
/// Ties prefer the smaller part.
fn best_split(s: usize, flags: &[u8], table: &[u8]) -> (u8, usize, u64) {
    let low = s & s.wrapping_neg();
    let rest = s ^ low;
    let mut best = (0u8, low, u32::MAX);
    let mut visited = 0;
    let mut r = rest;
    loop {
        visited += 1;
        let sub = r | low;
        let f = flags[sub];
        if f & CLIQUE != 0 {
            let v = table[s ^ sub] + u8::from(f & GOOD != 0);
            let pc = sub.count_ones();
            if v > best.0 || (v == best.0 && pc < best.2) {
                best = (v, sub, pc);
            }
        }
        if r == 0 {
            break;
        }
        r = (r - 1) & rest;
    }
    (best.0, best.1, visited)
}

/// Decides whether some complying partition reaches H-index `inst.target`.
///
/// Components wider than the configured bitmask width go through clique
/// enumeration when `cfg.fallback_to_clique_enum` is set.
pub fn decide_manipulation(inst: &Instance, measure: Measure, cfg: &SolverConfig) -> Result<SolveResult> {
    require_additive(measure)?;
    if inst.budget.is_some() {
        return Err(Error::BudgetNotSupported);
    }
    let start = Instant::now();
    let h = inst.target;
    let mut stats = SolveStats {
        solver: "component-dp",
        ..Default::default()
    };
    let mut total = 0;
    let mut parts = Vec::new();
    for comp in own_components(inst) {
        let sol = match max_good_parts_dp(&comp, inst, h, measure, cfg) {
            Ok(sol) => sol,
            Err(Error::ComponentTooLarge { .. }) if cfg.fallback_to_clique_enum => {
                let mut sol = clique_enum::component_good_parts(&comp, inst, h, measure, cfg)?;
                sol.stats.fell_back = true;
                sol
            }
            Err(e) => return Err(e),
        };
        total += sol.good_parts;
        stats.absorb(&sol.stats);
        parts.extend(sol.parts);
    }
    stats.elapsed = start.elapsed();
    let yes = total >= h;
    Ok(SolveResult {
        answer: Answer::from_bool(yes),
        witness: yes.then(|| Partition::from_canonical_unchecked(parts)),
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{fig1, ids, partition_h_index};

    #[test]
    fn fig1_components() {
        let inst = fig1();
        let cfg = SolverConfig::default();
        let sol = max_good_parts_dp(&ids(&[3, 4]), &inst, 2, Measure::Union, &cfg).unwrap();
        assert_eq!(sol.good_parts, 1);
        let sol = max_good_parts_dp(&ids(&[1, 2]), &inst, 1, Measure::Union, &cfg).unwrap();
        assert_eq!(sol.good_parts, 0);
        for comp in own_components(&inst) {
            let sol = max_good_parts_dp(&comp, &inst, 0, Measure::Sum, &cfg).unwrap();
            assert_eq!(sol.good_parts, comp.len());
        }
    }

    #[test]
    fn decide_fig1() {
        let cfg = SolverConfig::default();
        let yes = decide_manipulation(&fig1().with_target(2), Measure::Union, &cfg).unwrap();
        assert_eq!(yes.answer, Answer::Yes);
        let w = yes.witness.unwrap();
        assert!(partition_h_index(&fig1(), &w, Measure::Union) >= 2);
        let no = decide_manipulation(&fig1().with_target(3), Measure::Union, &cfg).unwrap();
        assert_eq!(no.answer, Answer::No);
        assert!(no.witness.is_none());
    }

    #[test]
    fn rejects_fused_and_budget() {
        let cfg = SolverConfig::default();
        assert_eq!(
            decide_manipulation(&fig1(), Measure::Fused, &cfg).unwrap_err(),
            Error::UnsupportedMeasure(Measure::Fused)
        );
        assert_eq!(
            decide_manipulation(&fig1().with_budget(Some(1)), Measure::Sum, &cfg).unwrap_err(),
            Error::BudgetNotSupported
        );
    }

    #[test]
    fn too_large_component() {
        let inst = crate::gadgets::gen_square(3);
        let cfg = SolverConfig {
            max_component_bits: 4,
            fallback_to_clique_enum: false,
            ..Default::default()
        };
        assert!(matches!(
            decide_manipulation(&inst, Measure::Union, &cfg),
            Err(Error::ComponentTooLarge { size: 9, cap: 4 })
        ));
        let cfg = SolverConfig {
            max_component_bits: 4,
            ..Default::default()
        };
        let r = decide_manipulation(&inst, Measure::Union, &cfg).unwrap();
        assert!(r.answer.is_yes());
        assert!(r.stats.fell_back);
    }
}
