//! Clique-enumeration solver.
//!
//! 1. Enumerate maximal cliques of `G[W]` (Bron–Kerbosch with pivoting) and,
//!    inside each, the inclusion-minimal subsets with `μ ≥ h`.
//! 2. Pick a maximum family of pairwise disjoint candidates: a maximum
//!    independent set of the intersection graph, found as the complement of
//!    a minimum vertex cover.
//! 3. Answer yes iff at least `h` candidates were picked.
//!
//! Thresholds are non-strict (`μ ≥ h`, at least `h` parts), matching the
//! H-index definition.

use std::collections::HashSet;
use std::time::Instant;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{ArticleId, Instance, Measure, Partition};

use super::component_dp::ComponentSolution;
use super::vertex_cover::min_vertex_cover;
use super::{require_additive, Answer, SolveResult, SolveStats, SolverConfig};

/// A minimal clique `members` of the compatibility graph with `μ(members) ≥ h`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CandidatePart {
    pub members: Vec<ArticleId>,
    pub value: usize,
}

/// Indices into the candidate list of a maximum pairwise-disjoint subfamily.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DisjointChoice {
    pub count: usize,
    pub chosen: Vec<usize>,
}

/// All inclusion-minimal cliques `P ⊆ W` with `μ(P) ≥ h`, sorted.
///
/// For `h = 0` this is the list of singletons of `W`.
pub fn enumerate_minimal_good_cliques(
    inst: &Instance,
    h: usize,
    measure: Measure,
    cfg: &SolverConfig,
) -> Result<Vec<CandidatePart>> {
    enumerate_in(inst.own(), inst, h, measure, cfg, &mut 0)
}

fn enumerate_in(
    members: &[ArticleId],
    inst: &Instance,
    h: usize,
    measure: Measure,
    cfg: &SolverConfig,
    nodes: &mut u64,
) -> Result<Vec<CandidatePart>> {
    require_additive(measure)?;
    let d = inst.citations();
    let members: Vec<ArticleId> = members.iter().copied().filter(|&v| inst.is_own(v)).collect();
    if h == 0 {
        return Ok(members
            .iter()
            .map(|&v| CandidatePart {
                members: vec![v],
                value: d.in_degree(v),
            })
            .collect());
    }
    // Uncited articles never belong to a minimal good set when h > 0.
    let verts: Vec<ArticleId> = members.into_iter().filter(|&v| d.in_degree(v) > 0).collect();
    let m = verts.len();
    let g = inst.compat();
    let adj: Vec<FixedBitSet> = verts
        .iter()
        .map(|&a| {
            let mut row = FixedBitSet::with_capacity(m);
            for (j, &b) in verts.iter().enumerate() {
                if g.are_compatible(a, b) {
                    row.insert(j);
                }
            }
            row
        })
        .collect();

    let mut finder = MinimalFinder {
        verts: &verts,
        inst,
        h,
        measure,
        cfg,
        nodes,
        count: vec![0u32; d.n()],
        found: HashSet::new(),
    };
    let mut p = FixedBitSet::with_capacity(m);
    p.insert_range(..);
    let x = FixedBitSet::with_capacity(m);
    bron_kerbosch(&adj, &mut Vec::new(), p, x, &mut |clique| finder.scan_clique(clique))?;

    let mut out: Vec<CandidatePart> = finder.found.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

/// Reports every maximal clique, as ascending local indices; pivot = lowest index in `P ∪ X`.
fn bron_kerbosch(
    adj: &[FixedBitSet],
    r: &mut Vec<usize>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    report: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    let pivot = p.ones().next().into_iter().chain(x.ones().next()).min();
    let Some(u) = pivot else {
        let mut clique = r.clone();
        clique.sort_unstable();
        return report(&clique);
    };
    let branch: Vec<usize> = p.ones().filter(|&v| !adj[u].contains(v)).collect();
    for v in branch {
        let mut p2 = p.clone();
        p2.intersect_with(&adj[v]);
        let mut x2 = x.clone();
        x2.intersect_with(&adj[v]);
        r.push(v);
        bron_kerbosch(adj, r, p2, x2, report)?;
        r.pop();
        p.set(v, false);
        x.insert(v);
    }
    Ok(())
}

struct MinimalFinder<'a> {
    verts: &'a [ArticleId],
    inst: &'a Instance,
    h: usize,
    measure: Measure,
    cfg: &'a SolverConfig,
    nodes: &'a mut u64,
    /// Multiplicity of each citer over the current set (union measure).
    count: Vec<u32>,
    found: HashSet<CandidatePart>,
}

impl MinimalFinder<'_> {
    fn scan_clique(&mut self, clique: &[usize]) -> Result<()> {
        let d = self.inst.citations();
        let degs: Vec<usize> = clique.iter().map(|&i| d.in_degree(self.verts[i])).collect();
        let mut suffix = vec![0usize; clique.len() + 1];
        for i in (0..clique.len()).rev() {
            suffix[i] = suffix[i + 1] + degs[i];
        }
        if suffix[0] < self.h {
            return Ok(());
        }
        let mut chosen = Vec::new();
        self.dfs(clique, &degs, &suffix, 0, 0, &mut chosen)?;
        self.cfg.check_deadline()
    }

    fn dfs(
        &mut self,
        clique: &[usize],
        degs: &[usize],
        suffix: &[usize],
        start: usize,
        value: usize,
        chosen: &mut Vec<usize>,
    ) -> Result<()> {
        *self.nodes += 1;
        if *self.nodes > self.cfg.max_search_nodes {
            return Err(Error::EnumerationBudgetExceeded {
                what: "clique search nodes",
                cap: self.cfg.max_search_nodes,
            });
        }
        if *self.nodes & 0xFFFF == 0 {
            self.cfg.check_deadline()?;
        }
        let d = self.inst.citations();
        for pos in start..clique.len() {
            // Both measures are bounded by the sum of in-degrees.
            if value + suffix[pos] < self.h {
                break;
            }
            let v = self.verts[clique[pos]];
            let gain = match self.measure {
                Measure::Sum => degs[pos],
                _ => {
                    let mut g = 0;
                    for &u in d.citers(v) {
                        self.count[u.index()] += 1;
                        if self.count[u.index()] == 1 {
                            g += 1;
                        }
                    }
                    g
                }
            };
            // A member adding nothing could be dropped, so no superset is minimal.
            if gain > 0 {
                chosen.push(pos);
                let nv = value + gain;
                if nv >= self.h {
                    if self.is_minimal(clique, degs, chosen, nv) {
                        self.record(clique, chosen, nv)?;
                    }
                } else {
                    self.dfs(clique, degs, suffix, pos + 1, nv, chosen)?;
                }
                chosen.pop();
            }
            if self.measure != Measure::Sum {
                for &u in d.citers(v) {
                    self.count[u.index()] -= 1;
                }
            }
        }
        Ok(())
    }

    fn is_minimal(&self, clique: &[usize], degs: &[usize], chosen: &[usize], value: usize) -> bool {
        let d = self.inst.citations();
        chosen.iter().all(|&pos| {
            let loss = match self.measure {
                Measure::Sum => degs[pos],
                _ => d
                    .citers(self.verts[clique[pos]])
                    .iter()
                    .filter(|u| self.count[u.index()] == 1)
                    .count(),
            };
            value - loss < self.h
        })
    }

    fn record(&mut self, clique: &[usize], chosen: &[usize], value: usize) -> Result<()> {
        let members: Vec<ArticleId> = chosen.iter().map(|&p| self.verts[clique[p]]).collect();
        self.found.insert(CandidatePart { members, value });
        if self.found.len() as u64 > self.cfg.max_candidates {
            return Err(Error::EnumerationBudgetExceeded {
                what: "minimal good cliques",
                cap: self.cfg.max_candidates,
            });
        }
        Ok(())
    }
}

/// Maximum number of pairwise-disjoint candidates, with one optimal choice.
pub fn max_disjoint_parts(candidates: &[CandidatePart]) -> DisjointChoice {
    max_disjoint_with(candidates, u64::MAX).expect("unbounded search")
}

pub(crate) fn max_disjoint_with(candidates: &[CandidatePart], max_nodes: u64) -> Result<DisjointChoice> {
    let mut by_article: std::collections::HashMap<ArticleId, Vec<usize>> = Default::default();
    for (i, c) in candidates.iter().enumerate() {
        for &v in &c.members {
            by_article.entry(v).or_default().push(i);
        }
    }
    let mut edges = HashSet::new();
    for list in by_article.values() {
        for (x, &a) in list.iter().enumerate() {
            for &b in &list[x + 1..] {
                edges.insert((a.min(b), a.max(b)));
            }
        }
    }
    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
    let cover = min_vertex_cover(candidates.len(), &edges, max_nodes)?;
    let mut in_cover = vec![false; candidates.len()];
    for c in cover {
        in_cover[c] = true;
    }
    let chosen: Vec<usize> = (0..candidates.len()).filter(|&i| !in_cover[i]).collect();
    Ok(DisjointChoice {
        count: chosen.len(),
        chosen,
    })
}

/// Greedy disjoint family, smallest candidates first.
fn greedy_disjoint(candidates: &[CandidatePart]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..candidates.len()).collect();
    order.sort_by_key(|&i| (candidates[i].members.len(), i));
    let mut used = HashSet::new();
    let mut chosen = Vec::new();
    for i in order {
        if candidates[i].members.iter().all(|v| !used.contains(v)) {
            used.extend(candidates[i].members.iter().copied());
            chosen.push(i);
        }
    }
    chosen.sort_unstable();
    chosen
}

fn witness(own: &[ArticleId], candidates: &[CandidatePart], chosen: &[usize]) -> Partition {
    let mut covered = HashSet::new();
    let mut parts = Vec::new();
    for &i in chosen {
        covered.extend(candidates[i].members.iter().copied());
        parts.push(candidates[i].members.clone());
    }
    parts.extend(own.iter().filter(|v| !covered.contains(*v)).map(|&v| vec![v]));
    Partition::from_canonical_unchecked(parts)
}

/// Decides `inst.target` by clique enumeration. Merge budgets are not supported.
pub fn clique_enum_decide(inst: &Instance, measure: Measure, cfg: &SolverConfig) -> Result<SolveResult> {
    require_additive(measure)?;
    if inst.budget.is_some() {
        return Err(Error::BudgetNotSupported);
    }
    let start = Instant::now();
    let mut stats = SolveStats {
        solver: "clique-enum",
        ..Default::default()
    };
    let (yes, w) = decide_at(inst, inst.target, measure, cfg, &mut stats)?;
    stats.elapsed = start.elapsed();
    Ok(SolveResult {
        answer: Answer::from_bool(yes),
        witness: yes.then_some(w),
        stats,
    })
}

fn decide_at(
    inst: &Instance,
    h: usize,
    measure: Measure,
    cfg: &SolverConfig,
    stats: &mut SolveStats,
) -> Result<(bool, Partition)> {
    if h == 0 {
        return Ok((true, Partition::singletons(inst.own())));
    }
    let mut nodes = 0;
    let cands = enumerate_in(inst.own(), inst, h, measure, cfg, &mut nodes)?;
    stats.nodes_explored += nodes;
    stats.candidates += cands.len() as u64;
    if cands.len() < h {
        return Ok((false, Partition::singletons(inst.own())));
    }
    let greedy = greedy_disjoint(&cands);
    let chosen = if greedy.len() >= h {
        greedy
    } else {
        max_disjoint_with(&cands, cfg.max_search_nodes)?.chosen
    };
    Ok((chosen.len() >= h, witness(inst.own(), &cands, &chosen)))
}

/// Largest achievable H-index found by clique enumeration, trying `h = 1, 2, …` until the first no.
pub fn clique_enum_max_h(inst: &Instance, measure: Measure, cfg: &SolverConfig) -> Result<SolveResult> {
    require_additive(measure)?;
    let start = Instant::now();
    let mut stats = SolveStats {
        solver: "clique-enum",
        ..Default::default()
    };
    let mut best = (0, Partition::singletons(inst.own()));
    for h in 1..=inst.own().len() {
        let (yes, w) = decide_at(inst, h, measure, cfg, &mut stats)?;
        if !yes {
            break;
        }
        best = (h, w);
    }
    stats.elapsed = start.elapsed();
    Ok(SolveResult {
        answer: Answer::Optimum(best.0),
        witness: Some(best.1),
        stats,
    })
}

/// Maximum number of good parts within one component, by enumeration (fallback for the DP).
pub(crate) fn component_good_parts(
    component: &[ArticleId],
    inst: &Instance,
    h: usize,
    measure: Measure,
    cfg: &SolverConfig,
) -> Result<ComponentSolution> {
    let mut nodes = 0;
    let cands = enumerate_in(component, inst, h, measure, cfg, &mut nodes)?;
    let choice = max_disjoint_with(&cands, cfg.max_search_nodes)?;
    let own: Vec<ArticleId> = component.iter().copied().filter(|&v| inst.is_own(v)).collect();
    let parts = witness(&own, &cands, &choice.chosen).parts().to_vec();
    Ok(ComponentSolution {
        good_parts: choice.count,
        parts,
        stats: SolveStats {
            solver: "clique-enum",
            nodes_explored: nodes,
            candidates: cands.len() as u64,
            ..Default::default()
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::gen_square;
    use crate::model::{complies, fig1, ids, partition_h_index, CompatibilityGraph};

    fn part(m: &[usize]) -> CandidatePart {
        CandidatePart {
            members: ids(m),
            value: 0,
        }
    }

    #[test]
    fn fig1_candidates() {
        let cfg = SolverConfig::default();
        let c = enumerate_minimal_good_cliques(&fig1(), 2, Measure::Union, &cfg).unwrap();
        let members: Vec<_> = c.iter().map(|p| p.members.clone()).collect();
        assert_eq!(members, vec![ids(&[4]), ids(&[5])]);
        let c = enumerate_minimal_good_cliques(&fig1(), 0, Measure::Union, &cfg).unwrap();
        assert_eq!(c.len(), 6);
        assert!(enumerate_minimal_good_cliques(&fig1(), 6, Measure::Sum, &cfg).unwrap().is_empty());
    }

    #[test]
    fn disjoint_families() {
        assert_eq!(max_disjoint_parts(&[part(&[4]), part(&[5])]).count, 2);
        let chain = [part(&[0, 1]), part(&[1, 2]), part(&[2, 3])];
        assert_eq!(max_disjoint_parts(&chain), DisjointChoice { count: 2, chosen: vec![0, 2] });
        assert_eq!(max_disjoint_parts(&[]).count, 0);
    }

    #[test]
    fn max_h_values() {
        let cfg = SolverConfig::default();
        let r = clique_enum_max_h(&fig1(), Measure::Union, &cfg).unwrap();
        assert_eq!(r.answer, Answer::Optimum(2));
        let sq = gen_square(3);
        for m in [Measure::Sum, Measure::Union] {
            let r = clique_enum_max_h(&sq, m, &cfg).unwrap();
            assert_eq!(r.answer, Answer::Optimum(3));
            let w = r.witness.unwrap();
            assert!(complies(sq.compat(), &w));
            assert_eq!(partition_h_index(&sq, &w, m), 3);
        }
        let edgeless = sq.with_compat(CompatibilityGraph::edgeless(18)).unwrap();
        let r = clique_enum_max_h(&edgeless, Measure::Union, &cfg).unwrap();
        assert_eq!(r.answer, Answer::Optimum(1));
    }

    #[test]
    fn candidate_cap() {
        let cfg = SolverConfig {
            max_candidates: 3,
            ..Default::default()
        };
        let err = enumerate_minimal_good_cliques(&gen_square(3), 3, Measure::Union, &cfg).unwrap_err();
        assert!(matches!(err, Error::EnumerationBudgetExceeded { cap: 3, .. }));
    }
}
