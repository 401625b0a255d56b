//! Data reduction for instances whose own articles are pairwise compatible.
//!
//! The rules are applied in order, with the cleanup rule run to a fixpoint:
//!
//! * `RULE0`: drop citations of articles outside `W`. They never count.
//! * `RULE1`: greedy maximal matching on the underlying undirected graph of
//!   the citations. `h²` matching arcs give `h` disjoint heads-of-size-`h`
//!   parts, so accept. Otherwise the matched endpoints form a vertex cover `C`.
//! * `RULE2`: an article of `C` citing more than `2h² + 2h` own articles
//!   outside `C` loses citations until exactly that many remain.
//! * `RULE3a`: accept if `h` own articles already have `h` citations.
//! * `RULE3b`: an uncited own article becomes a non-own article (keeping its
//!   outgoing citations).
//! * `RULE3c`: a non-own article citing nothing is deleted.
//! * `RULE3d`: an own article keeps at most `h` citations from outside `W`.
//!   Matching arcs are never removed, which makes the reduction idempotent.
//!
//! Arbitrary choices remove the citation with the highest target id first
//! (for 3d: highest citer id). The result is relabelled densely,
//! preserving order, and the map is recorded as a `RELABEL` trace line.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::model::{ArticleId, CitationGraph, CompatibilityGraph, Instance};

/// One rule application.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    /// `0`, `1`, `2`, `3a`, … or `RELABEL`.
    pub rule: &'static str,
    pub detail: String,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rule == "RELABEL" {
            write!(f, "RELABEL {}", self.detail)
        } else {
            write!(f, "RULE{} {}", self.rule, self.detail)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reduced,
}

#[derive(Debug, Clone)]
pub struct KernelOutcome {
    pub verdict: Verdict,
    /// The reduced instance (in its own dense ids) when `verdict` is `Reduced`.
    pub reduced: Option<Instance>,
    pub trace: Vec<TraceStep>,
    /// Matched endpoints, in the input's ids. Empty if the matching rule accepted
    /// or never ran.
    pub cover: Vec<ArticleId>,
}

impl KernelOutcome {
    /// The trace, one `RULE<id> <detail>` line per step.
    pub fn trace_text(&self) -> String {
        self.trace.iter().map(|s| format!("{s}\n")).collect()
    }
}

/// `4h⁴ + 6h³ + 5h²`, the largest article count of a reduced instance.
pub fn kernel_bound(h: usize) -> usize {
    4 * h.pow(4) + 6 * h.pow(3) + 5 * h.pow(2)
}

/// Greedy maximal matching: arcs in ascending order, taken while both ends are free.
pub fn greedy_matching(d: &CitationGraph) -> Vec<(ArticleId, ArticleId)> {
    greedy_over(d.n(), d.arcs().iter().copied())
}

fn greedy_over(n: usize, arcs: impl IntoIterator<Item = (ArticleId, ArticleId)>) -> Vec<(ArticleId, ArticleId)> {
    let mut used = vec![false; n];
    let mut out = Vec::new();
    for (u, v) in arcs {
        if !used[u.index()] && !used[v.index()] {
            used[u.index()] = true;
            used[v.index()] = true;
            out.push((u, v));
        }
    }
    out
}

/// Outcome of the matching rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatchingOutcome {
    Accept,
    /// Matched endpoints (fewer than `2h²`), sorted.
    Cover(Vec<ArticleId>),
}

/// Outcome of the cleanup rule.
#[derive(Debug, Clone)]
pub enum CleanupOutcome {
    Accept,
    /// The cleaned instance, relabelled densely; `relabel[old] = new`.
    Reduced {
        instance: Instance,
        relabel: Vec<Option<ArticleId>>,
    },
}

/// Working copy of an instance during reduction, in the input's ids.
struct Work {
    n: usize,
    h: usize,
    alive: Vec<bool>,
    own: Vec<bool>,
    arcs: BTreeSet<(ArticleId, ArticleId)>,
    protected: BTreeSet<(ArticleId, ArticleId)>,
    trace: Vec<TraceStep>,
}

impl Work {
    fn new(inst: &Instance) -> Result<Self> {
        if !inst.own_is_clique() {
            return Err(Error::NotAClique);
        }
        if inst.budget.is_some() {
            return Err(Error::BudgetNotSupported);
        }
        Ok(Work {
            n: inst.n(),
            h: inst.target,
            alive: vec![true; inst.n()],
            own: inst.own_mask().to_vec(),
            arcs: inst.citations().arcs().iter().copied().collect(),
            protected: BTreeSet::new(),
            trace: Vec::new(),
        })
    }

    fn log(&mut self, rule: &'static str, detail: impl Into<String>) {
        self.trace.push(TraceStep {
            rule,
            detail: detail.into(),
        });
    }

    fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(_, v) in &self.arcs {
            deg[v.index()] += 1;
        }
        deg
    }

    fn rule_external_targets(&mut self) {
        let dead: Vec<_> = self.arcs.iter().copied().filter(|&(_, v)| !self.own[v.index()]).collect();
        for (u, v) in dead {
            self.arcs.remove(&(u, v));
            self.log("0", format!("remove {u}->{v}"));
        }
    }

    /// Returns `None` on accept, else the matching.
    fn rule_matching(&mut self) -> Option<Vec<(ArticleId, ArticleId)>> {
        let m = greedy_over(self.n, self.arcs.iter().copied());
        let need = self.h * self.h;
        if m.len() >= need {
            self.log("1", format!("accept: matching of size {} >= {need}", m.len()));
            return None;
        }
        let cover = cover_of(&m);
        self.log(
            "1",
            format!("matching of size {} < {need}; cover {}", m.len(), join(&cover)),
        );
        Some(m)
    }

    fn rule_cover_trim(&mut self, cover: &[ArticleId]) -> Result<()> {
        let mut in_cover = vec![false; self.n];
        for &c in cover {
            in_cover[c.index()] = true;
        }
        if self.arcs.iter().any(|&(u, v)| !in_cover[u.index()] && !in_cover[v.index()]) {
            return Err(Error::NotACover);
        }
        let cap = 2 * self.h * self.h + 2 * self.h;
        for &c in cover {
            let targets: Vec<ArticleId> = self
                .arcs
                .range((c, ArticleId(0))..=(c, ArticleId(u32::MAX)))
                .map(|&(_, w)| w)
                .filter(|w| self.own[w.index()] && !in_cover[w.index()])
                .collect();
            if targets.len() > cap {
                for &w in targets[cap..].iter().rev() {
                    self.arcs.remove(&(c, w));
                    self.log("2", format!("remove {c}->{w}"));
                }
            }
        }
        Ok(())
    }

    /// Runs the cleanup rule to a fixpoint. Returns false on accept.
    fn rule_cleanup(&mut self) -> bool {
        loop {
            let mut changed = false;
            let deg = self.in_degrees();
            let good = (0..self.n).filter(|&v| self.own[v] && deg[v] >= self.h).count();
            if good >= self.h {
                self.log("3a", format!("accept: {good} own articles with >= {} citations", self.h));
                return false;
            }
            for v in 0..self.n {
                if self.own[v] && deg[v] == 0 {
                    self.own[v] = false;
                    changed = true;
                    self.log("3b", format!("reclassify {v} as non-own"));
                }
            }
            let mut out = vec![0usize; self.n];
            for &(u, _) in &self.arcs {
                out[u.index()] += 1;
            }
            for v in 0..self.n {
                if self.alive[v] && !self.own[v] && out[v] == 0 {
                    self.alive[v] = false;
                    changed = true;
                    self.log("3c", format!("delete {v}"));
                }
            }
            for v in 0..self.n {
                if !self.own[v] {
                    continue;
                }
                let w = ArticleId::from(v);
                let external: Vec<ArticleId> = self
                    .arcs
                    .iter()
                    .filter(|&&(u, t)| t == w && !self.own[u.index()])
                    .map(|&(u, _)| u)
                    .collect();
                if external.len() <= self.h {
                    continue;
                }
                let mut excess = external.len() - self.h;
                for &u in external.iter().rev() {
                    if excess == 0 {
                        break;
                    }
                    if self.protected.contains(&(u, w)) {
                        continue;
                    }
                    self.arcs.remove(&(u, w));
                    excess -= 1;
                    changed = true;
                    self.log("3d", format!("remove {u}->{w}"));
                }
            }
            if !changed {
                return true;
            }
        }
    }

    /// Dense, order-preserving relabelling of the surviving articles.
    fn finish(&mut self) -> Result<(Instance, Vec<Option<ArticleId>>)> {
        let mut relabel = vec![None; self.n];
        let mut next = 0usize;
        let mut pairs = Vec::new();
        for v in 0..self.n {
            if self.alive[v] {
                relabel[v] = Some(ArticleId::from(next));
                pairs.push(format!("{v}->{next}"));
                next += 1;
            }
        }
        self.log("RELABEL", pairs.join(" "));
        let map = |v: ArticleId| relabel[v.index()].expect("arc endpoints survive");
        let arcs: Vec<_> = self.arcs.iter().map(|&(u, v)| (map(u), map(v))).collect();
        let own: Vec<ArticleId> = (0..self.n).filter(|&v| self.own[v]).map(|v| map(ArticleId::from(v))).collect();
        let d = CitationGraph::new(next, arcs)?;
        let g = CompatibilityGraph::clique_on(next, &own);
        Ok((Instance::new(d, g, own, self.h, None)?, relabel))
    }
}

fn cover_of(m: &[(ArticleId, ArticleId)]) -> Vec<ArticleId> {
    let mut c: Vec<ArticleId> = m.iter().flat_map(|&(u, v)| [u, v]).collect();
    c.sort_unstable();
    c
}

fn join(ids: &[ArticleId]) -> String {
    let s: Vec<String> = ids.iter().map(|v| v.to_string()).collect();
    format!("[{}]", s.join(","))
}

/// The matching rule on its own (citations of non-own articles are ignored).
pub fn apply_rule_matching(inst: &Instance) -> Result<MatchingOutcome> {
    let mut w = Work::new(inst)?;
    w.rule_external_targets();
    Ok(match w.rule_matching() {
        None => MatchingOutcome::Accept,
        Some(m) => MatchingOutcome::Cover(cover_of(&m)),
    })
}

/// The cover-trimming rule for a given vertex cover `cover`.
pub fn apply_rule_cover_trim(inst: &Instance, cover: &[ArticleId]) -> Result<Instance> {
    let mut w = Work::new(inst)?;
    w.rule_cover_trim(cover)?;
    let d = CitationGraph::new(inst.n(), w.arcs.iter().copied())?;
    Instance::new(d, inst.compat().clone(), inst.own().iter().copied(), inst.target, None)
}

/// The cleanup rule, run to a fixpoint.
pub fn apply_rule_cleanup(inst: &Instance) -> Result<CleanupOutcome> {
    let mut w = Work::new(inst)?;
    if !w.rule_cleanup() {
        return Ok(CleanupOutcome::Accept);
    }
    let (instance, relabel) = w.finish()?;
    Ok(CleanupOutcome::Reduced { instance, relabel })
}

/// Applies all rules. The reduced instance is a yes-instance (for every
/// measure) iff the input is, and has at most [`kernel_bound`]`(h)` articles.
pub fn kernelize(inst: &Instance) -> Result<KernelOutcome> {
    let mut w = Work::new(inst)?;
    let accept = |w: Work, cover: Vec<ArticleId>| KernelOutcome {
        verdict: Verdict::Accept,
        reduced: None,
        trace: w.trace,
        cover,
    };
    if w.h == 0 {
        w.log("3a", "accept: target 0");
        return Ok(accept(w, Vec::new()));
    }
    w.rule_external_targets();
    let Some(matching) = w.rule_matching() else {
        return Ok(accept(w, Vec::new()));
    };
    let cover = cover_of(&matching);
    w.protected = matching.into_iter().collect();
    w.rule_cover_trim(&cover)?;
    if !w.rule_cleanup() {
        return Ok(accept(w, cover));
    }
    let (reduced, _) = w.finish()?;
    Ok(KernelOutcome {
        verdict: Verdict::Reduced,
        reduced: Some(reduced),
        trace: w.trace,
        cover,
    })
}
