use crate::error::{Error, Result};

use super::graph::{ArticleId, CitationGraph, CompatibilityGraph};

/// One manipulation instance `(D, G, W, h [, k])`.
///
/// `budget` is present exactly for the cautious variant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    citations: CitationGraph,
    compat: CompatibilityGraph,
    own: Vec<ArticleId>,
    own_mask: Vec<bool>,
    pub target: usize,
    pub budget: Option<usize>,
}

/// Non-fatal observations made while validating.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationWarning {
    /// An arc between two articles outside the profile; stored but never counted.
    ExternalArc(ArticleId, ArticleId),
}

impl Instance {
    pub fn new(
        citations: CitationGraph,
        compat: CompatibilityGraph,
        own: impl IntoIterator<Item = ArticleId>,
        target: usize,
        budget: Option<usize>,
    ) -> Result<Self> {
        let n = citations.n();
        if compat.n() != n {
            return Err(Error::UniverseMismatch {
                citation: n,
                compat: compat.n(),
            });
        }
        let mut own: Vec<ArticleId> = own.into_iter().collect();
        own.sort_unstable();
        let mut own_mask = vec![false; n];
        for &w in &own {
            if w.index() >= n {
                return Err(Error::OutOfRangeId {
                    id: w.index(),
                    n,
                    context: "own articles",
                });
            }
            if own_mask[w.index()] {
                return Err(Error::WNotSubset(format!("article {w} listed twice")));
            }
            own_mask[w.index()] = true;
        }
        Ok(Instance {
            citations,
            compat,
            own,
            own_mask,
            target,
            budget,
        })
    }

    pub fn citations(&self) -> &CitationGraph {
        &self.citations
    }

    pub fn compat(&self) -> &CompatibilityGraph {
        &self.compat
    }

    pub fn n(&self) -> usize {
        self.citations.n()
    }

    /// The own articles `W`, ascending.
    pub fn own(&self) -> &[ArticleId] {
        &self.own
    }

    pub fn own_mask(&self) -> &[bool] {
        &self.own_mask
    }

    pub fn is_own(&self, v: ArticleId) -> bool {
        self.own_mask[v.index()]
    }

    pub fn with_target(mut self, h: usize) -> Self {
        self.target = h;
        self
    }

    pub fn with_budget(mut self, k: Option<usize>) -> Self {
        self.budget = k;
        self
    }

    pub fn with_compat(mut self, compat: CompatibilityGraph) -> Result<Self> {
        if compat.n() != self.n() {
            return Err(Error::UniverseMismatch {
                citation: self.n(),
                compat: compat.n(),
            });
        }
        self.compat = compat;
        Ok(self)
    }

    /// True when every pair of own articles is compatible.
    pub fn own_is_clique(&self) -> bool {
        self.own
            .iter()
            .all(|&w| self.compat.neighbors(w).iter().filter(|v| self.is_own(**v)).count() + 1 == self.own.len())
    }

    /// Compatibility graph restricted to `W`.
    pub fn own_compat(&self) -> CompatibilityGraph {
        self.compat.restricted_to(&self.own_mask)
    }
}

/// Re-checks every structural invariant of `inst` and reports warnings.
pub fn validate_instance(inst: &Instance) -> Result<Vec<ValidationWarning>> {
    let n = inst.n();
    let d = inst.citations();
    // Re-run the constructors' checks so hand-assembled data is covered too.
    CitationGraph::new(n, d.arcs().iter().copied())?;
    CompatibilityGraph::new(n, inst.compat().edges())?;
    Instance::new(
        d.clone(),
        inst.compat().clone(),
        inst.own().iter().copied(),
        inst.target,
        inst.budget,
    )?;
    Ok(d.arcs()
        .iter()
        .filter(|(_, v)| !inst.is_own(*v))
        .filter(|(u, _)| !inst.is_own(*u))
        .map(|&(u, v)| ValidationWarning::ExternalArc(u, v))
        .collect())
}
