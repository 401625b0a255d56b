use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense index of an article inside one instance's universe `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ArticleId(pub u32);

impl ArticleId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for ArticleId {
    #[inline]
    fn from(i: usize) -> Self {
        ArticleId(i as u32)
    }
}

impl fmt::Display for ArticleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Shorthand for building id lists in tests and examples.
pub fn ids(xs: &[usize]) -> Vec<ArticleId> {
    xs.iter().map(|&x| ArticleId::from(x)).collect()
}

/// Directed citation graph: an arc `(u, v)` means `u` cites `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CitationGraph {
    n: usize,
    arcs: Vec<(ArticleId, ArticleId)>,
    citers: Vec<Vec<ArticleId>>,
    cited: Vec<Vec<ArticleId>>,
}

impl CitationGraph {
    /// Builds the graph, rejecting self-arcs, duplicates, and out-of-range ids.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (ArticleId, ArticleId)>) -> Result<Self> {
        let mut arcs: Vec<_> = arcs.into_iter().collect();
        for &(u, v) in &arcs {
            for id in [u, v] {
                if id.index() >= n {
                    return Err(Error::OutOfRangeId {
                        id: id.index(),
                        n,
                        context: "citation arc",
                    });
                }
            }
            if u == v {
                return Err(Error::InvalidArc {
                    from: u,
                    to: v,
                    reason: "self-citation",
                });
            }
        }
        arcs.sort_unstable();
        if let Some(w) = arcs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidArc {
                from: w[0].0,
                to: w[0].1,
                reason: "duplicate arc",
            });
        }
        let mut citers = vec![Vec::new(); n];
        let mut cited = vec![Vec::new(); n];
        for &(u, v) in &arcs {
            cited[u.index()].push(v);
            citers[v.index()].push(u);
        }
        for c in &mut citers {
            c.sort_unstable();
        }
        Ok(CitationGraph {
            n,
            arcs,
            citers,
            cited,
        })
    }

    pub fn from_pairs(n: usize, arcs: &[(usize, usize)]) -> Result<CitationGraph> {
        Self::new(n, arcs.iter().map(|&(u, v)| (u.into(), v.into())))
    }

    pub fn empty(n: usize) -> Self {
        CitationGraph {
            n,
            arcs: Vec::new(),
            citers: vec![Vec::new(); n],
            cited: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Arcs in ascending `(u, v)` order.
    pub fn arcs(&self) -> &[(ArticleId, ArticleId)] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// In-neighbourhood `N⁻(v)`, sorted ascending.
    pub fn citers(&self, v: ArticleId) -> &[ArticleId] {
        &self.citers[v.index()]
    }

    /// Out-neighbourhood of `u`, sorted ascending.
    pub fn cited_by(&self, u: ArticleId) -> &[ArticleId] {
        &self.cited[u.index()]
    }

    pub fn in_degree(&self, v: ArticleId) -> usize {
        self.citers[v.index()].len()
    }

    pub fn out_degree(&self, u: ArticleId) -> usize {
        self.cited[u.index()].len()
    }

    pub fn has_arc(&self, u: ArticleId, v: ArticleId) -> bool {
        self.cited[u.index()].binary_search(&v).is_ok()
    }

    /// True when the graph has no directed cycle.
    pub fn is_acyclic(&self) -> bool {
        let mut indeg: Vec<usize> = (0..self.n).map(|v| self.citers[v].len()).collect();
        let mut stack: Vec<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(u) = stack.pop() {
            seen += 1;
            for &v in &self.cited[u] {
                indeg[v.index()] -= 1;
                if indeg[v.index()] == 0 {
                    stack.push(v.index());
                }
            }
        }
        seen == self.n
    }
}

/// Undirected, simple compatibility graph; an edge means the two articles may be merged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibilityGraph {
    n: usize,
    adj: Vec<Vec<ArticleId>>,
    edge_count: usize,
}

impl CompatibilityGraph {
    /// Builds the graph. Duplicate edges (in either orientation) are rejected, as are loops.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (ArticleId, ArticleId)>) -> Result<Self> {
        let mut norm = Vec::new();
        for (a, b) in edges {
            for id in [a, b] {
                if id.index() >= n {
                    return Err(Error::OutOfRangeId {
                        id: id.index(),
                        n,
                        context: "compatibility edge",
                    });
                }
            }
            if a == b {
                return Err(Error::InvalidEdge {
                    a,
                    b,
                    reason: "loop",
                });
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidEdge {
                a: w[0].0,
                b: w[0].1,
                reason: "duplicate edge",
            });
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &norm {
            adj[a.index()].push(b);
            adj[b.index()].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(CompatibilityGraph {
            n,
            adj,
            edge_count: norm.len(),
        })
    }

    pub fn from_pairs(n: usize, edges: &[(usize, usize)]) -> Result<CompatibilityGraph> {
        Self::new(n, edges.iter().map(|&(a, b)| (a.into(), b.into())))
    }

    pub fn edgeless(n: usize) -> Self {
        CompatibilityGraph {
            n,
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Complete graph on `members`; every other article is isolated.
    pub fn clique_on(n: usize, members: &[ArticleId]) -> Self {
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut adj = vec![Vec::new(); n];
        for &a in &sorted {
            adj[a.index()] = sorted.iter().copied().filter(|&b| b != a).collect();
        }
        let k = sorted.len();
        CompatibilityGraph {
            n,
            adj,
            edge_count: k * k.saturating_sub(1) / 2,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: ArticleId) -> &[ArticleId] {
        &self.adj[v.index()]
    }

    pub fn are_compatible(&self, a: ArticleId, b: ArticleId) -> bool {
        self.adj[a.index()].binary_search(&b).is_ok()
    }

    /// Edges `{a, b}` with `a < b`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (ArticleId, ArticleId)> + '_ {
        self.adj.iter().enumerate().flat_map(|(a, list)| {
            let a = ArticleId::from(a);
            list.iter().copied().filter(move |&b| a < b).map(move |b| (a, b))
        })
    }

    /// True iff `set` induces a clique. Singletons and the empty set qualify.
    pub fn is_clique(&self, set: &[ArticleId]) -> bool {
        set.iter().enumerate().all(|(i, &a)| {
            set[i + 1..].iter().all(|&b| self.are_compatible(a, b))
        })
    }

    /// Subgraph on the same universe keeping only edges with both ends in `keep`.
    pub fn restricted_to(&self, keep: &[bool]) -> CompatibilityGraph {
        let mut adj = vec![Vec::new(); self.n];
        let mut edge_count = 0;
        for (a, list) in self.adj.iter().enumerate() {
            if !keep[a] {
                continue;
            }
            adj[a] = list.iter().copied().filter(|b| keep[b.index()]).collect();
            edge_count += adj[a].len();
        }
        CompatibilityGraph {
            n: self.n,
            adj,
            edge_count: edge_count / 2,
        }
    }

    /// Maximal connected vertex sets, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<ArticleId>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![ArticleId::from(s)];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v.index()] {
                    if !seen[w.index()] {
                        seen[w.index()] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}
