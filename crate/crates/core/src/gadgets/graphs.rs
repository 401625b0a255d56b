//! Reductions from Multicolored Clique and Independent Set, plus the brute
//! force deciders used to cross-check them.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::model::Instance;

use super::Layout;

/// A simple undirected graph on `0..n`, optionally with vertex classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionedGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    /// `classes[v]` is the class of `v`; classes are `0..ℓ`.
    pub classes: Option<Vec<usize>>,
}

impl PartitionedGraph {
    /// Validates ranges; rejects loops and repeated edges.
    pub fn new(n: usize, edges: Vec<(usize, usize)>, classes: Option<Vec<usize>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::ParamOutOfRange(format!("edge {{{u}, {v}}} outside 0..{n}")));
            }
            if u == v || !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::ParamOutOfRange(format!("edge {{{u}, {v}}} is a loop or repeated")));
            }
        }
        if let Some(c) = &classes {
            if c.len() != n {
                return Err(Error::NotPartite(format!("{} class labels for {n} vertices", c.len())));
            }
        }
        Ok(PartitionedGraph { n, edges, classes })
    }

    pub fn plain(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        Self::new(n, edges, None)
    }

    fn adjacency(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }

    /// Number of classes; errors unless every class `0..ℓ` is used and no edge stays inside a class.
    pub fn class_count(&self) -> Result<usize> {
        let classes = self
            .classes
            .as_ref()
            .ok_or_else(|| Error::NotPartite("no vertex classes declared".into()))?;
        let ell = classes.iter().max().map_or(0, |&c| c + 1);
        if let Some(c) = (0..ell).find(|c| !classes.contains(c)) {
            return Err(Error::NotPartite(format!("class {c} is empty")));
        }
        if let Some(&(u, v)) = self.edges.iter().find(|&&(u, v)| classes[u] == classes[v]) {
            return Err(Error::NotPartite(format!("edge {{{u}, {v}}} inside class {}", classes[u])));
        }
        Ok(ell)
    }
}

/// The two instances built from one Multicolored Clique input.
#[derive(Debug, Clone)]
pub struct McInstances {
    /// Sum measure, `h = ℓ`, `k = ℓ − 1`.
    pub cautious: Instance,
    /// Same profile, no budget, target `ℓ` (one above the singleton H-index).
    pub improvement: Instance,
}

/// `W = V(H) ⊎ W_≥` with `ℓ − 1` articles in `W_≥`, each cited `ℓ` times;
/// every vertex cited once. Compatibility is `H`, with `W_≥` isolated.
pub fn gen_multicolored_clique(h: &PartitionedGraph) -> Result<McInstances> {
    let ell = h.class_count()?;
    if ell < 2 {
        return Err(Error::ParamOutOfRange(format!("need at least two classes, got {ell}")));
    }
    let n = h.n;
    let mut lay = Layout::new(n + ell - 1);
    for v in 0..n {
        lay.pad(v, 1);
    }
    for w in n..n + ell - 1 {
        lay.pad(w, ell);
    }
    let improvement = lay.finish(&h.edges, false, ell, None);
    let cautious = improvement.clone().with_budget(Some(ell - 1));
    Ok(McInstances { cautious, improvement })
}

fn check_is_params(h: &PartitionedGraph, ell: usize) -> Result<()> {
    if h.n > 64 {
        return Err(Error::ParamOutOfRange(format!("{} vertices; at most 64 supported", h.n)));
    }
    if ell < 2 || ell >= h.n {
        return Err(Error::ParamOutOfRange(format!("need |V(H)| > ℓ > 1, got |V(H)| = {}, ℓ = {ell}", h.n)));
    }
    Ok(())
}

/// Clique compatibility, `h = ℓ·|V(H)|`, `k = ℓ − 1`. `W_<= V(H)` comes first,
/// then `h − 1` articles with `h` citations each. One citer per edge; top-up
/// citers bring every vertex to exactly `|V(H)|` citations.
pub fn gen_independent_set_cautious(h: &PartitionedGraph, ell: usize) -> Result<Instance> {
    check_is_params(h, ell)?;
    let n = h.n;
    let target = ell * n;
    let mut lay = Layout::new(n + target - 1);
    for &(u, v) in &h.edges {
        lay.citer(&[u, v]);
    }
    for v in 0..n {
        let d = lay.in_degree(v);
        lay.pad(v, n - d);
    }
    for w in n..n + target - 1 {
        lay.pad(w, target);
    }
    Ok(lay.finish(&[], true, target, Some(ell - 1)))
}

/// Clique compatibility, target `q = |E(H)|`. Own articles in order:
/// `V(H)`, then `W_≥` (`q − ℓ − 1` articles cited `q` times), then `W_{−1}`
/// (`ℓ` articles cited `q − 1` times). One citer per edge, no top-up.
///
/// Equivalent to Independent Set only when `H` has no isolated vertex: an
/// isolated member of the independent set adds nothing to its `W_{−1}`
/// partner. A yes answer here always implies an independent set.
pub fn gen_independent_set_improvement(h: &PartitionedGraph, ell: usize) -> Result<Instance> {
    let q = h.edges.len();
    if ell <= 2 || q < ell + 1 {
        return Err(Error::ParamOutOfRange(format!("need |E(H)| > ℓ > 2, got |E(H)| = {q}, ℓ = {ell}")));
    }
    let n = h.n;
    let ge = q - ell - 1;
    let mut lay = Layout::new(n + ge + ell);
    for &(u, v) in &h.edges {
        lay.citer(&[u, v]);
    }
    for w in n..n + ge {
        lay.pad(w, q);
    }
    for w in n + ge..n + ge + ell {
        lay.pad(w, q - 1);
    }
    Ok(lay.finish(&[], true, q, None))
}

/// Brute force: one vertex per class, pairwise adjacent.
pub fn has_multicolored_clique(h: &PartitionedGraph) -> Result<bool> {
    let ell = h.class_count()?;
    let classes = h.classes.as_ref().expect("checked");
    let adj = h.adjacency();
    let by_class: Vec<Vec<usize>> = (0..ell).map(|c| (0..h.n).filter(|&v| classes[v] == c).collect()).collect();
    fn extend(c: usize, chosen: u64, by_class: &[Vec<usize>], adj: &[u64]) -> bool {
        if c == by_class.len() {
            return true;
        }
        by_class[c]
            .iter()
            .any(|&v| adj[v] & chosen == chosen && extend(c + 1, chosen | 1 << v, by_class, adj))
    }
    Ok(extend(0, 0, &by_class, &adj))
}

/// Brute force over vertex subsets of `H` (at most 64 vertices; exponential).
pub fn has_independent_set(h: &PartitionedGraph, ell: usize) -> bool {
    let adj = h.adjacency();
    fn grow(start: usize, need: usize, chosen: u64, adj: &[u64]) -> bool {
        if need == 0 {
            return true;
        }
        (start..adj.len()).any(|v| adj[v] & chosen == 0 && grow(v + 1, need - 1, chosen | 1 << v, adj))
    }
    grow(0, ell, 0, &adj)
}
