//! Minimum vertex cover by branch and bound.
//!
//! Each connected component is solved separately. Degree-0 vertices are
//! dropped and degree-1 vertices force their neighbour into the cover; then
//! the search branches on a maximum-degree vertex `v`: either `v` is in the
//! cover, or all of `N(v)` is. A greedy cover gives the initial bound and a
//! greedy maximal matching the lower bound at every node.

use crate::error::{Error, Result};

/// A minimum vertex cover of the simple graph `(0..n, edges)`, sorted ascending.
///
/// Fails with [`Error::EnumerationBudgetExceeded`] after `max_nodes` search nodes.
pub fn min_vertex_cover(n: usize, edges: &[(usize, usize)], max_nodes: u64) -> Result<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        if a != b {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
    }

    let mut search = Search {
        adj: &adj,
        nodes: 0,
        max_nodes,
    };
    let mut seen = vec![false; n];
    let mut cover = Vec::new();
    for s in 0..n {
        if seen[s] || adj[s].is_empty() {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            for &w in &adj[comp[i]] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        cover.extend(search.component(&comp)?);
    }
    cover.sort_unstable();
    Ok(cover)
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    nodes: u64,
    max_nodes: u64,
}

impl Search<'_> {
    fn component(&mut self, comp: &[usize]) -> Result<Vec<usize>> {
        let mut alive = vec![false; self.adj.len()];
        for &v in comp {
            alive[v] = true;
        }
        let mut best = self.greedy(comp, alive.clone());
        self.branch(comp, alive, Vec::new(), &mut best)?;
        Ok(best)
    }

    fn degree(&self, v: usize, alive: &[bool]) -> usize {
        self.adj[v].iter().filter(|&&w| alive[w]).count()
    }

    fn greedy(&self, comp: &[usize], mut alive: Vec<bool>) -> Vec<usize> {
        let mut cover = Vec::new();
        loop {
            let pick = comp
                .iter()
                .filter(|&&v| alive[v])
                .map(|&v| (self.degree(v, &alive), v))
                .filter(|&(d, _)| d > 0)
                .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
            match pick {
                Some((_, v)) => {
                    alive[v] = false;
                    cover.push(v);
                }
                None => return cover,
            }
        }
    }

    fn matching_bound(&self, comp: &[usize], alive: &[bool]) -> usize {
        let mut used = vec![false; self.adj.len()];
        let mut size = 0;
        for &v in comp {
            if !alive[v] || used[v] {
                continue;
            }
            if let Some(&w) = self.adj[v].iter().find(|&&w| alive[w] && !used[w]) {
                used[v] = true;
                used[w] = true;
                size += 1;
            }
        }
        size
    }

    fn branch(&mut self, comp: &[usize], mut alive: Vec<bool>, mut cover: Vec<usize>, best: &mut Vec<usize>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::EnumerationBudgetExceeded {
                what: "vertex-cover search nodes",
                cap: self.max_nodes,
            });
        }
        loop {
            let mut changed = false;
            for &v in comp {
                if !alive[v] {
                    continue;
                }
                match self.degree(v, &alive) {
                    0 => alive[v] = false,
                    1 => {
                        let u = *self.adj[v].iter().find(|&&w| alive[w]).expect("degree 1");
                        alive[u] = false;
                        alive[v] = false;
                        cover.push(u);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if cover.len() >= best.len() {
                return Ok(());
            }
            if !changed {
                break;
            }
        }
        let pick = comp
            .iter()
            .filter(|&&v| alive[v])
            .map(|&v| (self.degree(v, &alive), v))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        let Some((deg, v)) = pick.filter(|&(d, _)| d > 0) else {
            *best = cover;
            return Ok(());
        };
        if cover.len() + self.matching_bound(comp, &alive) >= best.len() {
            return Ok(());
        }

        let mut with_v = alive.clone();
        with_v[v] = false;
        let mut c1 = cover.clone();
        c1.push(v);
        self.branch(comp, with_v, c1, best)?;

        if cover.len() + deg < best.len() {
            alive[v] = false;
            for &w in &self.adj[v] {
                if alive[w] {
                    alive[w] = false;
                    cover.push(w);
                }
            }
            self.branch(comp, alive, cover, best)?;
        }
        Ok(())
    }
}
