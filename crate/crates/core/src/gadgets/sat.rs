//! Positive 1-in-3-SAT to fused-measure manipulation with compatibility
//! components of size two.
//!
//! Each variable `x_i` gets articles `X¹_{i,T}, X²_{i,T}, X¹_{i,F}, X²_{i,F}`
//! (two mergeable pairs; merging the `T` pair means "true"), each clause
//! six articles `C¹_{j,z}, C²_{j,z}` for its three variables `z`. Padding
//! citers bring every pair to exactly `h = m + n` citations:
//!
//! | article     | total citations |
//! |-------------|-----------------|
//! | `X¹_{i,T}`  | 1               |
//! | `X²_{i,T}`  | h − 1           |
//! | `X¹_{i,F}`  | 2               |
//! | `X²_{i,F}`  | h − 2           |
//! | `C²_{j,z}`  | 1               |
//! | `C¹_{j,z}`  | h − 1           |

use crate::error::{Error, Result};
use crate::model::Instance;

use super::Layout;

/// A positive 1-in-3 formula over variables `0..n_vars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Formula1in3 {
    pub n_vars: usize,
    pub clauses: Vec<[usize; 3]>,
}

impl Formula1in3 {
    /// Checks ranges, distinct variables per clause, and at most three occurrences per variable.
    pub fn new(n_vars: usize, clauses: Vec<[usize; 3]>) -> Result<Self> {
        let mut occ = vec![0usize; n_vars];
        for (j, c) in clauses.iter().enumerate() {
            if c.iter().any(|&x| x >= n_vars) {
                return Err(Error::InvalidFormula(format!("clause {j} names a variable >= {n_vars}")));
            }
            if c[0] == c[1] || c[0] == c[2] || c[1] == c[2] {
                return Err(Error::InvalidFormula(format!("clause {j} repeats a variable")));
            }
            for &x in c {
                occ[x] += 1;
            }
        }
        if let Some(x) = occ.iter().position(|&o| o > 3) {
            return Err(Error::InvalidFormula(format!("variable {x} occurs in more than three clauses")));
        }
        Ok(Formula1in3 { n_vars, clauses })
    }

    pub fn occurrences(&self, x: usize) -> usize {
        self.clauses.iter().filter(|c| c.contains(&x)).count()
    }

    /// Two disjoint copies of the formula (makes `m + n` even).
    pub fn duplicate(&self) -> Self {
        let n = self.n_vars;
        let mut clauses = self.clauses.clone();
        clauses.extend(self.clauses.iter().map(|c| c.map(|x| x + n)));
        Formula1in3 {
            n_vars: 2 * n,
            clauses,
        }
    }

    /// Adds `extra` variables that occur in no clause.
    pub fn with_dummies(&self, extra: usize) -> Self {
        Formula1in3 {
            n_vars: self.n_vars + extra,
            clauses: self.clauses.clone(),
        }
    }

    /// Number of mergeable pairs in the generated instance.
    pub fn gadget_pairs(&self) -> usize {
        2 * self.n_vars + 3 * self.clauses.len()
    }

    /// Brute force over all assignments.
    pub fn is_1in3_satisfiable(&self) -> bool {
        assert!(self.n_vars < 32, "brute force only");
        (0u32..1 << self.n_vars).any(|a| {
            self.clauses
                .iter()
                .all(|c| c.iter().filter(|&&x| a & (1 << x) != 0).count() == 1)
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SatMode {
    /// Requires `m + n` even and `(m + n) / 2 ≥ 18`, which makes padding always feasible.
    Strict,
    /// Any size for which every article's gadget citations fit under its total.
    Relaxed,
}

/// Article ids of the construction, own articles only.
pub(crate) struct SatIds {
    n: usize,
}

impl SatIds {
    pub(crate) fn x(&self, i: usize, truth: bool, copy: usize) -> usize {
        4 * i + if truth { 0 } else { 2 } + copy - 1
    }
    pub(crate) fn c(&self, j: usize, pos: usize, copy: usize) -> usize {
        4 * self.n + 6 * j + 2 * pos + copy - 1
    }
}

/// Builds the manipulation instance for `phi` with target `h = m + n`.
///
/// The instance is a yes-instance (for the fused measure) iff `phi` has an
/// assignment making exactly one variable per clause true. Compatibility
/// components have size two and the citation graph is acyclic.
pub fn gen_1in3sat(phi: &Formula1in3, mode: SatMode) -> Result<Instance> {
    let n = phi.n_vars;
    let m = phi.clauses.len();
    let h = m + n;
    if mode == SatMode::Strict {
        if h % 2 == 1 {
            return Err(Error::OddSize(h));
        }
        if h / 2 < 18 {
            return Err(Error::FormulaTooSmall(h / 2));
        }
    }
    let ids = SatIds { n };
    let mut lay = Layout::new(4 * n + 6 * m);
    let mut compat = Vec::new();

    for i in 0..n {
        compat.push((ids.x(i, true, 1), ids.x(i, true, 2)));
        compat.push((ids.x(i, false, 1), ids.x(i, false, 2)));
        lay.arc(ids.x(i, true, 1), ids.x(i, false, 1));
        lay.arc(ids.x(i, true, 2), ids.x(i, false, 1));
    }
    for (j, clause) in phi.clauses.iter().enumerate() {
        for p in 0..3 {
            compat.push((ids.c(j, p, 1), ids.c(j, p, 2)));
        }
        for (from, to) in [(0, 1), (0, 2), (1, 2)] {
            for copy in [1, 2] {
                lay.arc(ids.c(j, from, copy), ids.c(j, to, 1));
            }
        }
        for (p, &z) in clause.iter().enumerate() {
            for copy in [1, 2] {
                let c = ids.c(j, p, copy);
                lay.arc(c, ids.x(z, false, 2));
                for &y in clause.iter().filter(|&&y| y != z) {
                    lay.arc(c, ids.x(y, true, 2));
                }
            }
        }
    }

    let mut targets: Vec<(usize, String, usize)> = Vec::new();
    let low = |k: usize| h.checked_sub(k);
    for i in 0..n {
        targets.push((ids.x(i, true, 1), format!("X1_{{{i},T}}"), 1));
        targets.push((ids.x(i, true, 2), format!("X2_{{{i},T}}"), h - 1));
        targets.push((ids.x(i, false, 1), format!("X1_{{{i},F}}"), 2));
        targets.push((ids.x(i, false, 2), format!("X2_{{{i},F}}"), low(2).unwrap_or(0)));
    }
    for j in 0..m {
        for p in 0..3 {
            targets.push((ids.c(j, p, 1), format!("C1_{{{j},{p}}}"), h - 1));
            targets.push((ids.c(j, p, 2), format!("C2_{{{j},{p}}}"), 1));
        }
    }
    for (v, name, total) in targets {
        let gadget = lay.in_degree(v);
        // Every single article must stay below h.
        if gadget > total || total >= h {
            return Err(Error::InfeasiblePadding {
                article: name,
                gadget,
                cap: total.min(h.saturating_sub(1)),
            });
        }
        lay.pad(v, total - gadget);
    }
    Ok(lay.finish(&compat, false, h, None))
}
