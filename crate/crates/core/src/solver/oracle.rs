//! Exhaustive enumeration of complying partitions: the ground truth for
//! small instances and the only exact solver for the fused measure.
//!
//! Partitions are generated in restricted-growth order: the `i`-th own
//! article joins an existing compatible block or opens a new one. Blocks
//! carry incremental sum and union counters; the fused measure is evaluated
//! only at leaves whose union H-index (an upper bound) could improve the
//! answer.

use crate::error::{Error, Result};
use crate::model::{h_index_of, partition_h_index, ArticleId, Instance, Measure, Partition};

/// Size limits for the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest number of own articles enumerated.
    pub max_own: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_own: 12 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleOutcome {
    pub best_h: usize,
    pub witness: Partition,
    /// Complying partitions visited (within the merge budget, if any).
    pub leaves: u64,
}

/// Exact maximum H-index over complying partitions, within `inst.budget` merges if set.
pub fn brute_force_max_h(inst: &Instance, measure: Measure) -> Result<usize> {
    brute_force_with(inst, measure, OracleLimits::default()).map(|o| o.best_h)
}

/// As [`brute_force_max_h`], with explicit limits and a witness.
pub fn brute_force_with(inst: &Instance, measure: Measure, limits: OracleLimits) -> Result<OracleOutcome> {
    let free = inst.own().to_vec();
    check_size(free.len(), limits)?;
    let mut e = Enumerator::new(inst, measure, free, Vec::new(), Goal::Max);
    e.run();
    Ok(OracleOutcome {
        best_h: e.best_h,
        witness: e.best.unwrap_or_else(|| Partition::singletons(inst.own())),
        leaves: e.leaves,
    })
}

/// Is there a complying partition (within `inst.budget`) with H-index ≥ `h`? Returns a witness.
///
/// Articles that are good on their own in every partition (in-degree ≥ `h`
/// for sum and union, ≥ `h` citers outside `W` for fused) are kept as
/// singletons: splitting such an article off its part never loses a good
/// part and never costs a merge. `limits.max_own` bounds the remaining articles.
pub fn brute_force_decide(
    inst: &Instance,
    measure: Measure,
    h: usize,
    limits: OracleLimits,
) -> Result<Option<Partition>> {
    let d = inst.citations();
    let anchored_good = |v: ArticleId| match measure {
        Measure::Sum | Measure::Union => d.in_degree(v) >= h,
        Measure::Fused => d.citers(v).iter().filter(|u| !inst.is_own(**u)).count() >= h,
    };
    let (anchored, free): (Vec<ArticleId>, Vec<ArticleId>) =
        inst.own().iter().copied().partition(|&v| anchored_good(v));
    check_size(free.len(), limits)?;
    let mut e = Enumerator::new(inst, measure, free, anchored, Goal::Reach(h));
    e.run();
    Ok(e.best.filter(|_| e.best_h >= h))
}

/// Ground truth when every compatibility component of the own articles has
/// at most two members: each compatible pair is merged or not, `2^pairs`
/// partitions in all (fewer under a budget).
pub fn brute_force_pairs_decide(
    inst: &Instance,
    measure: Measure,
    h: usize,
    max_pairs: usize,
) -> Result<Option<Partition>> {
    let mut pairs = Vec::new();
    let mut singles = Vec::new();
    for c in inst.own_compat().connected_components() {
        match c.as_slice() {
            [v] if inst.is_own(*v) => singles.push(*v),
            [_] => {}
            [a, b] => pairs.push((*a, *b)),
            _ => return Err(Error::ComponentTooLarge { size: c.len(), cap: 2 }),
        }
    }
    if pairs.len() > max_pairs {
        return Err(Error::EnumerationBudgetExceeded {
            what: "compatible pairs",
            cap: max_pairs as u64,
        });
    }
    let budget = inst.budget.unwrap_or(usize::MAX);
    for mask in 0u64..1 << pairs.len() {
        if mask.count_ones() as usize > budget {
            continue;
        }
        let mut parts: Vec<Vec<ArticleId>> = singles.iter().map(|&v| vec![v]).collect();
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                parts.push(vec![a, b]);
            } else {
                parts.push(vec![a]);
                parts.push(vec![b]);
            }
        }
        let p = Partition::from_canonical_unchecked(parts);
        if partition_h_index(inst, &p, measure) >= h {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

fn check_size(own: usize, limits: OracleLimits) -> Result<()> {
    if own > limits.max_own {
        return Err(Error::TooLargeForOracle {
            own,
            limit: limits.max_own,
        });
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Goal {
    Max,
    Reach(usize),
}

struct Enumerator<'a> {
    inst: &'a Instance,
    measure: Measure,
    free: Vec<ArticleId>,
    anchored: Vec<ArticleId>,
    goal: Goal,
    budget: usize,
    blocks: Vec<Vec<ArticleId>>,
    sums: Vec<usize>,
    unions: Vec<usize>,
    /// `counts[b][u]`: members of block `b` cited by `u`.
    counts: Vec<Vec<u32>>,
    best_h: usize,
    best: Option<Partition>,
    leaves: u64,
    done: bool,
}

impl<'a> Enumerator<'a> {
    fn new(inst: &'a Instance, measure: Measure, free: Vec<ArticleId>, anchored: Vec<ArticleId>, goal: Goal) -> Self {
        Enumerator {
            inst,
            measure,
            goal,
            budget: inst.budget.unwrap_or(usize::MAX),
            blocks: Vec::new(),
            sums: Vec::new(),
            unions: Vec::new(),
            counts: vec![vec![0; inst.n()]; free.len()],
            free,
            anchored,
            best_h: 0,
            best: None,
            leaves: 0,
            done: false,
        }
    }

    fn run(&mut self) {
        self.assign(0, 0);
    }

    fn assign(&mut self, i: usize, merges: usize) {
        if self.done {
            return;
        }
        if i == self.free.len() {
            self.leaf();
            return;
        }
        let v = self.free[i];
        let g = self.inst.compat();
        if merges < self.budget {
            for b in 0..self.blocks.len() {
                if self.blocks[b].iter().all(|&w| g.are_compatible(v, w)) {
                    self.push(b, v);
                    self.assign(i + 1, merges + 1);
                    self.pop(b, v);
                }
            }
        }
        let b = self.blocks.len();
        self.blocks.push(Vec::new());
        self.sums.push(0);
        self.unions.push(0);
        self.push(b, v);
        self.assign(i + 1, merges);
        self.pop(b, v);
        self.blocks.pop();
        self.sums.pop();
        self.unions.pop();
    }

    fn push(&mut self, b: usize, v: ArticleId) {
        let d = self.inst.citations();
        self.blocks[b].push(v);
        self.sums[b] += d.in_degree(v);
        for &u in d.citers(v) {
            let c = &mut self.counts[b][u.index()];
            *c += 1;
            if *c == 1 {
                self.unions[b] += 1;
            }
        }
    }

    fn pop(&mut self, b: usize, v: ArticleId) {
        let d = self.inst.citations();
        self.blocks[b].pop();
        self.sums[b] -= d.in_degree(v);
        for &u in d.citers(v) {
            let c = &mut self.counts[b][u.index()];
            *c -= 1;
            if *c == 0 {
                self.unions[b] -= 1;
            }
        }
    }

    fn leaf(&mut self) {
        self.leaves += 1;
        let d = self.inst.citations();
        let anchored = self.anchored.iter().map(|&v| d.in_degree(v));
        let additive = match self.measure {
            Measure::Sum => &self.sums,
            _ => &self.unions,
        };
        let values: Vec<usize> = additive.iter().copied().chain(anchored).collect();
        let bound = h_index_of(&values);
        let needed = match self.goal {
            Goal::Max => self.best_h + 1,
            Goal::Reach(h) => h,
        };
        if bound < needed && self.best.is_some() {
            return;
        }
        let partition = Partition::from_canonical_unchecked(
            self.blocks
                .iter()
                .cloned()
                .chain(self.anchored.iter().map(|&v| vec![v]))
                .collect(),
        );
        let h = match self.measure {
            Measure::Fused => partition_h_index(self.inst, &partition, Measure::Fused),
            _ => bound,
        };
        if self.best.is_none() || h > self.best_h {
            self.best_h = h;
            self.best = Some(partition);
        }
        if let Goal::Reach(target) = self.goal {
            self.done = self.best_h >= target;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::gen_square;
    use crate::model::{complies, fig1, merge_count, CitationGraph, CompatibilityGraph};

    #[test]
    fn fig1_all_measures() {
        // Regression constants from the first run of the oracle.
        assert_eq!(brute_force_max_h(&fig1(), Measure::Fused).unwrap(), 2);
        assert_eq!(brute_force_max_h(&fig1(), Measure::Union).unwrap(), 2);
        assert_eq!(brute_force_max_h(&fig1(), Measure::Sum).unwrap(), 2);
        assert_eq!(brute_force_max_h(&fig1().with_budget(Some(0)), Measure::Union).unwrap(), 2);
        let out = brute_force_with(&fig1(), Measure::Sum, OracleLimits::default()).unwrap();
        // 2 × 2 partitions of the two compatible pairs.
        assert_eq!(out.leaves, 4);
    }

    #[test]
    fn single_article() {
        let d = CitationGraph::from_pairs(4, &[(1, 0), (2, 0), (3, 0)]).unwrap();
        let inst = Instance::new(d, CompatibilityGraph::edgeless(4), vec![ArticleId(0)], 3, None).unwrap();
        for m in Measure::ALL {
            assert_eq!(brute_force_max_h(&inst, m).unwrap(), 1);
        }
    }

    #[test]
    fn square_budgets() {
        let sq = gen_square(2);
        assert_eq!(brute_force_max_h(&sq.clone().with_budget(Some(2)), Measure::Sum).unwrap(), 2);
        assert_eq!(brute_force_max_h(&sq.clone().with_budget(Some(1)), Measure::Sum).unwrap(), 1);
        let w = brute_force_decide(&sq.clone().with_budget(Some(2)), Measure::Union, 2, OracleLimits::default())
            .unwrap()
            .unwrap();
        assert!(complies(sq.compat(), &w));
        assert!(merge_count(&w) <= 2);
        assert!(brute_force_decide(&sq.with_budget(Some(1)), Measure::Union, 2, OracleLimits::default())
            .unwrap()
            .is_none());
    }

    #[test]
    fn pairs_agree_with_partitions() {
        for m in Measure::ALL {
            for h in 0..=3 {
                let a = brute_force_pairs_decide(&fig1(), m, h, 20).unwrap().is_some();
                let b = brute_force_decide(&fig1(), m, h, OracleLimits::default()).unwrap().is_some();
                assert_eq!(a, b, "{m} h={h}");
            }
        }
        assert!(matches!(
            brute_force_pairs_decide(&gen_square(2), Measure::Sum, 1, 20),
            Err(Error::ComponentTooLarge { size: 4, cap: 2 })
        ));
    }

    #[test]
    fn size_limit() {
        let err = brute_force_max_h(&gen_square(4), Measure::Sum).unwrap_err();
        assert_eq!(err, Error::TooLargeForOracle { own: 16, limit: 12 });
    }
}
