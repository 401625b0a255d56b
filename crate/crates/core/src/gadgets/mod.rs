//! Instance generators: the square profile, the hardness constructions,
//! seeded random instances, and the text formats for their inputs.
//!
//! Fresh citing articles are always appended after the own articles.

mod formats;
mod graphs;
mod random;
mod sat;

pub use formats::{parse_formula, parse_graph};
pub use graphs::{
    gen_independent_set_cautious, gen_independent_set_improvement, gen_multicolored_clique,
    has_independent_set, has_multicolored_clique, McInstances, PartitionedGraph,
};
pub use random::{random_instance, random_profile, synthetic_title, CompatModel, RandomSpec};
pub use sat::{gen_1in3sat, Formula1in3, SatMode};

use crate::model::{ArticleId, CitationGraph, CompatibilityGraph, Instance};

/// `h²` own articles, each cited once by its own non-own article; all own
/// articles pairwise compatible; target `h`.
pub fn gen_square(h: usize) -> Instance {
    let m = h * h;
    let arcs: Vec<(usize, usize)> = (0..m).map(|i| (m + i, i)).collect();
    let d = CitationGraph::from_pairs(2 * m, &arcs).expect("distinct arcs");
    let own: Vec<ArticleId> = (0..m).map(ArticleId::from).collect();
    let g = CompatibilityGraph::clique_on(2 * m, &own);
    Instance::new(d, g, own, h, None).expect("well-formed")
}

/// Builder for generated instances: own articles first, fresh citers appended.
pub(crate) struct Layout {
    own: usize,
    next: usize,
    arcs: Vec<(usize, usize)>,
}

impl Layout {
    pub(crate) fn new(own: usize) -> Self {
        Layout {
            own,
            next: own,
            arcs: Vec::new(),
        }
    }

    pub(crate) fn arc(&mut self, u: usize, v: usize) {
        self.arcs.push((u, v));
    }

    /// A new non-own article citing exactly `targets`.
    pub(crate) fn citer(&mut self, targets: &[usize]) {
        let u = self.next;
        self.next += 1;
        for &t in targets {
            self.arcs.push((u, t));
        }
    }

    pub(crate) fn pad(&mut self, v: usize, count: usize) {
        for _ in 0..count {
            self.citer(&[v]);
        }
    }

    pub(crate) fn in_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|&&(_, t)| t == v).count()
    }

    pub(crate) fn finish(self, compat: &[(usize, usize)], clique: bool, h: usize, k: Option<usize>) -> Instance {
        let n = self.next;
        let d = CitationGraph::from_pairs(n, &self.arcs).expect("generated arcs are simple");
        let own: Vec<ArticleId> = (0..self.own).map(ArticleId::from).collect();
        let g = if clique {
            CompatibilityGraph::clique_on(n, &own)
        } else {
            CompatibilityGraph::from_pairs(n, compat).expect("generated edges are simple")
        };
        Instance::new(d, g, own, h, k).expect("well-formed")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{singleton_h_index, validate_instance, Measure};

    #[test]
    fn square_counts() {
        let one = gen_square(1);
        assert_eq!((one.own().len(), one.n()), (1, 2));
        let three = gen_square(3);
        assert_eq!((three.own().len(), three.n(), three.citations().arc_count()), (9, 18, 9));
        assert_eq!(singleton_h_index(&three, Measure::Union), 1);
        assert!(validate_instance(&three).unwrap().is_empty());
    }
}
