//! Citation graphs, compatibility graphs, partitions, and the citation measures.

mod graph;
mod instance;
mod measure;
mod partition;

pub use graph::{ids, ArticleId, CitationGraph, CompatibilityGraph};
pub use instance::{validate_instance, Instance, ValidationWarning};
pub use measure::{
    h_index_of, mcites, part_values, partition_h_index, scites, singleton_h_index, ucites, Measure,
};
pub use partition::{complies, merge_count, Partition};

/// The six-article reference profile: `v1..v6` are ids `0..5`, all own.
///
/// Arcs `v1→v4, v1→v5, v2→v6, v3→v6, v4→v5`; merges allowed for `{v2, v3}` and `{v4, v5}`.
pub fn fig1() -> Instance {
    let d = CitationGraph::from_pairs(6, &[(0, 3), (0, 4), (1, 5), (2, 5), (3, 4)])
        .expect("well-formed");
    let g = CompatibilityGraph::from_pairs(6, &[(1, 2), (3, 4)]).expect("well-formed");
    Instance::new(d, g, ids(&[0, 1, 2, 3, 4, 5]), 0, None).expect("well-formed")
}

/// The merged partition `{{v1}, {v2, v3}, {v4, v5}, {v6}}` of [`fig1`].
pub fn fig1_merged() -> Partition {
    Partition::new(vec![ids(&[0]), ids(&[1, 2]), ids(&[3, 4]), ids(&[5])]).expect("disjoint")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn validate_fig1() {
        assert_eq!(validate_instance(&fig1()), Ok(vec![]));
    }

    #[test]
    fn validation_errors() {
        let d = CitationGraph::from_pairs(6, &[(0, 3)]).unwrap();
        let g = CompatibilityGraph::edgeless(6);
        assert!(matches!(
            Instance::new(d.clone(), g.clone(), ids(&[0, 6]), 1, None),
            Err(Error::OutOfRangeId { id: 6, .. })
        ));
        assert!(matches!(
            Instance::new(d.clone(), g, ids(&[1, 1]), 1, None),
            Err(Error::WNotSubset(_))
        ));
        assert!(matches!(
            Instance::new(d, CompatibilityGraph::edgeless(5), ids(&[1]), 1, None),
            Err(Error::UniverseMismatch { .. })
        ));
    }

    #[test]
    fn external_arcs_warn() {
        let d = CitationGraph::from_pairs(4, &[(2, 3), (2, 0)]).unwrap();
        let inst = Instance::new(d, CompatibilityGraph::edgeless(4), ids(&[0, 1]), 1, None).unwrap();
        assert_eq!(
            validate_instance(&inst).unwrap(),
            vec![ValidationWarning::ExternalArc(ArticleId(2), ArticleId(3))]
        );
    }

    #[test]
    fn empty_profile() {
        let inst = Instance::new(
            CitationGraph::from_pairs(2, &[(0, 1)]).unwrap(),
            CompatibilityGraph::edgeless(2),
            Vec::new(),
            0,
            None,
        )
        .unwrap();
        for m in Measure::ALL {
            assert_eq!(singleton_h_index(&inst, m), 0);
        }
    }
}
