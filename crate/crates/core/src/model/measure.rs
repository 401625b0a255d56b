//! The three citation measures and H-index evaluation of a partition.
//!
//! Citations between members of one part count for [`Measure::Sum`] and
//! [`Measure::Union`], and never for [`Measure::Fused`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::graph::{ArticleId, CitationGraph};
use super::instance::Instance;
use super::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    /// Sum of the members' in-degrees.
    Sum,
    /// Number of distinct articles citing some member.
    Union,
    /// Distinct external citers plus distinct other parts citing the part.
    Fused,
}

impl Measure {
    pub const ALL: [Measure; 3] = [Measure::Sum, Measure::Union, Measure::Fused];

    pub fn name(self) -> &'static str {
        match self {
            Measure::Sum => "sum",
            Measure::Union => "union",
            Measure::Fused => "fused",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Measure {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "sum" | "scites" => Ok(Measure::Sum),
            "union" | "ucites" => Ok(Measure::Union),
            "fused" | "fusion" | "mcites" => Ok(Measure::Fused),
            other => Err(format!("unknown measure {other:?} (expected sum, union or fused)")),
        }
    }
}

/// Sum of in-degrees over `part`.
pub fn scites(d: &CitationGraph, part: &[ArticleId]) -> Result<usize> {
    if part.is_empty() {
        return Err(Error::EmptyPart);
    }
    Ok(part.iter().map(|&v| d.in_degree(v)).sum())
}

/// Size of the union of the members' in-neighbourhoods. Members citing members are included.
pub fn ucites(d: &CitationGraph, part: &[ArticleId]) -> Result<usize> {
    if part.is_empty() {
        return Err(Error::EmptyPart);
    }
    let mut all: Vec<ArticleId> = part.iter().flat_map(|&v| d.citers(v).iter().copied()).collect();
    all.sort_unstable();
    all.dedup();
    Ok(all.len())
}

/// The fused measure of `part` within `partition`.
pub fn mcites(
    d: &CitationGraph,
    own_mask: &[bool],
    partition: &Partition,
    part: &[ArticleId],
) -> Result<usize> {
    let i = partition.position(part).ok_or(Error::PartNotInPartition)?;
    let part_of = partition.part_index(d.n());
    Ok(fused_value(d, own_mask, &part_of, &partition.parts()[i], i))
}

fn fused_value(
    d: &CitationGraph,
    own_mask: &[bool],
    part_of: &[Option<usize>],
    part: &[ArticleId],
    index: usize,
) -> usize {
    let mut external: Vec<ArticleId> = Vec::new();
    let mut citing_parts: Vec<usize> = Vec::new();
    for &v in part {
        for &u in d.citers(v) {
            if !own_mask[u.index()] {
                external.push(u);
            } else if let Some(p) = part_of[u.index()] {
                if p != index {
                    citing_parts.push(p);
                }
            }
        }
    }
    external.sort_unstable();
    external.dedup();
    citing_parts.sort_unstable();
    citing_parts.dedup();
    external.len() + citing_parts.len()
}

/// `μ(P)` for every part of `partition`, in part order.
pub fn part_values(
    d: &CitationGraph,
    own_mask: &[bool],
    partition: &Partition,
    measure: Measure,
) -> Vec<usize> {
    match measure {
        Measure::Sum => partition
            .parts()
            .iter()
            .map(|p| p.iter().map(|&v| d.in_degree(v)).sum())
            .collect(),
        Measure::Union => partition
            .parts()
            .iter()
            .map(|p| ucites(d, p).unwrap_or(0))
            .collect(),
        Measure::Fused => {
            let part_of = partition.part_index(d.n());
            partition
                .parts()
                .iter()
                .enumerate()
                .map(|(i, p)| fused_value(d, own_mask, &part_of, p, i))
                .collect()
        }
    }
}

/// Largest `h` such that at least `h` of `values` are `>= h`.
pub fn h_index_of(values: &[usize]) -> usize {
    let mut v = values.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v.iter()
        .enumerate()
        .take_while(|(i, &x)| x >= i + 1)
        .count()
}

/// H-index of `partition` under `measure`.
pub fn partition_h_index(inst: &Instance, partition: &Partition, measure: Measure) -> usize {
    h_index_of(&part_values(inst.citations(), inst.own_mask(), partition, measure))
}

/// H-index of the unmerged profile.
pub fn singleton_h_index(inst: &Instance, measure: Measure) -> usize {
    partition_h_index(inst, &Partition::singletons(inst.own()), measure)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{fig1, ids};

    #[test]
    fn h_index_basics() {
        assert_eq!(h_index_of(&[]), 0);
        assert_eq!(h_index_of(&[0, 0, 2, 2]), 2);
        assert_eq!(h_index_of(&[0, 0, 0, 1, 2, 2]), 2);
        assert_eq!(h_index_of(&[5, 5, 5]), 3);
        assert_eq!(h_index_of(&[1, 1, 1]), 1);
    }

    #[test]
    fn fig1_values() {
        let inst = fig1();
        let d = inst.citations();
        assert_eq!(scites(d, &ids(&[3, 4])).unwrap(), 3);
        assert_eq!(scites(d, &ids(&[5])).unwrap(), 2);
        assert_eq!(scites(d, &ids(&[0])).unwrap(), 0);
        assert_eq!(ucites(d, &ids(&[3, 4])).unwrap(), 2);
        assert_eq!(ucites(d, &ids(&[5])).unwrap(), 2);
        assert_eq!(ucites(d, &ids(&[1, 2])).unwrap(), 0);
        let star = crate::model::fig1_merged();
        assert_eq!(mcites(d, inst.own_mask(), &star, &ids(&[3, 4])).unwrap(), 1);
        assert_eq!(mcites(d, inst.own_mask(), &star, &ids(&[5])).unwrap(), 1);
        assert_eq!(mcites(d, inst.own_mask(), &star, &ids(&[0])).unwrap(), 0);
        assert_eq!(
            mcites(d, inst.own_mask(), &star, &ids(&[1])),
            Err(Error::PartNotInPartition)
        );
        assert_eq!(scites(d, &[]), Err(Error::EmptyPart));
    }

    #[test]
    fn fig1_h_indices() {
        let inst = fig1();
        let star = crate::model::fig1_merged();
        assert_eq!(partition_h_index(&inst, &star, Measure::Union), 2);
        assert_eq!(singleton_h_index(&inst, Measure::Sum), 2);
        assert_eq!(singleton_h_index(&inst, Measure::Union), 2);
    }

    #[test]
    fn measure_parsing() {
        assert_eq!("UNION".parse::<Measure>(), Ok(Measure::Union));
        assert_eq!("mcites".parse::<Measure>(), Ok(Measure::Fused));
        assert!("avg".parse::<Measure>().is_err());
    }
}
