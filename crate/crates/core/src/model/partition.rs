use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::graph::{ArticleId, CompatibilityGraph};

/// A partition of the own articles. Parts of size at least two are merged articles.
///
/// Always kept canonical: members ascending, parts ordered by smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<Vec<ArticleId>>,
}

impl Partition {
    /// Canonicalizes `parts`. Disjointness is checked; coverage of `W` is not (see [`Partition::check_covers`]).
    pub fn new(parts: impl IntoIterator<Item = Vec<ArticleId>>) -> Result<Self> {
        let mut parts: Vec<Vec<ArticleId>> = parts.into_iter().collect();
        let mut seen = HashSet::new();
        for p in &mut parts {
            if p.is_empty() {
                return Err(Error::EmptyPart);
            }
            p.sort_unstable();
            for &v in p.iter() {
                if !seen.insert(v) {
                    return Err(Error::InvalidPartition(format!("article {v} in two parts")));
                }
            }
        }
        parts.sort_unstable_by_key(|p| p[0]);
        Ok(Partition { parts })
    }

    pub(crate) fn from_canonical_unchecked(mut parts: Vec<Vec<ArticleId>>) -> Self {
        for p in &mut parts {
            p.sort_unstable();
        }
        parts.sort_unstable_by_key(|p| p[0]);
        Partition { parts }
    }

    pub fn singletons(own: &[ArticleId]) -> Self {
        Self::from_canonical_unchecked(own.iter().map(|&w| vec![w]).collect())
    }

    pub fn parts(&self) -> &[Vec<ArticleId>] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Index of `part` in this partition, if present (compared as a set).
    pub fn position(&self, part: &[ArticleId]) -> Option<usize> {
        let mut sorted = part.to_vec();
        sorted.sort_unstable();
        self.parts.iter().position(|p| *p == sorted)
    }

    /// Errors unless the union of the parts is exactly `own`.
    pub fn check_covers(&self, own: &[ArticleId]) -> Result<()> {
        let mut members: Vec<ArticleId> = self.parts.iter().flatten().copied().collect();
        members.sort_unstable();
        let mut expected = own.to_vec();
        expected.sort_unstable();
        if members != expected {
            return Err(Error::InvalidPartition(
                "parts do not cover exactly the own articles".into(),
            ));
        }
        Ok(())
    }

    /// `part_of[v]` = index of the part holding `v`, for a universe of `n` articles.
    pub fn part_index(&self, n: usize) -> Vec<Option<usize>> {
        let mut idx = vec![None; n];
        for (i, p) in self.parts.iter().enumerate() {
            for &v in p {
                idx[v.index()] = Some(i);
            }
        }
        idx
    }
}

/// Total number of merges `Σ(|P| − 1)`.
pub fn merge_count(partition: &Partition) -> usize {
    partition.parts.iter().map(|p| p.len() - 1).sum()
}

/// True iff every part induces a clique in `g`.
pub fn complies(g: &CompatibilityGraph, partition: &Partition) -> bool {
    partition.parts.iter().all(|p| g.is_clique(p))
}
