//! Exact solvers and bounds.
//!
//! * [`component_dp`]: subset DP per compatibility component, for sum and union.
//! * [`cautious`]: budgeted DP when the own articles form a compatibility clique.
//! * [`clique_enum`]: minimal good cliques plus maximum disjoint packing.
//! * [`oracle`]: exhaustive enumeration of complying partitions, all measures.
//! * [`driver`]: max-H and improvement loops on top of the above.

pub mod cautious;
pub mod clique_enum;
pub mod component_dp;
pub mod driver;
pub mod oracle;
pub mod vertex_cover;

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{Measure, Partition};

pub use cautious::{cautious_bounds_ucites, cautious_max_h, decide_cautious_clique_scites, CautiousBounds};
pub use clique_enum::{
    clique_enum_decide, clique_enum_max_h, enumerate_minimal_good_cliques, max_disjoint_parts,
    CandidatePart, DisjointChoice,
};
pub use component_dp::{decide_manipulation, max_good_parts_dp, own_components, ComponentSolution};
pub use driver::{decide, decide_improvement, max_h_index};
pub use oracle::{brute_force_decide, brute_force_pairs_decide, brute_force_max_h, brute_force_with, OracleLimits, OracleOutcome};
pub use vertex_cover::min_vertex_cover;

/// Resource knobs shared by the solvers.
#[derive(Debug, Clone)]
pub struct SolverConfig {
    /// Largest component the subset DP accepts.
    pub max_component_bits: usize,
    /// Route oversized components to clique enumeration instead of failing.
    pub fallback_to_clique_enum: bool,
    /// Cap on minimal good cliques per enumeration.
    pub max_candidates: u64,
    /// Cap on search nodes per enumeration or vertex-cover search.
    pub max_search_nodes: u64,
    pub deadline: Option<Instant>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_component_bits: 30,
            fallback_to_clique_enum: true,
            max_candidates: 2_000_000,
            max_search_nodes: 200_000_000,
            deadline: None,
        }
    }
}

impl SolverConfig {
    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.deadline = Some(Instant::now() + limit);
        self
    }

    pub(crate) fn check_deadline(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(Error::Timeout),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "value")]
pub enum Answer {
    Yes,
    No,
    Optimum(usize),
}

impl Answer {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Answer::Yes
        } else {
            Answer::No
        }
    }

    pub fn is_yes(self) -> bool {
        matches!(self, Answer::Yes)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub solver: &'static str,
    pub nodes_explored: u64,
    pub table_entries: u64,
    pub candidates: u64,
    /// Some component was too wide for the DP and went through clique enumeration.
    pub fell_back: bool,
    #[serde(serialize_with = "ser_millis")]
    pub elapsed: Duration,
}

fn ser_millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

impl SolveStats {
    pub(crate) fn absorb(&mut self, other: &SolveStats) {
        self.nodes_explored += other.nodes_explored;
        self.table_entries += other.table_entries;
        self.candidates += other.candidates;
        self.fell_back |= other.fell_back;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub answer: Answer,
    pub witness: Option<Partition>,
    pub stats: SolveStats,
}

pub(crate) fn require_additive(measure: Measure) -> Result<()> {
    match measure {
        Measure::Sum | Measure::Union => Ok(()),
        Measure::Fused => Err(Error::UnsupportedMeasure(measure)),
    }
}
