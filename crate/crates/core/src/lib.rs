//! Exact and parameterized algorithms for maximizing the H-index of a
//! publication profile by merging articles.
//!
//! An instance consists of a citation graph over a universe of articles, a
//! compatibility graph whose edges are the permitted merges, the set of own
//! articles, and a target H-index (plus a merge budget for the cautious
//! variant). Three citation measures are supported; see [`model::Measure`].
//!
//! * [`model`]: data types, measures, compliance, H-index of a partition.
//! * [`solver`]: component DP, budgeted clique DP, clique-enumeration solver,
//!   brute-force oracle.
//! * [`kernel`]: data reduction for clique compatibility graphs.
//! * [`compat`]: title-based compatibility graphs.
//! * [`gadgets`]: instance generators, including hardness constructions.
//! * [`io`], [`experiment`], [`cli`]: file formats, the sweep pipeline, and
//!   the command-line front end.

pub mod cli;
pub mod compat;
pub mod error;
pub mod experiment;
pub mod gadgets;
pub mod io;
pub mod kernel;
pub mod model;
pub mod solver;

pub use error::{Error, Result};
pub use model::{ArticleId, CitationGraph, CompatibilityGraph, Instance, Measure, Partition};
