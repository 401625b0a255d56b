//! The measurement pipeline: per profile, a merge-budget sweep on the clique
//! compatibility graph and a title-threshold sweep, one CSV row per cell.
//!
//! Rows are independent jobs run on a rayon pool; results are collected by
//! row index, so the report does not depend on scheduling. A row that hits
//! its time limit (or another resource cap) is recorded, not fatal.

use std::io::Write;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::compat::Threshold;
use crate::error::{Error, Result};
use crate::io::IngestedProfile;
use crate::model::{singleton_h_index, CompatibilityGraph, Instance, Measure};
use crate::solver::{cautious_bounds_ucites, cautious_max_h, clique_enum_max_h, Answer, SolverConfig};

/// Report columns, in order.
pub const COLUMNS: [&str; 8] = [
    "profile",
    "variant",
    "param",
    "measure",
    "h_base",
    "h_value",
    "bound_kind",
    "runtime_ms",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Variant {
    #[serde(rename = "k-sweep")]
    KSweep,
    #[serde(rename = "t-sweep")]
    TSweep,
}

/// What `h_value` means for a row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Exact,
    Lower,
    Upper,
    /// The row ran out of time; `h_value` is empty.
    Timeout,
    /// A solver cap other than time was hit; `h_value` is empty.
    Limit,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow {
    pub profile: String,
    pub variant: Variant,
    pub param: String,
    pub measure: &'static str,
    pub h_base: usize,
    pub h_value: Option<usize>,
    pub bound_kind: BoundKind,
    pub runtime_ms: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ExperimentReport {
    pub rows: Vec<ReportRow>,
}

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    /// Merge budgets for the k-sweep (sum exact, union lower/upper).
    pub k_values: Vec<usize>,
    /// Thresholds for the t-sweep.
    pub t_values: Vec<Threshold>,
    /// Sum and/or union; fused has no polynomial sweep solver here.
    pub measures: Vec<Measure>,
    pub row_time_limit: Duration,
    /// Write `0` for every runtime so reports are byte-stable.
    pub zero_runtimes: bool,
    pub solver: SolverConfig,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            k_values: (1..=12).collect(),
            t_values: (1..=9).map(|i| Threshold::tenths(i).expect("in range")).collect(),
            measures: vec![Measure::Sum, Measure::Union],
            row_time_limit: Duration::from_secs(3600),
            zero_runtimes: false,
            solver: SolverConfig::default(),
        }
    }
}

/// A named profile ready for the sweeps.
#[derive(Debug, Clone)]
pub struct ProfileInput {
    pub id: String,
    pub profile: IngestedProfile,
}

#[derive(Debug, Clone, Copy)]
enum Job {
    Budget { profile: usize, k: usize, measure: Measure },
    Threshold { profile: usize, t: Threshold, measure: Measure },
}

/// Outcome of one job: one row, or a lower/upper pair for budgeted union.
type JobRows = Vec<(BoundKind, Option<usize>)>;

fn clique_instance(p: &IngestedProfile) -> Result<Instance> {
    let n = p.keys.len();
    Instance::new(p.citations.clone(), CompatibilityGraph::clique_on(n, &p.own), p.own.clone(), 0, None)
}

fn optimum(a: Answer) -> usize {
    match a {
        Answer::Optimum(h) => h,
        other => unreachable!("max-h solvers return an optimum, got {other:?}"),
    }
}

fn failure(e: &Error) -> BoundKind {
    if *e == Error::Timeout {
        BoundKind::Timeout
    } else {
        BoundKind::Limit
    }
}

fn run_job(job: Job, profiles: &[ProfileInput], cfg: &ExperimentConfig) -> Result<JobRows> {
    let solver = cfg.solver.clone().with_time_limit(cfg.row_time_limit);
    let out: Result<JobRows> = match job {
        Job::Budget { profile, k, measure } => {
            let inst = clique_instance(&profiles[profile].profile)?.with_budget(Some(k));
            match measure {
                Measure::Sum => cautious_max_h(&inst, &solver).map(|r| vec![(BoundKind::Exact, Some(optimum(r.answer)))]),
                Measure::Union => cautious_bounds_ucites(&inst, &solver)
                    .map(|b| vec![(BoundKind::Lower, Some(b.lower)), (BoundKind::Upper, Some(b.upper))]),
                Measure::Fused => Err(Error::UnsupportedMeasure(Measure::Fused)),
            }
        }
        Job::Threshold { profile, t, measure } => {
            let inst = profiles[profile].profile.instance(t)?;
            clique_enum_max_h(&inst, measure, &solver).map(|r| vec![(BoundKind::Exact, Some(optimum(r.answer)))])
        }
    };
    match out {
        Err(e) if e.is_resource_limit() => {
            let rows = match job {
                Job::Budget {
                    measure: Measure::Union, ..
                } => vec![(failure(&e), None); 2],
                _ => vec![(failure(&e), None)],
            };
            Ok(rows)
        }
        other => other,
    }
}

/// Runs both sweeps on every profile. Row order: profile, then k-sweep
/// (by measure, then ascending k), then t-sweep (by measure, then t).
///
/// Union lower bounds are carried forward along the k-sweep: a witness
/// within `k` merges is also one within `k + 1`.
pub fn run_experiment(profiles: &[ProfileInput], cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    if let Some(&m) = cfg.measures.iter().find(|&&m| m == Measure::Fused) {
        return Err(Error::UnsupportedMeasure(m));
    }
    let mut k_values = cfg.k_values.clone();
    k_values.sort_unstable();
    k_values.dedup();
    let mut jobs = Vec::new();
    let mut bases = Vec::new();
    for (p, input) in profiles.iter().enumerate() {
        let base = clique_instance(&input.profile)?;
        bases.push(cfg.measures.iter().map(|&m| singleton_h_index(&base, m)).collect::<Vec<_>>());
        for &measure in &cfg.measures {
            jobs.extend(k_values.iter().map(|&k| Job::Budget { profile: p, k, measure }));
        }
        for &measure in &cfg.measures {
            jobs.extend(cfg.t_values.iter().map(|&t| Job::Threshold { profile: p, t, measure }));
        }
    }
    let results: Vec<(Result<JobRows>, f64)> = jobs
        .par_iter()
        .map(|&job| {
            let start = Instant::now();
            let rows = run_job(job, profiles, cfg);
            let ms = if cfg.zero_runtimes {
                0.0
            } else {
                start.elapsed().as_secs_f64() * 1e3
            };
            (rows, ms)
        })
        .collect();

    let mut report = ExperimentReport::default();
    let mut carried_lower: Option<(usize, usize)> = None;
    for (job, (rows, ms)) in jobs.iter().zip(results) {
        let rows = rows?;
        let (p, variant, param, measure) = match *job {
            Job::Budget { profile, k, measure } => (profile, Variant::KSweep, k.to_string(), measure),
            Job::Threshold { profile, t, measure } => (profile, Variant::TSweep, t.to_string(), measure),
        };
        let mi = cfg.measures.iter().position(|&m| m == measure).expect("listed");
        for (kind, mut value) in rows {
            if kind == BoundKind::Lower {
                let key = p * cfg.measures.len() + mi;
                let prev = carried_lower.filter(|&(k, _)| k == key).map(|(_, v)| v);
                value = value.map(|v| v.max(prev.unwrap_or(0)));
                carried_lower = value.map(|v| (key, v)).or(carried_lower);
            }
            report.rows.push(ReportRow {
                profile: profiles[p].id.clone(),
                variant,
                param: param.clone(),
                measure: measure.name(),
                h_base: bases[p][mi],
                h_value: value,
                bound_kind: kind,
                runtime_ms: ms,
            });
        }
    }
    Ok(report)
}

impl ExperimentReport {
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(COLUMNS).map_err(csv_err)?;
        for r in &self.rows {
            w.write_record([
                r.profile.clone(),
                serde_plain(&r.variant),
                r.param.clone(),
                r.measure.to_string(),
                r.h_base.to_string(),
                r.h_value.map_or_else(String::new, |v| v.to_string()),
                serde_plain(&r.bound_kind),
                format!("{:.3}", r.runtime_ms),
            ])
            .map_err(csv_err)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("in-memory write");
        String::from_utf8(buf).expect("utf-8")
    }

    /// Box-plot statistics of `h_value − h_base` per (variant, param, measure, bound_kind),
    /// in first-appearance order. Rows without a value are skipped.
    pub fn summary(&self) -> Vec<SummaryRow> {
        let mut groups: Vec<(SummaryKey, Vec<f64>)> = Vec::new();
        for r in &self.rows {
            let Some(v) = r.h_value else { continue };
            let key = (r.variant, r.param.clone(), r.measure, r.bound_kind);
            let inc = v as f64 - r.h_base as f64;
            match groups.iter_mut().find(|(k, _)| *k == key) {
                Some((_, vals)) => vals.push(inc),
                None => groups.push((key, vec![inc])),
            }
        }
        groups
            .into_iter()
            .map(|((variant, param, measure, bound_kind), vals)| SummaryRow {
                variant,
                param,
                measure,
                bound_kind,
                count: vals.len(),
                stats: boxplot_stats(&vals).expect("groups are non-empty"),
            })
            .collect()
    }

    /// Summary CSV; the first line is a `#` comment naming the percentile method.
    pub fn write_summary_csv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "# increase = h_value - h_base; percentiles by linear interpolation between closest ranks")?;
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "variant", "param", "measure", "bound_kind", "count", "min", "p25", "median", "p75", "max",
        ])
        .map_err(csv_err)?;
        for s in self.summary() {
            let b = s.stats;
            let mut rec = vec![
                serde_plain(&s.variant),
                s.param,
                s.measure.to_string(),
                serde_plain(&s.bound_kind),
                s.count.to_string(),
            ];
            rec.extend([b.min, b.p25, b.median, b.p75, b.max].iter().map(|x| x.to_string()));
            w.write_record(rec).map_err(csv_err)?;
        }
        w.flush()?;
        Ok(())
    }
}

type SummaryKey = (Variant, String, &'static str, BoundKind);

#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub variant: Variant,
    pub param: String,
    pub measure: &'static str,
    pub bound_kind: BoundKind,
    pub count: usize,
    pub stats: BoxStats,
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

/// The serde name of a unit variant.
fn serde_plain<T: Serialize>(v: &T) -> String {
    match serde_json::to_value(v) {
        Ok(serde_json::Value::String(s)) => s,
        other => unreachable!("unit variant expected, got {other:?}"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoxStats {
    pub min: f64,
    pub p25: f64,
    pub median: f64,
    pub p75: f64,
    pub max: f64,
}

/// Quantile `q` of sorted data: position `q·(n−1)`, linear between neighbours.
fn quantile(sorted: &[f64], q: f64) -> f64 {
    let pos = q * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo as f64)
}

pub fn boxplot_stats(values: &[f64]) -> Result<BoxStats> {
    if values.is_empty() {
        return Err(Error::EmptyGroup);
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    Ok(BoxStats {
        min: v[0],
        p25: quantile(&v, 0.25),
        median: quantile(&v, 0.5),
        p75: quantile(&v, 0.75),
        max: v[v.len() - 1],
    })
}
