//! Command-line front end. Results go to stdout as JSON (CSV for
//! `experiment`), diagnostics to stderr.
//!
//! Exit codes: `0` done (or yes), `1` no-instance, `2` usage or input
//! error, `3` resource limit.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::compat::Threshold;
use crate::error::{Error, Result};
use crate::experiment::{run_experiment, ExperimentConfig, ProfileInput};
use crate::gadgets::{
    gen_1in3sat, gen_independent_set_cautious, gen_independent_set_improvement, gen_multicolored_clique, gen_square,
    parse_formula, parse_graph, random_instance, random_profile, CompatModel, RandomSpec, SatMode,
};
use crate::io::{parse_instance, parse_profile, partition_json, write_instance, write_profile, IngestedProfile};
use crate::kernel::{kernelize, Verdict};
use crate::model::{complies, merge_count, partition_h_index, singleton_h_index, Instance, Measure, Partition};
use crate::solver::{
    brute_force_decide, brute_force_with, cautious_bounds_ucites, clique_enum_decide, clique_enum_max_h,
    decide, decide_cautious_clique_scites, decide_improvement, decide_manipulation, max_h_index, Answer, OracleLimits,
    SolveResult, SolverConfig,
};

/// Overrides every generator seed when set.
pub const SEED_ENV: &str = "HINDEX_FORGE_SEED";

#[derive(Debug, Parser)]
#[command(name = "hindex-forge", version, about = "H-index manipulation by merging articles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether the target H-index is reachable (or, with --max, find the largest).
    Solve(SolveArgs),
    /// Decide whether any complying partition beats the unmerged H-index.
    Improve(InstanceArgs),
    /// Budgeted manipulation on a clique compatibility graph.
    Cautious(CautiousArgs),
    /// Apply the data reduction rules.
    Kernelize(KernelArgs),
    /// Build an instance from a publication profile and a title threshold.
    Compat(CompatArgs),
    /// Generate instances and profiles.
    Gen(GenArgs),
    /// Exhaustive ground truth for small instances.
    Oracle(OracleArgs),
    /// Budget and threshold sweeps over profiles; writes the report CSV.
    Experiment(ExperimentArgs),
}

#[derive(Debug, Args)]
struct InstanceArgs {
    /// Instance JSON file (`-` for stdin).
    #[arg(long)]
    instance: PathBuf,
    #[arg(long, default_value = "union")]
    measure: Measure,
    /// Overrides the instance's target.
    #[arg(long)]
    h: Option<usize>,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    timeout: Option<f64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SolverChoice {
    Auto,
    Dp,
    CliqueEnum,
    Cautious,
    Oracle,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[command(flatten)]
    common: InstanceArgs,
    /// Overrides the instance's merge budget.
    #[arg(long)]
    k: Option<usize>,
    /// Ignore any merge budget in the instance.
    #[arg(long, conflicts_with = "k")]
    no_budget: bool,
    #[arg(long, value_enum, default_value = "auto")]
    solver: SolverChoice,
    /// Report the largest reachable H-index instead of deciding the target.
    #[arg(long)]
    max: bool,
}

#[derive(Debug, Args)]
struct CautiousArgs {
    #[command(flatten)]
    common: InstanceArgs,
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Debug, Args)]
struct KernelArgs {
    #[arg(long)]
    instance: PathBuf,
    #[arg(long)]
    h: Option<usize>,
    /// Print the rule trace to stderr.
    #[arg(long)]
    explain: bool,
    /// Write the reduced instance here instead of embedding it in the output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CompatArgs {
    /// Profile JSON file.
    #[arg(long)]
    profile: PathBuf,
    #[arg(long, default_value = "0.5")]
    t: Threshold,
    /// Target written into the instance.
    #[arg(long, default_value_t = 0)]
    h: usize,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[command(flatten)]
    common: InstanceArgs,
    /// Oracle size cap (own articles enumerated).
    #[arg(long, default_value_t = OracleLimits::default().max_own)]
    max_own: usize,
    /// Report the optimum instead of deciding the target.
    #[arg(long)]
    max: bool,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[command(subcommand)]
    what: GenCommand,
    /// Output file (default stdout).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum McVariant {
    Cautious,
    Improvement,
}

#[derive(Debug, Subcommand)]
enum GenCommand {
    /// h² own articles cited once each, clique compatibility.
    Square {
        #[arg(long)]
        h: usize,
    },
    /// Seeded random instance.
    Random(RandomArgs),
    /// Random publication profile with synthetic titles.
    Profile(RandomArgs),
    /// Multicolored Clique reduction (graph file with `part` lines).
    Mcc {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "cautious")]
        variant: McVariant,
    },
    /// Independent Set reduction, budgeted variant.
    IsCautious {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        l: usize,
    },
    /// Independent Set reduction, improvement variant.
    IsImprovement {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        l: usize,
    },
    /// 1-in-3-SAT reduction (fused measure).
    Sat {
        #[arg(long)]
        formula: PathBuf,
        /// Allow small formulas when padding still fits.
        #[arg(long)]
        relaxed: bool,
        /// Use two disjoint copies of the formula.
        #[arg(long)]
        duplicate: bool,
        /// Unused extra variables.
        #[arg(long, default_value_t = 0)]
        dummies: usize,
    },
}

#[derive(Debug, Args)]
struct RandomArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 8)]
    own: usize,
    #[arg(long, default_value_t = 8)]
    ext: usize,
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    /// `clique`, `edgeless`, `cap:<c>`, or `titles:<t>`.
    #[arg(long, default_value = "clique")]
    compat: String,
    #[arg(long, default_value_t = 0)]
    h: usize,
}

#[derive(Debug, Args)]
struct ExperimentArgs {
    /// Profile JSON files; each file's stem is its id.
    #[arg(long, num_args = 1..)]
    profiles: Vec<PathBuf>,
    /// Add this many synthetic profiles.
    #[arg(long, default_value_t = 0)]
    synthetic: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Budgets, e.g. `1-12` or `1,2,4`.
    #[arg(long, default_value = "1-12")]
    k: String,
    /// Thresholds, comma separated.
    #[arg(long, default_value = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9")]
    t: String,
    #[arg(long, value_delimiter = ',', default_value = "sum,union")]
    measures: Vec<Measure>,
    /// Per-row time limit in seconds.
    #[arg(long, default_value_t = 3600.0)]
    timeout: f64,
    /// Write 0 for every runtime (byte-stable reports).
    #[arg(long)]
    zero_runtimes: bool,
    /// Report CSV (default stdout).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Box-plot summary CSV.
    #[arg(long)]
    summary: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
}

/// Runs the CLI with process stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI against the given writers and returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().ansi().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_resource_limit() {
                3
            } else {
                2
            }
        }
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }
}

fn load(args: &InstanceArgs) -> Result<Instance> {
    let inst = parse_instance(&read_input(&args.instance)?)?;
    Ok(match args.h {
        Some(h) => inst.with_target(h),
        None => inst,
    })
}

fn config(timeout: Option<f64>) -> SolverConfig {
    let cfg = SolverConfig::default();
    match timeout {
        Some(s) => cfg.with_time_limit(Duration::from_secs_f64(s.max(0.0))),
        None => cfg,
    }
}

fn emit(out: &mut dyn Write, v: &Value) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json"))?;
    Ok(())
}

/// Re-checks a witness: complying, within budget, reaching `h`.
fn verify(inst: &Instance, w: &Partition, measure: Measure, h: usize) -> Result<()> {
    w.check_covers(inst.own())?;
    let ok = complies(inst.compat(), w)
        && inst.budget.is_none_or(|k| merge_count(w) <= k)
        && partition_h_index(inst, w, measure) >= h;
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidPartition("solver witness failed re-validation".into()))
    }
}

fn answer_value(r: &SolveResult) -> Value {
    match r.answer {
        Answer::Yes => json!("yes"),
        Answer::No => json!("no"),
        Answer::Optimum(_) => json!("optimum"),
    }
}

fn report(inst: &Instance, measure: Measure, r: &SolveResult, h: usize, out: &mut dyn Write) -> Result<i32> {
    if let Some(w) = &r.witness {
        verify(inst, w, measure, h)?;
    }
    let mut v = json!({
        "answer": answer_value(r),
        "measure": measure.name(),
        "witness": r.witness.as_ref().map(partition_json),
        "stats": r.stats,
    });
    match r.answer {
        Answer::Optimum(best) => {
            v["h_index"] = json!(best);
            v["merges"] = json!(r.witness.as_ref().map(merge_count));
        }
        _ => v["h"] = json!(h),
    }
    emit(out, &v)?;
    Ok(if r.answer == Answer::No { 1 } else { 0 })
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Solve(a) => solve(a, out),
        Command::Improve(a) => {
            let inst = load(&a)?;
            let base = singleton_h_index(&inst, a.measure);
            let r = decide_improvement(&inst, a.measure, &config(a.timeout))?;
            let code = report(&inst.with_target(base + 1), a.measure, &r, base + 1, &mut *out)?;
            writeln!(err, "baseline H-index {base}")?;
            Ok(code)
        }
        Command::Cautious(a) => cautious(a, out),
        Command::Kernelize(a) => kernel(a, out, err),
        Command::Compat(a) => {
            let record = parse_profile(&read_input(&a.profile)?)?;
            let inst = IngestedProfile::new(&record)?.instance(a.t)?.with_target(a.h);
            write!(out, "{}", write_instance(&inst))?;
            Ok(0)
        }
        Command::Gen(a) => generate(a, out),
        Command::Oracle(a) => {
            let inst = load(&a.common)?;
            let limits = OracleLimits { max_own: a.max_own };
            let m = a.common.measure;
            let r = if a.max {
                let o = brute_force_with(&inst, m, limits)?;
                SolveResult {
                    answer: Answer::Optimum(o.best_h),
                    witness: Some(o.witness),
                    stats: crate::solver::SolveStats {
                        solver: "oracle",
                        nodes_explored: o.leaves,
                        ..Default::default()
                    },
                }
            } else {
                let w = brute_force_decide(&inst, m, inst.target, limits)?;
                SolveResult {
                    answer: Answer::from_bool(w.is_some()),
                    witness: w,
                    stats: crate::solver::SolveStats {
                        solver: "oracle",
                        ..Default::default()
                    },
                }
            };
            let h = match r.answer {
                Answer::Optimum(b) => b,
                _ => inst.target,
            };
            report(&inst, m, &r, h, out)
        }
        Command::Experiment(a) => experiment(a, out, err),
    }
}

fn solve(a: SolveArgs, out: &mut dyn Write) -> Result<i32> {
    let mut inst = load(&a.common)?;
    if a.no_budget {
        inst = inst.with_budget(None);
    } else if let Some(k) = a.k {
        inst = inst.with_budget(Some(k));
    }
    let m = a.common.measure;
    let cfg = config(a.common.timeout);
    let r = match (a.max, a.solver) {
        (true, SolverChoice::CliqueEnum) => clique_enum_max_h(&inst, m, &cfg)?,
        (true, SolverChoice::Oracle) => {
            let o = brute_force_with(&inst, m, OracleLimits::default())?;
            SolveResult {
                answer: Answer::Optimum(o.best_h),
                witness: Some(o.witness),
                stats: Default::default(),
            }
        }
        (true, _) => max_h_index(&inst, m, &cfg)?,
        (false, SolverChoice::Auto) => decide(&inst, m, &cfg)?,
        (false, SolverChoice::Dp) => decide_manipulation(&inst, m, &cfg)?,
        (false, SolverChoice::CliqueEnum) => clique_enum_decide(&inst, m, &cfg)?,
        (false, SolverChoice::Cautious) => decide_cautious_clique_scites(&inst, &cfg)?,
        (false, SolverChoice::Oracle) => {
            let w = brute_force_decide(&inst, m, inst.target, OracleLimits::default())?;
            SolveResult {
                answer: Answer::from_bool(w.is_some()),
                witness: w,
                stats: Default::default(),
            }
        }
    };
    let h = match r.answer {
        Answer::Optimum(b) => b,
        _ => inst.target,
    };
    report(&inst, m, &r, h, out)
}

fn cautious(a: CautiousArgs, out: &mut dyn Write) -> Result<i32> {
    let mut inst = load(&a.common)?;
    if let Some(k) = a.k {
        inst = inst.with_budget(Some(k));
    }
    let cfg = config(a.common.timeout);
    match a.common.measure {
        Measure::Sum => {
            let r = if a.common.h.is_some() {
                decide_cautious_clique_scites(&inst, &cfg)?
            } else {
                crate::solver::cautious_max_h(&inst, &cfg)?
            };
            let h = match r.answer {
                Answer::Optimum(b) => b,
                _ => inst.target,
            };
            report(&inst, Measure::Sum, &r, h, out)
        }
        Measure::Union => {
            let b = cautious_bounds_ucites(&inst, &cfg)?;
            verify(&inst, &b.lower_witness, Measure::Union, b.lower)?;
            emit(
                out,
                &json!({
                    "measure": "union",
                    "lower": b.lower,
                    "upper": b.upper,
                    "witness": partition_json(&b.lower_witness),
                }),
            )?;
            Ok(0)
        }
        m => Err(Error::UnsupportedMeasure(m)),
    }
}

fn kernel(a: KernelArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let mut inst = parse_instance(&read_input(&a.instance)?)?;
    if let Some(h) = a.h {
        inst = inst.with_target(h);
    }
    let k = kernelize(&inst)?;
    if a.explain {
        write!(err, "{}", k.trace_text())?;
    }
    let trace: Vec<String> = k.trace.iter().map(|s| s.to_string()).collect();
    let mut v = json!({
        "verdict": match k.verdict { Verdict::Accept => "accept", Verdict::Reduced => "reduced" },
        "n_before": inst.n(),
        "n_after": k.reduced.as_ref().map(Instance::n),
        "trace": trace,
    });
    if let Some(r) = &k.reduced {
        match &a.out {
            Some(path) => fs::write(path, write_instance(r))?,
            None => {
                v["instance"] = serde_json::from_str(&write_instance(r)).expect("own output parses");
            }
        }
    }
    emit(out, &v)?;
    Ok(0)
}

fn seed(given: u64) -> Result<u64> {
    match std::env::var(SEED_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::ParamOutOfRange(format!("{SEED_ENV}={s:?} is not an unsigned integer"))),
        Err(_) => Ok(given),
    }
}

fn compat_model(s: &str) -> Result<CompatModel> {
    let bad = || Error::ParamOutOfRange(format!("unknown compatibility model {s:?}"));
    Ok(match s.split_once(':') {
        None if s == "clique" => CompatModel::Clique,
        None if s == "edgeless" => CompatModel::Edgeless,
        Some(("cap", c)) => CompatModel::ComponentCap(c.parse().map_err(|_| bad())?),
        Some(("titles", t)) => CompatModel::Titles { threshold: t.parse()? },
        _ => return Err(bad()),
    })
}

fn random_spec(a: &RandomArgs) -> Result<RandomSpec> {
    if !(0.0..=1.0).contains(&a.p) {
        return Err(Error::ParamOutOfRange(format!("arc probability {} not in [0, 1]", a.p)));
    }
    Ok(RandomSpec::new(seed(a.seed)?, a.own, a.ext, a.p, compat_model(&a.compat)?))
}

fn generate(a: GenArgs, out: &mut dyn Write) -> Result<i32> {
    let text = match a.what {
        GenCommand::Square { h } => {
            if h == 0 {
                return Err(Error::ParamOutOfRange("h must be at least 1".into()));
            }
            write_instance(&gen_square(h))
        }
        GenCommand::Random(r) => write_instance(&random_instance(&random_spec(&r)?).with_target(r.h)),
        GenCommand::Profile(r) => write_profile(&random_profile(&random_spec(&r)?)),
        GenCommand::Mcc { graph, variant } => {
            let g = gen_multicolored_clique(&parse_graph(&read_input(&graph)?)?)?;
            write_instance(match variant {
                McVariant::Cautious => &g.cautious,
                McVariant::Improvement => &g.improvement,
            })
        }
        GenCommand::IsCautious { graph, l } => {
            write_instance(&gen_independent_set_cautious(&parse_graph(&read_input(&graph)?)?, l)?)
        }
        GenCommand::IsImprovement { graph, l } => {
            write_instance(&gen_independent_set_improvement(&parse_graph(&read_input(&graph)?)?, l)?)
        }
        GenCommand::Sat {
            formula,
            relaxed,
            duplicate,
            dummies,
        } => {
            let mut phi = parse_formula(&read_input(&formula)?)?;
            if duplicate {
                phi = phi.duplicate();
            }
            phi = phi.with_dummies(dummies);
            let mode = if relaxed { SatMode::Relaxed } else { SatMode::Strict };
            write_instance(&gen_1in3sat(&phi, mode)?)
        }
    };
    match a.out {
        Some(path) => fs::write(path, text)?,
        None => write!(out, "{text}")?,
    }
    Ok(0)
}

fn parse_k_list(s: &str) -> Result<Vec<usize>> {
    let bad = || Error::ParamOutOfRange(format!("bad budget list {s:?}"));
    let mut ks = Vec::new();
    for piece in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match piece.split_once('-') {
            Some((a, b)) => {
                let (a, b): (usize, usize) = (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
                ks.extend(a..=b);
            }
            None => ks.push(piece.parse().map_err(|_| bad())?),
        }
    }
    Ok(ks)
}

fn experiment(a: ExperimentArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let mut profiles = Vec::new();
    for path in &a.profiles {
        let record = parse_profile(&read_input(path)?)?;
        let id = path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
        profiles.push(ProfileInput {
            id,
            profile: IngestedProfile::new(&record)?,
        });
    }
    let base_seed = seed(a.seed)?;
    for i in 0..a.synthetic {
        let spec = RandomSpec::new(base_seed.wrapping_add(i as u64), 10, 12, 0.25, CompatModel::Clique);
        profiles.push(ProfileInput {
            id: format!("synthetic{i}"),
            profile: IngestedProfile::new(&random_profile(&spec))?,
        });
    }
    if profiles.is_empty() {
        return Err(Error::ParamOutOfRange("no profiles given (use --profiles or --synthetic)".into()));
    }
    let t_values = a
        .t
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(str::parse)
        .collect::<Result<Vec<Threshold>>>()?;
    let cfg = ExperimentConfig {
        k_values: parse_k_list(&a.k)?,
        t_values,
        measures: a.measures.clone(),
        row_time_limit: Duration::from_secs_f64(a.timeout.max(0.0)),
        zero_runtimes: a.zero_runtimes,
        solver: SolverConfig::default(),
    };
    let report = match a.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::ParamOutOfRange(e.to_string()))?
            .install(|| run_experiment(&profiles, &cfg))?,
        None => run_experiment(&profiles, &cfg)?,
    };
    match &a.out {
        Some(path) => report.write_csv(fs::File::create(path)?)?,
        None => report.write_csv(&mut *out)?,
    }
    if let Some(path) = &a.summary {
        report.write_summary_csv(fs::File::create(path)?)?;
    }
    writeln!(err, "{} rows from {} profiles", report.rows.len(), profiles.len())?;
    Ok(0)
}
