//! Acceptance run: one PASS/FAIL line per criterion, each timed against its budget.
//!
//! Built with `harness = false`, so the lines show up in plain `cargo test` output.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hindex_forge::compat::Threshold;
use hindex_forge::experiment::{run_experiment, BoundKind, ExperimentConfig, ProfileInput, Variant};
use hindex_forge::gadgets::{
    gen_1in3sat, gen_independent_set_cautious, gen_independent_set_improvement, gen_multicolored_clique,
    gen_square, has_independent_set, has_multicolored_clique, random_instance, random_profile, CompatModel,
    Formula1in3, PartitionedGraph, RandomSpec, SatMode,
};
use hindex_forge::io::IngestedProfile;
use hindex_forge::kernel::{kernel_bound, kernelize, Verdict};
use hindex_forge::model::{fig1, fig1_merged, ids, mcites, scites, singleton_h_index, ucites, Instance, Measure};
use hindex_forge::solver::{
    brute_force_decide, brute_force_max_h, cautious_bounds_ucites, cautious_max_h, clique_enum_max_h, decide,
    decide_cautious_clique_scites, decide_manipulation, max_h_index, Answer, OracleLimits, SolverConfig,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn opt(a: Answer) -> usize {
    match a {
        Answer::Optimum(h) => h,
        other => panic!("expected an optimum, got {other:?}"),
    }
}

fn cfg() -> SolverConfig {
    SolverConfig::default()
}

fn oracle_yes(inst: &Instance, m: Measure, h: usize) -> bool {
    brute_force_decide(inst, m, h, OracleLimits::default())
        .expect("within oracle size")
        .is_some()
}

fn fig1_values() -> Check {
    let inst = fig1();
    let d = inst.citations();
    let p = fig1_merged();
    let got = [
        scites(d, &ids(&[3, 4])).unwrap(),
        ucites(d, &ids(&[3, 4])).unwrap(),
        ucites(d, &ids(&[5])).unwrap(),
        mcites(d, inst.own_mask(), &p, &ids(&[3, 4])).unwrap(),
        mcites(d, inst.own_mask(), &p, &ids(&[5])).unwrap(),
    ];
    ensure!(got == [3, 2, 2, 1, 1], "values {got:?}, expected [3, 2, 2, 1, 1]");
    Ok("sum 3, union 2/2, fused 1/1".into())
}

fn square_intro() -> Check {
    for h in 1..=3 {
        let sq = gen_square(h);
        for m in [Measure::Union, Measure::Sum] {
            let dp = opt(max_h_index(&sq, m, &cfg()).unwrap().answer);
            let ce = opt(clique_enum_max_h(&sq, m, &cfg()).unwrap().answer);
            let or = brute_force_max_h(&sq, m).unwrap();
            ensure!(dp == h && ce == h && or == h, "h={h} {m}: dp {dp}, clique-enum {ce}, oracle {or}");
        }
    }
    Ok("max H = h for h = 1, 2, 3 (dp, clique-enum, oracle)".into())
}

fn oracle_equivalence() -> Check {
    let mut checks = 0;
    for seed in 0..200u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = RandomSpec::new(
            seed,
            rng.gen_range(2..=8),
            rng.gen_range(0..=6),
            rng.gen_range(0.15..0.6),
            CompatModel::ComponentCap(4),
        );
        let inst = random_instance(&spec);
        for m in [Measure::Sum, Measure::Union] {
            let oracle = brute_force_max_h(&inst, m).unwrap();
            let ce = opt(clique_enum_max_h(&inst, m, &cfg()).unwrap().answer);
            ensure!(ce == oracle, "seed {seed} {m}: clique-enum {ce} vs oracle {oracle}");
            for h in 1..=5 {
                let dp = decide_manipulation(&inst.clone().with_target(h), m, &cfg()).unwrap().answer.is_yes();
                ensure!(dp == (oracle >= h), "seed {seed} {m} h={h}: dp {dp} vs oracle max {oracle}");
                checks += 1;
            }
        }
    }
    Ok(format!("200 instances, {checks} decisions agree"))
}

fn clique_instance(seed: u64, rng: &mut ChaCha8Rng, max_own: usize) -> Instance {
    random_instance(&RandomSpec::new(
        seed,
        rng.gen_range(2..=max_own),
        rng.gen_range(0..=12),
        rng.gen_range(0.03..0.4),
        CompatModel::Clique,
    ))
}

fn cautious_soundness() -> Check {
    for seed in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + seed);
        let base = clique_instance(1000 + seed, &mut rng, 8);
        for k in 0..=3 {
            let inst = base.clone().with_budget(Some(k));
            let sum = brute_force_max_h(&inst, Measure::Sum).unwrap();
            let dp = opt(cautious_max_h(&inst, &cfg()).unwrap().answer);
            ensure!(dp == sum, "seed {seed} k={k}: cautious {dp} vs oracle {sum}");
            for h in 1..=sum + 1 {
                let yes = decide_cautious_clique_scites(&inst.clone().with_target(h), &cfg()).unwrap().answer.is_yes();
                ensure!(yes == (h <= sum), "seed {seed} k={k} h={h}: decision {yes}, oracle max {sum}");
            }
            let union = brute_force_max_h(&inst, Measure::Union).unwrap();
            let b = cautious_bounds_ucites(&inst, &cfg()).unwrap();
            ensure!(
                b.lower <= union && union <= b.upper,
                "seed {seed} k={k}: bounds ({}, {}) miss oracle {union}",
                b.lower,
                b.upper
            );
        }
    }
    Ok("100 instances × k = 0..3".into())
}

fn kernel_contract() -> Check {
    let (mut accepted, mut reduced) = (0, 0);
    for seed in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(5000 + seed);
        let base = clique_instance(5000 + seed, &mut rng, 9);
        for h in 1..=3 {
            let inst = base.clone().with_target(h);
            let out = kernelize(&inst).map_err(|e| format!("seed {seed} h={h}: {e}"))?;
            for m in Measure::ALL {
                let want = oracle_yes(&inst, m, h);
                let got = match out.verdict {
                    Verdict::Accept => true,
                    Verdict::Reduced => oracle_yes(out.reduced.as_ref().unwrap(), m, h),
                };
                ensure!(got == want, "seed {seed} h={h} {m}: kernel {got} vs oracle {want}");
            }
            if let Some(r) = &out.reduced {
                ensure!(
                    r.n() <= inst.n() && r.citations().arc_count() <= inst.citations().arc_count(),
                    "seed {seed} h={h}: kernel grew the instance"
                );
                ensure!(r.n() <= kernel_bound(h), "seed {seed} h={h}: {} articles > bound {}", r.n(), kernel_bound(h));
                reduced += 1;
            } else {
                accepted += 1;
            }
        }
    }
    Ok(format!("{accepted} accepted, {reduced} reduced, all answers preserved"))
}

fn graph_from_mask(n: usize, mask: u64, classes: Option<Vec<usize>>) -> PartitionedGraph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    PartitionedGraph::new(n, edges, classes).unwrap()
}

/// Restricted-growth strings of length `n`: every class assignment up to renaming.
fn class_assignments(n: usize) -> Vec<Vec<usize>> {
    fn grow(cur: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let next = cur.iter().max().map_or(0, |&m| m + 1);
        for c in 0..=next {
            cur.push(c);
            grow(cur, n, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::new(), n, &mut out);
    out
}

fn check_mcc(g: &PartitionedGraph) -> std::result::Result<(), String> {
    let want = has_multicolored_clique(g).unwrap();
    let inst = gen_multicolored_clique(g).unwrap();
    let c = decide(&inst.cautious, Measure::Sum, &cfg()).unwrap().answer.is_yes();
    let i = decide(&inst.improvement, Measure::Sum, &cfg()).unwrap().answer.is_yes();
    let ell = inst.improvement.target;
    ensure!(
        singleton_h_index(&inst.improvement, Measure::Sum) == ell - 1,
        "baseline is not ℓ − 1 for {g:?}"
    );
    ensure!(c == want && i == want, "{g:?}: clique {want}, cautious {c}, improvement {i}");
    Ok(())
}

fn mcc_equivalence() -> std::result::Result<usize, String> {
    let mut count = 0;
    // Exhaustive over class assignments and cross-class edge sets up to 5 vertices.
    for n in 2..=5 {
        for classes in class_assignments(n).into_iter().filter(|c| c.contains(&1)) {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| classes[u] != classes[v])
                .collect();
            for mask in 0u64..1 << pairs.len() {
                let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
                check_mcc(&PartitionedGraph::new(n, edges, Some(classes.clone())).unwrap())?;
                count += 1;
            }
        }
    }
    // Six vertices: every class assignment, edge sets sampled by seed.
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for classes in class_assignments(6).into_iter().filter(|c| c.contains(&1)) {
        for _ in 0..12 {
            let p = rng.gen_range(0.3..1.0);
            let mut edges = Vec::new();
            for u in 0..6 {
                for v in u + 1..6 {
                    if classes[u] != classes[v] && rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            check_mcc(&PartitionedGraph::new(6, edges, Some(classes.clone())).unwrap())?;
            count += 1;
        }
    }
    Ok(count)
}

/// Smallest edge mask over all relabellings: one representative per isomorphism class.
fn canonical(n: usize, mask: u64) -> u64 {
    let g = graph_from_mask(n, mask, None);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |p| {
        let mut m = 0u64;
        for &(u, v) in &g.edges {
            let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
            // Bit index of (a, b) in row-major upper-triangle order.
            let idx = a * (2 * n - a - 1) / 2 + (b - a - 1);
            m |= 1 << idx;
        }
        best = best.min(m);
    });
    best
}

fn permute(p: &mut Vec<usize>, i: usize, f: &mut dyn FnMut(&[usize])) {
    if i == p.len() {
        f(p);
        return;
    }
    for j in i..p.len() {
        p.swap(i, j);
        permute(p, i + 1, f);
        p.swap(i, j);
    }
}

fn has_isolated_vertex(g: &PartitionedGraph) -> bool {
    (0..g.n).any(|v| g.edges.iter().all(|&(a, b)| a != v && b != v))
}

struct IsCounts {
    cautious: usize,
    improvement: usize,
    /// Improvement cases on graphs with an isolated vertex (one direction checked).
    isolated: usize,
    /// Of those, independent set present but manipulation impossible.
    gaps: usize,
}

fn is_equivalence() -> std::result::Result<IsCounts, String> {
    let (mut cautious, mut improvement, mut isolated, mut gaps) = (0, 0, 0, 0);
    for n in 1..=5 {
        let total = n * (n - 1) / 2;
        let mut seen = BTreeSet::new();
        for mask in 0u64..1 << total {
            let g = graph_from_mask(n, mask, None);
            for ell in 2..n {
                let want = has_independent_set(&g, ell);
                let inst = gen_independent_set_cautious(&g, ell).unwrap();
                for m in [Measure::Union, Measure::Fused] {
                    let got = decide(&inst, m, &cfg()).unwrap().answer.is_yes();
                    ensure!(got == want, "cautious {g:?} ℓ={ell} {m}: {got} vs {want}");
                }
                cautious += 1;
            }
            // The improvement instance has |V(H)| + ℓ free articles; one graph per isomorphism class.
            if !seen.insert(canonical(n, mask)) {
                continue;
            }
            for ell in 3..g.edges.len().min(n + 1) {
                let want = has_independent_set(&g, ell);
                let inst = gen_independent_set_improvement(&g, ell).unwrap();
                ensure!(
                    singleton_h_index(&inst, Measure::Union) == g.edges.len() - 1,
                    "improvement baseline for {g:?}"
                );
                let union = decide(&inst, Measure::Union, &cfg()).unwrap().answer.is_yes();
                let fused = oracle_yes(&inst, Measure::Fused, inst.target);
                ensure!(union == fused, "improvement {g:?} ℓ={ell}: union {union} but fused {fused}");
                if has_isolated_vertex(&g) {
                    // An isolated vertex in the independent set gains nothing from
                    // its W₋₁ partner, so only "manipulation yes ⇒ IS yes" holds.
                    ensure!(!union || want, "improvement {g:?} ℓ={ell}: yes without an independent set");
                    isolated += 1;
                    gaps += usize::from(want && !union);
                } else {
                    ensure!(union == want, "improvement {g:?} ℓ={ell}: manipulation {union}, IS {want}");
                    improvement += 1;
                }
            }
        }
    }
    Ok(IsCounts {
        cautious,
        improvement,
        isolated,
        gaps,
    })
}

/// `(x1 ∨ x2 ∨ x3)` with 1–4 unused variables: 11 to 17 gadget pairs.
fn sat_suite() -> Vec<Formula1in3> {
    let base = Formula1in3::new(3, vec![[0, 1, 2]]).unwrap();
    (1..=4).map(|d| base.with_dummies(d)).collect()
}

fn sat_equivalence() -> std::result::Result<usize, String> {
    for phi in sat_suite() {
        ensure!(phi.gadget_pairs() <= 17, "suite formula too large");
        let inst = gen_1in3sat(&phi, SatMode::Relaxed).unwrap();
        let got = decide(&inst, Measure::Fused, &cfg()).unwrap().answer.is_yes();
        let want = phi.is_1in3_satisfiable();
        ensure!(got == want, "{phi:?}: manipulation {got}, 1-in-3 {want}");
    }
    Ok(sat_suite().len())
}

fn reduction_equivalence() -> Check {
    let mcc = mcc_equivalence()?;
    let is = is_equivalence()?;
    let sat = sat_equivalence()?;
    Ok(format!(
        "MCC {mcc} graphs, IS cautious {}, IS improvement {} without isolated vertices \
         (+{} with, {} one-directional gaps), 1-in-3 {sat} formulas",
        is.cautious, is.improvement, is.isolated, is.gaps
    ))
}

fn random_formula(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Option<Formula1in3> {
    let mut clauses = Vec::new();
    let mut occ = vec![0; n];
    for _ in 0..m * 20 {
        if clauses.len() == m {
            break;
        }
        let mut c = [rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)];
        c.sort_unstable();
        if c[0] == c[1] || c[1] == c[2] || c.iter().any(|&x| occ[x] == 3) {
            continue;
        }
        c.iter().for_each(|&x| occ[x] += 1);
        clauses.push(c);
    }
    (clauses.len() == m).then(|| Formula1in3::new(n, clauses).unwrap())
}

fn sat_structure() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut outputs: Vec<(Instance, usize)> = Vec::new();
    for phi in sat_suite() {
        outputs.push((gen_1in3sat(&phi, SatMode::Relaxed).unwrap(), phi.n_vars + phi.clauses.len()));
    }
    for _ in 0..60 {
        let n = rng.gen_range(3..=30);
        let m = rng.gen_range(1..=n);
        let Some(phi) = random_formula(&mut rng, n, m) else { continue };
        let phi = if (n + m) % 2 == 1 { phi.duplicate() } else { phi };
        let h = phi.n_vars + phi.clauses.len();
        let mode = if h / 2 >= 18 { SatMode::Strict } else { SatMode::Relaxed };
        if let Ok(inst) = gen_1in3sat(&phi, mode) {
            outputs.push((inst, h));
        } else {
            ensure!(mode == SatMode::Relaxed, "strict mode failed on {phi:?}");
        }
    }
    for (inst, h) in &outputs {
        ensure!(inst.citations().is_acyclic(), "cyclic output for h={h}");
        ensure!(inst.own_compat().connected_components().iter().all(|c| c.len() <= 2), "component > 2");
        for m in Measure::ALL {
            ensure!(singleton_h_index(inst, m) == h - 1, "singleton {m} H-index is not h − 1 for h={h}");
        }
    }
    Ok(format!("{} generated instances", outputs.len()))
}

fn sweeps() -> Check {
    let profiles: Vec<ProfileInput> = (0..20u64)
        .map(|s| ProfileInput {
            id: format!("synthetic{s}"),
            profile: IngestedProfile::new(&random_profile(&RandomSpec::new(900 + s, 10, 12, 0.25, CompatModel::Clique)))
                .unwrap(),
        })
        .collect();
    let cfg_e = ExperimentConfig {
        k_values: (0..=6).collect(),
        t_values: (0..=10).map(|i| Threshold::tenths(i).unwrap()).collect(),
        zero_runtimes: true,
        ..Default::default()
    };
    let report = run_experiment(&profiles, &cfg_e).map_err(|e| e.to_string())?;
    ensure!(report.rows.iter().all(|r| r.h_value.is_some()), "some rows timed out");
    for p in &profiles {
        for m in ["sum", "union"] {
            let col = |variant, kind| -> Vec<usize> {
                report
                    .rows
                    .iter()
                    .filter(|r| r.profile == p.id && r.measure == m && r.variant == variant && r.bound_kind == kind)
                    .map(|r| r.h_value.unwrap())
                    .collect()
            };
            for kind in [BoundKind::Exact, BoundKind::Lower, BoundKind::Upper] {
                let k = col(Variant::KSweep, kind);
                ensure!(k.windows(2).all(|w| w[0] <= w[1]), "{} {m} {kind:?}: k-sweep {k:?}", p.id);
            }
            let t = col(Variant::TSweep, BoundKind::Exact);
            ensure!(t.windows(2).all(|w| w[0] >= w[1]), "{} {m}: t-sweep {t:?}", p.id);
            let measure: Measure = m.parse().unwrap();
            let clique = p.profile.instance(Threshold::ZERO).unwrap();
            let best = opt(max_h_index(&clique, measure, &cfg()).unwrap().answer);
            ensure!(t[0] == best, "{} {m}: t=0 gives {}, clique optimum {best}", p.id, t[0]);
        }
    }
    Ok(format!("20 profiles, {} rows", report.rows.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check, Option<Duration>); 8] = [
        ("fig1 measure values", fig1_values, Some(Duration::from_millis(1))),
        ("square profile optimum", square_intro, Some(Duration::from_secs(1))),
        ("oracle equivalence", oracle_equivalence, Some(Duration::from_secs(60))),
        ("cautious soundness", cautious_soundness, Some(Duration::from_secs(60))),
        ("kernel contract", kernel_contract, Some(Duration::from_secs(120))),
        ("reduction equivalence", reduction_equivalence, Some(Duration::from_secs(600))),
        ("1-in-3 gadget structure", sat_structure, None),
        ("monotone sweeps", sweeps, None),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let verdict = match (&result, budget) {
            (Err(e), _) => Err(e.clone()),
            (Ok(_), Some(b)) if elapsed > *b => Err(format!("took {elapsed:.2?}, budget {b:?}")),
            (Ok(msg), _) => Ok(msg.clone()),
        };
        match verdict {
            Ok(msg) => println!("criterion {}: PASS {name} ({msg}; {elapsed:.2?})", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({msg}; {elapsed:.2?})", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
