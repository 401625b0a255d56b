use hindex_forge::compat::Threshold;
use hindex_forge::experiment::boxplot_stats;
use hindex_forge::gadgets::{random_instance, random_profile, CompatModel, RandomSpec};
use hindex_forge::io::{parse_instance, write_instance, IngestedProfile};
use hindex_forge::kernel::{kernel_bound, kernelize, Verdict};
use hindex_forge::model::{complies, part_values, partition_h_index, singleton_h_index, Instance, Partition};
use hindex_forge::solver::{brute_force_with, clique_enum_max_h, decide, decide_manipulation, OracleLimits, SolverConfig};
use hindex_forge::Measure;
use proptest::prelude::*;

fn model() -> impl Strategy<Value = CompatModel> {
    prop_oneof![
        Just(CompatModel::Clique),
        Just(CompatModel::Edgeless),
        (1usize..5).prop_map(CompatModel::ComponentCap),
        (0u64..=10).prop_map(|i| CompatModel::Titles { threshold: Threshold::tenths(i).unwrap() }),
    ]
}

fn small_instance(max_own: usize) -> impl Strategy<Value = Instance> {
    (any::<u64>(), 1..=max_own, 0usize..6, 0.0f64..0.6, model())
        .prop_map(|(seed, own, ext, p, m)| random_instance(&RandomSpec::new(seed, own, ext, p, m)))
}

fn clique_instance() -> impl Strategy<Value = Instance> {
    (any::<u64>(), 1usize..=7, 0usize..10, 0.0f64..0.4)
        .prop_map(|(seed, own, ext, p)| random_instance(&RandomSpec::new(seed, own, ext, p, CompatModel::Clique)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn measures_ordered(inst in small_instance(7)) {
        let best = brute_force_with(&inst, Measure::Union, OracleLimits::default()).unwrap();
        for p in [Partition::singletons(inst.own()), best.witness] {
            prop_assert!(complies(inst.compat(), &p));
            let d = inst.citations();
            let sum = part_values(d, inst.own_mask(), &p, Measure::Sum);
            let union = part_values(d, inst.own_mask(), &p, Measure::Union);
            let fused = part_values(d, inst.own_mask(), &p, Measure::Fused);
            for i in 0..p.len() {
                prop_assert!(fused[i] <= union[i] && union[i] <= sum[i]);
            }
        }
    }

    #[test]
    fn solvers_match_oracle(inst in small_instance(7)) {
        let cfg = SolverConfig::default();
        for m in [Measure::Sum, Measure::Union] {
            let opt = brute_force_with(&inst, m, OracleLimits::default()).unwrap().best_h;
            prop_assert!(opt >= singleton_h_index(&inst, m));
            for h in [opt, opt + 1] {
                let r = decide_manipulation(&inst.clone().with_target(h), m, &cfg).unwrap();
                prop_assert_eq!(r.answer.is_yes(), h <= opt);
                if let Some(w) = r.witness {
                    prop_assert!(complies(inst.compat(), &w));
                    prop_assert!(partition_h_index(&inst, &w, m) >= h);
                }
            }
        }
    }

    #[test]
    fn clique_enum_matches_oracle(inst in small_instance(6)) {
        for m in Measure::ALL {
            let opt = brute_force_with(&inst, m, OracleLimits::default()).unwrap().best_h;
            let r = clique_enum_max_h(&inst, m, &SolverConfig::default());
            if let Ok(r) = r {
                prop_assert_eq!(format!("{:?}", r.answer), format!("Optimum({opt})"));
            }
        }
    }

    #[test]
    fn kernel_preserves_answer(inst in clique_instance(), h in 1usize..4) {
        let inst = inst.with_target(h);
        let out = kernelize(&inst).unwrap();
        let yes = decide(&inst, Measure::Sum, &SolverConfig::default()).unwrap().answer.is_yes();
        match out.verdict {
            Verdict::Accept => prop_assert!(yes),
            Verdict::Reduced => {
                let red = out.reduced.unwrap();
                prop_assert!(red.n() <= kernel_bound(h));
                let again = kernelize(&red).unwrap();
                if again.verdict == Verdict::Reduced {
                    prop_assert_eq!(again.reduced.as_ref(), Some(&red));
                }
                for m in [Measure::Sum, Measure::Union] {
                    let a = decide(&inst, m, &SolverConfig::default()).unwrap().answer.is_yes();
                    let b = decide(&red, m, &SolverConfig::default()).unwrap().answer.is_yes();
                    prop_assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn instance_json_roundtrip(inst in small_instance(8), h in 0usize..5, k in proptest::option::of(0usize..4)) {
        let inst = inst.with_target(h).with_budget(k);
        let text = write_instance(&inst);
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(&back, &inst);
        prop_assert_eq!(write_instance(&back), text);
    }

    #[test]
    fn compat_monotone_and_symmetric(seed in any::<u64>(), a in 0u64..=10, b in 0u64..=10) {
        let record = random_profile(&RandomSpec::new(seed, 8, 3, 0.2, CompatModel::Clique));
        let p = IngestedProfile::new(&record).unwrap();
        let (lo, hi) = (a.min(b), a.max(b));
        let g_lo = p.instance(Threshold::tenths(lo).unwrap()).unwrap();
        let g_hi = p.instance(Threshold::tenths(hi).unwrap()).unwrap();
        prop_assert!(g_lo.own_is_clique() || lo > 0);
        for (u, v) in g_hi.compat().edges() {
            prop_assert!(g_lo.compat().are_compatible(u, v));
            prop_assert!(g_hi.compat().are_compatible(v, u));
        }
    }

    #[test]
    fn boxplot_ordered(values in proptest::collection::vec(-50.0f64..50.0, 1..40)) {
        let s = boxplot_stats(&values).unwrap();
        prop_assert!(s.min <= s.p25 && s.p25 <= s.median && s.median <= s.p75 && s.p75 <= s.max);
        let mut sorted = values.clone();
        sorted.sort_by(f64::total_cmp);
        prop_assert_eq!((s.min, s.max), (sorted[0], sorted[sorted.len() - 1]));
    }

    #[test]
    fn generators_deterministic(seed in any::<u64>(), own in 1usize..8, m in model()) {
        let spec = RandomSpec::new(seed, own, 4, 0.3, m);
        prop_assert_eq!(random_instance(&spec), random_instance(&spec));
        prop_assert_eq!(random_profile(&spec), random_profile(&spec));
    }
}
