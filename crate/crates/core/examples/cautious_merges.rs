// Budgeted merging on a clique: exact for sum, bounds for union.

use hindex_forge::gadgets::{random_instance, CompatModel, RandomSpec};
use hindex_forge::model::merge_count;
use hindex_forge::solver::{cautious_bounds_ucites, cautious_max_h, SolverConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let inst = random_instance(&RandomSpec::new(3, 14, 20, 0.12, CompatModel::Clique));
    let cfg = SolverConfig::default();
    for k in 0..=4 {
        let budgeted = inst.clone().with_budget(Some(k));
        let sum = cautious_max_h(&budgeted, &cfg)?;
        let union = cautious_bounds_ucites(&budgeted, &cfg)?;
        println!(
            "k = {k}: sum {:?} using {} merges; union in [{}, {}]",
            sum.answer,
            sum.witness.as_ref().map_or(0, merge_count),
            union.lower,
            union.upper
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
