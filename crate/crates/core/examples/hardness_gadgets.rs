// The hardness constructions, each checked against a brute-force answer.

use hindex_forge::gadgets::{
    gen_1in3sat, gen_independent_set_cautious, gen_multicolored_clique, has_independent_set,
    has_multicolored_clique, Formula1in3, PartitionedGraph, SatMode,
};
use hindex_forge::solver::{decide, SolverConfig};
use hindex_forge::Measure;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = SolverConfig::default();

    let h = PartitionedGraph::new(4, vec![(0, 2), (1, 3), (0, 3)], Some(vec![0, 0, 1, 1]))?;
    let mc = gen_multicolored_clique(&h)?;
    println!(
        "multicolored clique {}: cautious {:?}, improvement {:?}",
        has_multicolored_clique(&h)?,
        decide(&mc.cautious, Measure::Sum, &cfg)?.answer,
        decide(&mc.improvement, Measure::Sum, &cfg)?.answer
    );

    let path = PartitionedGraph::plain(4, vec![(0, 1), (1, 2), (2, 3)])?;
    let is = gen_independent_set_cautious(&path, 2)?;
    println!(
        "independent set of 2: {}; instance with {} articles answers {:?}",
        has_independent_set(&path, 2),
        is.n(),
        decide(&is, Measure::Union, &cfg)?.answer
    );

    let phi = Formula1in3::new(3, vec![[0, 1, 2]])?.with_dummies(2);
    let sat = gen_1in3sat(&phi, SatMode::Relaxed)?;
    println!(
        "1-in-3 satisfiable {}; {} own articles, target {}, fused answer {:?}",
        phi.is_1in3_satisfiable(),
        sat.own().len(),
        sat.target,
        decide(&sat, Measure::Fused, &cfg)?.answer
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
