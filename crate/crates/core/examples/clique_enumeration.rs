// Minimal good cliques and their maximum disjoint packing.

use hindex_forge::gadgets::gen_square;
use hindex_forge::solver::{clique_enum_max_h, enumerate_minimal_good_cliques, max_disjoint_parts, SolverConfig};
use hindex_forge::Measure;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let inst = gen_square(3);
    let cfg = SolverConfig::default();
    let cands = enumerate_minimal_good_cliques(&inst, 3, Measure::Sum, &cfg)?;
    let pack = max_disjoint_parts(&cands);
    println!("{} minimal parts reaching 3 citations; {} fit disjointly", cands.len(), pack.count);
    for &i in &pack.chosen {
        println!("  {:?}", cands[i].members);
    }
    let best = clique_enum_max_h(&inst, Measure::Union, &cfg)?;
    println!("max union H-index {:?}", best.answer);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
