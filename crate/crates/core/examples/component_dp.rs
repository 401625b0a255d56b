// Unbudgeted manipulation through the per-component subset DP.

use hindex_forge::gadgets::{random_instance, CompatModel, RandomSpec};
use hindex_forge::solver::{decide_manipulation, own_components, Answer, SolverConfig};
use hindex_forge::Measure;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let inst = random_instance(&RandomSpec::new(7, 12, 10, 0.2, CompatModel::ComponentCap(5)));
    let sizes: Vec<usize> = own_components(&inst).iter().map(Vec::len).collect();
    println!("component sizes {sizes:?}");
    let cfg = SolverConfig::default();
    for h in 1.. {
        let r = decide_manipulation(&inst.clone().with_target(h), Measure::Union, &cfg)?;
        println!("h = {h}: {:?} ({} table entries)", r.answer, r.stats.table_entries);
        if r.answer == Answer::No {
            break;
        }
        if let Some(w) = r.witness {
            println!("  witness {:?}", w.parts());
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
