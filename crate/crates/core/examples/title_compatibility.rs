// Title overlap thresholds and how they shrink the compatibility graph.

use hindex_forge::compat::Threshold;
use hindex_forge::gadgets::{random_profile, CompatModel, RandomSpec};
use hindex_forge::io::IngestedProfile;
use hindex_forge::solver::{max_h_index, SolverConfig};
use hindex_forge::Measure;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let record = random_profile(&RandomSpec::new(21, 12, 15, 0.2, CompatModel::Clique));
    for a in record.articles.iter().take(4) {
        println!("{}: {:?}", a.key, a.title);
    }
    let profile = IngestedProfile::new(&record)?;
    for i in [0, 2, 4, 6, 8, 10] {
        let t = Threshold::tenths(i)?;
        let inst = profile.instance(t)?;
        let best = max_h_index(&inst, Measure::Union, &SolverConfig::default())?;
        println!("t = {t}: {} edges, max union H-index {:?}", inst.compat().edge_count(), best.answer);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
