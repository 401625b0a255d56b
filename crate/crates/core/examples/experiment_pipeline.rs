// Budget and threshold sweeps over synthetic profiles, as CSV.

use hindex_forge::compat::Threshold;
use hindex_forge::experiment::{run_experiment, ExperimentConfig, ProfileInput};
use hindex_forge::gadgets::{random_profile, CompatModel, RandomSpec};
use hindex_forge::io::IngestedProfile;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let profiles = (0..3)
        .map(|s| {
            Ok(ProfileInput {
                id: format!("author{s}"),
                profile: IngestedProfile::new(&random_profile(&RandomSpec::new(s, 10, 12, 0.25, CompatModel::Clique)))?,
            })
        })
        .collect::<hindex_forge::Result<Vec<_>>>()?;
    let cfg = ExperimentConfig {
        k_values: (1..=3).collect(),
        t_values: [0, 5, 9].iter().map(|&i| Threshold::tenths(i)).collect::<Result<_, _>>()?,
        zero_runtimes: true,
        ..Default::default()
    };
    let report = run_experiment(&profiles, &cfg)?;
    print!("{}", report.to_csv());
    report.write_summary_csv(std::io::stdout())?;
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
