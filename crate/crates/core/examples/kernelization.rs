// Reduction rules with their trace.

use hindex_forge::gadgets::{random_instance, CompatModel, RandomSpec};
use hindex_forge::kernel::{kernel_bound, kernelize};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let inst = random_instance(&RandomSpec::new(11, 10, 40, 0.15, CompatModel::Clique)).with_target(2);
    let out = kernelize(&inst)?;
    print!("{}", out.trace_text());
    match &out.reduced {
        Some(r) => println!(
            "{} -> {} articles, {} -> {} citations (bound {})",
            inst.n(),
            r.n(),
            inst.citations().arc_count(),
            r.citations().arc_count(),
            kernel_bound(2)
        ),
        None => println!("accepted: H-index 2 is reachable"),
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
