// The six-article profile: three measures on the merged partition.

use hindex_forge::model::{fig1, fig1_merged, part_values, partition_h_index, singleton_h_index, Measure};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let inst = fig1();
    let merged = fig1_merged();
    for m in Measure::ALL {
        let values = part_values(inst.citations(), inst.own_mask(), &merged, m);
        println!(
            "{m:>5}: parts {:?} -> values {values:?}, H-index {} (unmerged {})",
            merged.parts(),
            partition_h_index(&inst, &merged, m),
            singleton_h_index(&inst, m)
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
