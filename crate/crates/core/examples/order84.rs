//! Two permutation groups of order 84 with the same nse set but different
//! element orders: same-order counts alone do not determine a group.

use psp4::oracle::{order84_g, order84_h, perm_nse};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, spec) in [("G", order84_g()?), ("H", order84_h()?)] {
        let hist = perm_nse(&spec)?;
        println!("{name}: {:?}", hist.counts());
        println!("   nse = {:?}, |{name}_3| = {}", hist.nse_set(), hist.power_count(3));
    }
    Ok(())
}
