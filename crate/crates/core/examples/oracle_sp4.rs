//! Enumerates Sp4(q) by closing its generators and compares the order
//! histogram with the closed forms. q = 4 takes a few seconds; q = 8 has
//! about 1.1e9 elements and is out of reach.
//!
//! Usage: cargo run --release --example oracle_sp4

use num_bigint::BigUint;
use psp4::oracle::{enumerate_sp4, max_enum_from_env};
use psp4::sympl::nse_table;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = 4;
    let enumeration = enumerate_sp4(q, max_enum_from_env())?;
    let hist = enumeration.histogram();
    let table = nse_table(q)?;
    println!("{} elements", enumeration.size());
    for (r, count) in hist.counts() {
        let expected = table.counts.get(r).cloned().unwrap_or_default();
        let mark = if BigUint::from(*count) == expected { "ok" } else { "MISMATCH" };
        println!("{r:>3} {count:>7} {expected:>7} {mark}");
    }
    println!("power-count violations: {:?}", hist.power_count_violations());
    println!("multiples violations: {:?}", hist.multiples_violations());
    Ok(())
}
