//! Conjugacy classes of PSp4(q) as CSV, followed by a per-family summary.
//!
//! Usage: cargo run --example class_table -- [q]

use std::collections::BTreeMap;

use psp4::sympl::{class_table, class_table_csv};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q: u64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(4);
    let table = class_table(q)?;
    print!("{}", class_table_csv(&table));
    let mut per_family = BTreeMap::new();
    for c in &table {
        *per_family.entry(c.family).or_insert(0u64) += 1;
    }
    for (family, n) in per_family {
        println!("# {family}: {n} classes (expected {})", family.class_count(q));
    }
    Ok(())
}
