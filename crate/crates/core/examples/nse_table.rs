//! Prints m_r(PSp4(q)) for every element order r, with the closed form used.
//!
//! Usage: cargo run --example nse_table -- [q]

use psp4::sympl::{classify_order, nse_table};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q: u64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(4);
    let table = nse_table(q)?;
    println!("|PSp4({q})| = {}", table.order);
    for (r, count) in &table.counts {
        println!("{r:>8} {:>5} {count}", classify_order(q, *r)?.numeral());
    }
    println!("sum = {} ({})", table.total(), if table.total() == table.order { "ok" } else { "MISMATCH" });
    println!("nse = {:?}", table.nse_set().iter().map(|v| v.to_string()).collect::<Vec<_>>());
    Ok(())
}
