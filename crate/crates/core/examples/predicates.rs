//! Which of 2q²+3, q²+2, 2q²+1, 3q²+2, q⁴-9 divide q⁴(q⁴-1)(q²-1).
//!
//! Usage: cargo run --example predicates -- [max_f]

use psp4::arith::q1_predicates;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max_f: u32 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(10);
    for f in 2..=max_f {
        let q = 1u64 << f;
        let row: Vec<String> = q1_predicates(q)?
            .clauses
            .iter()
            .map(|w| format!("{}:{}", w.clause.expression(), if w.divides { "divides" } else { "no" }))
            .collect();
        println!("q = {q:>5}  {}", row.join("  "));
    }
    Ok(())
}
