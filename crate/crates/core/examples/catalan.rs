//! Solutions of p^m = q^n + 1 in primes, classified.
//!
//! Usage: cargo run --example catalan -- [bound]

use psp4::arith::search_catalan;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let bound: u64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(1_000_000);
    for s in search_catalan(bound) {
        println!("{}^{} = {}^{} + 1  {:?}", s.p, s.m, s.q, s.n, s.kind);
    }
    Ok(())
}
