//! Factors a few integers, including Fermat numbers and |PSp4(q)|.
//!
//! Usage: cargo run --example factorization -- [n ...]

use num_bigint::BigUint;
use psp4::arith::{euler_phi, factorize, is_prime};
use psp4::sympl::group_order;

fn show(n: &BigUint) {
    let f = factorize(n);
    let parts: Vec<String> = f
        .pairs()
        .iter()
        .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
        .collect();
    println!("{n} = {}  (prime: {}, phi = {})", parts.join(" * "), is_prime(n), euler_phi(n));
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<BigUint> = std::env::args().skip(1).map(|s| s.parse()).collect::<Result<_, _>>()?;
    if !args.is_empty() {
        args.iter().for_each(show);
        return Ok(());
    }
    for k in 5..=6u32 {
        show(&(BigUint::from(2u32).pow(1 << k) + 1u32));
    }
    for q in [4u64, 8, 64, 1024] {
        show(&group_order(q)?);
    }
    Ok(())
}
