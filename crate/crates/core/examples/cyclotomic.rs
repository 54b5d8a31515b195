//! Cyclotomic values Φ_n(q) and the twisted factors of Φ_6 and Φ_12.

use psp4::arith::{cyclotomic_eval_u64, twisted_cyclotomic_eval_u64, TwistedTag};

fn main() {
    for q in [4u64, 8, 16] {
        let values: Vec<String> = [1, 2, 4, 6, 12]
            .iter()
            .map(|&n| format!("Phi{n}={}", cyclotomic_eval_u64(n, q)))
            .collect();
        println!("q = {q}: {}", values.join(" "));
    }
    // 3x is a square at x = 3^(2k+1), 2x at x = 2^(2k+1).
    for (tag, x) in [
        (TwistedTag::Phi6Plus, 27),
        (TwistedTag::Phi6Minus, 27),
        (TwistedTag::Phi12Plus, 8),
        (TwistedTag::Phi12Minus, 8),
        (TwistedTag::Phi12Plus, 4),
    ] {
        match twisted_cyclotomic_eval_u64(tag, x) {
            Some(v) => println!("{}({x}) = {v}", tag.label()),
            None => println!("{}({x}) is not integral", tag.label()),
        }
    }
}
