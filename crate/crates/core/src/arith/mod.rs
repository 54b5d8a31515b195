//! Exact integer number theory backing every closed form in the crate.

mod catalan;
pub mod decimal;
mod cyclotomic;
mod factor;
mod functions;
mod predicates;

pub use catalan::{classify_catalan, search_catalan, CatalanKind, CatalanSolution};
pub use cyclotomic::{
    cyclotomic_eval, cyclotomic_eval_u64, twisted_cyclotomic_eval, twisted_cyclotomic_eval_u64,
    CyclotomicCache, TwistedTag,
};
pub use factor::{factorize, factorize_u64, is_prime, is_prime_u64, Factorization};
pub use functions::{
    dedekind_psi, dedekind_psi_u64, divisors, divisors_of, divisors_u64, euler_phi, euler_phi_u64,
    exact_sqrt, integer_root, is_prime_power, phi_of, prime_power, psi_of,
};
pub use predicates::{psp4_order_formula, q1_predicates, DivisibilityWitness, Q1Clause, Q1Predicates};

use crate::error::{Error, Result};

/// Largest supported extension degree; keeps q² + 1 inside a `u64`.
pub const MAX_F: u32 = 31;

/// Validates `q = 2^f` with `2 <= f <= MAX_F` and returns `f`.
pub fn check_q(q: u64) -> Result<u32> {
    if q.is_power_of_two() && q > 2 && q.trailing_zeros() <= MAX_F {
        Ok(q.trailing_zeros())
    } else {
        Err(Error::InvalidQ(q))
    }
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}
