//! Solutions of p^m = q^n + 1 in primes p, q.
//!
//! Every solution is the exceptional 9 = 8 + 1, a Fermat prime p = 2^n + 1
//! with n a power of two, or a Mersenne prime q = 2^m - 1 with m prime.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::factor::is_prime_u64;
use super::functions::prime_power;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CatalanKind {
    /// (p, q, m, n) = (3, 2, 2, 3)
    Exceptional,
    /// p = 2^n + 1 prime, n a power of 2
    Fermat,
    /// q = 2^m - 1 prime, m prime
    Mersenne,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CatalanSolution {
    pub p: u64,
    pub q: u64,
    pub m: u32,
    pub n: u32,
    pub kind: CatalanKind,
}

impl CatalanSolution {
    pub fn value(&self) -> BigUint {
        BigUint::from(self.p).pow(self.m)
    }
}

/// Classifies `(p, q, m, n)` when it solves `p^m = q^n + 1` in primes.
pub fn classify_catalan(p: u64, q: u64, m: u32, n: u32) -> Option<CatalanSolution> {
    if m == 0 || n == 0 || !is_prime_u64(p) || !is_prime_u64(q) {
        return None;
    }
    if BigUint::from(p).pow(m) != BigUint::from(q).pow(n) + 1u32 {
        return None;
    }
    let kind = if (p, q, m, n) == (3, 2, 2, 3) {
        CatalanKind::Exceptional
    } else if q == 2 && m == 1 && n.is_power_of_two() {
        CatalanKind::Fermat
    } else if p == 2 && n == 1 && is_prime_u64(m as u64) {
        CatalanKind::Mersenne
    } else {
        return None;
    };
    Some(CatalanSolution { p, q, m, n, kind })
}

/// All solutions with `p^m <= bound`, ordered by `p^m`.
///
/// Walks the prime powers `p^m <= bound` and asks whether `p^m - 1` is itself a
/// prime power.
pub fn search_catalan(bound: u64) -> Vec<CatalanSolution> {
    let mut out = Vec::new();
    if bound < 3 {
        return out;
    }
    for p in 2..=bound {
        if !is_prime_u64(p) {
            continue;
        }
        let mut value = p as u128;
        let mut m = 1u32;
        while value <= bound as u128 {
            if value >= 3 {
                let below = BigUint::from(value - 1);
                if let Some((q, n)) = prime_power(&below) {
                    let q = q.to_u64().expect("q < bound");
                    if let Some(sol) = classify_catalan(p, q, m, n) {
                        out.push(sol);
                    }
                }
            }
            value *= p as u128;
            m += 1;
        }
    }
    out.sort_by_key(|s| (s.value(), s.p));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_solutions() {
        assert_eq!(classify_catalan(3, 2, 2, 3).unwrap().kind, CatalanKind::Exceptional);
        assert_eq!(classify_catalan(17, 2, 1, 4).unwrap().kind, CatalanKind::Fermat);
        assert_eq!(classify_catalan(2, 7, 3, 1).unwrap().kind, CatalanKind::Mersenne);
        assert_eq!(classify_catalan(3, 2, 1, 1).unwrap().kind, CatalanKind::Fermat);
        assert!(classify_catalan(5, 2, 1, 2).is_some());
        assert!(classify_catalan(7, 2, 1, 2).is_none());
        assert!(classify_catalan(9, 2, 1, 3).is_none(), "9 is not prime");
    }

    #[test]
    fn small_search() {
        let found: Vec<(u64, u64, u32, u32)> =
            search_catalan(40).iter().map(|s| (s.p, s.q, s.m, s.n)).collect();
        assert_eq!(
            found,
            vec![(3, 2, 1, 1), (2, 3, 2, 1), (5, 2, 1, 2), (2, 7, 3, 1), (3, 2, 2, 3), (17, 2, 1, 4), (2, 31, 5, 1)]
        );
    }
}
