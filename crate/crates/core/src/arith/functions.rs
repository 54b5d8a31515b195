//! Divisors and the multiplicative functions φ (Euler) and ψ (Dedekind).

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use super::factor::{factorize, Factorization};

/// All divisors of `n >= 1` in ascending order.
pub fn divisors(n: &BigUint) -> Vec<BigUint> {
    divisors_of(&factorize(n))
}

pub fn divisors_of(f: &Factorization) -> Vec<BigUint> {
    let mut out = vec![BigUint::one()];
    for (p, e) in f.pairs() {
        let base = out.clone();
        let mut power = BigUint::one();
        for _ in 0..*e {
            power *= p;
            out.extend(base.iter().map(|d| d * &power));
        }
    }
    out.sort();
    out
}

pub fn divisors_u64(n: u64) -> Vec<u64> {
    divisors(&BigUint::from(n))
        .into_iter()
        .map(|d| d.to_u64().expect("divisor of a u64 fits in u64"))
        .collect()
}

/// φ(n) = n ∏_{p | n} (1 - 1/p).
pub fn euler_phi(n: &BigUint) -> BigUint {
    phi_of(&factorize(n))
}

pub fn phi_of(f: &Factorization) -> BigUint {
    f.pairs().iter().fold(BigUint::one(), |acc, (p, e)| {
        acc * p.pow(e - 1) * (p - 1u32)
    })
}

/// ψ(n) = n ∏_{p | n} (1 + 1/p).
pub fn dedekind_psi(n: &BigUint) -> BigUint {
    psi_of(&factorize(n))
}

pub fn psi_of(f: &Factorization) -> BigUint {
    f.pairs().iter().fold(BigUint::one(), |acc, (p, e)| {
        acc * p.pow(e - 1) * (p + 1u32)
    })
}

pub fn euler_phi_u64(n: u64) -> u64 {
    euler_phi(&BigUint::from(n)).to_u64().expect("φ(n) <= n")
}

pub fn dedekind_psi_u64(n: u64) -> BigUint {
    dedekind_psi(&BigUint::from(n))
}

/// Integer k-th root, rounded down.
pub fn integer_root(n: &BigUint, k: u32) -> BigUint {
    n.nth_root(k)
}

/// `Some(r)` when `n = r^2` exactly.
pub fn exact_sqrt(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// `Some((p, k))` when `n = p^k` for a prime `p` and `k >= 1`.
pub fn prime_power(n: &BigUint) -> Option<(BigUint, u32)> {
    if n <= &BigUint::one() {
        return None;
    }
    let f = factorize(n);
    match f.pairs() {
        [(p, e)] => Some((p.clone(), *e)),
        _ => None,
    }
}

pub fn is_prime_power(n: &BigUint) -> bool {
    prime_power(n).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_divisor_lists() {
        assert_eq!(divisors_u64(1), vec![1]);
        assert_eq!(divisors_u64(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors_u64(17), vec![1, 17]);
    }

    #[test]
    fn phi_and_psi_examples() {
        assert_eq!(euler_phi_u64(1), 1);
        assert_eq!(dedekind_psi_u64(1), BigUint::one());
        assert_eq!(euler_phi_u64(17), 16);
        assert_eq!(dedekind_psi_u64(17), BigUint::from(18u32));
        assert_eq!(euler_phi_u64(15), 8);
        assert_eq!(dedekind_psi_u64(6), BigUint::from(12u32));
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(&BigUint::from(243u32)), Some((BigUint::from(3u32), 5)));
        assert_eq!(prime_power(&BigUint::from(12u32)), None);
        assert_eq!(prime_power(&BigUint::one()), None);
        assert_eq!(exact_sqrt(&BigUint::from(50u32)), None);
        assert_eq!(exact_sqrt(&BigUint::from(49u32)), Some(BigUint::from(7u32)));
    }
}
