//! Integer factorization: trial division by the primes below 10^6, then
//! Brent's variant of Pollard's rho on whatever cofactor remains.
//!
//! Primality is deterministic Miller-Rabin below 2^64 (the first twelve prime
//! bases suffice there). Above 2^64 the test is probabilistic: 64 rounds with
//! bases drawn from a fixed-seed ChaCha stream, so results are reproducible.

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TRIAL_LIMIT: u32 = 1_000_000;
const DETERMINISTIC_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const PROBABILISTIC_ROUNDS: usize = 64;
const RNG_SEED: u64 = 0x5053_7034_2e6e_7365;

/// Prime factorization `n = p1^e1 * ... * pk^ek` with `p1 < ... < pk`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Factorization {
    pairs: Vec<(BigUint, u32)>,
}

impl Factorization {
    /// Builds a factorization from prime/exponent pairs in any order; repeated
    /// primes are merged and zero exponents dropped.
    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (BigUint, u32)>,
    {
        let mut pairs: Vec<(BigUint, u32)> = pairs.into_iter().filter(|(_, e)| *e > 0).collect();
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(BigUint, u32)> = Vec::with_capacity(pairs.len());
        for (p, e) in pairs {
            match merged.last_mut() {
                Some((last, exp)) if *last == p => *exp += e,
                _ => merged.push((p, e)),
            }
        }
        Factorization { pairs: merged }
    }

    pub fn pairs(&self) -> &[(BigUint, u32)] {
        &self.pairs
    }

    /// The prime support, π(n).
    pub fn primes(&self) -> impl Iterator<Item = &BigUint> + '_ {
        self.pairs.iter().map(|(p, _)| p)
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    /// Multiplies the factorization back out.
    pub fn value(&self) -> BigUint {
        self.pairs
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e))
    }

    /// Exponent of `p` in the factorization (zero when absent).
    pub fn exponent_of(&self, p: &BigUint) -> u32 {
        self.pairs
            .binary_search_by(|(q, _)| q.cmp(p))
            .map(|i| self.pairs[i].1)
            .unwrap_or(0)
    }

    /// Primes as `u64`, for callers that know the support is small.
    pub fn primes_u64(&self) -> Vec<u64> {
        self.primes()
            .map(|p| p.to_u64().expect("prime does not fit in u64"))
            .collect()
    }
}

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let limit = TRIAL_LIMIT as usize;
        let mut composite = vec![false; limit + 1];
        let mut primes = Vec::new();
        for i in 2..=limit {
            if !composite[i] {
                primes.push(i as u32);
                let mut j = i * i;
                while j <= limit {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        primes
    })
}

/// Factors `n >= 1`; `factorize(1)` is the empty factorization.
pub fn factorize(n: &BigUint) -> Factorization {
    assert!(!n.is_zero(), "factorize requires n >= 1");
    let mut rest = n.clone();
    let mut pairs: Vec<(BigUint, u32)> = Vec::new();

    for &p in small_primes() {
        let p_big = BigUint::from(p);
        if &p_big * &p_big > rest {
            break;
        }
        let mut e = 0;
        loop {
            let (quot, rem) = rest.div_rem(&p_big);
            if !rem.is_zero() {
                break;
            }
            rest = quot;
            e += 1;
        }
        if e > 0 {
            pairs.push((p_big, e));
        }
    }

    if !rest.is_one() {
        let mut stack = vec![rest];
        while let Some(m) = stack.pop() {
            if m.is_one() {
                continue;
            }
            if is_prime(&m) {
                pairs.push((m, 1));
                continue;
            }
            let d = brent_rho(&m);
            let other = &m / &d;
            stack.push(d);
            stack.push(other);
        }
    }

    Factorization::from_pairs(pairs)
}

pub fn factorize_u64(n: u64) -> Factorization {
    factorize(&BigUint::from(n))
}

/// Miller-Rabin primality test. Deterministic below 2^64.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if n.is_even() {
        return false;
    }
    for &p in small_primes().iter().take(200) {
        if (n % p).is_zero() {
            return false;
        }
    }
    let n_minus_one = n - 1u32;
    let mut rng = ChaCha8Rng::seed_from_u64(RNG_SEED);
    let span = n - 3u32;
    (0..PROBABILISTIC_ROUNDS).all(|_| {
        // Base uniform-ish in [2, n-2]: a random 128-bit value reduced mod n-3.
        let raw = BigUint::from(rng.gen::<u128>());
        let base = raw % &span + 2u32;
        miller_rabin_round(n, &n_minus_one, &base)
    })
}

fn miller_rabin_round(n: &BigUint, n_minus_one: &BigUint, base: &BigUint) -> bool {
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = n_minus_one >> s;
    let mut x = base.modpow(&d, n);
    if x.is_one() || &x == n_minus_one {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if &x == n_minus_one {
            return true;
        }
    }
    false
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &DETERMINISTIC_BASES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &DETERMINISTIC_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Finds a nontrivial divisor of the odd composite `n`.
fn brent_rho(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let step = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut g = one.clone();
        let mut r: u64 = 1;
        let mut q = one.clone();
        let batch: u64 = 128;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..batch.min(r - k) {
                    y = step(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += batch;
            }
            r *= 2;
        }
        if &g == n {
            // Batched product collapsed; backtrack one step at a time.
            loop {
                ys = step(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
        c += 1u32;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(n: u64) -> Vec<(u64, u32)> {
        factorize_u64(n)
            .pairs()
            .iter()
            .map(|(p, e)| (p.to_u64().unwrap(), *e))
            .collect()
    }

    #[test]
    fn one_is_the_empty_product() {
        assert!(factorize_u64(1).is_empty());
        assert_eq!(factorize_u64(1).value(), BigUint::one());
    }

    #[test]
    fn order_of_psp4_4() {
        assert_eq!(pairs(979_200), vec![(2, 8), (3, 2), (5, 2), (17, 1)]);
        assert_eq!(pairs(65), vec![(5, 1), (13, 1)]);
    }

    #[test]
    fn rho_splits_products_of_large_primes() {
        // 1000003 * 1000033 and a 2^64-sized semiprime both bypass trial division.
        assert_eq!(pairs(1_000_003 * 1_000_033), vec![(1_000_003, 1), (1_000_033, 1)]);
        let p = BigUint::from(4_294_967_311u64);
        let q = BigUint::from(4_294_967_357u64);
        let n = &p * &q * &p;
        let f = factorize(&n);
        assert_eq!(f.pairs(), &[(p.clone(), 2), (q.clone(), 1)]);
    }

    #[test]
    fn big_mersenne_prime_is_prime() {
        let m127 = (BigUint::one() << 127u32) - 1u32;
        assert!(is_prime(&m127));
        let composite = (BigUint::one() << 128u32) + 1u32; // F7, composite
        assert!(!is_prime(&composite));
    }

    #[test]
    fn fermat_number_f6_factors() {
        let f6 = (BigUint::one() << 64u32) + 1u32;
        let f = factorize(&f6);
        assert_eq!(f.value(), f6);
        assert_eq!(f.primes_u64(), vec![274_177, 67_280_421_310_721]);
    }

    #[test]
    fn deterministic_bases_catch_strong_pseudoprimes() {
        assert!(!is_prime_u64(3_215_031_751));
        assert!(!is_prime_u64(3_825_123_056_546_413_051));
        assert!(is_prime_u64(18_446_744_073_709_551_557));
    }
}
