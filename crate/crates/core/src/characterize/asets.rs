//! The nine value sets A1..A9 that partition nse(PSp4(q)).

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::arith::{check_q, dedekind_psi_u64, divisors_u64, euler_phi_u64};
use crate::error::{Error, Result};

/// `sets[i - 1]` holds A_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmcSets {
    pub q: u64,
    sets: [BTreeSet<BigUint>; 9],
}

impl AmcSets {
    /// A_i for 1 ≤ i ≤ 9.
    pub fn get(&self, i: usize) -> &BTreeSet<BigUint> {
        assert!((1..=9).contains(&i), "A-set index {i} out of range");
        &self.sets[i - 1]
    }

    pub fn union(&self) -> BTreeSet<BigUint> {
        self.sets.iter().flatten().cloned().collect()
    }

    /// Indices i with `value ∈ A_i`.
    pub fn indices_of(&self, value: &BigUint) -> Vec<usize> {
        (1..=9).filter(|&i| self.get(i).contains(value)).collect()
    }

    pub fn union_of(&self, indices: &[usize]) -> BTreeSet<BigUint> {
        indices.iter().flat_map(|&i| self.get(i).iter().cloned()).collect()
    }
}

fn nontrivial_divisors(n: u64) -> impl Iterator<Item = u64> {
    divisors_u64(n).into_iter().filter(|&d| d != 1)
}

fn to_count(v: BigRational) -> BigUint {
    assert!(v.is_integer() && v.is_positive(), "A-set value {v} is not a positive integer");
    v.to_integer().to_biguint().expect("positive")
}

pub fn build_a_sets(q: u64) -> Result<AmcSets> {
    check_q(q)?;
    let qb = BigInt::from(q);
    let q2 = &qb * &qb;
    let q3 = &q2 * &qb;
    let q4 = &q2 * &q2;
    let q4m1 = &q4 - 1;
    let q2m1: BigInt = &q2 - 1;
    let q2p1: BigInt = &q2 + 1;
    let phi = |n: u64| BigInt::from(euler_phi_u64(n));
    let int = |v: BigInt| v.to_biguint().ok_or(Error::InvalidQ(q));

    let torus = |r: u64, s: &BigInt| {
        let qs: BigInt = &qb * s;
        let bracket = BigRational::one() - BigRational::new(qs.clone(), BigInt::from(2))
            + BigRational::new(qs * BigInt::from(dedekind_psi_u64(r)), BigInt::from(8));
        to_count(BigRational::from_integer(phi(r) * &q3 * &q2p1 * s) * bracket)
    };

    let qp1: BigInt = &qb + 1;
    let qm1: BigInt = &qb - 1;
    let mut sets: [BTreeSet<BigUint>; 9] = Default::default();
    sets[0].insert(BigUint::one());
    sets[1].insert(int(&q2p1 * &q4m1)?);
    sets[2].insert(int(&q2 * &q2m1 * &q4m1)?);
    for r in nontrivial_divisors(q - 1) {
        sets[3].insert(torus(r, &qp1));
        sets[5].insert(int(phi(r) * &q3 * &qp1 * &q4m1)?);
    }
    for r in nontrivial_divisors(q + 1) {
        sets[4].insert(torus(r, &qm1));
        sets[6].insert(int(phi(r) * &q3 * &qm1 * &q4m1)?);
    }
    for r in nontrivial_divisors(q - 1) {
        for s in nontrivial_divisors(q + 1) {
            sets[7].insert(to_count(BigRational::new(phi(r) * phi(s) * &q4 * &q4m1, BigInt::from(2))));
        }
    }
    for r in nontrivial_divisors(q * q + 1) {
        sets[8].insert(to_count(BigRational::new(phi(r) * &q4 * &q2m1 * &q2m1, BigInt::from(4))));
    }
    Ok(AmcSets { q, sets })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sympl::nse_set;

    fn set(values: &[u64]) -> BTreeSet<BigUint> {
        values.iter().map(|&v| BigUint::from(v)).collect()
    }

    #[test]
    fn q4_values() {
        let a = build_a_sets(4).unwrap();
        assert_eq!(a.get(1), &set(&[1]));
        assert_eq!(a.get(2), &set(&[4335]));
        assert_eq!(a.get(3), &set(&[61_200]));
        assert_eq!(a.get(4), &set(&[10_880]));
        assert_eq!(a.get(5), &set(&[52_224]));
        assert_eq!(a.get(6), &set(&[163_200]));
        assert_eq!(a.get(7), &set(&[195_840]));
        assert_eq!(a.get(8), &set(&[261_120]));
        assert_eq!(a.get(9), &set(&[230_400]));
    }

    #[test]
    fn union_is_the_nse_set() {
        for q in [4u64, 8, 16, 32, 64, 256] {
            assert_eq!(build_a_sets(q).unwrap().union(), nse_set(q).unwrap(), "q = {q}");
        }
    }

    #[test]
    fn q8_a4_has_one_value() {
        assert_eq!(build_a_sets(8).unwrap().get(4).len(), 1);
    }
}
