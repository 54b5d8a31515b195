use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::arith::divisors_u64;

/// Exact number of group elements of each order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderHistogram {
    counts: BTreeMap<u64, u64>,
}

impl OrderHistogram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_counts(counts: BTreeMap<u64, u64>) -> Self {
        OrderHistogram { counts }
    }

    pub fn record(&mut self, order: u64) {
        *self.counts.entry(order).or_insert(0) += 1;
    }

    pub fn merge(mut self, other: OrderHistogram) -> OrderHistogram {
        for (k, v) in other.counts {
            *self.counts.entry(k).or_insert(0) += v;
        }
        self
    }

    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    /// m_i: elements of order exactly `order`.
    pub fn count(&self, order: u64) -> u64 {
        self.counts.get(&order).copied().unwrap_or(0)
    }

    /// Group size.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// The set of element orders.
    pub fn spectrum(&self) -> Vec<u64> {
        self.counts.keys().copied().collect()
    }

    /// The set of distinct counts.
    pub fn nse_set(&self) -> BTreeSet<u64> {
        self.counts.values().copied().collect()
    }

    /// |G_n| = #{x : x^n = 1}.
    pub fn power_count(&self, n: u64) -> u64 {
        self.counts
            .iter()
            .filter(|(order, _)| n.is_multiple_of(**order))
            .map(|(_, c)| c)
            .sum()
    }

    /// Number of elements whose order is a multiple of `n`.
    pub fn multiples_count(&self, n: u64) -> u64 {
        self.counts
            .iter()
            .filter(|(order, _)| **order % n == 0)
            .map(|(_, c)| c)
            .sum()
    }

    pub fn counts_big(&self) -> BTreeMap<u64, BigUint> {
        self.counts.iter().map(|(k, v)| (*k, BigUint::from(*v))).collect()
    }

    /// Divisors n of the group order with n ∤ |G_n|. Empty for every finite group.
    pub fn power_count_violations(&self) -> Vec<u64> {
        let order = self.total();
        divisors_u64(order)
            .into_iter()
            .filter(|&n| !self.power_count(n).is_multiple_of(n))
            .collect()
    }

    /// Divisors n of the group order where the number of elements of order
    /// divisible by n is neither 0 nor a multiple of the largest divisor of
    /// |G| prime to n. Empty for every finite group.
    pub fn multiples_violations(&self) -> Vec<u64> {
        let order = self.total();
        divisors_u64(order)
            .into_iter()
            .filter(|&n| {
                let c = self.multiples_count(n);
                c != 0 && !c.is_multiple_of(coprime_part(order, n))
            })
            .collect()
    }
}

/// The largest divisor of `order` coprime to `n`.
fn coprime_part(mut order: u64, n: u64) -> u64 {
    loop {
        let g = num_integer::gcd(order, n);
        if g == 1 {
            return order;
        }
        order /= g;
    }
}
