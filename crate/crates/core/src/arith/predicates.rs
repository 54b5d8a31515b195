//! Divisibility of the five auxiliary values 2q²+3, q²+2, 2q²+1, 3q²+2, q⁴-9
//! into q⁴(q⁴-1)(q²-1) for q a power of two.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::check_q;
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Q1Clause {
    /// 2q²+3
    TwoQSquaredPlusThree,
    /// q²+2
    QSquaredPlusTwo,
    /// 2q²+1
    TwoQSquaredPlusOne,
    /// 3q²+2
    ThreeQSquaredPlusTwo,
    /// q⁴-9
    QFourthMinusNine,
}

impl Q1Clause {
    pub const ALL: [Q1Clause; 5] = [
        Q1Clause::TwoQSquaredPlusThree,
        Q1Clause::QSquaredPlusTwo,
        Q1Clause::TwoQSquaredPlusOne,
        Q1Clause::ThreeQSquaredPlusTwo,
        Q1Clause::QFourthMinusNine,
    ];

    /// Roman numeral of the clause, (i) through (v).
    pub fn numeral(self) -> &'static str {
        match self {
            Q1Clause::TwoQSquaredPlusThree => "i",
            Q1Clause::QSquaredPlusTwo => "ii",
            Q1Clause::TwoQSquaredPlusOne => "iii",
            Q1Clause::ThreeQSquaredPlusTwo => "iv",
            Q1Clause::QFourthMinusNine => "v",
        }
    }

    pub fn expression(self) -> &'static str {
        match self {
            Q1Clause::TwoQSquaredPlusThree => "2q^2+3",
            Q1Clause::QSquaredPlusTwo => "q^2+2",
            Q1Clause::TwoQSquaredPlusOne => "2q^2+1",
            Q1Clause::ThreeQSquaredPlusTwo => "3q^2+2",
            Q1Clause::QFourthMinusNine => "q^4-9",
        }
    }

    pub fn value(self, q: u64) -> BigUint {
        let q2 = BigUint::from(q).pow(2);
        match self {
            Q1Clause::TwoQSquaredPlusThree => q2 * 2u32 + 3u32,
            Q1Clause::QSquaredPlusTwo => q2 + 2u32,
            Q1Clause::TwoQSquaredPlusOne => q2 * 2u32 + 1u32,
            Q1Clause::ThreeQSquaredPlusTwo => q2 * 3u32 + 2u32,
            Q1Clause::QFourthMinusNine => q2.pow(2) - 9u32,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityWitness {
    pub clause: Q1Clause,
    #[serde(with = "crate::arith::decimal")]
    pub divisor: BigUint,
    pub divides: bool,
    #[serde(with = "crate::arith::decimal")]
    pub quotient: BigUint,
    #[serde(with = "crate::arith::decimal")]
    pub remainder: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Q1Predicates {
    pub q: u64,
    /// q⁴(q⁴-1)(q²-1)
    #[serde(with = "crate::arith::decimal")]
    pub target: BigUint,
    pub clauses: Vec<DivisibilityWitness>,
}

impl Q1Predicates {
    pub fn clause(&self, clause: Q1Clause) -> &DivisibilityWitness {
        self.clauses
            .iter()
            .find(|w| w.clause == clause)
            .expect("all five clauses are present")
    }
}

pub fn psp4_order_formula(q: u64) -> BigUint {
    let q = BigUint::from(q);
    let q2 = q.pow(2);
    let q4 = q.pow(4);
    &q4 * (&q4 - 1u32) * (q2 - 1u32)
}

pub fn q1_predicates(q: u64) -> Result<Q1Predicates> {
    check_q(q)?;
    let target = psp4_order_formula(q);
    let clauses = Q1Clause::ALL
        .iter()
        .map(|&clause| {
            let divisor = clause.value(q);
            let (quotient, remainder) = target.div_rem(&divisor);
            DivisibilityWitness {
                clause,
                divides: remainder.is_zero(),
                divisor,
                quotient,
                remainder,
            }
        })
        .collect();
    Ok(Q1Predicates { q, target, clauses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn q4_clauses() {
        let p = q1_predicates(4).unwrap();
        assert_eq!(p.target, BigUint::from(979_200u32));
        let iv = p.clause(Q1Clause::ThreeQSquaredPlusTwo);
        assert_eq!(iv.divisor, BigUint::from(50u32));
        assert!(iv.divides);
        assert_eq!(iv.quotient, BigUint::from(19_584u32));
        let i = p.clause(Q1Clause::TwoQSquaredPlusThree);
        assert_eq!(i.divisor, BigUint::from(35u32));
        assert!(!i.divides);
        assert_eq!(i.remainder, BigUint::from(5u32));
    }

    #[test]
    fn q8_clause_ii_fails() {
        let p = q1_predicates(8).unwrap();
        assert!(!p.clause(Q1Clause::QSquaredPlusTwo).divides);
    }

    #[test]
    fn rejects_bad_q() {
        assert_eq!(q1_predicates(2), Err(Error::InvalidQ(2)));
        assert_eq!(q1_predicates(6), Err(Error::InvalidQ(6)));
    }
}
