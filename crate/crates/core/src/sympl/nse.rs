//! Closed forms for m_r(PSp4(q)), the number of elements of order r.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint};
use num_integer::gcd;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::{group_order, spectrum};
use crate::arith::{check_q, dedekind_psi_u64, divisors_u64, euler_phi_u64};
use crate::error::{Error, Result};

/// Which closed form produced a count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NseClause {
    /// r = 1
    Identity,
    /// r = 2
    Involutions,
    /// r = 4
    OrderFour,
    /// 1 ≠ r | q - 1
    SplitTorus,
    /// 1 ≠ r | q + 1
    NonsplitTorus,
    /// 2r with 1 ≠ r | q - 1
    TwiceSplit,
    /// 2r with 1 ≠ r | q + 1
    TwiceNonsplit,
    /// r s with 1 ≠ r | q - 1, 1 ≠ s | q + 1
    Mixed,
    /// 1 ≠ r | q² + 1
    Anisotropic,
}

impl NseClause {
    pub fn numeral(self) -> &'static str {
        match self {
            NseClause::Identity => "-",
            NseClause::Involutions => "i",
            NseClause::OrderFour => "ii",
            NseClause::SplitTorus => "iii",
            NseClause::NonsplitTorus => "iv",
            NseClause::TwiceSplit => "v",
            NseClause::TwiceNonsplit => "vi",
            NseClause::Mixed => "vii",
            NseClause::Anisotropic => "viii",
        }
    }
}

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

fn rational(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

fn into_count(value: BigRational, q: u64, r: u64) -> BigUint {
    assert!(value.is_integer(), "m_{r}(PSp4({q})) evaluated to the non-integer {value}");
    assert!(value.is_positive(), "m_{r}(PSp4({q})) must be positive");
    value.to_integer().to_biguint().expect("positive")
}

/// Splits `r` into its clause and evaluates the matching closed form.
pub fn classify_order(q: u64, r: u64) -> Result<NseClause> {
    check_q(q)?;
    let q2p1 = q * q + 1;
    let clause = match r {
        1 => NseClause::Identity,
        2 => NseClause::Involutions,
        4 => NseClause::OrderFour,
        _ if r % 2 == 1 && q2p1.is_multiple_of(r) => NseClause::Anisotropic,
        _ if r % 2 == 1 => {
            // q - 1 and q + 1 are coprime, so r = r₋ r₊ uniquely.
            let minus = gcd(r, q - 1);
            let plus = gcd(r, q + 1);
            if minus * plus != r {
                return Err(Error::NotInSpectrum { q, order: r });
            }
            match (minus, plus) {
                (_, 1) => NseClause::SplitTorus,
                (1, _) => NseClause::NonsplitTorus,
                _ => NseClause::Mixed,
            }
        }
        _ if r % 4 == 2 && (q - 1).is_multiple_of(r / 2) => NseClause::TwiceSplit,
        _ if r % 4 == 2 && (q + 1).is_multiple_of(r / 2) => NseClause::TwiceNonsplit,
        _ => return Err(Error::NotInSpectrum { q, order: r }),
    };
    Ok(clause)
}

/// m_r(PSp4(q)) for r in the spectrum.
pub fn m_of_order(q: u64, r: u64) -> Result<BigUint> {
    let clause = classify_order(q, r)?;
    let qb = big(q);
    let q2 = &qb * &qb;
    let q3 = &q2 * &qb;
    let q4 = &q2 * &q2;
    let q4m1 = &q4 - 1;
    let q2m1: BigInt = &q2 - 1;
    let q2p1 = &q2 + 1;
    let phi = |n: u64| big(euler_phi_u64(n));
    let psi = |n: u64| BigInt::from(dedekind_psi_u64(n));

    let value: BigRational = match clause {
        NseClause::Identity => BigRational::one(),
        NseClause::Involutions => rational(&q2p1 * &q4m1),
        NseClause::OrderFour => rational(&q2 * &q2m1 * &q4m1),
        NseClause::SplitTorus | NseClause::NonsplitTorus => {
            // φ(r) q³ (q²+1)(q±1) (1 - q(q±1)/2 + q(q±1)ψ(r)/8)
            let shifted = if clause == NseClause::SplitTorus { &qb + 1 } else { &qb - 1 };
            let qq: BigInt = &qb * &shifted;
            let bracket = BigRational::one() - BigRational::new(qq.clone(), big(2))
                + BigRational::new(qq * psi(r), big(8));
            rational(phi(r) * &q3 * &q2p1 * shifted) * bracket
        }
        NseClause::TwiceSplit => rational(phi(r / 2) * &q3 * (&qb + 1) * &q4m1),
        NseClause::TwiceNonsplit => rational(phi(r / 2) * &q3 * (&qb - 1) * &q4m1),
        NseClause::Mixed => BigRational::new(phi(r) * &q4 * &q4m1, big(2)),
        NseClause::Anisotropic => BigRational::new(phi(r) * &q4 * q2m1.pow(2), big(4)),
    };
    Ok(into_count(value, q, r))
}

/// The full order → count table of PSp4(q).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NseTable {
    pub q: u64,
    pub order: BigUint,
    pub counts: BTreeMap<u64, BigUint>,
}

impl NseTable {
    /// The distinct counts: nse(PSp4(q)).
    pub fn nse_set(&self) -> BTreeSet<BigUint> {
        self.counts.values().cloned().collect()
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    pub fn to_json(&self) -> NseTableJson {
        NseTableJson {
            q: self.q,
            order: self.order.to_string(),
            counts: self.counts.iter().map(|(k, v)| (*k, v.to_string())).collect(),
        }
    }

    pub fn from_json(json: &NseTableJson) -> Result<Self> {
        let parse = |s: &str| {
            s.parse::<BigUint>()
                .map_err(|e| Error::Parse(format!("bad decimal integer {s:?}: {e}")))
        };
        Ok(NseTable {
            q: json.q,
            order: parse(&json.order)?,
            counts: json
                .counts
                .iter()
                .map(|(k, v)| Ok((*k, parse(v)?)))
                .collect::<Result<_>>()?,
        })
    }
}

/// Wire form: `{"q": 4, "order": "979200", "counts": {"1": "1", ...}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NseTableJson {
    pub q: u64,
    pub order: String,
    pub counts: BTreeMap<u64, String>,
}

pub fn nse_table(q: u64) -> Result<NseTable> {
    let counts = spectrum(q)?
        .into_iter()
        .map(|r| Ok((r, m_of_order(q, r)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(NseTable { q, order: group_order(q)?, counts })
}

pub fn nse_set(q: u64) -> Result<BTreeSet<BigUint>> {
    Ok(nse_table(q)?.nse_set())
}

/// 4 | φ(r) for every divisor r ≠ 1 of q² + 1.
pub fn phi_divisibility_check(q: u64) -> Result<bool> {
    check_q(q)?;
    Ok(divisors_u64(q * q + 1)
        .into_iter()
        .filter(|&r| r != 1)
        .all(|r| euler_phi_u64(r).is_multiple_of(4)))
}

/// The table with `u64` counts, when every count fits.
pub fn counts_as_u64(table: &NseTable) -> Option<BTreeMap<u64, u64>> {
    table
        .counts
        .iter()
        .map(|(k, v)| v.to_u64().map(|v| (*k, v)))
        .collect()
}
