//! Orders of the finite simple groups that can appear as the simple section
//! K/H, plus the Diophantine helpers the eliminations need.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{is_prime_u64, prime_power};

fn pow(q: u64, e: u64) -> BigUint {
    BigUint::from(q).pow(e as u32)
}

fn minus_one(q: u64, e: u64) -> BigUint {
    pow(q, e) - 1u32
}

fn plus_one(q: u64, e: u64) -> BigUint {
    pow(q, e) + 1u32
}

fn gcd_big(a: u64, b: &BigUint) -> u64 {
    (b % a).gcd(&BigUint::from(a)).to_u64().unwrap_or(1)
}

/// A simple group of Lie type together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LieGroup {
    /// PSL_n(q)
    Linear { n: u64, q: u64 },
    /// PSU_n(q)
    Unitary { n: u64, q: u64 },
    /// PSp_{2n}(q)
    Symplectic { n: u64, q: u64 },
    /// Ω_{2n+1}(q), q odd
    OrthogonalOdd { n: u64, q: u64 },
    /// PΩ⁺_{2n}(q)
    OrthogonalPlus { n: u64, q: u64 },
    /// PΩ⁻_{2n}(q)
    OrthogonalMinus { n: u64, q: u64 },
    Suzuki { q: u64 },
    ReeG2 { q: u64 },
    G2 { q: u64 },
    TrialityD4 { q: u64 },
    F4 { q: u64 },
    ReeF4 { q: u64 },
    E6 { q: u64 },
    TwistedE6 { q: u64 },
    E7 { q: u64 },
    E8 { q: u64 },
}

impl LieGroup {
    pub fn order(&self) -> BigUint {
        use LieGroup::*;
        let prod = |q: u64, terms: &[(u64, bool)]| {
            terms.iter().fold(BigUint::one(), |acc, &(e, plus)| {
                acc * if plus { plus_one(q, e) } else { minus_one(q, e) }
            })
        };
        match *self {
            Linear { n, q } => {
                let mut o = pow(q, n * (n - 1) / 2);
                for i in 2..=n {
                    o *= minus_one(q, i);
                }
                o / num_integer::gcd(n, q - 1)
            }
            Unitary { n, q } => {
                let mut o = pow(q, n * (n - 1) / 2);
                for i in 2..=n {
                    o *= if i % 2 == 0 { minus_one(q, i) } else { plus_one(q, i) };
                }
                o / num_integer::gcd(n, q + 1)
            }
            Symplectic { n, q } | OrthogonalOdd { n, q } => {
                let mut o = pow(q, n * n);
                for i in 1..=n {
                    o *= minus_one(q, 2 * i);
                }
                o / num_integer::gcd(2, q - 1)
            }
            OrthogonalPlus { n, q } | OrthogonalMinus { n, q } => {
                let plus = matches!(self, OrthogonalMinus { .. });
                let top = if plus { plus_one(q, n) } else { minus_one(q, n) };
                let d = gcd_big(4, &top);
                let mut o = pow(q, n * (n - 1)) * top;
                for i in 1..n {
                    o *= minus_one(q, 2 * i);
                }
                o / d
            }
            Suzuki { q } => pow(q, 2) * plus_one(q, 2) * minus_one(q, 1),
            ReeG2 { q } => pow(q, 3) * plus_one(q, 3) * minus_one(q, 1),
            G2 { q } => pow(q, 6) * minus_one(q, 6) * minus_one(q, 2),
            TrialityD4 { q } => {
                pow(q, 12) * (pow(q, 8) + pow(q, 4) + 1u32) * minus_one(q, 6) * minus_one(q, 2)
            }
            F4 { q } => pow(q, 24) * prod(q, &[(12, false), (8, false), (6, false), (2, false)]),
            ReeF4 { q } => {
                pow(q, 12) * prod(q, &[(6, true), (4, false), (3, true), (1, false)])
            }
            E6 { q } => {
                pow(q, 36)
                    * prod(q, &[(12, false), (9, false), (8, false), (6, false), (5, false), (2, false)])
                    / num_integer::gcd(3, q - 1)
            }
            TwistedE6 { q } => {
                pow(q, 36)
                    * prod(q, &[(12, false), (9, true), (8, false), (6, false), (5, true), (2, false)])
                    / num_integer::gcd(3, q + 1)
            }
            E7 { q } => {
                pow(q, 63)
                    * prod(
                        q,
                        &[(2, false), (6, false), (8, false), (10, false), (12, false), (14, false), (18, false)],
                    )
                    / num_integer::gcd(2, q - 1)
            }
            E8 { q } => {
                pow(q, 120)
                    * prod(
                        q,
                        &[
                            (2, false),
                            (8, false),
                            (12, false),
                            (14, false),
                            (18, false),
                            (20, false),
                            (24, false),
                            (30, false),
                        ],
                    )
            }
        }
    }
}

impl fmt::Display for LieGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use LieGroup::*;
        match self {
            Linear { n, q } => write!(f, "PSL{n}({q})"),
            Unitary { n, q } => write!(f, "PSU{n}({q})"),
            Symplectic { n, q } => write!(f, "PSp{}({q})", 2 * n),
            OrthogonalOdd { n, q } => write!(f, "O{}({q})", 2 * n + 1),
            OrthogonalPlus { n, q } => write!(f, "PO+{}({q})", 2 * n),
            OrthogonalMinus { n, q } => write!(f, "PO-{}({q})", 2 * n),
            Suzuki { q } => write!(f, "2B2({q})"),
            ReeG2 { q } => write!(f, "2G2({q})"),
            G2 { q } => write!(f, "G2({q})"),
            TrialityD4 { q } => write!(f, "3D4({q})"),
            F4 { q } => write!(f, "F4({q})"),
            ReeF4 { q } => write!(f, "2F4({q})"),
            E6 { q } => write!(f, "E6({q})"),
            TwistedE6 { q } => write!(f, "2E6({q})"),
            E7 { q } => write!(f, "E7({q})"),
            E8 { q } => write!(f, "E8({q})"),
        }
    }
}

/// |A_n| = n!/2.
pub fn alternating_order(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k) / 2u32
}

/// The least `x >= lo` with `f(x) >= target`, for `f` nondecreasing on `[lo, ∞)`.
fn lower_bound<F>(target: &BigUint, lo: u64, f: F) -> Option<u64>
where
    F: Fn(u64) -> BigUint,
{
    let mut hi = lo.max(1);
    while f(hi) < *target {
        hi = hi.checked_mul(2)?;
    }
    let mut lo = lo;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if f(mid) < *target {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    Some(lo)
}

/// Integer solution `x >= lo` of `f(x) = target` for nondecreasing `f`.
pub fn solve_increasing<F>(target: &BigUint, lo: u64, f: F) -> Option<u64>
where
    F: Fn(u64) -> BigUint,
{
    let x = lower_bound(target, lo, &f)?;
    (f(x) == *target).then_some(x)
}

/// `Some((p, k))` when `x = p^k` with `p` prime.
pub fn prime_power_u64(x: u64) -> Option<(u64, u32)> {
    if x < 2 {
        return None;
    }
    if is_prime_u64(x) {
        return Some((x, 1));
    }
    prime_power(&BigUint::from(x)).map(|(p, k)| (p.to_u64().expect("p <= x"), k))
}

pub fn is_prime_power_u64(x: u64) -> bool {
    prime_power_u64(x).is_some()
}

/// `Some(r)` with `r^k = x` exactly.
pub fn exact_root(x: &BigUint, k: u32) -> Option<u64> {
    let r = x.nth_root(k);
    (r.pow(k) == *x).then(|| r.to_u64()).flatten()
}

/// Remainder of `order` modulo `divisor`, as a kill witness.
pub fn divides(divisor: &BigUint, order: &BigUint) -> bool {
    !divisor.is_zero() && (order % divisor).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(g: LieGroup) -> u128 {
        g.order().to_u128().unwrap()
    }

    #[test]
    fn known_orders() {
        assert_eq!(ord(LieGroup::Linear { n: 2, q: 17 }), 2448);
        assert_eq!(ord(LieGroup::Linear { n: 2, q: 16 }), 4080);
        assert_eq!(ord(LieGroup::Linear { n: 3, q: 4 }), 20_160);
        assert_eq!(ord(LieGroup::Unitary { n: 3, q: 3 }), 6048);
        assert_eq!(ord(LieGroup::Unitary { n: 4, q: 2 }), 25_920);
        assert_eq!(ord(LieGroup::Symplectic { n: 2, q: 4 }), 979_200);
        assert_eq!(ord(LieGroup::Symplectic { n: 3, q: 2 }), 1_451_520);
        assert_eq!(ord(LieGroup::OrthogonalOdd { n: 3, q: 3 }), 4_585_351_680);
        assert_eq!(ord(LieGroup::OrthogonalPlus { n: 4, q: 2 }), 174_182_400);
        assert_eq!(ord(LieGroup::OrthogonalMinus { n: 4, q: 2 }), 197_406_720);
        assert_eq!(ord(LieGroup::Suzuki { q: 8 }), 29_120);
        assert_eq!(ord(LieGroup::ReeG2 { q: 27 }), 10_073_444_472);
        assert_eq!(ord(LieGroup::G2 { q: 3 }), 4_245_696);
        assert_eq!(ord(LieGroup::TrialityD4 { q: 2 }), 211_341_312);
        assert_eq!(ord(LieGroup::F4 { q: 2 }), 3_311_126_603_366_400);
        assert_eq!(ord(LieGroup::ReeF4 { q: 2 }), 35_942_400);
        assert_eq!(
            LieGroup::TwistedE6 { q: 2 }.order().to_string(),
            "76532479683774853939200"
        );
        assert_eq!(
            LieGroup::E6 { q: 2 }.order().to_string(),
            "214841575522005575270400"
        );
        assert_eq!(
            LieGroup::E7 { q: 2 }.order().to_string(),
            "7997476042075799759100487262680802918400"
        );
        assert_eq!(alternating_order(5).to_u64(), Some(60));
    }

    #[test]
    fn monotone_solver() {
        let target = BigUint::from(65u32);
        assert_eq!(solve_increasing(&target, 2, |x| BigUint::from(x * x + 1)), Some(8));
        assert_eq!(solve_increasing(&BigUint::from(66u32), 2, |x| BigUint::from(x * x + 1)), None);
        assert_eq!(exact_root(&BigUint::from(1024u32), 5), Some(4));
        assert_eq!(exact_root(&BigUint::from(1025u32), 5), None);
    }
}
