//! Exact evaluation of cyclotomic polynomials at integer points.
//!
//! Φ_n(x) = (x^n - 1) / ∏_{d | n, d < n} Φ_d(x), so values come out of exact
//! integer division without ever expanding polynomial coefficients.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::functions::{divisors_u64, exact_sqrt};

/// Memo table for Φ_d(x) values, keyed by (d, x).
#[derive(Debug, Default, Clone)]
pub struct CyclotomicCache {
    values: HashMap<(u64, BigUint), BigUint>,
}

impl CyclotomicCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn eval(&mut self, n: u64, x: &BigUint) -> BigUint {
        assert!(n >= 1, "cyclotomic index must be positive");
        if let Some(v) = self.values.get(&(n, x.clone())) {
            return v.clone();
        }
        let mut value = x.pow(n as u32) - 1u32;
        for d in divisors_u64(n) {
            if d == n {
                continue;
            }
            let phi_d = self.eval(d, x);
            let (quot, rem) = value.div_rem(&phi_d);
            debug_assert!(rem.is_zero(), "Φ_{d}({x}) must divide {x}^{n} - 1");
            value = quot;
        }
        self.values.insert((n, x.clone()), value.clone());
        value
    }
}

/// Φ_n(x) for n >= 1, x >= 2.
pub fn cyclotomic_eval(n: u64, x: &BigUint) -> BigUint {
    CyclotomicCache::new().eval(n, x)
}

pub fn cyclotomic_eval_u64(n: u64, x: u64) -> BigUint {
    cyclotomic_eval(n, &BigUint::from(x))
}

/// The factors of Φ_6 and Φ_12 that split over fields where 3x or 2x is a square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TwistedTag {
    /// x + √(3x) + 1
    Phi6Plus,
    /// x - √(3x) + 1
    Phi6Minus,
    /// x² + x√(2x) + x + √(2x) + 1
    Phi12Plus,
    /// x² - x√(2x) + x - √(2x) + 1
    Phi12Minus,
}

impl TwistedTag {
    pub fn label(self) -> &'static str {
        match self {
            TwistedTag::Phi6Plus => "Φ6+",
            TwistedTag::Phi6Minus => "Φ6-",
            TwistedTag::Phi12Plus => "Φ12+",
            TwistedTag::Phi12Minus => "Φ12-",
        }
    }
}

/// Value of the twisted factor at `x`, or `None` when the square root is not integral.
pub fn twisted_cyclotomic_eval(tag: TwistedTag, x: &BigUint) -> Option<BigUint> {
    let xi = BigInt::from(x.clone());
    let (root, sign) = match tag {
        TwistedTag::Phi6Plus | TwistedTag::Phi6Minus => (exact_sqrt(&(x * 3u32))?, tag == TwistedTag::Phi6Plus),
        TwistedTag::Phi12Plus | TwistedTag::Phi12Minus => {
            (exact_sqrt(&(x * 2u32))?, tag == TwistedTag::Phi12Plus)
        }
    };
    let s = if sign { BigInt::from(root) } else { -BigInt::from(root) };
    let one = BigInt::one();
    let value = match tag {
        TwistedTag::Phi6Plus | TwistedTag::Phi6Minus => &xi + &s + &one,
        TwistedTag::Phi12Plus | TwistedTag::Phi12Minus => {
            &xi * &xi + &xi * &s + &xi + &s + &one
        }
    };
    value.to_biguint()
}

pub fn twisted_cyclotomic_eval_u64(tag: TwistedTag, x: u64) -> Option<u64> {
    twisted_cyclotomic_eval(tag, &BigUint::from(x)).and_then(|v| v.to_u64())
}
