//! Brute-force ground truth: Sp4(q) built from its Chevalley generators and
//! enumerated outright, plus a permutation-group engine for small examples.
//!
//! For even q the centre of Sp4(q) is trivial, so Sp4(q) = PSp4(q) and no
//! quotient is ever formed.

mod histogram;
mod matrix;
mod perm;

pub use histogram::OrderHistogram;
pub use matrix::{
    enumerate_group, order_histogram, root_element, sp4_generators, torus_element, Mat4,
    GENERATOR_NAMES,
};
pub use perm::{
    order84_g, order84_h, perm_nse, power_count, PermGroupSpec, Permutation, PERM_CAP,
};

use crate::error::Result;
use crate::gf2::FieldSpec;

/// Default enumeration ceiling, overridable through `NSE_MAX_ENUM`.
pub const DEFAULT_MAX_ENUM: usize = 2_000_000;

/// Fully enumerated Sp4(q).
#[derive(Debug, Clone)]
pub struct Sp4Enumeration {
    pub q: u64,
    pub field: FieldSpec,
    pub elements: Vec<Mat4>,
}

impl Sp4Enumeration {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    /// Orders never exceed q² + 1 in PSp4(q).
    pub fn histogram(&self) -> OrderHistogram {
        order_histogram(&self.field, &self.elements, self.q * self.q + 1)
    }
}

/// Builds the generators for GF(q) and enumerates the whole group.
pub fn enumerate_sp4(q: u64, cap: usize) -> Result<Sp4Enumeration> {
    let (field, gens) = sp4_generators(q)?;
    let elements = enumerate_group(&field, &gens, cap)?;
    Ok(Sp4Enumeration { q, field, elements })
}

/// Cap read from `NSE_MAX_ENUM`, falling back to [`DEFAULT_MAX_ENUM`].
pub fn max_enum_from_env() -> usize {
    std::env::var("NSE_MAX_ENUM")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_ENUM)
}
