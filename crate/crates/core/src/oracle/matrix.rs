//! 4x4 matrices over GF(2^f) and the Chevalley generators of Sp4(q).

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;

use super::OrderHistogram;
use crate::arith::check_q;
use crate::error::{Error, Result};
use crate::gf2::{FieldElement, FieldSpec};

/// Row-major 4x4 matrix; the field lives outside the matrix.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat4 {
    entries: [FieldElement; 16],
}

impl fmt::Debug for Mat4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<u16>> = (0..4)
            .map(|r| (0..4).map(|c| self.get(r, c).bits()).collect())
            .collect();
        write!(f, "Mat4{rows:?}")
    }
}

impl Mat4 {
    pub const IDENTITY: Mat4 = {
        let mut entries = [FieldElement::ZERO; 16];
        entries[0] = FieldElement::ONE;
        entries[5] = FieldElement::ONE;
        entries[10] = FieldElement::ONE;
        entries[15] = FieldElement::ONE;
        Mat4 { entries }
    };

    /// The alternating form preserved by Sp4: ones on the antidiagonal.
    pub const FORM: Mat4 = {
        let mut entries = [FieldElement::ZERO; 16];
        entries[3] = FieldElement::ONE;
        entries[6] = FieldElement::ONE;
        entries[9] = FieldElement::ONE;
        entries[12] = FieldElement::ONE;
        Mat4 { entries }
    };

    pub fn from_entries(entries: [FieldElement; 16]) -> Self {
        Mat4 { entries }
    }

    pub fn from_rows(rows: [[u16; 4]; 4]) -> Self {
        let mut entries = [FieldElement::ZERO; 16];
        for (r, row) in rows.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                entries[4 * r + c] = FieldElement(*v);
            }
        }
        Mat4 { entries }
    }

    pub fn entries(&self) -> &[FieldElement; 16] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> FieldElement {
        self.entries[4 * row + col]
    }

    fn set(&mut self, row: usize, col: usize, v: FieldElement) {
        self.entries[4 * row + col] = v;
    }

    pub fn transpose(&self) -> Mat4 {
        let mut out = *self;
        for r in 0..4 {
            for c in 0..4 {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    pub fn mul(&self, other: &Mat4, field: &FieldSpec) -> Mat4 {
        let mut out = [FieldElement::ZERO; 16];
        for r in 0..4 {
            for c in 0..4 {
                let mut acc = 0u16;
                for k in 0..4 {
                    acc ^= field.mul(self.entries[4 * r + k], other.entries[4 * k + c]).0;
                }
                out[4 * r + c] = FieldElement(acc);
            }
        }
        Mat4 { entries: out }
    }

    /// Mᵀ J M = J.
    pub fn is_symplectic(&self, field: &FieldSpec) -> bool {
        self.transpose().mul(&Mat4::FORM, field).mul(self, field) == Mat4::FORM
    }

    /// 2 bits per entry; only meaningful over GF(4).
    pub fn pack32(&self) -> u32 {
        self.entries
            .iter()
            .enumerate()
            .fold(0u32, |acc, (i, e)| acc | ((e.0 as u32 & 0b11) << (2 * i)))
    }

    /// f bits per entry, for f <= 8.
    pub fn pack128(&self, f: u32) -> u128 {
        self.entries
            .iter()
            .enumerate()
            .fold(0u128, |acc, (i, e)| acc | ((e.0 as u128) << (f as usize * i)))
    }

    /// Smallest k >= 1 with M^k = I, searching up to `max_order`.
    pub fn order(&self, field: &FieldSpec, max_order: u64) -> Option<u64> {
        let mut power = *self;
        for k in 1..=max_order {
            if power == Mat4::IDENTITY {
                return Some(k);
            }
            power = power.mul(self, field);
        }
        None
    }
}

/// Names of the generators returned by [`sp4_generators`], in order.
pub const GENERATOR_NAMES: [&str; 8] = [
    "x_a(1)",
    "x_b(1)",
    "x_a+b(1)",
    "x_2a+b(1)",
    "h(gamma,1)",
    "h(1,gamma)",
    "omega_a",
    "omega_b",
];

/// Root element x_ι(t) for ι ∈ {a, b, a+b, 2a+b}; signs vanish in characteristic 2.
pub fn root_element(root: &str, t: FieldElement) -> Mat4 {
    let mut m = Mat4::IDENTITY;
    match root {
        "a" => {
            m.set(0, 1, t);
            m.set(2, 3, t);
        }
        "b" => m.set(1, 2, t),
        "a+b" => {
            m.set(0, 2, t);
            m.set(1, 3, t);
        }
        "2a+b" => m.set(0, 3, t),
        other => panic!("unknown root {other}"),
    }
    m
}

/// Diagonal torus element h(z1, z2) = diag(z1, z2, z2⁻¹, z1⁻¹).
pub fn torus_element(field: &FieldSpec, z1: FieldElement, z2: FieldElement) -> Result<Mat4> {
    let mut m = Mat4::from_entries([FieldElement::ZERO; 16]);
    m.set(0, 0, z1);
    m.set(1, 1, z2);
    m.set(2, 2, field.inv(z2)?);
    m.set(3, 3, field.inv(z1)?);
    Ok(m)
}

/// x_a(1), x_b(1), x_{a+b}(1), x_{2a+b}(1), h(γ,1), h(1,γ), ω_a, ω_b over GF(q).
pub fn sp4_generators(q: u64) -> Result<(FieldSpec, Vec<Mat4>)> {
    check_q(q)?;
    let field = FieldSpec::with_size(q)?;
    let one = FieldElement::ONE;
    let gamma = field.find_generator();
    let omega_a = Mat4::from_rows([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]);
    let omega_b = Mat4::from_rows([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]);
    let gens = vec![
        root_element("a", one),
        root_element("b", one),
        root_element("a+b", one),
        root_element("2a+b", one),
        torus_element(&field, gamma, one)?,
        torus_element(&field, one, gamma)?,
        omega_a,
        omega_b,
    ];
    for (name, g) in GENERATOR_NAMES.iter().zip(&gens) {
        assert!(g.is_symplectic(&field), "{name} does not preserve the antidiagonal form");
    }
    Ok((field, gens))
}

enum SeenSet {
    Packed32(HashSet<u32>),
    Packed128(HashSet<u128>, u32),
    Full(HashSet<Mat4>),
}

impl SeenSet {
    fn for_field(field: &FieldSpec) -> SeenSet {
        match field.degree() {
            2 => SeenSet::Packed32(HashSet::new()),
            f if f <= 8 => SeenSet::Packed128(HashSet::new(), f),
            _ => SeenSet::Full(HashSet::new()),
        }
    }

    fn insert(&mut self, m: &Mat4) -> bool {
        match self {
            SeenSet::Packed32(s) => s.insert(m.pack32()),
            SeenSet::Packed128(s, f) => s.insert(m.pack128(*f)),
            SeenSet::Full(s) => s.insert(*m),
        }
    }
}

/// Breadth-first closure of `generators` starting at the identity.
///
/// Fails with [`Error::Capacity`] as soon as more than `cap` elements are found.
pub fn enumerate_group(field: &FieldSpec, generators: &[Mat4], cap: usize) -> Result<Vec<Mat4>> {
    let mut seen = SeenSet::for_field(field);
    let mut elements = vec![Mat4::IDENTITY];
    seen.insert(&Mat4::IDENTITY);
    let mut head = 0;
    while head < elements.len() {
        let current = elements[head];
        head += 1;
        for g in generators {
            let next = current.mul(g, field);
            if seen.insert(&next) {
                if elements.len() >= cap {
                    return Err(Error::Capacity { cap });
                }
                elements.push(next);
            }
        }
    }
    Ok(elements)
}

/// Order histogram by repeated multiplication, split across threads.
///
/// # Panics
/// If some element has order above `max_order`.
pub fn order_histogram(field: &FieldSpec, elements: &[Mat4], max_order: u64) -> OrderHistogram {
    elements
        .par_chunks(4096)
        .map(|chunk| {
            let mut h = OrderHistogram::new();
            for m in chunk {
                let order = m
                    .order(field, max_order)
                    .unwrap_or_else(|| panic!("element order exceeds {max_order}"));
                h.record(order);
            }
            h
        })
        .reduce(OrderHistogram::new, OrderHistogram::merge)
}
