//! Arithmetic in GF(2^f) for 1 <= f <= 16.
//!
//! Elements are f-bit polynomial masks over GF(2) reduced modulo the
//! numerically smallest irreducible polynomial of degree f. The modulus table is
//! computed at compile time so the representation never changes between runs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::divisors_u64;
use crate::error::{Error, Result};

pub const MAX_DEGREE: u32 = 16;

const fn poly_degree(p: u32) -> i32 {
    31 - p.leading_zeros() as i32
}

const fn poly_mod(mut a: u32, m: u32) -> u32 {
    let dm = poly_degree(m);
    while a != 0 && poly_degree(a) >= dm {
        a ^= m << (poly_degree(a) - dm);
    }
    a
}

const fn is_irreducible(p: u32) -> bool {
    let deg = poly_degree(p);
    if deg <= 0 {
        return false;
    }
    let mut d = 1;
    while d * 2 <= deg {
        let mut g = 1u32 << d;
        while g < (1u32 << (d + 1)) {
            if poly_mod(p, g) == 0 {
                return false;
            }
            g += 1;
        }
        d += 1;
    }
    true
}

const fn smallest_irreducible(f: u32) -> u32 {
    let mut m = 1u32 << f;
    while !is_irreducible(m) {
        m += 1;
    }
    m
}

const fn modulus_table() -> [u32; MAX_DEGREE as usize + 1] {
    let mut table = [0u32; MAX_DEGREE as usize + 1];
    let mut f = 1;
    while f <= MAX_DEGREE {
        table[f as usize] = smallest_irreducible(f);
        f += 1;
    }
    table
}

/// `MODULI[f]` is the modulus bitmask for GF(2^f); index 0 is unused.
pub const MODULI: [u32; MAX_DEGREE as usize + 1] = modulus_table();

/// Irreducibility of a GF(2) polynomial given as a bitmask.
pub fn is_irreducible_poly(p: u32) -> bool {
    is_irreducible(p)
}

/// An element of GF(2^f), stored as its polynomial mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct FieldElement(pub u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

/// GF(2^f) with log/antilog tables over the canonical generator.
#[derive(Clone)]
pub struct FieldSpec {
    degree: u32,
    modulus: u32,
    generator: FieldElement,
    exp: Vec<u16>,
    log: Vec<u32>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("degree", &self.degree)
            .field("modulus", &format_args!("{:#b}", self.modulus))
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

impl FieldSpec {
    pub fn new(degree: u32) -> Result<Self> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::UnsupportedDegree(degree));
        }
        let modulus = MODULI[degree as usize];
        let order = (1u32 << degree) - 1;
        let raw = |a: u32, b: u32| clmul_mod(a, b, modulus);

        // Smallest element of full multiplicative order, found with raw arithmetic.
        let maximal_proper: Vec<u64> = divisors_u64(order as u64)
            .into_iter()
            .filter(|&d| d < order as u64)
            .collect();
        let generator = (1..=order)
            .find(|&g| {
                maximal_proper
                    .iter()
                    .all(|&d| raw_pow(g, d, modulus) != 1)
            })
            .expect("GF(2^f)^x is cyclic");

        let mut exp = vec![0u16; order as usize];
        let mut log = vec![0u32; 1 << degree];
        let mut x = 1u32;
        for (k, slot) in exp.iter_mut().enumerate() {
            *slot = x as u16;
            log[x as usize] = k as u32;
            x = raw(x, generator);
        }

        Ok(FieldSpec {
            degree,
            modulus,
            generator: FieldElement(generator as u16),
            exp,
            log,
        })
    }

    /// Field of size `q = 2^f`.
    pub fn with_size(q: u64) -> Result<Self> {
        if !q.is_power_of_two() || q < 2 {
            return Err(Error::InvalidQ(q));
        }
        Self::new(q.trailing_zeros())
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn size(&self) -> u32 {
        1 << self.degree
    }

    /// Order of the multiplicative group, 2^f - 1.
    pub fn unit_order(&self) -> u32 {
        self.size() - 1
    }

    pub fn element(&self, bits: u32) -> FieldElement {
        assert!(bits < self.size(), "{bits} is not a GF(2^{}) element", self.degree);
        FieldElement(bits as u16)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.size()).map(|b| FieldElement(b as u16))
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(a.0 ^ b.0)
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let n = self.unit_order();
        let k = self.log[a.0 as usize] + self.log[b.0 as usize];
        let k = if k >= n { k - n } else { k };
        FieldElement(self.exp[k as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::ZeroInverse(self.degree));
        }
        let n = self.unit_order();
        let k = self.log[a.0 as usize];
        Ok(FieldElement(self.exp[((n - k) % n) as usize]))
    }

    pub fn pow(&self, a: FieldElement, k: u64) -> FieldElement {
        if k == 0 {
            return FieldElement::ONE;
        }
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        let n = self.unit_order() as u64;
        let e = (self.log[a.0 as usize] as u64 * (k % n)) % n;
        FieldElement(self.exp[e as usize])
    }

    /// Smallest k >= 1 with a^k = 1.
    pub fn multiplicative_order(&self, a: FieldElement) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::ZeroOrder);
        }
        Ok(divisors_u64(self.unit_order() as u64)
            .into_iter()
            .find(|&d| self.pow(a, d) == FieldElement::ONE)
            .expect("a^(2^f - 1) = 1"))
    }

    /// The generator of GF(2^f)^x with the smallest mask.
    pub fn find_generator(&self) -> FieldElement {
        self.generator
    }
}

/// Carry-less product of two masks reduced by `modulus`.
fn clmul_mod(a: u32, b: u32, modulus: u32) -> u32 {
    let mut acc = 0u32;
    let mut a = a;
    let mut b = b;
    let top = 1u32 << poly_degree(modulus);
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & top != 0 {
            a ^= modulus;
        }
    }
    acc
}

fn raw_pow(mut base: u32, mut k: u64, modulus: u32) -> u32 {
    let mut acc = 1u32;
    while k > 0 {
        if k & 1 == 1 {
            acc = clmul_mod(acc, base, modulus);
        }
        base = clmul_mod(base, base, modulus);
        k >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::euler_phi_u64;

    #[test]
    fn modulus_table_prefix() {
        // x, x^2+x+1, x^3+x+1, x^4+x+1, ..., x^8+x^4+x^3+x+1
        assert_eq!(MODULI[1], 0b10);
        assert_eq!(MODULI[2], 0b111);
        assert_eq!(MODULI[3], 0b1011);
        assert_eq!(MODULI[4], 0b10011);
        assert_eq!(MODULI[8], 0b1_0001_1011);
        for f in 1..=MAX_DEGREE {
            assert!(is_irreducible_poly(MODULI[f as usize]));
            for smaller in (1u32 << f)..MODULI[f as usize] {
                assert!(!is_irreducible_poly(smaller));
            }
        }
    }

    #[test]
    fn gf4_examples() {
        let k = FieldSpec::new(2).unwrap();
        let x = k.element(0b10);
        assert_eq!(k.add(x, x), FieldElement::ZERO);
        assert_eq!(k.mul(x, x), k.element(0b11));
        assert_eq!(k.multiplicative_order(FieldElement::ONE).unwrap(), 1);
        assert_eq!(k.multiplicative_order(x).unwrap(), 3);
    }

    #[test]
    fn gf16_generator_and_powers() {
        let k = FieldSpec::new(4).unwrap();
        let g = k.find_generator();
        assert_eq!(k.multiplicative_order(g).unwrap(), 15);
        for a in k.elements().skip(1) {
            assert_eq!(k.pow(a, 15), FieldElement::ONE);
        }
    }

    #[test]
    fn zero_errors() {
        let k = FieldSpec::new(3).unwrap();
        assert_eq!(k.inv(FieldElement::ZERO), Err(Error::ZeroInverse(3)));
        assert_eq!(k.multiplicative_order(FieldElement::ZERO), Err(Error::ZeroOrder));
        assert!(FieldSpec::new(0).is_err());
        assert!(FieldSpec::new(17).is_err());
    }

    #[test]
    fn table_mul_matches_carryless() {
        for f in 1..=8 {
            let k = FieldSpec::new(f).unwrap();
            for a in 0..k.size() {
                for b in 0..k.size() {
                    assert_eq!(
                        k.mul(FieldElement(a as u16), FieldElement(b as u16)).0 as u32,
                        clmul_mod(a, b, k.modulus())
                    );
                }
            }
        }
    }

    #[test]
    fn exhaustive_axioms_small_fields() {
        for f in 2..=5 {
            let k = FieldSpec::new(f).unwrap();
            let els: Vec<_> = k.elements().collect();
            for &a in &els {
                if !a.is_zero() {
                    assert_eq!(k.mul(k.inv(a).unwrap(), a), FieldElement::ONE);
                    assert_eq!(k.pow(a, k.unit_order() as u64), FieldElement::ONE);
                }
                for &b in &els {
                    for &c in &els {
                        assert_eq!(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
                        assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
                        assert_eq!(k.add(k.add(a, b), c), k.add(a, k.add(b, c)));
                    }
                }
            }
            let n = k.unit_order() as u64;
            for d in divisors_u64(n) {
                let count = els
                    .iter()
                    .filter(|a| !a.is_zero() && k.multiplicative_order(**a).unwrap() == d)
                    .count() as u64;
                assert_eq!(count, euler_phi_u64(d), "GF(2^{f}), order {d}");
            }
        }
    }
}
