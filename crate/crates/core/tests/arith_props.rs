use num_bigint::BigUint;
use num_traits::One;
use proptest::prelude::*;
use psp4::arith::{
    cyclotomic_eval, divisors_u64, euler_phi_u64, factorize, factorize_u64, is_prime_u64, prime_power,
};
use psp4::gf2::{FieldElement, FieldSpec};

proptest! {
    #[test]
    fn factorization_multiplies_back(n in 1u64..u64::MAX) {
        let f = factorize_u64(n);
        prop_assert_eq!(f.value(), BigUint::from(n));
        prop_assert!(f.primes_u64().iter().all(|&p| is_prime_u64(p)));
    }

    #[test]
    fn factorization_of_products(a in 2u64..1 << 31, b in 2u64..1 << 31) {
        let n = BigUint::from(a) * BigUint::from(b);
        let f = factorize(&n);
        prop_assert_eq!(f.value(), n);
        prop_assert!(f.len() >= factorize_u64(a).len().max(factorize_u64(b).len()));
    }

    #[test]
    fn phi_sums_over_divisors(n in 1u64..200_000) {
        let total: u64 = divisors_u64(n).into_iter().map(euler_phi_u64).sum();
        prop_assert_eq!(total, n);
    }

    #[test]
    fn cyclotomic_product(n in 1u64..40, x in 2u64..50) {
        let x = BigUint::from(x);
        let product: BigUint = divisors_u64(n).into_iter().map(|d| cyclotomic_eval(d, &x)).product();
        prop_assert_eq!(product, x.pow(n as u32) - BigUint::one());
    }

    #[test]
    fn prime_power_detection(start in 2u64..5000, e in 1u32..6) {
        let p = (start..).find(|&n| is_prime_u64(n)).unwrap();
        let n = BigUint::from(p).pow(e);
        prop_assert_eq!(prime_power(&n), Some((BigUint::from(p), e)));
        prop_assert_eq!(prime_power(&(n * 6u32)), None);
    }

    #[test]
    fn field_axioms(f in 1u32..=16, a: u16, b: u16, c: u16) {
        let field = FieldSpec::new(f).unwrap();
        let mask = field.size() - 1;
        let [a, b, c] = [a, b, c].map(|v| field.element(v as u32 & mask));
        prop_assert_eq!(field.mul(a, b), field.mul(b, a));
        prop_assert_eq!(field.mul(field.mul(a, b), c), field.mul(a, field.mul(b, c)));
        prop_assert_eq!(field.mul(a, field.add(b, c)), field.add(field.mul(a, b), field.mul(a, c)));
        if !a.is_zero() {
            prop_assert_eq!(field.mul(a, field.inv(a).unwrap()), FieldElement::ONE);
            let order = field.multiplicative_order(a).unwrap();
            prop_assert_eq!(field.unit_order() as u64 % order, 0);
            prop_assert_eq!(field.pow(a, order), FieldElement::ONE);
        }
    }
}
