//! Odd order components of the sporadic groups and the Tits group.
//!
//! Each row lists the order as prime-exponent pairs and the order components
//! of the prime graph that do not contain 2. All of them are primes.

use num_bigint::BigUint;
use num_traits::One;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimpleGroupData {
    pub name: &'static str,
    pub order: &'static [(u64, u32)],
    pub odd_components: &'static [u64],
}

impl SimpleGroupData {
    pub fn order(&self) -> BigUint {
        self.order
            .iter()
            .fold(BigUint::one(), |acc, &(p, e)| acc * BigUint::from(p).pow(e))
    }
}

macro_rules! group {
    ($name:expr, [$(($p:expr, $e:expr)),*], [$($c:expr),*]) => {
        SimpleGroupData { name: $name, order: &[$(($p, $e)),*], odd_components: &[$($c),*] }
    };
}

pub const SPORADIC: &[SimpleGroupData] = &[
    group!("M11", [(2, 4), (3, 2), (5, 1), (11, 1)], [5, 11]),
    group!("M12", [(2, 6), (3, 3), (5, 1), (11, 1)], [11]),
    group!("M22", [(2, 7), (3, 2), (5, 1), (7, 1), (11, 1)], [5, 7, 11]),
    group!("M23", [(2, 7), (3, 2), (5, 1), (7, 1), (11, 1), (23, 1)], [11, 23]),
    group!("M24", [(2, 10), (3, 3), (5, 1), (7, 1), (11, 1), (23, 1)], [11, 23]),
    group!("J1", [(2, 3), (3, 1), (5, 1), (7, 1), (11, 1), (19, 1)], [7, 11, 19]),
    group!("J2", [(2, 7), (3, 3), (5, 2), (7, 1)], [7]),
    group!("J3", [(2, 7), (3, 5), (5, 1), (17, 1), (19, 1)], [17, 19]),
    group!(
        "J4",
        [(2, 21), (3, 3), (5, 1), (7, 1), (11, 3), (23, 1), (29, 1), (31, 1), (37, 1), (43, 1)],
        [23, 29, 31, 37, 43]
    ),
    group!("HS", [(2, 9), (3, 2), (5, 3), (7, 1), (11, 1)], [7, 11]),
    group!("McL", [(2, 7), (3, 6), (5, 3), (7, 1), (11, 1)], [11]),
    group!("Suz", [(2, 13), (3, 7), (5, 2), (7, 1), (11, 1), (13, 1)], [11, 13]),
    group!("He", [(2, 10), (3, 3), (5, 2), (7, 3), (17, 1)], [17]),
    group!("Ru", [(2, 14), (3, 3), (5, 3), (7, 1), (13, 1), (29, 1)], [29]),
    group!("O'N", [(2, 9), (3, 4), (5, 1), (7, 3), (11, 1), (19, 1), (31, 1)], [11, 19, 31]),
    group!("Co3", [(2, 10), (3, 7), (5, 3), (7, 1), (11, 1), (23, 1)], [23]),
    group!("Co2", [(2, 18), (3, 6), (5, 3), (7, 1), (11, 1), (23, 1)], [11, 23]),
    group!("Co1", [(2, 21), (3, 9), (5, 4), (7, 2), (11, 1), (13, 1), (23, 1)], [23]),
    group!("Fi22", [(2, 17), (3, 9), (5, 2), (7, 1), (11, 1), (13, 1)], [13]),
    group!("Fi23", [(2, 18), (3, 13), (5, 2), (7, 1), (11, 1), (13, 1), (17, 1), (23, 1)], [17, 23]),
    group!(
        "Fi24'",
        [(2, 21), (3, 16), (5, 2), (7, 3), (11, 1), (13, 1), (17, 1), (23, 1), (29, 1)],
        [17, 23, 29]
    ),
    group!("HN", [(2, 14), (3, 6), (5, 6), (7, 1), (11, 1), (19, 1)], [19]),
    group!("Ly", [(2, 8), (3, 7), (5, 6), (7, 1), (11, 1), (31, 1), (37, 1), (67, 1)], [31, 37, 67]),
    group!("Th", [(2, 15), (3, 10), (5, 3), (7, 2), (13, 1), (19, 1), (31, 1)], [19, 31]),
    group!(
        "B",
        [(2, 41), (3, 13), (5, 6), (7, 2), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1), (31, 1), (47, 1)],
        [31, 47]
    ),
    group!(
        "M",
        [
            (2, 46), (3, 20), (5, 9), (7, 6), (11, 2), (13, 3), (17, 1), (19, 1), (23, 1), (29, 1),
            (31, 1), (41, 1), (47, 1), (59, 1), (71, 1)
        ],
        [41, 59, 71]
    ),
];

pub const TITS: SimpleGroupData = group!("2F4(2)'", [(2, 11), (3, 3), (5, 2), (13, 1)], [13]);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::is_prime_u64;
    use num_integer::Integer;

    #[test]
    fn known_orders() {
        let order = |name: &str| {
            SPORADIC.iter().find(|g| g.name == name).unwrap().order().to_string()
        };
        assert_eq!(order("M11"), "7920");
        assert_eq!(order("J1"), "175560");
        assert_eq!(order("HS"), "44352000");
        assert_eq!(order("Co1"), "4157776806543360000");
        assert_eq!(
            order("M"),
            "808017424794512875886459904961710757005754368000000000"
        );
        assert_eq!(TITS.order().to_string(), "17971200");
    }

    #[test]
    fn components_are_isolated_prime_parts() {
        for g in SPORADIC.iter().chain(std::iter::once(&TITS)) {
            let order = g.order();
            for &c in g.odd_components {
                assert!(c % 2 == 1 && is_prime_u64(c), "{}: {c}", g.name);
                let exp = g.order.iter().find(|&&(p, _)| p == c).map(|&(_, e)| e);
                assert_eq!(exp, Some(1), "{}: {c} must divide the order once", g.name);
                let rest = &order / c;
                assert!(rest.gcd(&BigUint::from(c)).is_one(), "{}: {c}", g.name);
            }
        }
    }
}
