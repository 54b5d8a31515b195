//! Closed-form invariants of PSp4(q), q = 2^f > 2: order, spectrum, conjugacy
//! classes and same-order counts.

mod classes;
mod nse;

pub use classes::{class_table, class_table_csv, ClassDescriptor, ClassFamily};
pub use nse::{
    classify_order, counts_as_u64, m_of_order, nse_set, nse_table, phi_divisibility_check,
    NseClause, NseTable, NseTableJson,
};

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::arith::{check_q, divisors_u64, psp4_order_formula};
use crate::error::Result;

/// |PSp4(q)| = q⁴(q⁴ - 1)(q² - 1).
pub fn group_order(q: u64) -> Result<BigUint> {
    check_q(q)?;
    Ok(psp4_order_formula(q))
}

/// Every r dividing one of 4, 2(q-1), 2(q+1), q²-1, q²+1, ascending.
pub fn spectrum(q: u64) -> Result<Vec<u64>> {
    check_q(q)?;
    let maxima = [4, 2 * (q - 1), 2 * (q + 1), q * q - 1, q * q + 1];
    let set: BTreeSet<u64> = maxima.iter().flat_map(|&n| divisors_u64(n)).collect();
    Ok(set.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn orders() {
        assert_eq!(group_order(4).unwrap(), BigUint::from(979_200u32));
        assert_eq!(group_order(8).unwrap(), BigUint::from(1_056_706_560u64));
        assert_eq!(group_order(2), Err(Error::InvalidQ(2)));
    }

    #[test]
    fn spectra() {
        assert_eq!(spectrum(4).unwrap(), vec![1, 2, 3, 4, 5, 6, 10, 15, 17]);
        assert_eq!(
            spectrum(8).unwrap(),
            vec![1, 2, 3, 4, 5, 6, 7, 9, 13, 14, 18, 21, 63, 65]
        );
    }
}
