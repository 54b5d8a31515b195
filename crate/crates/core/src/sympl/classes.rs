//! The parameterized conjugacy classes of PSp4(q), q = 2^f.
//!
//! Parameter tuples are enumerated over their index sets and each orbit under
//! the class identifications (B_t(±i,±j) = B_t(±j,±i), B_t(±i) = B_t(±qi), and
//! so on) is collapsed to its lexicographically least member.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_integer::gcd;
use serde::{Deserialize, Serialize};

use crate::arith::check_q;
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassFamily {
    A1,
    A2,
    A31,
    A32,
    A41,
    A42,
    B1,
    B2,
    B3,
    B4,
    B5,
    C1,
    C2,
    C3,
    C4,
    D1,
    D2,
    D3,
    D4,
}

impl ClassFamily {
    pub const ALL: [ClassFamily; 19] = [
        ClassFamily::A1,
        ClassFamily::A2,
        ClassFamily::A31,
        ClassFamily::A32,
        ClassFamily::A41,
        ClassFamily::A42,
        ClassFamily::B1,
        ClassFamily::B2,
        ClassFamily::B3,
        ClassFamily::B4,
        ClassFamily::B5,
        ClassFamily::C1,
        ClassFamily::C2,
        ClassFamily::C3,
        ClassFamily::C4,
        ClassFamily::D1,
        ClassFamily::D2,
        ClassFamily::D3,
        ClassFamily::D4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassFamily::A1 => "A1",
            ClassFamily::A2 => "A2",
            ClassFamily::A31 => "A31",
            ClassFamily::A32 => "A32",
            ClassFamily::A41 => "A41",
            ClassFamily::A42 => "A42",
            ClassFamily::B1 => "B1",
            ClassFamily::B2 => "B2",
            ClassFamily::B3 => "B3",
            ClassFamily::B4 => "B4",
            ClassFamily::B5 => "B5",
            ClassFamily::C1 => "C1",
            ClassFamily::C2 => "C2",
            ClassFamily::C3 => "C3",
            ClassFamily::C4 => "C4",
            ClassFamily::D1 => "D1",
            ClassFamily::D2 => "D2",
            ClassFamily::D3 => "D3",
            ClassFamily::D4 => "D4",
        }
    }

    /// The tabulated number of classes in the family, as a polynomial in q.
    pub fn class_count(self, q: u64) -> u64 {
        use ClassFamily::*;
        match self {
            A1 | A2 | A31 | A32 | A41 | A42 => 1,
            B1 => (q - 2) * (q - 4) / 8,
            B2 | B3 => q * (q - 2) / 4,
            B4 => q * (q - 2) / 8,
            B5 => q * q / 4,
            C1 | C2 | D1 | D2 => (q - 2) / 2,
            C3 | C4 | D3 | D4 => q / 2,
        }
    }

    /// Size of each class in the family.
    pub fn class_length(self, q: u64) -> BigUint {
        use ClassFamily::*;
        let q = BigUint::from(q);
        let q2 = q.pow(2);
        let q3 = q.pow(3);
        let q4 = q.pow(4);
        let q4m1 = &q4 - 1u32;
        let q2m1 = &q2 - 1u32;
        let q2p1 = &q2 + 1u32;
        let qp1 = &q + 1u32;
        let qm1 = &q - 1u32;
        match self {
            A1 => BigUint::from(1u32),
            A2 | A31 => q4m1,
            A32 => q2m1 * q4m1,
            A41 | A42 => q2 * q2m1 * q4m1 / 2u32,
            B1 => q4 * qp1.pow(2) * q2p1,
            B2 | B3 => q4 * q4m1,
            B4 => q4 * qm1.pow(2) * q2p1,
            B5 => q4 * q2m1.pow(2),
            C1 | C2 => q3 * qp1 * q2p1,
            C3 | C4 => q3 * qm1 * q2p1,
            D1 | D2 => q3 * qp1 * q4m1,
            D3 | D4 => q3 * qm1 * q4m1,
        }
    }

    /// Order of the representative with parameters `params`.
    pub fn rep_order(self, q: u64, params: &[u64]) -> u64 {
        use ClassFamily::*;
        let (qm1, qp1) = (q - 1, q + 1);
        match self {
            A1 => 1,
            A2 | A31 | A32 => 2,
            A41 | A42 => 4,
            B1 => qm1 / gcd(qm1, gcd(params[0], params[1])),
            B2 => (q * q - 1) / gcd(q * q - 1, params[0]),
            B3 => (q * q - 1) / (gcd(qm1, params[0]) * gcd(qp1, params[1])),
            B4 => qp1 / gcd(qp1, gcd(params[0], params[1])),
            B5 => (q * q + 1) / gcd(q * q + 1, params[0]),
            C1 | C2 => qm1 / gcd(qm1, params[0]),
            C3 | C4 => qp1 / gcd(qp1, params[0]),
            D1 | D2 => 2 * qm1 / gcd(qm1, params[0]),
            D3 | D4 => 2 * qp1 / gcd(qp1, params[0]),
        }
    }

    /// Canonical parameter tuples, one per class.
    fn parameters(self, q: u64) -> Vec<Vec<u64>> {
        use ClassFamily::*;
        let (qm1, qp1) = (q - 1, q + 1);
        let neg = |i: u64, m: u64| (m - i % m) % m;
        let mut set: BTreeSet<Vec<u64>> = BTreeSet::new();
        match self {
            A1 | A2 | A31 | A32 | A41 | A42 => {
                set.insert(vec![]);
            }
            B1 | B4 => {
                let m = if self == B1 { qm1 } else { qp1 };
                for i in 1..m {
                    for j in 1..m {
                        if i == j || i == neg(j, m) {
                            continue;
                        }
                        let orbit = [
                            [i, j],
                            [neg(i, m), j],
                            [i, neg(j, m)],
                            [neg(i, m), neg(j, m)],
                            [j, i],
                            [neg(j, m), i],
                            [j, neg(i, m)],
                            [neg(j, m), neg(i, m)],
                        ];
                        set.insert(orbit.iter().min().unwrap().to_vec());
                    }
                }
            }
            B2 | B5 => {
                let m = if self == B2 { q * q - 1 } else { q * q + 1 };
                for i in 1..m {
                    let qi = (q * i) % m;
                    if self == B2 && (qi == i || qi == neg(i, m)) {
                        continue;
                    }
                    let orbit = [i, neg(i, m), qi, neg(qi, m)];
                    set.insert(vec![*orbit.iter().min().unwrap()]);
                }
            }
            B3 => {
                for i in 1..qm1 {
                    for j in 1..qp1 {
                        let orbit = [
                            [i, j],
                            [neg(i, qm1), j],
                            [i, neg(j, qp1)],
                            [neg(i, qm1), neg(j, qp1)],
                        ];
                        set.insert(orbit.iter().min().unwrap().to_vec());
                    }
                }
            }
            C1 | C2 | D1 | D2 | C3 | C4 | D3 | D4 => {
                let m = if matches!(self, C1 | C2 | D1 | D2) { qm1 } else { qp1 };
                for i in 1..m {
                    set.insert(vec![i.min(neg(i, m))]);
                }
            }
        }
        set.into_iter().collect()
    }
}

impl fmt::Display for ClassFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One conjugacy class of PSp4(q).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDescriptor {
    pub family: ClassFamily,
    /// Canonical (i) or (i, j); empty for the unipotent A classes.
    pub params: Vec<u64>,
    pub rep_order: u64,
    /// 1-based position of the class inside its family.
    pub index: usize,
    #[serde(with = "crate::arith::decimal")]
    pub class_length: BigUint,
}

/// Every conjugacy class of PSp4(q), family by family.
pub fn class_table(q: u64) -> Result<Vec<ClassDescriptor>> {
    check_q(q)?;
    let mut out = Vec::new();
    for family in ClassFamily::ALL {
        let length = family.class_length(q);
        for (k, params) in family.parameters(q).into_iter().enumerate() {
            out.push(ClassDescriptor {
                family,
                rep_order: family.rep_order(q, &params),
                params,
                index: k + 1,
                class_length: length.clone(),
            });
        }
    }
    Ok(out)
}

/// CSV with columns name,i,j,rep_order,class_count_index,class_length.
pub fn class_table_csv(table: &[ClassDescriptor]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["name", "i", "j", "rep_order", "class_count_index", "class_length"])
        .expect("in-memory write");
    for c in table {
        let param = |k: usize| c.params.get(k).map(|v| v.to_string()).unwrap_or_default();
        writer
            .write_record([
                c.family.name().to_string(),
                param(0),
                param(1),
                c.rep_order.to_string(),
                c.index.to_string(),
                c.class_length.to_string(),
            ])
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("flush to Vec")).expect("CSV is UTF-8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::psp4_order_formula;

    #[test]
    fn b5_at_q4() {
        let table = class_table(4).unwrap();
        let b5: Vec<_> = table.iter().filter(|c| c.family == ClassFamily::B5).collect();
        assert_eq!(b5.len(), 4);
        for c in &b5 {
            assert_eq!(c.class_length, BigUint::from(57_600u32));
            assert_eq!(c.rep_order, 17);
        }
        assert!(table.iter().all(|c| c.family != ClassFamily::B1));
    }

    #[test]
    fn lengths_partition_the_group() {
        for q in [4u64, 8, 16] {
            let total: BigUint = class_table(q).unwrap().iter().map(|c| &c.class_length).sum();
            assert_eq!(total, psp4_order_formula(q), "q = {q}");
        }
    }

    #[test]
    fn canonical_params_are_orbit_minima() {
        let table = class_table(8).unwrap();
        let b1: Vec<_> = table.iter().filter(|c| c.family == ClassFamily::B1).collect();
        // q = 8: (q-2)(q-4)/8 = 3 classes over Z/7.
        let params: Vec<_> = b1.iter().map(|c| c.params.clone()).collect();
        assert_eq!(params, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn csv_header_and_rows() {
        let table = class_table(4).unwrap();
        let csv = class_table_csv(&table);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("name,i,j,rep_order,class_count_index,class_length"));
        assert_eq!(lines.next(), Some("A1,,,1,1,1"));
        assert_eq!(csv.lines().count(), table.len() + 1);
    }
}
