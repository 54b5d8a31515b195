//! Recognition of PSp4(q) from its order and its set of same-order counts.
//!
//! [`characterize`] matches the order to a q, compares the count sets, then
//! walks every family of finite simple groups that could occur as the simple
//! section K/H of a group with the same data, recording why each branch dies
//! or leads back to PSp4(q).

mod asets;
mod families;
pub mod lie;
pub mod sporadic;
mod trace;

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

pub use asets::{build_a_sets, AmcSets};
pub use trace::{
    Check, CheckStatus, EliminationTrace, Family, Outcome, Status, TraceEntry, Verdict, VerdictJson,
};

use crate::arith::{check_q, factorize, psp4_order_formula, MAX_F};
use crate::error::{Error, Result};
use crate::primegraph::separation_check;
use crate::sympl::nse_set;
use families::Target;

/// The q = 2^f > 2 with |PSp4(q)| = n, if there is one.
pub fn match_order(n: &BigUint) -> Option<u64> {
    match_degree(n).filter(|&f| f >= 2).map(|f| 1u64 << f)
}

fn match_degree(n: &BigUint) -> Option<u32> {
    // The order grows with f, so stop at the first f whose order reaches n.
    (1..=MAX_F).map(|f| (f, psp4_order_formula(1u64 << f))).find(|(_, o)| o >= n).and_then(|(f, o)| (o == *n).then_some(f))
}

/// Whether `value` may be m_r(G) for the prime r.
pub fn allowed_count_membership(q: u64, r: u64, value: &BigUint) -> Result<bool> {
    check_q(q)?;
    let sets = build_a_sets(q)?;
    let allowed = allowed_indices(q, r)?;
    Ok(allowed.iter().any(|&i| sets.get(i).contains(value)))
}

fn allowed_indices(q: u64, r: u64) -> Result<&'static [usize]> {
    if r == 2 {
        Ok(&[2])
    } else if (q * q + 1).is_multiple_of(r) {
        Ok(&[9])
    } else if (q * q - 1).is_multiple_of(r) {
        Ok(&[4, 5])
    } else {
        Err(Error::PrimeOutsideCases { q, r })
    }
}

/// Witnesses for ruling out a Frobenius structure with kernel and
/// complement drawn from the two prime graph components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusExclusion {
    pub excluded: bool,
    /// (q⁴(q²-1)² - 1) mod (q²+1)
    pub kernel_remainder: BigUint,
    /// q² mod q⁴(q²-1)²
    pub complement_remainder: BigUint,
}

pub fn frobenius_exclusion(q: u64) -> Result<FrobeniusExclusion> {
    check_q(q)?;
    let qb = BigUint::from(q);
    let q2 = &qb * &qb;
    let even = &q2 * &q2 * (&q2 - 1u32) * (&q2 - 1u32);
    let odd = &q2 + 1u32;
    let kernel_remainder = (&even - 1u32) % &odd;
    let complement_remainder = &q2 % &even;
    Ok(FrobeniusExclusion {
        excluded: !kernel_remainder.is_zero() && !complement_remainder.is_zero(),
        kernel_remainder,
        complement_remainder,
    })
}

/// Trace entries for one family against PSp4(q).
pub fn eliminate_family(q: u64, family: Family) -> Result<Vec<TraceEntry>> {
    let target = Target::new(q)?;
    Ok(families::eliminate(&target, family))
}

fn set_text(values: &BTreeSet<BigUint>) -> String {
    let inner: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", inner.join(", "))
}

fn structural_checks(q: u64, nse: &BTreeSet<BigUint>, order: &BigUint) -> Result<Vec<Check>> {
    let sets = build_a_sets(q)?;
    let mut checks = vec![Check::new(
        "A-sets cover nse",
        sets.union() == *nse,
        format!("A1 u ... u A9 = {}", set_text(&sets.union())),
    )];

    // m_r(G) ≡ -1 (mod r) because r divides |{x : x^r = 1}| = 1 + m_r(G).
    for (p, _) in factorize(order).pairs() {
        let r = u64::try_from(p).expect("prime of |PSp4(q)| fits in u64");
        let allowed = allowed_indices(q, r)?;
        let candidates: BTreeSet<BigUint> = nse
            .iter()
            .filter(|v| ((*v + 1u32) % r).is_zero() && !(r == 2 && v.is_one()))
            .cloned()
            .collect();
        let pool = sets.union_of(allowed);
        let ok = !candidates.is_empty() && candidates.is_subset(&pool);
        let names: Vec<String> = allowed.iter().map(|i| format!("A{i}")).collect();
        checks.push(Check::new(
            format!("m_{r}(G) in {}", names.join(" u ")),
            ok,
            format!("values = -1 mod {r}: {}; allowed {}", set_text(&candidates), set_text(&pool)),
        ));
    }

    let separated = separation_check(q)?;
    checks.push(Check::new(
        "component separation",
        separated,
        "pi(q^2+1) and pi(2(q^2-1)) lie in different components of the prime graph",
    ));

    let frob = frobenius_exclusion(q)?;
    checks.push(Check::new(
        "Frobenius exclusion",
        frob.excluded,
        format!(
            "(q^4(q^2-1)^2 - 1) mod (q^2+1) = {}; q^2 mod q^4(q^2-1)^2 = {}",
            frob.kernel_remainder, frob.complement_remainder
        ),
    ));
    checks.push(Check {
        name: "2-Frobenius exclusion".into(),
        status: CheckStatus::Cited,
        witness: "a 2-Frobenius group has exactly two prime graph components, one of them the odd part of the upper complement; excluded by the structure theorem for such groups".into(),
    });
    checks.push(Check {
        name: "normal series 1 <= H <= K <= G".into(),
        status: CheckStatus::Cited,
        witness: "with two components and no Frobenius or 2-Frobenius structure, K/H is non-abelian simple, H is nilpotent and q^2+1 is an odd order component of K/H".into(),
    });
    Ok(checks)
}

/// Decides whether |G| = `order` and nse(G) = `nse` force G ≅ PSp4(q).
pub fn characterize(order: &BigUint, nse: &BTreeSet<BigUint>) -> Verdict {
    let not_applicable = |reason: String| Verdict { outcome: Outcome::NotApplicable { reason }, q: None, trace: None };
    if order.is_zero() {
        return not_applicable("the order must be positive".into());
    }
    if nse.is_empty() {
        return not_applicable("the nse set must be nonempty".into());
    }
    let q = match match_degree(order) {
        Some(1) => {
            return not_applicable(format!(
                "{order} = |PSp4(2)|, but the characterization needs q > 2"
            ))
        }
        Some(f) => 1u64 << f,
        None => {
            return not_applicable(format!("{order} is not |PSp4(q)| for any q = 2^f with 2 <= f <= {MAX_F}"))
        }
    };
    let expected = nse_set(q).expect("q was matched from a valid order");
    if expected != *nse {
        let missing: BTreeSet<BigUint> = expected.difference(nse).cloned().collect();
        let extra: BTreeSet<BigUint> = nse.difference(&expected).cloned().collect();
        return Verdict {
            outcome: Outcome::HypothesesNotMet {
                reason: format!(
                    "nse differs from nse(PSp4({q})): missing {}, unexpected {}",
                    set_text(&missing),
                    set_text(&extra)
                ),
            },
            q: Some(q),
            trace: None,
        };
    }
    let checks = structural_checks(q, nse, order).expect("q is valid");
    let target = Target::new(q).expect("q is valid");
    let entries: Vec<TraceEntry> = Family::ALL
        .par_iter()
        .map(|&family| families::eliminate(&target, family))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Verdict { outcome: Outcome::IsomorphicToPSp4 { q }, q: Some(q), trace: Some(EliminationTrace { checks, entries }) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sympl::group_order;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn order_matching() {
        assert_eq!(match_order(&big(979_200)), Some(4));
        assert_eq!(match_order(&big(979_201)), None);
        assert_eq!(match_order(&big(1_056_706_560)), Some(8));
        assert_eq!(match_order(&big(720)), None);
        assert_eq!(match_order(&big(1)), None);
        assert_eq!(match_order(&group_order(1 << 31).unwrap()), Some(1 << 31));
        assert_eq!(match_order(&(group_order(1 << 31).unwrap() + 1u32)), None);
    }

    #[test]
    fn membership_examples() {
        assert!(allowed_count_membership(4, 2, &big(4335)).unwrap());
        assert!(allowed_count_membership(4, 17, &big(230_400)).unwrap());
        assert!(!allowed_count_membership(4, 17, &big(4335)).unwrap());
        assert!(allowed_count_membership(4, 5, &big(52_224)).unwrap());
        assert!(allowed_count_membership(4, 3, &big(10_880)).unwrap());
        assert_eq!(allowed_count_membership(4, 7, &big(1)), Err(Error::PrimeOutsideCases { q: 4, r: 7 }));
    }

    #[test]
    fn frobenius_remainders() {
        let f = frobenius_exclusion(4).unwrap();
        assert!(f.excluded);
        assert_eq!(f.kernel_remainder, big(3));
        assert_eq!(f.complement_remainder, big(16));
        assert!(frobenius_exclusion(8).unwrap().excluded);
        assert!(frobenius_exclusion(16).unwrap().excluded);
    }

    #[test]
    fn q4_verdict() {
        let v = characterize(&big(979_200), &nse_set(4).unwrap());
        assert_eq!(v.outcome, Outcome::IsomorphicToPSp4 { q: 4 });
        let trace = v.trace.unwrap();
        assert_eq!(trace.count(Status::NeedsManualLemma), 0, "{:#?}", trace.entries);
        assert_eq!(trace.confirming_groups(), vec!["PSL2(16)", "PSp4(4)"]);
        assert_eq!(trace.families(), Family::ALL.to_vec());
        assert!(trace.checks.iter().all(|c| c.status != CheckStatus::Failed), "{:#?}", trace.checks);
    }

    #[test]
    fn rejections() {
        let mut nse = nse_set(4).unwrap();
        nse.remove(&big(4335));
        nse.insert(big(4336));
        assert!(matches!(characterize(&big(979_200), &nse).outcome, Outcome::HypothesesNotMet { .. }));
        let pair: BTreeSet<BigUint> = [1u64, 2, 6, 12, 14, 28].into_iter().map(big).collect();
        assert!(matches!(characterize(&big(84), &pair).outcome, Outcome::NotApplicable { .. }));
        match characterize(&big(720), &pair).outcome {
            Outcome::NotApplicable { reason } => assert!(reason.contains("q > 2"), "{reason}"),
            other => panic!("{other:?}"),
        }
    }
}
