use std::collections::BTreeSet;

use num_bigint::BigUint;
use proptest::prelude::*;
use psp4::characterize::{characterize, match_order, Outcome, Status};
use psp4::sympl::{group_order, nse_set, nse_table};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn orders_are_recognised(f in 2u32..=31) {
        let q = 1u64 << f;
        prop_assert_eq!(match_order(&group_order(q).unwrap()), Some(q));
        prop_assert_eq!(match_order(&(group_order(q).unwrap() + 1u32)), None);
    }

    #[test]
    fn perturbed_counts_are_rejected(f in 2u32..=6, pick: prop::sample::Index, delta in 1u32..1000) {
        let q = 1u64 << f;
        let table = nse_table(q).unwrap();
        let keys: Vec<u64> = table.counts.keys().copied().collect();
        let r = keys[pick.index(keys.len())];
        let mut counts = table.counts.clone();
        *counts.get_mut(&r).unwrap() += delta;
        let nse: BTreeSet<BigUint> = counts.into_values().collect();
        let verdict = characterize(&table.order, &nse);
        prop_assert!(!verdict.is_isomorphic());
        let is_hypotheses_not_met = matches!(verdict.outcome, Outcome::HypothesesNotMet { .. });
        prop_assert!(is_hypotheses_not_met);
    }

    #[test]
    fn wrong_orders_not_applicable(n in 1u64..1 << 40) {
        let order = BigUint::from(n);
        prop_assume!(match_order(&order).is_none());
        let verdict = characterize(&order, &nse_set(4).unwrap());
        let is_not_applicable = matches!(verdict.outcome, Outcome::NotApplicable { .. });
        prop_assert!(is_not_applicable);
    }
}

#[test]
fn genuine_inputs_recognised() {
    for f in 2..=8 {
        let q = 1u64 << f;
        let verdict = characterize(&group_order(q).unwrap(), &nse_set(q).unwrap());
        assert_eq!(verdict.outcome, Outcome::IsomorphicToPSp4 { q });
        let trace = verdict.trace.unwrap();
        assert_eq!(trace.count(Status::NeedsManualLemma), 0, "q = {q}");
        assert_eq!(trace.confirming_groups(), vec![format!("PSL2({})", q * q), format!("PSp4({q})")]);
    }
}

#[test]
fn order_720_needs_q_above_two() {
    let verdict = characterize(&BigUint::from(720u32), &nse_set(4).unwrap());
    assert!(!characterize(&BigUint::from(720u32), &BTreeSet::new()).is_isomorphic());
    match verdict.outcome {
        Outcome::NotApplicable { reason } => assert!(reason.contains("q > 2"), "{reason}"),
        other => panic!("unexpected {other:?}"),
    }
}
