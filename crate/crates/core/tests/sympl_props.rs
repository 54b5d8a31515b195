use num_bigint::BigUint;
use num_integer::Integer;
use proptest::prelude::*;
use psp4::arith::{euler_phi_u64, psp4_order_formula};
use psp4::primegraph::psp4_graph;
use psp4::sympl::{classify_order, group_order, m_of_order, nse_table, spectrum};

fn q_strategy(max_f: u32) -> impl Strategy<Value = u64> {
    (2..=max_f).prop_map(|f| 1u64 << f)
}

proptest! {
    #[test]
    fn counts_partition_the_group(q in q_strategy(31)) {
        let table = nse_table(q).unwrap();
        prop_assert_eq!(table.total(), psp4_order_formula(q));
        prop_assert_eq!(table.order, group_order(q).unwrap());
    }

    #[test]
    fn counts_are_multiples_of_phi(q in q_strategy(20)) {
        for (r, count) in nse_table(q).unwrap().counts {
            prop_assert!(count.is_multiple_of(&BigUint::from(euler_phi_u64(r))), "r = {}", r);
        }
    }

    #[test]
    fn spectrum_divides_order(q in q_strategy(24)) {
        let order = group_order(q).unwrap();
        for r in spectrum(q).unwrap() {
            prop_assert!(order.is_multiple_of(&BigUint::from(r)));
            prop_assert!(classify_order(q, r).is_ok());
        }
    }

    #[test]
    fn orders_outside_spectrum_rejected(q in q_strategy(12), r in 1u64..100_000) {
        let inside = spectrum(q).unwrap().contains(&r);
        prop_assert_eq!(m_of_order(q, r).is_ok(), inside);
    }

    #[test]
    fn prime_graph_has_two_components(q in q_strategy(16)) {
        let graph = psp4_graph(q).unwrap();
        prop_assert_eq!(graph.component_count(), 2);
        let product: BigUint = graph.order_components.iter().product();
        prop_assert_eq!(product, group_order(q).unwrap());
        let q2p1 = BigUint::from(q * q + 1);
        prop_assert_eq!(&graph.order_components[1], &q2p1);
    }
}

#[test]
fn non_powers_of_two_rejected() {
    for q in [0, 1, 2, 3, 6, 12, 1 << 32] {
        assert!(nse_table(q).is_err(), "q = {q}");
    }
}
