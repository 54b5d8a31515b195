//! Acceptance criteria, one line each. Runs with `harness = false` so the
//! lines are always printed; the process exits 1 if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use psp4::arith::{psp4_order_formula, search_catalan};
use psp4::characterize::{characterize, Status};
use psp4::oracle::{enumerate_sp4, max_enum_from_env, order84_g, order84_h, perm_nse};
use psp4::primegraph::psp4_graph;
use psp4::selftest::{
    brute_force_catalan, class_table_agreement, perturbation, q1_check, type_checks,
};
use psp4::sympl::{group_order, m_of_order, nse_set, spectrum};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn big_map(pairs: &[(u64, u64)]) -> BTreeMap<u64, BigUint> {
    pairs.iter().map(|&(k, v)| (k, BigUint::from(v))).collect()
}

fn oracle_equality() -> Outcome {
    let start = Instant::now();
    let hist = match enumerate_sp4(4, max_enum_from_env()) {
        Ok(e) => e.histogram(),
        Err(e) => return outcome(false, e.to_string()),
    };
    let expected = big_map(&[
        (1, 1),
        (2, 4335),
        (3, 10_880),
        (4, 61_200),
        (5, 52_224),
        (6, 163_200),
        (10, 195_840),
        (15, 261_120),
        (17, 230_400),
    ]);
    let elapsed = start.elapsed();
    let closed: BTreeMap<u64, BigUint> =
        spectrum(4).unwrap().into_iter().map(|r| (r, m_of_order(4, r).unwrap())).collect();
    outcome(
        hist.total() == 979_200 && hist.counts_big() == expected && closed == expected
            && elapsed < Duration::from_secs(120),
        format!("Sp4(4) has {} elements, histogram {:?}, {:.1?}", hist.total(), hist.counts(), elapsed),
    )
}

fn partition_identity() -> Outcome {
    let start = Instant::now();
    let bad: Vec<u64> = (2..=16u32)
        .map(|f| 1u64 << f)
        .filter(|&q| {
            let sum: BigUint = spectrum(q).unwrap().into_iter().map(|r| m_of_order(q, r).unwrap()).sum();
            sum != psp4_order_formula(q)
        })
        .collect();
    let elapsed = start.elapsed();
    outcome(
        bad.is_empty() && elapsed < Duration::from_secs(1),
        format!("sum of m_r equals q^4(q^4-1)(q^2-1) for 2 <= f <= 16, failures {bad:?}, {elapsed:.1?}"),
    )
}

fn table_vs_formula() -> Outcome {
    let checks: Vec<_> = [4, 8, 16, 32].iter().map(|&q| class_table_agreement(q).unwrap()).collect();
    let failed: Vec<String> = checks.iter().filter(|c| !c.passed).map(|c| c.detail.clone()).collect();
    outcome(failed.is_empty(), if failed.is_empty() { "q = 4, 8, 16, 32 agree".into() } else { failed.join("; ") })
}

fn spectrum_and_graph() -> Outcome {
    let spec = spectrum(4).unwrap();
    let graph = psp4_graph(4).unwrap();
    let order_components: Vec<String> = graph.order_components.iter().map(|n| n.to_string()).collect();
    let two_components = (2..=12u32).all(|f| psp4_graph(1 << f).unwrap().component_count() == 2);
    outcome(
        spec == vec![1, 2, 3, 4, 5, 6, 10, 15, 17]
            && graph.components == vec![vec![2, 3, 5], vec![17]]
            && order_components == vec!["57600", "17"]
            && two_components,
        format!(
            "spectrum(4) = {spec:?}, components {:?}, order components {order_components:?}, two components for f <= 12: {two_components}",
            graph.components
        ),
    )
}

fn end_to_end() -> Outcome {
    let mut passed = true;
    let mut notes = Vec::new();
    for (q, order) in [(4u64, 979_200u64), (8, 1_056_706_560)] {
        let start = Instant::now();
        let order = BigUint::from(order);
        let verdict = characterize(&order, &nse_set(q).unwrap());
        let elapsed = start.elapsed();
        let trace = verdict.trace.clone().unwrap_or_default();
        let confirming: BTreeSet<String> = trace.confirming_groups().into_iter().collect();
        let expected = BTreeSet::from([format!("PSL2({})", q * q), format!("PSp4({q})")]);
        let manual = trace.count(Status::NeedsManualLemma);
        let flip = perturbation(q).unwrap();
        let ok = group_order(q).unwrap() == order
            && verdict.is_isomorphic()
            && !trace.entries.is_empty()
            && confirming == expected
            && (q != 4 || manual == 0)
            && flip.passed
            && elapsed < Duration::from_secs(10);
        passed &= ok;
        notes.push(format!(
            "q={q}: {} with {} entries, confirming {confirming:?}, manual {manual}, {}, {elapsed:.1?}",
            verdict.outcome.label(),
            trace.entries.len(),
            flip.detail
        ));
    }
    outcome(passed, notes.join(" | "))
}

fn order84_example() -> Outcome {
    let g = perm_nse(&order84_g().unwrap()).unwrap();
    let h = perm_nse(&order84_h().unwrap()).unwrap();
    let nse = BTreeSet::from([1, 2, 6, 12, 14, 28]);
    outcome(
        g.nse_set() == nse
            && h.nse_set() == nse
            && g.power_count(3) == 15
            && h.power_count(3) == 3
            && (g.count(28) > 0) != (h.count(28) > 0),
        format!(
            "nse {:?} and {:?}, |G_3| = {}, |H_3| = {}, m_28 = {} and {}",
            g.nse_set(),
            h.nse_set(),
            g.power_count(3),
            h.power_count(3),
            g.count(28),
            h.count(28)
        ),
    )
}

fn number_theory() -> Outcome {
    let searched: Vec<(u64, u64, u32, u32)> =
        search_catalan(1_000_000).iter().map(|s| (s.p, s.q, s.m, s.n)).collect();
    let catalan = searched == brute_force_catalan(1_000_000);
    let predicates = q1_check(10).unwrap();
    let sp4 = enumerate_sp4(4, max_enum_from_env()).unwrap().histogram();
    let g = perm_nse(&order84_g().unwrap()).unwrap();
    let h = perm_nse(&order84_h().unwrap()).unwrap();
    let sp4_checks = type_checks("Sp4(4)", &sp4);
    let power_counts = sp4_checks[0].passed
        && g.power_count_violations().is_empty()
        && h.power_count_violations().is_empty();
    let multiples = sp4_checks[1].passed;
    outcome(
        catalan && predicates.passed && power_counts && multiples,
        format!(
            "Catalan search matches double loop ({} solutions): {catalan}; predicate exceptions {}; n | |G_n|: {power_counts}; multiples property on Sp4(4): {multiples}",
            searched.len(),
            predicates.detail
        ),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 7] = [
        ("oracle equality at q=4", oracle_equality),
        ("partition identity", partition_identity),
        ("class table against closed forms", table_vs_formula),
        ("spectrum and prime graph", spectrum_and_graph),
        ("end-to-end characterization", end_to_end),
        ("order-84 example", order84_example),
        ("number-theory suite", number_theory),
    ];
    let mut failures = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let result = check();
        if !result.passed {
            failures += 1;
        }
        println!(
            "criterion {}: {} [{name}] {}",
            k + 1,
            if result.passed { "PASS" } else { "FAIL" },
            result.detail
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
