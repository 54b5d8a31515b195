//! The invariant suite behind `psp4 selftest`.
//!
//! Each check recomputes a quantity along two independent routes, for
//! instance a closed form against a brute-force count, and reports whether
//! they agree.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;

use crate::arith::{is_prime_u64, prime_power, q1_predicates, search_catalan, Q1Clause};
use crate::characterize::{build_a_sets, characterize, Status};
use crate::error::Result;
use crate::oracle::{enumerate_sp4, order84_g, order84_h, perm_nse, OrderHistogram};
use crate::primegraph::{psp4_graph, separation_check};
use crate::sympl::{
    class_table, group_order, m_of_order, nse_set, nse_table, phi_divisibility_check, ClassFamily,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl SelfCheck {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        SelfCheck { name: name.into(), passed, detail: detail.into() }
    }
}

#[derive(Debug, Clone, Default)]
pub struct SelftestReport {
    pub checks: Vec<SelfCheck>,
}

impl SelftestReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&SelfCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

/// Σ_r m_r(PSp4(q)) = |PSp4(q)|.
pub fn partition_identity(q: u64) -> Result<SelfCheck> {
    let table = nse_table(q)?;
    let order = group_order(q)?;
    let total = table.total();
    Ok(SelfCheck::new(
        format!("partition identity q={q}"),
        total == order,
        format!("sum {total}, order {order}"),
    ))
}

/// Class lengths grouped by representative order reproduce m_of_order,
/// and each family has its tabulated number of classes.
pub fn class_table_agreement(q: u64) -> Result<SelfCheck> {
    let table = class_table(q)?;
    let mut by_order: BTreeMap<u64, BigUint> = BTreeMap::new();
    let mut by_family: BTreeMap<ClassFamily, u64> = BTreeMap::new();
    for c in &table {
        *by_order.entry(c.rep_order).or_default() += &c.class_length;
        *by_family.entry(c.family).or_default() += 1;
    }
    let mut problems = Vec::new();
    for (r, sum) in &by_order {
        let closed = m_of_order(q, *r)?;
        if closed != *sum {
            problems.push(format!("order {r}: table {sum}, formula {closed}"));
        }
    }
    let closed_orders: BTreeSet<u64> = nse_table(q)?.counts.keys().copied().collect();
    let table_orders: BTreeSet<u64> = by_order.keys().copied().collect();
    if closed_orders != table_orders {
        problems.push(format!("orders differ: table {table_orders:?}, formula {closed_orders:?}"));
    }
    for family in ClassFamily::ALL {
        let got = by_family.get(&family).copied().unwrap_or(0);
        let expected = family.class_count(q);
        if got != expected {
            problems.push(format!("{}: {got} classes, expected {expected}", family.name()));
        }
    }
    let detail = if problems.is_empty() {
        format!("{} classes, {} orders", table.len(), by_order.len())
    } else {
        problems.join("; ")
    };
    Ok(SelfCheck::new(format!("class table vs formulas q={q}"), problems.is_empty(), detail))
}

pub fn phi_divides_counts(q: u64) -> Result<SelfCheck> {
    Ok(SelfCheck::new(
        format!("phi(r) | m_r q={q}"),
        phi_divisibility_check(q)?,
        "every count is a multiple of phi(r)",
    ))
}

pub fn a_sets_cover(q: u64) -> Result<SelfCheck> {
    let ok = build_a_sets(q)?.union() == nse_set(q)?;
    Ok(SelfCheck::new(format!("A-sets cover nse q={q}"), ok, "A1 u ... u A9 = nse(PSp4(q))"))
}

pub fn graph_components(q: u64) -> Result<SelfCheck> {
    let graph = psp4_graph(q)?;
    let ok = graph.component_count() == 2 && separation_check(q)?;
    Ok(SelfCheck::new(format!("prime graph q={q}"), ok, format!("components {:?}", graph.components)))
}

/// The verdict must be isomorphic with PSL2(q²) and PSp4(q) as the only confirming sections
/// and no branch left for manual review.
pub fn characterization(q: u64) -> Result<SelfCheck> {
    let verdict = characterize(&group_order(q)?, &nse_set(q)?);
    let trace = verdict.trace.clone().unwrap_or_default();
    let expected = vec![format!("PSL2({})", q * q), format!("PSp4({q})")];
    let confirming = trace.confirming_groups();
    let manual = trace.count(Status::NeedsManualLemma);
    let ok = verdict.is_isomorphic() && verdict.q == Some(q) && manual == 0 && confirming == expected;
    Ok(SelfCheck::new(
        format!("characterize q={q}"),
        ok,
        format!(
            "{}: confirming {confirming:?}, manual {manual}, entries {}",
            verdict.outcome.label(),
            trace.entries.len()
        ),
    ))
}

/// Adding one to any single count of the nse table must break the verdict.
pub fn perturbation(q: u64) -> Result<SelfCheck> {
    let table = nse_table(q)?;
    let order = group_order(q)?;
    let mut survivors = Vec::new();
    for (r, count) in &table.counts {
        let mut counts = table.counts.clone();
        counts.insert(*r, count + 1u32);
        let nse: BTreeSet<BigUint> = counts.into_values().collect();
        if characterize(&order, &nse).is_isomorphic() {
            survivors.push(*r);
        }
    }
    let detail = if survivors.is_empty() {
        format!("all {} single-count perturbations rejected", table.counts.len())
    } else {
        format!("verdict unchanged after perturbing m_r for r in {survivors:?}")
    };
    Ok(SelfCheck::new(format!("perturbation q={q}"), survivors.is_empty(), detail))
}

/// For q = 2^f with 2 ≤ f ≤ `max_f`, the values of q at which each clause divides.
pub fn q1_exceptions(max_f: u32) -> Result<BTreeMap<Q1Clause, Vec<u64>>> {
    let mut out: BTreeMap<Q1Clause, Vec<u64>> = BTreeMap::new();
    for f in 2..=max_f {
        let q = 1u64 << f;
        for w in &q1_predicates(q)?.clauses {
            let entry = out.entry(w.clause).or_default();
            if w.divides {
                entry.push(q);
            }
        }
    }
    Ok(out)
}

pub fn q1_check(max_f: u32) -> Result<SelfCheck> {
    let got = q1_exceptions(max_f)?;
    let expected: BTreeMap<Q1Clause, Vec<u64>> = BTreeMap::from([
        (Q1Clause::TwoQSquaredPlusThree, vec![]),
        (Q1Clause::QSquaredPlusTwo, vec![4]),
        (Q1Clause::TwoQSquaredPlusOne, vec![]),
        (Q1Clause::ThreeQSquaredPlusTwo, vec![4]),
        (Q1Clause::QFourthMinusNine, vec![]),
    ]);
    Ok(SelfCheck::new(format!("divisibility predicates f<={max_f}"), got == expected, format!("{got:?}")))
}

/// Solutions of p^m = q^n + 1 with p^m ≤ `bound`, found by a double loop
/// over q^n. Independent of [`search_catalan`], which walks p^m instead.
pub fn brute_force_catalan(bound: u64) -> Vec<(u64, u64, u32, u32)> {
    let mut out = Vec::new();
    for q in (2..bound).filter(|&q| is_prime_u64(q)) {
        let mut qn = q as u128;
        let mut n = 1u32;
        while qn < bound as u128 {
            if let Some((p, m)) = prime_power(&BigUint::from(qn + 1)) {
                let p: u64 = p.try_into().expect("p <= bound");
                out.push((p, q, m, n));
            }
            qn *= q as u128;
            n += 1;
        }
    }
    out.sort_by_key(|&(p, _, m, _)| (p as u128).pow(m));
    out
}

pub fn catalan_check(bound: u64) -> SelfCheck {
    let searched: Vec<(u64, u64, u32, u32)> =
        search_catalan(bound).iter().map(|s| (s.p, s.q, s.m, s.n)).collect();
    let brute = brute_force_catalan(bound);
    SelfCheck::new(
        format!("Catalan search up to {bound}"),
        searched == brute,
        format!("search {} solutions, double loop {}", searched.len(), brute.len()),
    )
}

/// Power-count divisibility and the multiples property on a histogram.
pub fn type_checks(name: &str, hist: &OrderHistogram) -> Vec<SelfCheck> {
    let power = hist.power_count_violations();
    let multiples = hist.multiples_violations();
    vec![
        SelfCheck::new(format!("n | |G_n| on {name}"), power.is_empty(), format!("violations {power:?}")),
        SelfCheck::new(
            format!("multiples property on {name}"),
            multiples.is_empty(),
            format!("violations {multiples:?}"),
        ),
    ]
}

/// Both order-84 groups have nse {1, 2, 6, 12, 14, 28}; |G_3| = 15 and
/// |H_3| = 3; exactly one of them has elements of order 28.
pub fn order84_checks() -> Result<Vec<SelfCheck>> {
    let g = perm_nse(&order84_g()?)?;
    let h = perm_nse(&order84_h()?)?;
    let expected = BTreeSet::from([1u64, 2, 6, 12, 14, 28]);
    let mut checks = vec![
        SelfCheck::new(
            "order-84 nse sets",
            g.total() == 84 && h.total() == 84 && g.nse_set() == expected && h.nse_set() == expected,
            format!("G {:?}, H {:?}", g.nse_set(), h.nse_set()),
        ),
        SelfCheck::new(
            "order-84 cube roots",
            g.power_count(3) == 15 && h.power_count(3) == 3,
            format!("|G_3| = {}, |H_3| = {}", g.power_count(3), h.power_count(3)),
        ),
        SelfCheck::new(
            "order-84 spectra differ at 28",
            (g.count(28) > 0) != (h.count(28) > 0),
            format!("m_28: G {}, H {}", g.count(28), h.count(28)),
        ),
    ];
    checks.extend(type_checks("G (order 84)", &g));
    checks.extend(type_checks("H (order 84)", &h));
    Ok(checks)
}

/// Brute-force Sp4(q) against the closed forms.
pub fn oracle_checks(q: u64, cap: usize) -> Result<Vec<SelfCheck>> {
    compare_histogram(q, &enumerate_sp4(q, cap)?.histogram())
}

/// Compares an enumerated histogram of Sp4(q) with the closed-form table.
pub fn compare_histogram(q: u64, hist: &OrderHistogram) -> Result<Vec<SelfCheck>> {
    let table = nse_table(q)?;
    let mut checks = vec![SelfCheck::new(
        format!("oracle histogram q={q}"),
        hist.counts_big() == table.counts && BigUint::from(hist.total()) == table.order,
        format!("{} elements", hist.total()),
    )];
    checks.extend(type_checks(&format!("Sp4({q})"), hist));
    Ok(checks)
}

/// Runs every check for each q; the brute-force oracle runs for q = 4 only.
pub fn selftest(qs: &[u64], oracle_cap: usize) -> Result<SelftestReport> {
    let mut report = SelftestReport::default();
    for &q in qs {
        report.checks.push(partition_identity(q)?);
        report.checks.push(class_table_agreement(q)?);
        report.checks.push(phi_divides_counts(q)?);
        report.checks.push(a_sets_cover(q)?);
        report.checks.push(graph_components(q)?);
        report.checks.push(characterization(q)?);
        report.checks.push(perturbation(q)?);
        if q == 4 {
            report.checks.extend(oracle_checks(q, oracle_cap)?);
        }
    }
    report.checks.push(q1_check(10)?);
    report.checks.push(catalan_check(1_000_000));
    report.checks.extend(order84_checks()?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_checks_pass() {
        for q in [4, 8, 16] {
            for check in [
                partition_identity(q).unwrap(),
                class_table_agreement(q).unwrap(),
                phi_divides_counts(q).unwrap(),
                a_sets_cover(q).unwrap(),
                graph_components(q).unwrap(),
            ] {
                assert!(check.passed, "{}: {}", check.name, check.detail);
            }
        }
    }

    #[test]
    fn perturbations_are_rejected() {
        for q in [4, 8] {
            let check = perturbation(q).unwrap();
            assert!(check.passed, "{}", check.detail);
        }
    }

    #[test]
    fn predicate_exceptions() {
        let check = q1_check(10).unwrap();
        assert!(check.passed, "{}", check.detail);
    }

    #[test]
    fn catalan_small_bound() {
        let brute = brute_force_catalan(1000);
        assert_eq!(brute[0], (3, 2, 1, 1));
        assert!(brute.contains(&(3, 2, 2, 3)));
        assert!(catalan_check(100_000).passed);
    }

    #[test]
    fn order84() {
        for check in order84_checks().unwrap() {
            assert!(check.passed, "{}: {}", check.name, check.detail);
        }
    }
}
