//! Per-family eliminations of the simple section K/H.
//!
//! Every candidate value of the odd order component is compared with
//! n₂ = q² + 1. Equations in q' are solved exactly by bisection on the
//! increasing side of each polynomial, so the work is logarithmic in q.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use super::asets::{build_a_sets, AmcSets};
use super::lie::{
    alternating_order, divides, exact_root, is_prime_power_u64, solve_increasing, LieGroup,
};
use super::sporadic::{SimpleGroupData, SPORADIC, TITS};
use super::trace::{Family, Status, TraceEntry};
use crate::arith::{
    cyclotomic_eval_u64, exact_sqrt, is_prime_u64, q1_predicates, twisted_cyclotomic_eval_u64,
    Q1Clause, Q1Predicates, TwistedTag,
};
use crate::error::Result;
use crate::sympl::group_order;

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn pw(base: u64, e: u64) -> BigUint {
    big(base).pow(e as u32)
}

/// Everything an elimination needs to know about the target PSp4(q).
pub(crate) struct Target {
    pub q: u64,
    pub n2: BigUint,
    pub order: BigUint,
    pub a_sets: AmcSets,
    pub preds: Q1Predicates,
}

impl Target {
    pub fn new(q: u64) -> Result<Target> {
        Ok(Target {
            q,
            n2: big(q) * q + 1u32,
            order: group_order(q)?,
            a_sets: build_a_sets(q)?,
            preds: q1_predicates(q)?,
        })
    }

    fn clause_kill(&self, clause: Q1Clause) -> Option<String> {
        let w = self.preds.clause(clause);
        (!w.divides).then(|| {
            format!(
                "{} = {} does not divide |G| = {} (remainder {})",
                clause.expression(),
                w.divisor,
                self.order,
                w.remainder
            )
        })
    }

    fn order_kill(&self, name: &str, order: &BigUint) -> Option<String> {
        if *order > self.order {
            return Some(format!("|{name}| = {order} exceeds |G| = {}", self.order));
        }
        (!divides(order, &self.order)).then(|| {
            format!(
                "|{name}| = {order} does not divide |G| = {} (remainder {})",
                self.order,
                &self.order % order
            )
        })
    }
}

/// A section K/H whose odd order component equals n₂.
struct Hit {
    group: String,
    order: BigUint,
    equation: String,
}

impl Hit {
    fn lie(group: LieGroup, equation: impl Into<String>) -> Hit {
        Hit { group: group.to_string(), order: group.order(), equation: equation.into() }
    }
}

/// Builds trace entries for one case of a family.
struct Case<'a> {
    target: &'a Target,
    family: Family,
    case: String,
    anchor: String,
    searched: Vec<String>,
    hits: Vec<Hit>,
}

type SpecialKill<'k> = &'k dyn Fn(&Hit) -> Option<String>;
type Builder = fn(u64) -> LieGroup;
type OrderForm = fn(u64) -> BigUint;

impl<'a> Case<'a> {
    fn new(target: &'a Target, family: Family, case: impl Into<String>, anchor: impl Into<String>) -> Self {
        Case {
            target,
            family,
            case: case.into(),
            anchor: anchor.into(),
            searched: Vec::new(),
            hits: Vec::new(),
        }
    }

    fn note(&mut self, text: impl Into<String>) {
        self.searched.push(text.into());
    }

    fn hit(&mut self, hit: Hit) {
        self.hits.push(hit);
    }

    fn entry(&self, status: Status, witness: String, group: Option<String>) -> TraceEntry {
        TraceEntry {
            family: self.family,
            case: self.case.clone(),
            status,
            witness,
            anchor: self.anchor.clone(),
            group,
        }
    }

    /// One entry when nothing matched, otherwise one entry per hit.
    /// A hit is killed by `special` first, then by order divisibility.
    fn finish(self, special: SpecialKill<'_>) -> Vec<TraceEntry> {
        if self.hits.is_empty() {
            let mut witness = format!("no candidate equals q^2+1 = {}", self.target.n2);
            if !self.searched.is_empty() {
                witness.push_str(": ");
                witness.push_str(&self.searched.join("; "));
            }
            return vec![self.entry(Status::Eliminated, witness, None)];
        }
        self.hits
            .iter()
            .map(|h| {
                let kill = special(h).or_else(|| self.target.order_kill(&h.group, &h.order));
                match kill {
                    Some(w) => self.entry(Status::Eliminated, format!("{} [{}]: {w}", h.group, h.equation), None),
                    None => self.entry(
                        Status::NeedsManualLemma,
                        format!("{} [{}]: |{}| = {} divides |G| and no implemented predicate applies", h.group, h.equation, h.group, h.order),
                        Some(h.group.clone()),
                    ),
                }
            })
            .collect()
    }

    fn finish_plain(self) -> Vec<TraceEntry> {
        self.finish(&|_| None)
    }
}

/// Prime powers q' >= lo solving `f(q') = n₂` for `f` increasing.
fn solve_pp<F: Fn(u64) -> BigUint>(n2: &BigUint, lo: u64, f: F) -> Option<u64> {
    solve_increasing(n2, lo, f).filter(|&x| is_prime_power_u64(x))
}

fn tried_text(what: &str, tried: &[u64]) -> String {
    if tried.is_empty() {
        format!("the smallest admissible {what} already gives a value above q^2+1")
    } else {
        format!("{what} in {tried:?}")
    }
}

fn primes_from(lo: u64) -> impl Iterator<Item = u64> {
    (lo..).filter(|&p| is_prime_u64(p))
}

fn is_power_of_two(x: u64) -> bool {
    x.is_power_of_two()
}

pub(crate) fn eliminate(target: &Target, family: Family) -> Vec<TraceEntry> {
    match family {
        Family::Alternating => alternating(target),
        Family::Sporadic => SPORADIC.iter().map(|g| table_group(target, Family::Sporadic, g)).collect(),
        Family::Tits => vec![table_group(target, Family::Tits, &TITS)],
        Family::Exceptional => exceptional(target),
        Family::Psl => psl(target),
        Family::Psu => psu(target),
        Family::Psp => psp(target),
        Family::POmega => pomega(target),
    }
}

fn alternating(t: &Target) -> Vec<TraceEntry> {
    let q2 = t.q * t.q;
    let mut out = Vec::new();

    let p = q2 + 1;
    out.push(if is_prime_u64(p) {
        let witness = t
            .clause_kill(Q1Clause::QFourthMinusNine)
            .map(|w| format!("A{p} with q^2+1 = p = {p} prime: {w}"));
        match witness {
            Some(w) => TraceEntry {
                family: Family::Alternating,
                case: "n in {p, p+1, p+2}, q^2+1 = p".into(),
                status: Status::Eliminated,
                witness: w,
                anchor: "q^2-3 = p-4 and q^2+3 both divide |A_p|, so q^4-9 would divide |G|".into(),
                group: None,
            },
            None => manual(Family::Alternating, "q^2+1 = p", format!("A{p}: q^4-9 divides |G|")),
        }
    } else {
        eliminated(
            Family::Alternating,
            "n in {p, p+1, p+2}, q^2+1 = p",
            format!("q^2+1 = {p} is not prime"),
            "primality of q^2+1",
        )
    });

    let p = q2 + 3;
    out.push(if is_prime_u64(p) {
        if divides(&big(p), &t.order) {
            manual(Family::Alternating, "q^2+1 = p-2", format!("p = q^2+3 = {p} divides |G|"))
        } else {
            eliminated(
                Family::Alternating,
                "n in {p, p+1, p+2}, q^2+1 = p-2",
                format!("p = q^2+3 = {p} is prime but does not divide |G| = {} (remainder {})", t.order, &t.order % p),
                "p divides |A_n|, so q^2+3 would divide |G|",
            )
        }
    } else {
        eliminated(
            Family::Alternating,
            "n in {p, p+1, p+2}, q^2+1 = p-2",
            format!("q^2+3 = {p} is not prime"),
            "primality of q^2+3",
        )
    });

    let square = exact_sqrt(&big(q2 + 2));
    out.push(match square {
        None => eliminated(
            Family::Alternating,
            "n in {p, p+1, p+2}, q^2+1 = p(p-2)",
            format!("q^2+2 = {} is not a perfect square", q2 + 2),
            "q^2+1 = p(p-2) forces q^2+2 = (p-1)^2",
        ),
        Some(root) => manual(Family::Alternating, "q^2+1 = p(p-2)", format!("q^2+2 = {root}^2")),
    });

    let mut small = Case::new(t, Family::Alternating, "n in {5, 6}", "odd order components of A5 and A6");
    for &(n, comps) in &[(5u64, [3u64, 5, 15]), (6, [3, 5, 15])] {
        if comps.iter().any(|&c| big(c) == t.n2) {
            small.hit(Hit { group: format!("A{n}"), order: alternating_order(n), equation: format!("q^2+1 in {comps:?}") });
        }
    }
    small.note("q^2+1 not in {3, 5, 15}");
    out.extend(small.finish_plain());
    out
}

fn eliminated(family: Family, case: &str, witness: String, anchor: &str) -> TraceEntry {
    TraceEntry { family, case: case.into(), status: Status::Eliminated, witness, anchor: anchor.into(), group: None }
}

fn manual(family: Family, case: &str, witness: String) -> TraceEntry {
    TraceEntry {
        family,
        case: case.into(),
        status: Status::NeedsManualLemma,
        witness,
        anchor: "no implemented predicate applies".into(),
        group: None,
    }
}

fn table_group(t: &Target, family: Family, g: &SimpleGroupData) -> TraceEntry {
    let mut case = Case::new(t, family, g.name, "odd order components from the prime graph table");
    if g.odd_components.iter().any(|&c| big(c) == t.n2) {
        case.hit(Hit { group: g.name.into(), order: g.order(), equation: format!("q^2+1 in {:?}", g.odd_components) });
    } else {
        case.note(format!("odd components {:?}", g.odd_components));
    }
    case.finish_plain().remove(0)
}

fn exceptional(t: &Target) -> Vec<TraceEntry> {
    let n2 = &t.n2;
    let mut out = Vec::new();

    // Sections with an explicit list of odd order components.
    let listed: [(&str, LieGroup, Vec<u64>); 3] = [
        ("2E6(2)", LieGroup::TwistedE6 { q: 2 }, vec![13, 17, 19, 13 * 17, 13 * 19, 17 * 19, 13 * 17 * 19]),
        ("E7(2)", LieGroup::E7 { q: 2 }, vec![73, 127, 73 * 127]),
        ("E7(3)", LieGroup::E7 { q: 3 }, vec![757, 1093, 757 * 1093]),
    ];
    for (name, group, values) in listed {
        let mut case = Case::new(t, Family::Exceptional, name, "listed odd order components");
        if values.iter().any(|&v| big(v) == *n2) {
            case.hit(Hit::lie(group, format!("q^2+1 in {values:?}")));
        } else {
            case.note(format!("components {values:?}"));
        }
        out.extend(case.finish_plain());
    }

    // Cyclotomic rows: (section, label, product of Φ_d, q' filter).
    type Filter = fn(u64) -> bool;
    let any: Filter = |_| true;
    let e6: Filter = |x| x % 3 != 1;
    let e6tw: Filter = |x| x % 3 != 2;
    let mut rows: Vec<(&str, Builder, Vec<u64>, Filter)> = vec![
        ("G2", |x| LieGroup::G2 { q: x }, vec![3], any),
        ("G2", |x| LieGroup::G2 { q: x }, vec![6], any),
        ("E6", |x| LieGroup::E6 { q: x }, vec![9], e6),
        ("3D4", |x| LieGroup::TrialityD4 { q: x }, vec![12], any),
        ("2E6", |x| LieGroup::TwistedE6 { q: x }, vec![18], e6tw),
    ];
    let e8 = [15u64, 20, 24, 30];
    for mask in 1u32..16 {
        let ds: Vec<u64> = (0..4).filter(|i| mask & (1 << i) != 0).map(|i| e8[i]).collect();
        rows.push(("E8", |x| LieGroup::E8 { q: x }, ds, any));
    }
    for (name, make, ds, filter) in rows {
        let label = ds.iter().map(|d| format!("Phi{d}(q')")).collect::<Vec<_>>().join("*");
        let mut case = Case::new(t, Family::Exceptional, format!("{name}: q^2+1 = {label}"), "cyclotomic odd components");
        let eval = |x: u64| ds.iter().fold(BigUint::one(), |acc, &d| acc * cyclotomic_eval_u64(d, x));
        match solve_pp(n2, 2, eval) {
            Some(x) if filter(x) => case.hit(Hit::lie(make(x), format!("q' = {x}"))),
            Some(x) => case.note(format!("q' = {x} fails the congruence condition")),
            None => case.note("no prime power q'"),
        }
        out.extend(case.finish_plain());
    }
    {
        let mut case = Case::new(t, Family::Exceptional, "G2: q^2+1 = Phi3(q'^2)", "cyclotomic odd components");
        match solve_pp(n2, 2, |x| cyclotomic_eval_u64(3, x * x)) {
            Some(x) => case.hit(Hit::lie(LieGroup::G2 { q: x }, format!("q' = {x}"))),
            None => case.note("no prime power q'"),
        }
        out.extend(case.finish_plain());
    }

    // Ree groups over 3^(2t+1) and 2^(2t+1): twisted cyclotomic factors.
    let twisted = |name: &str, base: u64, tags: [TwistedTag; 2], full: u64, make: fn(u64) -> LieGroup| {
        let mut case = Case::new(t, Family::Exceptional, format!("{name}: twisted factors and Phi{full}"), "twisted cyclotomic odd components");
        let mut x = base.pow(3);
        let mut tried = Vec::new();
        loop {
            let plus = twisted_cyclotomic_eval_u64(tags[0], x).map(big);
            let minus = twisted_cyclotomic_eval_u64(tags[1], x).map(big);
            let whole = cyclotomic_eval_u64(full, x);
            if minus.as_ref().is_none_or(|m| m > n2) {
                break;
            }
            tried.push(x);
            for (label, v) in [(tags[0].label(), plus), (tags[1].label(), minus), ("full", Some(whole))] {
                if v.as_ref() == Some(n2) {
                    case.hit(Hit::lie(make(x), format!("{label} at q' = {x}")));
                }
            }
            match x.checked_mul(base * base) {
                Some(next) => x = next,
                None => break,
            }
        }
        case.note(tried_text("q'", &tried));
        case.finish_plain()
    };
    out.extend(twisted("2G2", 3, [TwistedTag::Phi6Plus, TwistedTag::Phi6Minus], 6, |x| LieGroup::ReeG2 { q: x }));
    out.extend(twisted("2F4", 2, [TwistedTag::Phi12Plus, TwistedTag::Phi12Minus], 12, |x| LieGroup::ReeF4 { q: x }));

    out.extend(suzuki(t));
    out.extend(f4(t));
    out.extend(e6_epsilon(t));
    out
}

fn suzuki(t: &Target) -> Vec<TraceEntry> {
    let n2 = &t.n2;
    let mut case = Case::new(t, Family::Exceptional, "2B2(q'), q' = 2^(2t+1) >= 8", "Suzuki odd order components");
    let mut x: u64 = 8;
    let mut tried = Vec::new();
    while big(x - 1) <= *n2 {
        tried.push(x);
        let s = exact_sqrt(&big(2 * x)).and_then(|s| s.to_u64()).expect("2q' is a square");
        let xm1 = big(x - 1);
        let forms: [(&str, BigUint); 7] = [
            ("q'-1", xm1.clone()),
            ("q'+sqrt(2q')+1", big(x + s + 1)),
            ("q'-sqrt(2q')+1", big(x - s + 1)),
            ("q'^2+1", big(x) * x + 1u32),
            ("(q'-1)(q'+sqrt(2q')+1)", &xm1 * (x + s + 1)),
            ("(q'-1)(q'-sqrt(2q')+1)", &xm1 * (x - s + 1)),
            ("(q'-1)(q'^2+1)", &xm1 * (big(x) * x + 1u32)),
        ];
        for (label, v) in forms {
            if v == *n2 {
                case.hit(Hit::lie(LieGroup::Suzuki { q: x }, format!("q^2+1 = {label}, q' = {x}")));
            }
        }
        match x.checked_mul(4) {
            Some(next) => x = next,
            None => break,
        }
    }
    case.note(tried_text("q'", &tried));
    let a9 = t.a_sets.get(9).clone();
    let kill = move |h: &Hit| -> Option<String> {
        // Only q' = q survives the equation; the Sylow s-subgroup for
        // s | q'+sqrt(2q')+1 would act fixed point freely on m_r(G) ∈ A9.
        let x: u64 = h.group.trim_start_matches("2B2(").trim_end_matches(')').parse().ok()?;
        let s = exact_sqrt(&big(2 * x))?.to_u64()?;
        let d = big(x + s + 1);
        let divided: Vec<&BigUint> = a9.iter().filter(|v| (*v % &d).is_zero()).collect();
        divided.is_empty().then(|| {
            format!("q'+sqrt(2q')+1 = {d} divides no value of A9 = {:?}", a9.iter().map(|v| v.to_string()).collect::<Vec<_>>())
        })
    };
    case.finish(&kill)
}

fn f4(t: &Target) -> Vec<TraceEntry> {
    let forms: [(&str, OrderForm); 3] = [
        ("q'^4+1", |x| pw(x, 4) + 1u32),
        ("q'^4-q'^2+1", |x| pw(x, 4) - pw(x, 2) + 1u32),
        ("q'^8-q'^6+2q'^4-q'^2+1", |x| pw(x, 8) + pw(x, 4) * 2u32 + 1u32 - pw(x, 6) - pw(x, 2)),
    ];
    forms
        .iter()
        .flat_map(|(label, f)| {
            let mut case = Case::new(t, Family::Exceptional, format!("F4: q^2+1 = {label}"), "F4 odd order components");
            match solve_pp(&t.n2, 2, f) {
                Some(x) => case.hit(Hit::lie(LieGroup::F4 { q: x }, format!("q' = {x}"))),
                None => case.note("no prime power q'"),
            }
            case.finish_plain()
        })
        .collect()
}

fn e6_epsilon(t: &Target) -> Vec<TraceEntry> {
    let mut case = Case::new(
        t,
        Family::Exceptional,
        "E6^e(q'), q' = e1 mod 3: 3q^2+2 = q'^6 + e q'^3",
        "3q^2+2 divides |E6^e(q')|",
    );
    if let Some(w) = t.clause_kill(Q1Clause::ThreeQSquaredPlusTwo) {
        return vec![case.entry(Status::Eliminated, w, None)];
    }
    let target = big(3 * t.q * t.q + 2);
    if let Some(x) = solve_increasing(&target, 2, |x| pw(x, 6) + pw(x, 3)).filter(|&x| is_prime_power_u64(x) && x % 3 == 1) {
        case.hit(Hit::lie(LieGroup::E6 { q: x }, format!("q'^6+q'^3 = {target}")));
    }
    if let Some(x) = solve_increasing(&target, 2, |x| pw(x, 6) - pw(x, 3)).filter(|&x| is_prime_power_u64(x) && x % 3 == 2) {
        case.hit(Hit::lie(LieGroup::TwistedE6 { q: x }, format!("q'^6-q'^3 = {target}")));
    }
    case.note(format!("3q^2+2 = {target} divides |G| but q'^6 +- q'^3 = {target} has no admissible prime power solution"));
    case.finish_plain()
}

fn psl(t: &Target) -> Vec<TraceEntry> {
    let n2 = &t.n2;
    let q = t.q;
    let mut out = Vec::new();

    // (1) n >= 5 prime.
    let mut case = Case::new(t, Family::Psl, "(1) n >= 5 prime", "q^2+1 = (q'^n-1)/((q'-1)(n,q'-1))");
    let mut ns = Vec::new();
    for n in primes_from(5) {
        if pw(2, n - 1) > big(n) * n2 {
            break;
        }
        ns.push(n);
        for d in [1, n] {
            let f = |x: u64| (pw(x, n) - 1u32) / (big(x - 1) * d);
            if let Some(x) = solve_pp(n2, 2, f).filter(|&x| num_integer::gcd(n, x - 1) == d) {
                case.hit(Hit::lie(LieGroup::Linear { n, q: x }, format!("n = {n}, q' = {x}")));
            }
        }
    }
    case.note(format!("n in {ns:?}"));
    out.extend(case.finish_plain());

    // (2) n = p+1, (q'-1) | p+-1.
    let mut case = Case::new(t, Family::Psl, "(2) n = p+1, q'-1 | p+-1", "q^2+1 = (q'^p-1)/(q'-1)");
    let mut ps = Vec::new();
    for p in primes_from(3) {
        if pw(2, p) - 1u32 > *n2 {
            break;
        }
        ps.push(p);
        if let Some(x) = solve_pp(n2, 2, |x| (pw(x, p) - 1u32) / (x - 1)) {
            if (p - 1) % (x - 1) == 0 || (p + 1) % (x - 1) == 0 {
                case.hit(Hit::lie(LieGroup::Linear { n: p + 1, q: x }, format!("p = {p}, q' = {x}")));
            }
        }
    }
    case.note(format!("p in {ps:?}"));
    out.extend(case.finish_plain());

    // (3) n = 3, q' even.
    let mut case = Case::new(t, Family::Psl, "(3) n = 3, q' even", "q^2+1 = (q'^2+q'+1)/(3,q'-1); small q' listed");
    let listed = [3u64, 5, 7, 15, 21, 35, 105];
    if listed.iter().any(|&v| big(v) == *n2) {
        case.hit(Hit::lie(LieGroup::Linear { n: 3, q: 4 }, "q^2+1 listed for q' in {2, 4}"));
    }
    for d in [1u64, 3] {
        if let Some(x) = solve_increasing(n2, 8, |x| big(x * x + x + 1) / d) {
            if is_power_of_two(x) && num_integer::gcd(3, x - 1) == d {
                case.hit(Hit::lie(LieGroup::Linear { n: 3, q: x }, format!("q' = {x}")));
            }
        }
    }
    case.note(format!("q^2+1 not in {listed:?} and (q'^2+q'+1)/(3,q'-1) has no solution q' = 2^k >= 8"));
    let predicate_kill = |_: &Hit| t.clause_kill(Q1Clause::ThreeQSquaredPlusTwo);
    out.extend(case.finish(&predicate_kill));

    // (4) n = 2, q' odd.
    let mut case = Case::new(t, Family::Psl, "(4) n = 2, q' odd", "q^2+1 in {q', (q'-+1)/2, q'(q'-+1)/2}");
    let odd_pp = |x: u64| x % 2 == 1 && x > 3 && is_prime_power_u64(x);
    let candidates = [
        ("q'", Some(q * q + 1)),
        ("(q'-1)/2", Some(2 * q * q + 3)),
        ("(q'+1)/2", Some(2 * q * q + 1)),
        ("q'(q'-1)/2", solve_increasing(n2, 2, |x| big(x) * (x - 1) / 2u32)),
        ("q'(q'+1)/2", solve_increasing(n2, 2, |x| big(x) * (x + 1) / 2u32)),
    ];
    for (label, x) in candidates {
        match x {
            Some(x) if odd_pp(x) => case.hit(Hit::lie(LieGroup::Linear { n: 2, q: x }, format!("q^2+1 = {label}, q' = {x}"))),
            Some(x) => case.note(format!("{label}: q' = {x} is not an odd prime power > 3")),
            None => case.note(format!("{label}: no integer q'")),
        }
    }
    let kill = |h: &Hit| -> Option<String> {
        let x: u64 = h.group.trim_start_matches("PSL2(").trim_end_matches(')').parse().ok()?;
        if x == q * q + 1 {
            if let Some(w) = t.clause_kill(Q1Clause::QSquaredPlusTwo) {
                return Some(w);
            }
            // |H| divides |G|/|K/H| and m_r(G) = m_r(H) ∈ A4 ∪ A5 for r | q^2-1.
            let bound = &t.order / &h.order;
            let pool = t.a_sets.union_of(&[4, 5]);
            let min = pool.iter().next()?;
            return (*min > bound).then(|| format!("min(A4 u A5) = {min} > |G|/|{}| = {bound}, the bound on |H|", h.group));
        }
        if x == 2 * q * q + 3 {
            return t.clause_kill(Q1Clause::TwoQSquaredPlusThree);
        }
        if x == 2 * q * q + 1 {
            return t.clause_kill(Q1Clause::TwoQSquaredPlusOne);
        }
        None
    };
    out.extend(case.finish(&kill));

    // (5) n = 2, q' even.
    let mut case = Case::new(t, Family::Psl, "(5) n = 2, q' even", "q^2+1 in {q'-1, q'+1, q'^2-1}");
    if is_power_of_two(q * q + 2) {
        case.hit(Hit::lie(LieGroup::Linear { n: 2, q: q * q + 2 }, "q^2+1 = q'-1"));
    }
    if exact_sqrt(&big(q * q + 2)).and_then(|r| r.to_u64()).is_some_and(is_power_of_two) {
        case.hit(Hit::lie(LieGroup::Linear { n: 2, q: 2 }, "q^2+1 = q'^2-1"));
    }
    case.note(format!("q^2+2 = {} is neither a power of 2 nor a square", q * q + 2));
    out.extend(case.finish_plain());
    let confirming = LieGroup::Linear { n: 2, q: q * q };
    out.push(TraceEntry {
        family: Family::Psl,
        case: "(5) n = 2, q' = q^2".into(),
        status: Status::Confirming,
        witness: format!(
            "{confirming}: q^2+1 = q'+1 with q' = {}; pi(q^2+1) and pi(2(q^2-1)) are the two components of the prime graph, so oc(G) = oc(PSp4(q))",
            q * q
        ),
        anchor: "(n, q') = (2, q^2); groups with the order components of PSp4(q) are isomorphic to it".into(),
        group: Some(confirming.to_string()),
    });
    out
}

fn psu(t: &Target) -> Vec<TraceEntry> {
    let n2 = &t.n2;
    let mut out = Vec::new();

    let mut case = Case::new(t, Family::Psu, "(1) n in {4, 6}, q' = 2", "listed odd order components");
    let listed = [5u64, 7, 11, 77];
    if listed.iter().any(|&v| big(v) == *n2) {
        case.hit(Hit::lie(LieGroup::Unitary { n: 6, q: 2 }, format!("q^2+1 in {listed:?}")));
    }
    case.note(format!("q^2+1 not in {listed:?}"));
    out.extend(case.finish_plain());

    let mut case = Case::new(t, Family::Psu, "(2) n = p+1, or n = p with (q'+1, p) = 1", "q^2+1 = (q'^p+1)/(q'+1)");
    let mut ps = Vec::new();
    for p in primes_from(3) {
        if (pw(2, p) + 1u32) / 3u32 > *n2 {
            break;
        }
        ps.push(p);
        if let Some(x) = solve_pp(n2, 2, |x| (pw(x, p) + 1u32) / (x + 1)) {
            let n = if (x + 1) % p == 0 { p + 1 } else { p };
            case.hit(Hit::lie(LieGroup::Unitary { n, q: x }, format!("p = {p}, q' = {x}")));
        }
    }
    case.note(format!("p in {ps:?}"));
    out.extend(case.finish_plain());

    let mut case = Case::new(t, Family::Psu, "(3) n = p, p | q'+1", "q^2+1 = (q'^p+1)/((q'+1)p)");
    let mut ps = Vec::new();
    for p in primes_from(3) {
        if (pw(2, p) + 1u32) / (3 * p) > *n2 {
            break;
        }
        ps.push(p);
        if let Some(x) = solve_pp(n2, 2, |x| (pw(x, p) + 1u32) / ((x + 1) * p)) {
            if (x + 1) % p == 0 {
                case.hit(Hit::lie(LieGroup::Unitary { n: p, q: x }, format!("p = {p}, q' = {x}")));
            }
        }
    }
    case.note(format!("p in {ps:?}"));
    let predicate_kill = |h: &Hit| h.group.starts_with("PSU3(").then(|| t.clause_kill(Q1Clause::ThreeQSquaredPlusTwo)).flatten();
    out.extend(case.finish(&predicate_kill));
    out
}

fn psp(t: &Target) -> Vec<TraceEntry> {
    let n2 = &t.n2;
    let q = t.q;
    let mut out = Vec::new();

    let mut case = Case::new(t, Family::Psp, "(1) n = p prime, q' in {2, 3}", "q^2+1 = (q'^p-1)/(2,q'-1)");
    for x in [2u64, 3] {
        let g = num_integer::gcd(2, x - 1);
        for p in primes_from(2) {
            let v = (pw(x, p) - 1u32) / g;
            if v > *n2 {
                break;
            }
            if v == *n2 {
                case.hit(Hit::lie(LieGroup::Symplectic { n: p, q: x }, format!("p = {p}, q' = {x}")));
            }
        }
    }
    case.note("2^p-1 and (3^p-1)/2 miss q^2+1");
    out.extend(case.finish_plain());

    let mut case = Case::new(t, Family::Psp, "(2) n = 2^m >= 2", "q^2+1 = (q'^n+1)/(2,q'-1)");
    let mut confirmed = false;
    let mut n = 2u64;
    while pw(2, n) < *n2 {
        if let Some(x) = exact_root(&big(q * q), n as u32).filter(|&x| is_power_of_two(x)) {
            if (n, x) == (2, q) {
                confirmed = true;
            } else {
                case.hit(Hit::lie(LieGroup::Symplectic { n, q: x }, format!("q'^n = q^2 with n = {n}, q' = {x}")));
            }
        }
        if let Some(x) = exact_root(&big(2 * q * q + 1), n as u32).filter(|&x| x % 2 == 1 && is_prime_power_u64(x)) {
            case.hit(Hit::lie(LieGroup::Symplectic { n, q: x }, format!("q'^n = 2q^2+1 with n = {n}, q' = {x}")));
        }
        n *= 2;
    }
    case.note("no other (n, q')");
    let predicate_kill = |h: &Hit| h.equation.contains("2q^2+1").then(|| t.clause_kill(Q1Clause::TwoQSquaredPlusOne)).flatten();
    out.extend(case.finish(&predicate_kill));
    if confirmed {
        let g = LieGroup::Symplectic { n: 2, q };
        out.push(TraceEntry {
            family: Family::Psp,
            case: "(2) n = 2, q' = q".into(),
            status: Status::Confirming,
            witness: format!("{g}: q^2+1 = q'^2+1 with q' = {q}; |K/H| = |G| = {} forces H = 1 and G = K", t.order),
            anchor: "(n, q') = (2, q)".into(),
            group: Some(g.to_string()),
        });
    }
    out
}

fn pomega(t: &Target) -> Vec<TraceEntry> {
    let n2 = &t.n2;
    let q = t.q;
    let mut out = Vec::new();
    let two_q2_plus_1 = big(2 * q * q + 1);
    let clause_iii_kill = |h: &Hit| h.equation.contains("2q^2+1").then(|| t.clause_kill(Q1Clause::TwoQSquaredPlusOne)).flatten();

    // (1) n = 2m+1, m = 2^t >= 4: q'^m = 2q^2+1.
    let mut case = Case::new(t, Family::POmega, "(1) n = 2m+1, m = 2^t >= 4", "2q^2+1 = q'^m");
    let mut m = 4u64;
    while pw(3, m) <= two_q2_plus_1 {
        if let Some(x) = exact_root(&two_q2_plus_1, m as u32).filter(|&x| x % 2 == 1 && is_prime_power_u64(x)) {
            case.hit(Hit::lie(LieGroup::OrthogonalOdd { n: m, q: x }, format!("q'^m = 2q^2+1, m = {m}")));
        }
        m *= 2;
    }
    case.note("2q^2+1 is not an m-th power with m = 2^t >= 4");
    out.extend(case.finish(&clause_iii_kill));

    // Fixed-q' series indexed by m: (case, anchor, group, q', m filter, values).
    struct Series {
        case: &'static str,
        anchor: &'static str,
        make: fn(u64) -> LieGroup,
        admissible: fn(u64) -> bool,
        param: &'static str,
        start: u64,
        values: fn(u64) -> Vec<(&'static str, BigUint)>,
    }
    let series: Vec<Series> = vec![
        Series {
            case: "(2) n = 2m+1, m prime, q' = 3",
            anchor: "q^2+1 = (3^m-1)/2",
            make: |m| LieGroup::OrthogonalOdd { n: m, q: 3 },
            admissible: |m| is_prime_u64(m),
            param: "m",
            start: 2,
            values: |m| vec![("(3^m-1)/2", (pw(3, m) - 1u32) / 2u32)],
        },
        Series {
            case: "(3) n = 2m, e = +, m >= 5 prime, q' = 2",
            anchor: "q^2+1 = (q'^m-1)/(q'-1)",
            make: |m| LieGroup::OrthogonalPlus { n: m, q: 2 },
            admissible: |m| is_prime_u64(m),
            param: "m",
            start: 5,
            values: |m| vec![("2^m-1", pw(2, m) - 1u32)],
        },
        Series {
            case: "(3) n = 2m, e = +, m >= 5 prime, q' = 3",
            anchor: "q^2+1 = (q'^m-1)/(q'-1)",
            make: |m| LieGroup::OrthogonalPlus { n: m, q: 3 },
            admissible: |m| is_prime_u64(m),
            param: "m",
            start: 5,
            values: |m| vec![("(3^m-1)/2", (pw(3, m) - 1u32) / 2u32)],
        },
        Series {
            case: "(3) n = 2m, e = +, m >= 5 prime, q' = 5",
            anchor: "q^2+1 = (q'^m-1)/(q'-1)",
            make: |m| LieGroup::OrthogonalPlus { n: m, q: 5 },
            admissible: |m| is_prime_u64(m),
            param: "m",
            start: 5,
            values: |m| vec![("(5^m-1)/4", (pw(5, m) - 1u32) / 4u32)],
        },
        Series {
            case: "(4) n = 2(m+1), e = +, m odd prime, q' = 3",
            anchor: "q^2+1 = (3^m-1)/2",
            make: |m| LieGroup::OrthogonalPlus { n: m + 1, q: 3 },
            admissible: |m| m % 2 == 1 && is_prime_u64(m),
            param: "m",
            start: 3,
            values: |m| vec![("(3^m-1)/2", (pw(3, m) - 1u32) / 2u32)],
        },
        Series {
            case: "(6) n = 2m, e = -, m >= 5 odd prime, m != 2^t+1, q' = 3",
            anchor: "q^2+1 = (3^m+1)/4",
            make: |m| LieGroup::OrthogonalMinus { n: m, q: 3 },
            admissible: |m| m >= 5 && m % 2 == 1 && is_prime_u64(m) && !(m - 1).is_power_of_two(),
            param: "m",
            start: 5,
            values: |m| vec![("(3^m+1)/4", (pw(3, m) + 1u32) / 4u32)],
        },
        Series {
            case: "(7) n = 2m, e = -, m = 2^t+1 >= 5 not prime, q' = 3",
            anchor: "q^2+1 = (3^(m-1)+1)/2",
            make: |m| LieGroup::OrthogonalMinus { n: m, q: 3 },
            admissible: |m| m >= 5 && (m - 1).is_power_of_two() && !is_prime_u64(m),
            param: "m",
            start: 5,
            values: |m| vec![("(3^(m-1)+1)/2", (pw(3, m - 1) + 1u32) / 2u32)],
        },
        Series {
            case: "(8) n = 2m, e = -, m = 2^t+1 >= 5 prime, q' = 3",
            anchor: "q^2+1 in {(3^(m-1)+1)/2, (3^m+1)/4, their product}",
            make: |m| LieGroup::OrthogonalMinus { n: m, q: 3 },
            admissible: |m| m >= 5 && (m - 1).is_power_of_two() && is_prime_u64(m),
            param: "m",
            start: 5,
            values: |m| {
                let a = (pw(3, m - 1) + 1u32) / 2u32;
                let b = (pw(3, m) + 1u32) / 4u32;
                vec![("(3^(m-1)+1)/2", a.clone()), ("(3^m+1)/4", b.clone()), ("product", a * b)]
            },
        },
        Series {
            case: "(9) n = 2(m+1), e = -, m prime, m != 2^t-1, q' = 2",
            anchor: "q^2+1 = 2^m-1",
            make: |m| LieGroup::OrthogonalMinus { n: m + 1, q: 2 },
            admissible: |m| is_prime_u64(m) && !(m + 1).is_power_of_two(),
            param: "m",
            start: 2,
            values: |m| vec![("2^m-1", pw(2, m) - 1u32)],
        },
        Series {
            case: "(10) n = 2m, e = -, m = p+1, p odd prime, q' = 2",
            anchor: "q^2+1 in {2^p+1, 2^(p+1)+1, their product}",
            make: |p| LieGroup::OrthogonalMinus { n: p + 1, q: 2 },
            admissible: |p| p % 2 == 1 && is_prime_u64(p),
            param: "p",
            start: 3,
            values: |p| {
                let a = pw(2, p) + 1u32;
                let b = pw(2, p + 1) + 1u32;
                vec![("2^p+1", a.clone()), ("2^(p+1)+1", b.clone()), ("product", a * b)]
            },
        },
    ];

    for s in &series {
        let mut case = Case::new(t, Family::POmega, s.case, s.anchor);
        let mut tried = Vec::new();
        let mut m = s.start;
        loop {
            let values = (s.values)(m);
            if values.iter().all(|(_, v)| v > n2) {
                break;
            }
            if (s.admissible)(m) {
                tried.push(m);
                for (label, v) in &values {
                    if v == n2 {
                        case.hit(Hit::lie((s.make)(m), format!("q^2+1 = {label} at {} = {m}", s.param)));
                    }
                }
            }
            m += 1;
        }
        case.note(tried_text("parameters", &tried));
        out.extend(case.finish_plain());
        if s.case.starts_with("(4)") {
            out.extend(pomega_case5(t, &clause_iii_kill));
        }
    }
    out
}

fn pomega_case5(t: &Target, predicate_kill: SpecialKill<'_>) -> Vec<TraceEntry> {
    let q = t.q;
    let mut case = Case::new(t, Family::POmega, "(5) n = 2m, e = -, m = 2^t >= 4", "q^2+1 = (q'^m+1)/(2,q'-1)");
    let mut m = 4u64;
    let q2 = big(q * q);
    let two_q2_plus_1 = big(2 * q * q + 1);
    while pw(2, m) <= two_q2_plus_1 {
        if let Some(x) = exact_root(&q2, m as u32).filter(|&x| is_power_of_two(x)) {
            case.hit(Hit::lie(LieGroup::OrthogonalMinus { n: m, q: x }, format!("q'^m = q^2, m = {m}")));
        }
        if let Some(x) = exact_root(&two_q2_plus_1, m as u32).filter(|&x| x % 2 == 1 && is_prime_power_u64(x)) {
            case.hit(Hit::lie(LieGroup::OrthogonalMinus { n: m, q: x }, format!("q'^m = 2q^2+1, m = {m}")));
        }
        m *= 2;
    }
    case.note("neither q^2 nor 2q^2+1 is an admissible m-th power");
    case.finish(predicate_kill)
}
