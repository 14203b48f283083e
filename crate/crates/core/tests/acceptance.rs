//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Built without the libtest harness so the report is always printed by
//! `cargo test`. Criteria that fail against the computed data are printed as
//! FAIL together with the numbers; the test pins those numbers so a change in
//! either direction is noticed.

use std::time::{Duration, Instant};

use jetseries::combinat::{count_constrained, dk1_conditions, Constraint, ConstraintSet};
use jetseries::jetquot::{contains, hilbert_series};
use jetseries::models::{self, formulas::expand, N2_EXTRA_C};
use jetseries::qseries::{fermionic_sum, n1_product, partition_stats, theta_over_eta, FermionicForm, PartitionStat, Series};
use jetseries::superring::{parse_polynomial, JetVariable, Monomial, Polynomial, VariableSpec};
use jetseries::{Rational, RingSpec};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn report(n: u32, title: &str, budget: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let o = f();
    let took = start.elapsed();
    let in_time = took <= budget;
    let pass = o.pass && in_time;
    println!(
        "{} criterion {n}: {title} [{:.2?}, budget {:?}] {}",
        if pass { "PASS" } else { "FAIL" },
        took,
        budget,
        o.detail
    );
    pass
}

fn jet(key: &str, maxdeg2: u32) -> Series {
    hilbert_series(&models::lookup(key).unwrap().spec, maxdeg2).unwrap().to_series()
}

fn ints(s: &Series) -> Vec<i64> {
    s.coefficients().iter().map(|c| i64::try_from(c).unwrap()).collect()
}

fn first_difference(a: &Series, b: &Series) -> Option<u32> {
    (0..=a.maxdeg2().min(b.maxdeg2())).find(|&d| a.coeff(d) != b.coeff(d))
}

const N2_STATED_JET: [i64; 11] = [1, 0, 1, 2, 2, 2, 3, 4, 5, 7, 7];
const N2_CHARACTER: [i64; 11] = [1, 0, 1, 2, 2, 2, 3, 4, 5, 6, 7];

fn c1_n2_counterexample() -> Outcome {
    let j = ints(&jet("n2_c1:ab", 10));
    let ch = ints(&theta_over_eta(3, 10));
    assert_eq!(ch, N2_CHARACTER);
    // computed data, pinned: the quotient agrees with the character at 9/2
    assert_eq!(j, N2_CHARACTER);
    let ok = j == N2_STATED_JET && ch == N2_CHARACTER;
    outcome(ok, format!("jet {j:?}, expected {N2_STATED_JET:?}; character {ch:?}; no mismatch through 10"))
}

fn c2_kernel_witness() -> Outcome {
    let ab = models::lookup("n2_c1:ab").unwrap().spec;
    let abc = models::lookup("n2_c1:abc").unwrap().spec;
    let c = parse_polynomial(&ab.variables, N2_EXTRA_C).unwrap();
    let before = contains(&ab, &c, 10).unwrap();
    let after = contains(&abc, &c, 10).unwrap();
    let j = ints(&hilbert_series(&abc, 10).unwrap().to_series());
    assert!(!before && after);
    assert_eq!(j, [1, 0, 1, 2, 2, 2, 3, 4, 5, 5, 7]);
    let alt = "Gm(-9/2) + 1/3 * h(-3) * Gm(-3/2) + Gm(-7/2) * h(-1) + 1/3 * Gm(-5/2) * h(-1)^2";
    let alt = parse_polynomial(&ab.variables, alt).unwrap();
    let alt_spec = ab.clone().with_extras(vec![alt.clone()]);
    let alt_in = contains(&ab, &alt, 10).unwrap();
    let alt_j = ints(&hilbert_series(&alt_spec, 10).unwrap().to_series());
    let equal = j == N2_CHARACTER;
    outcome(
        !before && after && equal,
        format!(
            "c in ideal: before {before}, after {after}; jet with c {j:?} vs character {N2_CHARACTER:?}; \
             opposite h-sign witness: in ideal {alt_in}, jet {alt_j:?}"
        ),
    )
}

fn c3_rogers_ramanujan() -> Outcome {
    let vars = vec![VariableSpec::even("x", 2)];
    let spec = RingSpec::new(vars.clone(), vec![parse_polynomial(&vars, "x^2").unwrap()]);
    let j = hilbert_series(&spec, 40).unwrap().to_series();
    let cs = ConstraintSet::new(vec![Constraint::DifferenceAtDistance { var: 0, distance: 1, gap: 2 }]);
    let count = count_constrained(&spec.variables, &cs, 40);
    let fermionic = fermionic_sum(&FermionicForm::new(vec![vec![2]], vec![0]), 40).unwrap();
    let ok = j == count && count == fermionic;
    outcome(ok, format!("jet = difference-two count = fermionic sum through 40: {ok}"))
}

fn c4_lattice() -> Outcome {
    let j2 = jet("lattice:2", 16);
    let t2 = theta_over_eta(2, 16);
    let j3 = jet("lattice:3", 20);
    let t3 = theta_over_eta(3, 20);
    let dominated = |j: &Series, t: &Series| (0..=t.maxdeg2()).all(|d| j.coeff(d) >= t.coeff(d));
    let p2_equal = j2 == t2;
    let first3 = first_difference(&j3, &t3);
    assert!(dominated(&j2, &t2) && dominated(&j3, &t3) && p2_equal);
    // computed data, pinned
    assert_eq!(first3, Some(8));
    let ok = first3 == Some(9);
    outcome(
        ok,
        format!(
            "jet >= theta for p=2,3; p=2 equal through 16; p=3 first differs at {first3:?} \
             (jet {} vs {}), stated 9",
            j3.coeff(8),
            t3.coeff(8)
        ),
    )
}

fn c5_graphs() -> Outcome {
    let mut bad = Vec::new();
    for k in 2..=6 {
        if expand(&format!("master:A{k}"), 30).unwrap() != expand(&format!("jm:A{k}"), 30).unwrap() {
            bad.push(format!("A{k} closed form"));
        }
    }
    for k in [3, 5] {
        if expand(&format!("master2:C{k}"), 30).unwrap() != expand(&format!("jm2:C{k}"), 30).unwrap() {
            bad.push(format!("C{k} closed form"));
        }
    }
    for k in 2..=4 {
        if jet(&format!("graph:A{k}"), 20) != expand(&format!("jm:A{k}"), 20).unwrap() {
            bad.push(format!("A{k} jet"));
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { "all agree".to_string() } else { format!("failed: {bad:?}") })
}

fn c6_combinatorics() -> Outcome {
    use PartitionStat::*;
    let m = 2 * 17;
    let e = Series::<BigInt>::pochhammer(None, m);
    let q = Series::<BigInt>::monomial(BigInt::from(1), 2, m);
    let f = |key: &str| expand(key, m).unwrap();
    let a2 = f("jm:A2");
    let a3 = q.mul(&f("jm:A3"));
    let a4 = q.mul(&e).mul(&f("jm:A4"));
    let a5 = q.mul(&e).mul(&e).mul(&f("jm:A5"));
    let a6 = q.mul(&e).mul(&e).mul(&f("jm:A6"));
    let c3 = q.mul(&e).mul(&f("jm2:C3"));
    let c5 = q.mul(&e).mul(&f("jm2:C5"));
    let st = |k, n| BigInt::from(partition_stats(k, n));
    let mut bad = Vec::new();
    for n in 1..=15u32 {
        let partial: u64 = (0..=n).map(|i| partition_stats(P, i)).sum();
        let checks = [
            ("A2", a2.coeff_q(n) == st(EvenOrOne, n) && a2.coeff_q(n) == BigInt::from(partial)),
            ("A3", a3.coeff_q(n) == st(TwoColored, n)),
            ("A4", a4.coeff_q(n) == st(TotalParts, n)),
            ("A5", a5.coeff_q(n) == st(LargestPartMultSum, n)),
            ("A6", a6.coeff_q(n) == BigInt::from(2) * st(TotalParts, n) - st(P, n)),
            ("C3", c3.coeff_q(n) == st(LeastVsGreatest, n)),
            ("C5", c5.coeff_q(n) == st(Np, n)),
        ];
        bad.extend(checks.iter().filter(|c| !c.1).map(|c| format!("{} at n={n}", c.0)));
    }
    let spot = partition_stats(TotalParts, 4) == 12 && partition_stats(Np, 4) == 20;
    let spot = spot && partition_stats(LeastVsGreatest, 3) == 2;
    outcome(
        bad.is_empty() && spot,
        if bad.is_empty() {
            "seven interpretations hold for 1 <= n <= 15 (A5 and C3 after multiplying by q)".to_string()
        } else {
            format!("failed: {bad:?}")
        },
    )
}

fn c7_ml() -> Outcome {
    let mut bad = Vec::new();
    for n in [3, 4] {
        let lhs = expand(&format!("ml:sl{n}:lhs"), 24).unwrap();
        let rhs = expand(&format!("ml:sl{n}:rhs"), 24).unwrap();
        if lhs != rhs {
            bad.push(format!("sl{n} sides"));
        }
        if jet(&format!("sln:{n}"), 14) != rhs.truncate(14) {
            bad.push(format!("sl{n} jet"));
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { "all agree".to_string() } else { format!("failed: {bad:?}") })
}

fn c8_n1() -> Outcome {
    let mut bad = Vec::new();
    for k in [2, 3] {
        let prod = n1_product(k, 24);
        let m = models::lookup(&format!("n1:{k}")).unwrap();
        let count = count_constrained(&m.spec.variables, &dk1_conditions(k).unwrap(), 24);
        let j = hilbert_series(&m.spec, 24).unwrap().to_series();
        if prod != count || count != j {
            bad.push(format!("k={k}"));
        }
    }
    let mut firsts = Vec::new();
    for key in ["n1odd:3,5", "n1odd:3,7"] {
        let m = models::lookup(key).unwrap();
        let r = models::verify(&m, m.default_maxdeg2, &Default::default()).unwrap();
        if r.verdict != models::Verdict::Mismatch {
            bad.push(key.to_string());
        }
        firsts.push(format!("{key} first mismatch at {:?}", r.mismatch_degree2));
    }
    outcome(bad.is_empty(), if bad.is_empty() { firsts.join(", ") } else { format!("failed: {bad:?}") })
}

fn c9_extvir() -> Outcome {
    let xy = jet("extvir:xy", 32);
    let sum = jet("extvir:uv_sum", 32);
    let mixed = jet("extvir:uv_mixed", 32);
    let pair = expand("extvir:pair", 32).unwrap();
    let ok = xy == sum && sum == mixed && mixed == pair;
    outcome(ok, format!("three jet series and the double sum agree through 32: {ok}"))
}

fn random_poly(vars: &[VariableSpec], odd: bool, rng: &mut StdRng) -> Polynomial<Rational> {
    let mut p = Polynomial::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let mut factors = Vec::new();
        let mut parity = false;
        for _ in 0..rng.gen_range(0..=3) {
            let v = JetVariable::new(vars, rng.gen_range(0..vars.len()), rng.gen_range(0..3));
            parity ^= v.odd;
            factors.push(v);
        }
        if parity != odd {
            let odd_base = vars.iter().position(|v| v.parity.is_odd()).unwrap();
            factors.push(JetVariable::new(vars, odd_base, rng.gen_range(0..3)));
        }
        let c = Rational::from_integer(rng.gen_range(-3i64..=3).into());
        p = p.add(&Polynomial::product_of(&factors).scale(&c));
    }
    p
}

fn ring_properties(cases: u32) -> Result<(), String> {
    let vars = models::n2_variables();
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    let strategy = (any::<u64>(), any::<bool>(), any::<bool>());
    runner
        .run(&strategy, |(seed, pa, pb)| {
            let mut rng = StdRng::seed_from_u64(seed);
            let a = random_poly(&vars, pa, &mut rng);
            let b = random_poly(&vars, pb, &mut rng);
            let c = random_poly(&vars, false, &mut rng);
            let ab = a.mul(&b);
            let sign = if pa && pb { -1 } else { 1 };
            prop_assert_eq!(&ab, &b.mul(&a).scale(&Rational::from_integer(sign.into())));
            prop_assert_eq!(ab.mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(ab.derive(), a.derive().mul(&b).add(&a.mul(&b.derive())));
            for (m, _) in ab.terms() {
                prop_assert_eq!(m.parity().is_odd(), pa != pb);
                let d = Polynomial::<Rational>::term(Rational::from_integer(1.into()), m.clone()).derive();
                for (dm, _) in d.terms() {
                    prop_assert_eq!(dm.degree2(), m.degree2() + 2);
                }
            }
            let x = JetVariable::new(&vars, 0, rng.gen_range(0..3));
            let xm = Polynomial::<Rational>::term(Rational::from_integer(1.into()), Monomial::var(x));
            prop_assert!(xm.mul(&xm).is_zero());
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn rank_invariance(shuffles: usize, cap: u32) -> Result<(), String> {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for m in models::registry() {
        let maxdeg2 = m.default_maxdeg2.min(cap);
        let base = hilbert_series(&m.spec, maxdeg2).map_err(|e| e.to_string())?;
        for _ in 0..shuffles {
            let mut spec = m.spec.clone();
            spec.relations.shuffle(&mut rng);
            spec.extra_generators.shuffle(&mut rng);
            let scale = |p: &mut Polynomial<Rational>, rng: &mut StdRng| {
                let num = rng.gen_range(1i64..=7) * if rng.gen_bool(0.5) { -1 } else { 1 };
                *p = p.scale(&Rational::new(num.into(), rng.gen_range(1i64..=5).into()));
            };
            spec.relations.iter_mut().for_each(|p| scale(p, &mut rng));
            spec.extra_generators.iter_mut().for_each(|p| scale(p, &mut rng));
            let hs = hilbert_series(&spec, maxdeg2).map_err(|e| e.to_string())?;
            if hs != base {
                return Err(format!("{} changed under a shuffle", m.key));
            }
        }
    }
    Ok(())
}

fn truncation_monotone() -> Result<(), String> {
    for m in models::registry() {
        let top = m.default_maxdeg2.min(16);
        let full = hilbert_series(&m.spec, top).map_err(|e| e.to_string())?;
        for d in [0, top / 3, top / 2, top.saturating_sub(1)] {
            let part = hilbert_series(&m.spec, d).map_err(|e| e.to_string())?;
            if part.coefficients[..] != full.coefficients[..=d as usize] {
                return Err(format!("{} at maxdeg2 {d}", m.key));
            }
        }
    }
    Ok(())
}

fn sandwich() -> Result<usize, String> {
    let mut checked = 0;
    for m in models::registry() {
        if m.character.is_none() || m.spanning.is_none() {
            continue;
        }
        let d = m.default_maxdeg2;
        let ch = m.character(d).map_err(|e| e.to_string())?;
        let j = hilbert_series(&m.spec, d).map_err(|e| e.to_string())?.to_series();
        let sp = m.spanning_count(d).unwrap();
        for k in 0..=d {
            if !(ch.coeff(k) <= j.coeff(k) && j.coeff(k) <= sp.coeff(k)) {
                return Err(format!("{} at degree2 {k}", m.key));
            }
        }
        checked += 1;
    }
    Ok(checked)
}

fn c10_properties() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    let mut note = |name: &str, r: Result<String, String>| match r {
        Ok(s) => parts.push(format!("{name} ok{s}")),
        Err(e) => {
            ok = false;
            parts.push(format!("{name} FAILED: {e}"));
        }
    };
    note("ring laws on 1000 cases", ring_properties(1000).map(|_| String::new()));
    note("rank invariance x100", rank_invariance(100, 8).map(|_| String::new()));
    note("truncation monotonicity", truncation_monotone().map(|_| String::new()));
    note("sandwich", sandwich().map(|n| format!(" ({n} models)")));
    outcome(ok, parts.join("; "))
}

fn main() {
    let s = Duration::from_secs;
    let results = [
        ("1", report(1, "N=2 counterexample", s(10), c1_n2_counterexample)),
        ("2", report(2, "kernel witness", s(30), c2_kernel_witness)),
        ("3", report(3, "Rogers-Ramanujan chain", s(5), c3_rogers_ramanujan)),
        ("4", report(4, "lattice models", s(60), c4_lattice)),
        ("5", report(5, "graph identities", s(60), c5_graphs)),
        ("6", report(6, "combinatorial interpretations", s(10), c6_combinatorics)),
        ("7", report(7, "ML identity", s(120), c7_ml)),
        ("8", report(8, "N=1 minimal models", s(120), c8_n1)),
        ("9", report(9, "extended Virasoro", s(60), c9_extvir)),
        ("10", report(10, "property suites", s(120), c10_properties)),
    ];
    // 1, 2 and 4 disagree with the stated values; their computed data is
    // pinned above. Everything else must pass.
    let known = ["1", "2", "4"];
    let unexpected: Vec<&str> = results.iter().filter(|(n, p)| !p && !known.contains(n)).map(|(n, _)| *n).collect();
    assert!(unexpected.is_empty(), "criteria failed: {unexpected:?}");
}
