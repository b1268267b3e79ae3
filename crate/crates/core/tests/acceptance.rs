//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use proptest::test_runner::{Config, TestCaseError, TestRunner};

use schubert::bp::FactorChain;
use schubert::hecke::{brute_force_profile, check_identities, fiber_profile, smallness, HeckeAlgebra};
use schubert::resolution::tables::regenerate_tables;
use schubert::resolution::{
    certify, classify, validate, zelevinskii_applies, ClassificationReport,
    ClassifyConfig, ResolutionData, Route, SearchConfig, Searcher,
};
use schubert::{CartanType, CoxeterGroup, Error, ParabolicSet};

use common::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(
        elapsed < limit,
        format!("took {:.1}s, limit {}s", elapsed.as_secs_f64(), limit.as_secs()),
    )
}

fn type_a(rank: usize) -> CoxeterGroup {
    CoxeterGroup::type_a(rank).unwrap()
}

fn s(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Every certified resolution in a report satisfies the profile identities.
fn report_profiles_consistent(g: &CoxeterGroup, r: &ClassificationReport) -> Result<(), String> {
    let h = HeckeAlgebra::new(g);
    for e in &r.elements {
        let Some(data) = &e.data else { continue };
        let sets: Vec<ParabolicSet> = data.iter().map(|d| ParabolicSet::from_indices(d.iter().copied())).collect();
        profile_consistency(&h, &sets).map_err(|m| format!("{}: {m}", e.w))?;
    }
    Ok(())
}

fn s5_classification() -> Outcome {
    let start = Instant::now();
    let g = type_a(4);
    let r = classify(&g, ClassifyConfig::default()).map_err(s)?;
    let c = r.counts;
    ensure(
        (c.total, c.small, c.smooth, c.none) == (120, 119, 88, 1),
        format!("counts {c:?}"),
    )?;
    ensure(r.failures() == ["4 5 3 1 2"], format!("failures {:?}", r.failures()))?;
    within(start.elapsed(), Duration::from_secs(30))?;
    report_profiles_consistent(&g, &r)?;
    Ok(format!("120/119/88, failure 4 5 3 1 2, {:.2}s", start.elapsed().as_secs_f64()))
}

fn s6_classification() -> Outcome {
    let start = Instant::now();
    let g = type_a(5);
    let r = classify(&g, ClassifyConfig::default()).map_err(s)?;
    let elapsed = start.elapsed();
    let c = r.counts;
    ensure(
        (c.total, c.small, c.smooth, c.none) == (720, 701, 366, 19),
        format!("counts {c:?}"),
    )?;
    let failures = r.failures();
    for f in &failures {
        let inv = g.format(g.inverse(g.parse(f).map_err(s)?));
        ensure(failures.contains(&inv.as_str()), format!("inverse of {f} is small"))?;
    }
    within(elapsed, Duration::from_secs(600))?;
    report_profiles_consistent(&g, &r)?;
    Ok(format!(
        "720/701/366, 19 failures closed under inverse, {:.1}s",
        elapsed.as_secs_f64()
    ))
}

fn tables() -> Outcome {
    let (g5, g6) = (type_a(4), type_a(5));
    let (h5, h6) = (HeckeAlgebra::new(&g5), HeckeAlgebra::new(&g6));
    let (s5, s6) = (
        Searcher::new(&h5, SearchConfig::default()),
        Searcher::new(&h6, SearchConfig::default()),
    );
    let r = regenerate_tables(&s5, &s6).map_err(s)?;
    ensure(r.table1.len() == 9 && r.table2.len() == 53, "row counts")?;
    for row in r.table1.iter().chain(&r.table2) {
        ensure(row.passed(), format!("row {} not regenerated", row.w))?;
    }
    let variants = r.table1.iter().chain(&r.table2).filter(|r| r.is_variant()).count();
    Ok(format!("9 + 53 rows certified, fields match, {variants} w1 variants"))
}

fn zelevinskii() -> Outcome {
    let mut total = 0;
    for rank in 1..=5 {
        let g = type_a(rank);
        let h = HeckeAlgebra::new(&g);
        let searcher = Searcher::new(&h, SearchConfig::default());
        for w in g.elements().filter(|&w| zelevinskii_applies(&g, w)) {
            let r = searcher
                .zelevinskii_route(w)
                .map_err(s)?
                .ok_or_else(|| format!("no Zelevinskii data for {}", g.format(w)))?;
            ensure(
                r.data.first() == g.left_descents(w) && r.data.last() == g.right_descents(w),
                format!("{}: ends are not the descent sets", g.format(w)),
            )?;
            ensure(r.certificate.is_small(), format!("{} not small", g.format(w)))?;
            total += 1;
        }
    }
    Ok(format!("{total} elements in S2..S6"))
}

fn example_4231_and_a2() -> Outcome {
    let g = type_a(3);
    let h = HeckeAlgebra::new(&g);
    let w = g.parse("4 2 3 1").map_err(s)?;
    for text in ["1,3|2,3|1,3", "1,3|1,2|1,3"] {
        let d = ResolutionData::parse(w, text).map_err(s)?;
        let r = certify(&h, &d, Route::Given).map_err(|e| format!("{text}: {e}"))?;
        ensure(r.certificate.is_small(), format!("{text} not small"))?;
    }
    let g2 = type_a(2);
    let h2 = HeckeAlgebra::new(&g2);
    let d = ResolutionData::parse(g2.parse("3 2 1").map_err(s)?, "1|2|1").map_err(s)?;
    let p = validate(&h2, &d).map_err(s)?;
    ensure(p.is_birational(), "1|2|1 not birational")?;
    ensure(!smallness(&g2, &p).map_err(s)?.is_small(), "1|2|1 is small")?;
    ensure(
        matches!(certify(&h2, &d, Route::Given), Err(Error::NotSmall { .. })),
        "certify accepts 1|2|1",
    )?;
    Ok("both data small; 1|2|1 birational, not small".into())
}

fn c2_negative() -> Outcome {
    let g = CoxeterGroup::new("C2".parse::<CartanType>().map_err(s)?).map_err(s)?;
    let h = HeckeAlgebra::new(&g);
    let w = g.parse("s2s1s2").map_err(s)?;
    let sets: Vec<ParabolicSet> = g.all_simple().subsets().filter(|j| !j.is_empty()).collect();
    let (mut chains, mut onto, mut birational) = (0, 0, 0);
    let mut frontier: Vec<Vec<ParabolicSet>> = vec![vec![]];
    for _ in 1..=6 {
        let mut next = Vec::new();
        for prefix in &frontier {
            for &j in &sets {
                let mut data = prefix.clone();
                data.push(j);
                chains += 1;
                let chain = FactorChain::parabolic(&g, &data).map_err(s)?;
                if chain.target(&g) == w {
                    onto += 1;
                    let p = fiber_profile(&h, &chain).map_err(s)?;
                    check_identities(&h, &p).map_err(s)?;
                    birational += usize::from(p.is_birational());
                    ensure(!p.is_isomorphism(), format!("isomorphism from {data:?}"))?;
                }
                next.push(data);
            }
        }
        frontier = next;
    }
    ensure(birational > 0, "enumeration found no resolution at all")?;
    Ok(format!(
        "{chains} chains up to 6 sets, {onto} onto X_w, {birational} birational, no isomorphism"
    ))
}

fn s7_spot_check() -> Outcome {
    let start = Instant::now();
    let g = type_a(6);
    let h = HeckeAlgebra::new(&g);
    let w = g.parse("6 4 5 7 3 2 1").map_err(s)?;
    let r = Searcher::new(&h, SearchConfig::default())
        .small_via_complete_bp(w)
        .map_err(s)?
        .ok_or("complete BP route found nothing")?;
    ensure(r.route == Route::CompleteBp, format!("route {}", r.route.as_str()))?;
    ensure(r.certificate.is_small(), "not small")?;
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!("{}, {:.2}s", r.data, start.elapsed().as_secs_f64()))
}

fn oracle_cross_check() -> Outcome {
    let cases: [(usize, &str); 12] = [
        (1, "1"),
        (1, "1|1"),
        (2, "1|2|1"),
        (2, "1,2"),
        (2, "1|2"),
        (2, "2|1,2|1"),
        (3, "1,3|2,3|1,3"),
        (3, "1,3|1,2|1,3"),
        (3, "1|2|3|2|1"),
        (3, "2|1,3|2"),
        (3, "1,2|2,3"),
        (3, "1,3|2|1,3"),
    ];
    let mut compared = 0;
    for (rank, text) in cases {
        let g = type_a(rank);
        let h = HeckeAlgebra::new(&g);
        let sets: Vec<ParabolicSet> = text.split('|').map(str::parse).collect::<Result<_, _>>().map_err(s)?;
        let chain = FactorChain::parabolic(&g, &sets).map_err(s)?;
        let p = fiber_profile(&h, &chain).map_err(s)?;
        for q in [2, 3] {
            let brute = brute_force_profile(&g, &chain, q).map_err(s)?;
            for u in g.elements() {
                let counted = brute.iter().find(|c| c.0 == u).map_or(0, |c| c.1);
                ensure(
                    p.n(u).eval(q as i128) == counted,
                    format!("A{rank} {text} at q={q}, u={}", g.format(u)),
                )?;
                compared += 1;
            }
        }
    }
    Ok(format!("{} chains, {compared} cell counts equal at q=2,3", cases.len()))
}

const SAMPLED_CASES: u32 = 10_000;

/// One fresh runner per suite: a runner counts cases across calls.
fn run_sampled(name: &str, test: impl Fn(usize, usize, usize, u32) -> Check) -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases: SAMPLED_CASES,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&(0usize..720, 0usize..720, 0usize..720, 0u32..32), |(i, j, k, bits)| {
            test(i, j, k, bits).map_err(TestCaseError::fail)
        })
        .map_err(|e| format!("{name}: {e}"))
}

fn property_suites() -> Outcome {
    // exhaustive on S4
    let g4 = type_a(3);
    let h4 = HeckeAlgebra::new(&g4);
    for v in g4.elements() {
        for w in g4.elements() {
            for c in g4.elements() {
                demazure_laws(&g4, v, w, c)?;
            }
            monoid_reduced_expressions(&g4, v, w)?;
            sigma_facts(&g4, v, w)?;
            tau_facts(&g4, v, w)?;
            tau_reduced_decomposition(&g4, v, w)?;
        }
        for j in g4.all_simple().subsets() {
            sigma_is_tau(&g4, v, j)?;
            parabolic_decomposition(&g4, v, j)?;
            bp_isom_certifies(&h4, v, j)?;
        }
        smooth_factorization_certifies(&h4, v)?;
        hecke_generators(&h4, v)?;
    }
    for j in g4.all_simple().subsets() {
        hecke_parabolic_idempotent(&h4, j)?;
    }

    // complete BP against patterns, exhaustive on S4..S6; smooth checks on all of S5, S6
    for rank in 3..=5 {
        let g = type_a(rank);
        let h = HeckeAlgebra::new(&g);
        for w in g.elements() {
            complete_bp_matches_patterns(&g, w)?;
            if rank >= 4 {
                smooth_factorization_certifies(&h, w)?;
            }
        }
    }

    // sampled on S6
    let g6 = type_a(5);
    let h6 = HeckeAlgebra::new(&g6);
    let e = |i| elem(&g6, i);
    run_sampled("demazure", |i, j, k, _| demazure_laws(&g6, e(i), e(j), e(k)))?;
    run_sampled("monoid", |i, j, _, _| monoid_reduced_expressions(&g6, e(i), e(j)))?;
    run_sampled("sigma", |i, j, _, _| sigma_facts(&g6, e(i), e(j)))?;
    run_sampled("tau", |i, j, _, _| tau_facts(&g6, e(i), e(j)))?;
    run_sampled("sigma is tau", |i, _, _, b| sigma_is_tau(&g6, e(i), set(&g6, b)))?;
    run_sampled("tau decomposition", |i, j, _, _| {
        tau_reduced_decomposition(&g6, e(i), e(j))
    })?;
    run_sampled("parabolic", |i, _, _, b| parabolic_decomposition(&g6, e(i), set(&g6, b)))?;
    run_sampled("bp_isom", |i, _, _, b| bp_isom_certifies(&h6, e(i), set(&g6, b)))?;
    run_sampled("hecke", |i, _, _, b| {
        hecke_generators(&h6, e(i))?;
        hecke_parabolic_idempotent(&h6, set(&g6, b))
    })?;
    Ok(format!("S4 exhaustive, {SAMPLED_CASES} cases per S6 suite"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("S5 classification", s5_classification),
        ("S6 classification", s6_classification),
        ("tables", tables),
        ("Zelevinskii route", zelevinskii),
        ("4231 and A2 Bott-Samelson", example_4231_and_a2),
        ("C2 negative", c2_negative),
        ("S7 spot check", s7_spot_check),
        ("oracle cross-check", oracle_cross_check),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS {} {name}: {msg} [{secs:.1}s]", n + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {} {name}: {msg} [{secs:.1}s]", n + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} of {} criteria failed", criteria.len());
        ExitCode::FAILURE
    }
}
