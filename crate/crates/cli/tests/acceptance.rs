//! Acceptance run: one line per criterion, then the seeded property suites.
//!
//! `cargo test -p germlab-cli --test acceptance -- --nocapture`

use std::time::{Duration, Instant};

use germlab::localalg::{colength, standard_basis, LocalIdeal};
use germlab::multiplicity::intersection_multiplicity;
use germlab::polyring::{parse, qi};
use germlab::{ExpVec, ExtNat, PolyQ};
use germlab_cli::{verify, RunConfig, Suite};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

const SEED: [u8; 32] = *b"germlab acceptance seed 20240917";
const PROPERTY_LIMIT: Duration = Duration::from_secs(60);

struct Line {
    ok: bool,
    text: String,
}

fn criterion(suite: Suite, limit: Duration) -> Line {
    let cfg = RunConfig::default();
    let start = Instant::now();
    let report = verify(&cfg, &[suite]).expect("default config is valid");
    let took = start.elapsed();
    let failed: Vec<&str> = report
        .cases
        .iter()
        .filter(|c| !c.pass)
        .map(|c| c.input.as_str())
        .collect();
    let ok = failed.is_empty() && took < limit && !report.cases.is_empty();
    let mut text = format!(
        "{suite:?} {:<44} {} {}/{} cases, exact (tol 0), {:.3} s (limit {} s)",
        suite.title(),
        if ok { "PASS" } else { "FAIL" },
        report.cases.len() - failed.len(),
        report.cases.len(),
        took.as_secs_f64(),
        limit.as_secs(),
    );
    if !failed.is_empty() {
        text.push_str(&format!(" failing: {failed:?}"));
    }
    Line { ok, text }
}

fn poly_from(terms: Vec<(u32, u32, i64)>) -> PolyQ {
    PolyQ::from_terms(
        2,
        terms.into_iter().map(|(i, j, c)| (ExpVec::xy(i, j), qi(c))),
    )
}

fn poly() -> impl Strategy<Value = PolyQ> {
    prop::collection::vec((0u32..4, 0u32..4, -4i64..=4), 0..6).prop_map(poly_from)
}

fn germ() -> impl Strategy<Value = PolyQ> {
    prop::collection::vec((0u32..4, 0u32..4, -4i64..=4), 1..6)
        .prop_map(|t| poly_from(t.into_iter().filter(|(i, j, _)| i + j > 0).collect()))
        .prop_filter("nonzero", |f| !f.is_zero())
}

fn property<S: Strategy>(
    name: &str,
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Line {
    let mut runner = TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::from_seed(RngAlgorithm::ChaCha, &SEED),
    );
    let start = Instant::now();
    let result = runner.run(&strategy, test);
    let took = start.elapsed().as_secs_f64();
    let ok = result.is_ok();
    let mut text = format!(
        "P  {name:<44} {} {cases} cases, {took:.3} s",
        if ok { "PASS" } else { "FAIL" }
    );
    if let Err(e) = result {
        text.push_str(&format!(" {e}"));
    }
    Line { ok, text }
}

fn property_suites() -> Vec<Line> {
    let mut lines = vec![];
    lines.push(property(
        "ring axioms",
        64,
        (poly(), poly(), poly()),
        |(a, b, c)| {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(parse(&a.to_string(), 2).unwrap(), a);
            Ok(())
        },
    ));

    let gens = vec![
        parse("x^2 - y^3", 2).unwrap(),
        parse("x*y + y^4", 2).unwrap(),
    ];
    let sb = standard_basis(&LocalIdeal::new(gens.clone()).unwrap()).unwrap();
    lines.push(property(
        "ideal members have zero normal form",
        64,
        (poly(), poly()),
        |(a, b)| {
            let member = &(&a * &gens[0]) + &(&b * &gens[1]);
            let unit = &PolyQ::one(2) + &parse("x - 3*y^2", 2).unwrap();
            prop_assert!(sb.contains(&member).unwrap());
            prop_assert!(sb.contains(&(&unit * &member)).unwrap());
            Ok(())
        },
    ));

    let staircase = (
        prop::collection::vec((0u32..7, 0u32..7), 0..4),
        1u32..8,
        1u32..8,
    );
    lines.push(property(
        "monomial colength equals staircase",
        64,
        staircase,
        |(mut exps, a, b)| {
            exps.push((a, 0));
            exps.push((0, b));
            let gens: Vec<PolyQ> = exps
                .iter()
                .map(|&(i, j)| PolyQ::monomial(2, ExpVec::xy(i, j), qi(1)))
                .collect();
            let count = (0..a)
                .flat_map(|i| (0..b).map(move |j| (i, j)))
                .filter(|&(i, j)| !exps.iter().any(|&(u, v)| i >= u && j >= v))
                .count() as u64;
            prop_assert_eq!(
                colength(&LocalIdeal::new(gens).unwrap()).unwrap(),
                ExtNat::Finite(count)
            );
            Ok(())
        },
    ));

    lines.push(property(
        "intersection symmetric and additive",
        48,
        (germ(), germ(), germ()),
        |(f, g, h)| {
            let ifg = intersection_multiplicity(&f, &g).unwrap();
            prop_assert_eq!(ifg, intersection_multiplicity(&g, &f).unwrap());
            let ifh = intersection_multiplicity(&f, &h).unwrap();
            prop_assert_eq!(
                intersection_multiplicity(&f, &(&g * &h)).unwrap(),
                ifg + ifh
            );
            Ok(())
        },
    ));

    lines.push(property(
        "powers of the maximal ideal",
        12,
        1u32..=12,
        |k| {
            let gens = (0..=k)
                .map(|i| PolyQ::monomial(2, ExpVec::xy(i, k - i), qi(1)))
                .collect();
            let mk = LocalIdeal::new(gens).unwrap();
            prop_assert_eq!(
                colength(&mk).unwrap(),
                ExtNat::Finite(u64::from(k * (k + 1) / 2))
            );
            Ok(())
        },
    ));
    lines
}

#[test]
fn acceptance() {
    let limits = [
        (Suite::V1, 1),
        (Suite::V2, 1),
        (Suite::V3, 5),
        (Suite::V4, 10),
        (Suite::V5, 5),
        (Suite::V6, 1),
    ];
    let mut lines: Vec<Line> = limits
        .iter()
        .map(|&(s, l)| criterion(s, Duration::from_secs(l)))
        .collect();

    let start = Instant::now();
    let props = property_suites();
    let took = start.elapsed();
    let ok = props.iter().all(|l| l.ok) && took < PROPERTY_LIMIT;
    lines.extend(props);
    lines.push(Line {
        ok,
        text: format!(
            "P  {:<44} {} {:.3} s (limit {} s)",
            "property suites total",
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            PROPERTY_LIMIT.as_secs()
        ),
    });

    for line in &lines {
        println!("{}", line.text);
    }
    assert!(lines.iter().all(|l| l.ok), "acceptance failures above");
}
