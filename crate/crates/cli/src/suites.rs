//! Verification suites V1 to V6.

use std::fmt;
use std::str::FromStr;

use germlab::jaceuler::{
    chi_jacobian, count_lattice_paths, enumerate_semimodules, gw_local_sum, rational_catalan,
    semigroup, yz_series, LedgerCurve, LocalSingularity,
};
use germlab::localalg::{milnor_with, Limits, LocalIdeal};
use germlab::multiplicity::{
    dynamic_multiplicity, hilbert_samuel_sequence, hs_multiplicity_with,
    intersection_multiplicity_with, min_line_multiplicity, DynamicParams, HsConfig,
};
use germlab::polyring::parse;
use germlab::resolution::{blowup_tree_with, ResolutionConfig};
use germlab::{ExtNat, PolyQ};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::report::{Expected, Provenance, Report, VerificationCase};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    V1,
    V2,
    V3,
    V4,
    V5,
    V6,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::V1,
        Suite::V2,
        Suite::V3,
        Suite::V4,
        Suite::V5,
        Suite::V6,
    ];

    pub fn title(&self) -> &'static str {
        match self {
            Suite::V1 => "Hilbert-Samuel multiplicity equals order",
            Suite::V2 => "minimum over lines equals order",
            Suite::V3 => "dynamic multiplicity equals order",
            Suite::V4 => "Milnor relation and delta identities",
            Suite::V5 => "three counts of Jacobian cells agree",
            Suite::V6 => "curve-counting series and local sums",
        }
    }

    /// Parses `all` or a comma separated list such as `V1,v3`.
    pub fn parse_list(items: &[String]) -> Result<Vec<Suite>, CliError> {
        let mut out = Vec::new();
        for item in items.iter().flat_map(|s| s.split(',')) {
            let item = item.trim();
            if item.eq_ignore_ascii_case("all") {
                out.extend(Suite::ALL);
            } else if !item.is_empty() {
                out.push(item.parse()?);
            }
        }
        out.sort();
        out.dedup();
        if out.is_empty() {
            return Err(CliError::Config("no suites selected".into()));
        }
        Ok(out)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Suite::ALL
            .into_iter()
            .find(|v| v.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| CliError::Config(format!("unknown suite '{s}', expected V1..V6 or all")))
    }
}

struct Ctx {
    limits: Limits,
    dynamic: DynamicParams,
}

impl Ctx {
    fn new(cfg: &RunConfig) -> Self {
        Ctx {
            limits: Limits {
                step_cap: cfg.step_cap,
            },
            dynamic: DynamicParams {
                eps: cfg.eps,
                tau: cfg.tau,
                trials: cfg.trials,
                seed: cfg.seed,
                ..DynamicParams::default()
            },
        }
    }

    fn resolution(&self) -> ResolutionConfig {
        ResolutionConfig {
            limits: self.limits,
            ..Default::default()
        }
    }
}

type Outcome = Result<Value, String>;

struct Check {
    suite: Suite,
    input: String,
    run: Box<dyn Fn(&Ctx) -> CaseParts + Send + Sync>,
}

struct CaseParts {
    expected: Outcome,
    provenance: Provenance,
    oracle: String,
    actual: Outcome,
    detail: Option<Value>,
}

fn parts(expected: Outcome, provenance: Provenance, oracle: &str, actual: Outcome) -> CaseParts {
    CaseParts {
        expected,
        provenance,
        oracle: oracle.to_string(),
        actual,
        detail: None,
    }
}

fn err_json(e: &str) -> Value {
    json!({ "error": e })
}

fn big(b: &impl ToString) -> Value {
    let s = b.to_string();
    s.parse::<u64>()
        .map(Value::from)
        .unwrap_or(Value::String(s))
}

fn coprime(mut a: u64, mut b: u64) -> bool {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a == 1
}

fn germ(s: &str) -> Result<PolyQ, String> {
    parse(s, 2).map_err(|e| e.to_string())
}

fn ord_of(f: &PolyQ) -> Outcome {
    match f.ord() {
        ExtNat::Finite(d) => Ok(json!(d)),
        ExtNat::Infinite => Err("zero polynomial".into()),
    }
}

fn finite(v: ExtNat) -> Result<u64, String> {
    v.finite().ok_or_else(|| "infinite".to_string())
}

fn build_checks(cfg: &RunConfig, suites: &[Suite]) -> Vec<Check> {
    let mut checks: Vec<Check> = Vec::new();
    let mut push =
        |suite: Suite, input: String, run: Box<dyn Fn(&Ctx) -> CaseParts + Send + Sync>| {
            if suites.contains(&suite) {
                checks.push(Check { suite, input, run });
            }
        };
    let corpus = cfg.corpus.clone();

    for s in &corpus {
        let s = s.clone();
        push(
            Suite::V1,
            s.clone(),
            Box::new(move |ctx| {
                let f = germ(&s);
                let expected = f.as_ref().map_err(Clone::clone).and_then(ord_of);
                let actual = f.and_then(|f| {
                    let ideal = LocalIdeal::maximal_in(f).map_err(|e| e.to_string())?;
                    let rec = hs_multiplicity_with(
                        &ideal,
                        HsConfig {
                            limits: ctx.limits,
                            ..Default::default()
                        },
                    )
                    .map_err(|e| e.to_string())?;
                    rec.e
                        .map(|e| json!(e))
                        .ok_or_else(|| "no stabilisation".to_string())
                });
                parts(
                    expected,
                    Provenance::Derived,
                    "lowest total degree of f",
                    actual,
                )
            }),
        );
    }
    push(
        Suite::V1,
        "Hilbert-Samuel lengths of x^2 - y^3".into(),
        Box::new(|ctx| {
            let actual = (|| {
                let f = germ("x^2 - y^3")?;
                let ideal = LocalIdeal::maximal_in(f).map_err(|e| e.to_string())?;
                let seq = hilbert_samuel_sequence(&ideal, 5).map_err(|e| e.to_string())?;
                let rec = hs_multiplicity_with(
                    &ideal,
                    HsConfig {
                        limits: ctx.limits,
                        ..Default::default()
                    },
                )
                .map_err(|e| e.to_string())?;
                Ok(json!({ "lengths": seq.lengths, "e": rec.e }))
            })();
            parts(
                Ok(json!({ "lengths": [1, 3, 5, 7, 9], "e": 2 })),
                Provenance::Derived,
                "hand count of monomials outside (x^2, m^i)",
                actual,
            )
        }),
    );

    for s in &corpus {
        let s = s.clone();
        push(
            Suite::V2,
            s.clone(),
            Box::new(move |_| {
                let f = germ(&s);
                let expected = f.as_ref().map_err(Clone::clone).and_then(ord_of);
                let mut detail = None;
                let actual = f.and_then(|f| {
                    let m = min_line_multiplicity(&f, &[]).map_err(|e| e.to_string())?;
                    detail = Some(
                        json!({ "witness": m.witness.to_string(), "lines": m.evaluated.len() }),
                    );
                    Ok(json!(m.value))
                });
                CaseParts {
                    detail,
                    ..parts(
                        expected,
                        Provenance::Derived,
                        "lowest total degree of f",
                        actual,
                    )
                }
            }),
        );
    }
    push(
        Suite::V2,
        "x^2 - y^3 against y = 0 and x = 0".into(),
        Box::new(|ctx| {
            let actual = (|| {
                let f = germ("x^2 - y^3")?;
                let m = min_line_multiplicity(&f, &[]).map_err(|e| e.to_string())?;
                let i = |l: &str| {
                    intersection_multiplicity_with(&f, &germ(l)?, ctx.limits)
                        .map_err(|e| e.to_string())
                        .and_then(finite)
                };
                Ok(json!({ "witness": m.witness.to_string(), "y = 0": i("y")?, "x = 0": i("x")? }))
            })();
            parts(
                Ok(json!({ "witness": "y = 0", "y = 0": 2, "x = 0": 3 })),
                Provenance::Derived,
                "substitute the line into f and read the lowest power",
                actual,
            )
        }),
    );

    for s in &corpus {
        let s = s.clone();
        push(
            Suite::V3,
            s.clone(),
            Box::new(move |ctx| {
                let f = germ(&s);
                let expected = f.as_ref().map_err(Clone::clone).and_then(ord_of);
                let mut detail = None;
                let actual = f.and_then(|f| {
                    let r = dynamic_multiplicity(&f, &ctx.dynamic).map_err(|e| e.to_string())?;
                    detail = Some(
                        json!({ "per_trial": r.per_trial, "retries": r.retries, "seed": r.seed }),
                    );
                    Ok(json!(r.count))
                });
                CaseParts {
                    detail,
                    ..parts(
                        expected,
                        Provenance::Derived,
                        "lowest total degree of f",
                        actual,
                    )
                }
            }),
        );
    }

    for s in &corpus {
        let s = s.clone();
        push(
            Suite::V4,
            format!("mu = 2 delta - r + 1 for {s}"),
            Box::new(move |ctx| {
                let f = germ(&s);
                let expected = f
                    .as_ref()
                    .map_err(Clone::clone)
                    .and_then(|f| {
                        milnor_with(f, ctx.limits)
                            .map_err(|e| e.to_string())
                            .and_then(finite)
                    })
                    .map(|m| json!(m));
                let mut detail = None;
                let actual = f.and_then(|f| {
                    let t = blowup_tree_with(&f, ctx.resolution()).map_err(|e| e.to_string())?;
                    let (d, r) = (t.delta(), t.branches());
                    detail =
                        Some(json!({ "delta": d, "branches": r, "blowup_nodes": t.node_count() }));
                    Ok(json!(2 * d + 1 - r))
                });
                CaseParts {
                    detail,
                    ..parts(
                        expected,
                        Provenance::Derived,
                        "Milnor number from a standard basis of the Jacobian ideal",
                        actual,
                    )
                }
            }),
        );
    }
    for [a, b] in &cfg.additivity_pairs {
        let (a, b) = (a.clone(), b.clone());
        push(
            Suite::V4,
            format!("delta of ({a})*({b})"),
            Box::new(move |ctx| {
                let rc = ctx.resolution();
                let delta = |f: &PolyQ| {
                    blowup_tree_with(f, rc)
                        .map(|t| t.delta())
                        .map_err(|e| e.to_string())
                };
                let fg = germ(&a).and_then(|f| germ(&b).map(|g| (f, g)));
                let expected = fg.as_ref().map_err(Clone::clone).and_then(|(f, g)| {
                    let i = intersection_multiplicity_with(f, g, ctx.limits)
                        .map_err(|e| e.to_string())
                        .and_then(finite)?;
                    Ok(json!(delta(f)? + delta(g)? + i))
                });
                let actual = fg.and_then(|(f, g)| delta(&(&f * &g)).map(|d| json!(d)));
                parts(
                    expected,
                    Provenance::Derived,
                    "delta of each factor plus their intersection number",
                    actual,
                )
            }),
        );
    }
    for q in 3..=cfg.delta_family_max {
        for p in 2..q {
            if !coprime(p, q) {
                continue;
            }
            push(
                Suite::V4,
                format!("delta of x^{p} - y^{q}"),
                Box::new(move |ctx| {
                    let expected = semigroup(p, q)
                        .map(|s| json!(s.gaps.len()))
                        .map_err(|e| e.to_string());
                    let actual = germ(&format!("x^{p} - y^{q}")).and_then(|f| {
                        blowup_tree_with(&f, ctx.resolution())
                            .map(|t| json!(t.delta()))
                            .map_err(|e| e.to_string())
                    });
                    CaseParts {
                        detail: Some(json!({ "closed_form": (p - 1) * (q - 1) / 2 })),
                        ..parts(
                            expected,
                            Provenance::Derived,
                            "gap count of the semigroup <p,q>",
                            actual,
                        )
                    }
                }),
            );
        }
    }

    for total in 5..=cfg.pq_max_sum {
        for p in 2..total {
            let q = total - p;
            if q <= p || !coprime(p, q) {
                continue;
            }
            push(
                Suite::V5,
                format!("({p},{q})"),
                Box::new(move |_| {
                    let expected = rational_catalan(p, q)
                        .map(|c| json!({ "semimodules": big(&c), "paths": big(&c) }))
                        .map_err(|e| e.to_string());
                    let actual = (|| {
                        let sm = enumerate_semimodules(p, q)
                            .map_err(|e| e.to_string())?
                            .len();
                        let paths = count_lattice_paths(p, q).map_err(|e| e.to_string())?;
                        Ok(json!({ "semimodules": sm, "paths": big(&paths) }))
                    })();
                    parts(
                        expected,
                        Provenance::Derived,
                        "binomial(p+q, p)/(p+q)",
                        actual,
                    )
                }),
            );
        }
    }

    let gmax = cfg.yz_gmax;
    push(
        Suite::V6,
        format!("series to q^{gmax}, product vs exponential"),
        Box::new(move |_| {
            let mut detail = None;
            let actual = yz_series(gmax).map_err(|e| e.to_string()).map(|s| {
                detail = Some(json!({ "coefficients": s.iter().map(big).collect::<Vec<_>>() }));
                json!(s[..5].iter().map(big).collect::<Vec<_>>())
            });
            CaseParts {
                detail,
                ..parts(
                    Ok(json!([1, 24, 324, 3200, 25650])),
                    Provenance::Derived,
                    "hand expansion of the product to order 4",
                    actual,
                )
            }
        }),
    );
    push(
        Suite::V6,
        "24 nodal rational cubics".into(),
        Box::new(|_| {
            let expected = yz_series(1).map(|s| big(&s[1])).map_err(|e| e.to_string());
            let actual = LedgerCurve::new(3, vec![LocalSingularity::Node])
                .and_then(|c| gw_local_sum(&vec![c; 24]))
                .map(|s| big(&s))
                .map_err(|e| e.to_string());
            parts(
                expected,
                Provenance::Derived,
                "coefficient a_1 of the series",
                actual,
            )
        }),
    );
    push(
        Suite::V6,
        "one cuspidal and one nodal cubic".into(),
        Box::new(|_| {
            let actual = (|| {
                let cusp = LedgerCurve::new(3, vec![LocalSingularity::monomial(2, 3)?])?;
                let node = LedgerCurve::new(3, vec![LocalSingularity::Node])?;
                gw_local_sum(&[cusp, node])
            })()
            .map(|s| big(&s))
            .map_err(|e| e.to_string());
            parts(
                Ok(json!(3)),
                Provenance::Derived,
                "local counts 2 and 1",
                actual,
            )
        }),
    );
    for g in 1..=3u64 {
        push(
            Suite::V6,
            format!("chi in genus {g}"),
            Box::new(move |_| {
                let locals = [rational_catalan(2, 3), rational_catalan(3, 5)];
                let locals: Vec<_> = locals.into_iter().map(|c| c.expect("coprime")).collect();
                parts(
                    Ok(json!(0)),
                    Provenance::Trivial,
                    "vanishing in positive genus",
                    Ok(big(&chi_jacobian(g, &locals))),
                )
            }),
        );
    }
    checks
}

/// Runs the selected suites on `workers` threads; cases keep their build order.
pub fn verify(cfg: &RunConfig, suites: &[Suite]) -> Result<Report, CliError> {
    cfg.validate()?;
    let ctx = Ctx::new(cfg);
    let checks = build_checks(cfg, suites);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| CliError::Config(e.to_string()))?;
    let cases: Vec<VerificationCase> = pool.install(|| {
        checks
            .par_iter()
            .map(|c| {
                let p = (c.run)(&ctx);
                let pass = matches!((&p.expected, &p.actual), (Ok(e), Ok(a)) if e == a);
                VerificationCase {
                    suite: c.suite.to_string(),
                    input: c.input.clone(),
                    expected: Expected {
                        value: p.expected.unwrap_or_else(|e| err_json(&e)),
                        provenance: p.provenance,
                        oracle: p.oracle,
                    },
                    actual: p.actual.unwrap_or_else(|e| err_json(&e)),
                    pass,
                    detail: p.detail,
                }
            })
            .collect()
    });
    Ok(Report::new(cfg.clone(), cases))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_lists() {
        assert_eq!(Suite::parse_list(&["all".into()]).unwrap().len(), 6);
        assert_eq!(
            Suite::parse_list(&["v3,V1".into()]).unwrap(),
            vec![Suite::V1, Suite::V3]
        );
        assert!(Suite::parse_list(&["V7".into()]).is_err());
        assert!(Suite::parse_list(&[]).is_err());
    }

    #[test]
    fn failures_are_captured() {
        let cfg = RunConfig {
            corpus: vec!["x^2 +".into(), "1 + x".into()],
            ..Default::default()
        };
        let r = verify(&cfg, &[Suite::V1]).unwrap();
        assert_eq!(r.summary.failed, 2);
        assert!(r.cases[0].actual.get("error").is_some());
    }
}
