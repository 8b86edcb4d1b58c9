//! Subcommand definitions and dispatch.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use germlab::jaceuler::{
    chi_jacobian, count_lattice_paths, enumerate_semimodules, gw_local_sum, rational_catalan,
    semigroup, yz_series, LedgerCurve, LocalSingularity,
};
use germlab::localalg::{milnor_with, tjurina_with, Limits, LocalIdeal};
use germlab::multiplicity::{
    dynamic_multiplicity, hilbert_samuel_sequence, hs_multiplicity_with,
    intersection_multiplicity_with, min_line_multiplicity, DynamicParams, HsConfig,
};
use germlab::polyring::parse;
use germlab::resolution::{blowup_tree_with, geometric_genus, ResolutionConfig};
use germlab::{ExtNat, PolyQ};
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::suites::{verify, Suite};
use crate::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "germlab",
    version,
    about = "Invariants of plane curve singularities"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Default, Args)]
pub struct GlobalOpts {
    /// Also write a JSON report to this path.
    #[arg(long, global = true)]
    pub json: Option<PathBuf>,
    /// Seed for the random perturbations of dynmult.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Radius of the counting disc for dynmult.
    #[arg(long, global = true)]
    pub eps: Option<f64>,
    /// Offset of the perturbed line for dynmult.
    #[arg(long, global = true)]
    pub tau: Option<f64>,
    /// Number of perturbed lines tried by dynmult.
    #[arg(long, global = true)]
    pub trials: Option<usize>,
    /// Reduction step limit for standard basis computations.
    #[arg(long, global = true)]
    pub step_cap: Option<u64>,
    /// Suites to verify: `all` or a list such as `V1,V4`.
    #[arg(long, global = true, value_delimiter = ',')]
    pub suite: Vec<String>,
    /// TOML run configuration.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Worker threads for verify.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order of vanishing at the origin.
    Ord {
        #[arg(allow_hyphen_values = true)]
        germ: String,
    },
    /// Hilbert-Samuel multiplicity of the maximal ideal of the germ.
    Mult {
        #[arg(allow_hyphen_values = true)]
        germ: String,
    },
    /// Hilbert-Samuel lengths of the maximal ideal of the germ.
    Hs {
        #[arg(allow_hyphen_values = true)]
        germ: String,
        #[arg(long, default_value_t = 6)]
        imax: usize,
    },
    /// Intersection multiplicity at the origin.
    Intersect {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Minimum intersection number with lines through the origin.
    Minline {
        #[arg(allow_hyphen_values = true)]
        germ: String,
    },
    /// Multiplicity counted numerically on a perturbed line.
    Dynmult {
        #[arg(allow_hyphen_values = true)]
        germ: String,
    },
    /// Milnor number: colength of the Jacobian ideal.
    Milnor {
        #[arg(allow_hyphen_values = true)]
        germ: String,
    },
    /// Tjurina number: colength of the germ plus its Jacobian ideal.
    Tjurina {
        #[arg(allow_hyphen_values = true)]
        germ: String,
    },
    /// Delta invariant from the blowup tree.
    Delta {
        #[arg(allow_hyphen_values = true)]
        germ: String,
        /// Print the tree of infinitely near points.
        #[arg(long)]
        tree: bool,
    },
    /// Number of analytic branches.
    Branches {
        #[arg(allow_hyphen_values = true)]
        germ: String,
    },
    /// Geometric genus of a plane curve of given degree and local deltas.
    Genus {
        #[arg(long)]
        degree: u64,
        #[arg(long, value_delimiter = ',')]
        deltas: Vec<u64>,
    },
    /// Gaps, conductor and genus of the semigroup generated by p and q.
    Semigroup { p: u64, q: u64 },
    /// Number of normalised semimodules over the semigroup of p and q.
    Semimodules {
        p: u64,
        q: u64,
        /// List every semimodule by its complement.
        #[arg(long)]
        list: bool,
    },
    /// Rational Catalan number (p+q-1)!/(p! q!).
    Catalan { p: u64, q: u64 },
    /// Lattice paths from (0,0) to (q,p) staying below the diagonal.
    Paths { p: u64, q: u64 },
    /// Euler characteristic of the compactified Jacobian.
    Chi {
        #[arg(long)]
        genus: u64,
        #[arg(long, value_delimiter = ',')]
        locals: Vec<u64>,
    },
    /// Coefficients of prod (1 - q^n)^-24 up to q^gmax.
    Yzseries { gmax: usize },
    /// Sum of local Jacobian counts over rational curves.
    ///
    /// Each curve is `[COUNT*]DEGREE:TYPES` with TYPES joined by `+`,
    /// each `node` or `<p,q>`; e.g. `24*3:node` or `4:node+node+node`.
    Gwsum {
        #[arg(long = "curve", required = true)]
        curves: Vec<String>,
    },
    /// Run verification suites.
    Verify,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Ord { .. } => "ord",
            Command::Mult { .. } => "mult",
            Command::Hs { .. } => "hs",
            Command::Intersect { .. } => "intersect",
            Command::Minline { .. } => "minline",
            Command::Dynmult { .. } => "dynmult",
            Command::Milnor { .. } => "milnor",
            Command::Tjurina { .. } => "tjurina",
            Command::Delta { .. } => "delta",
            Command::Branches { .. } => "branches",
            Command::Genus { .. } => "genus",
            Command::Semigroup { .. } => "semigroup",
            Command::Semimodules { .. } => "semimodules",
            Command::Catalan { .. } => "catalan",
            Command::Paths { .. } => "paths",
            Command::Chi { .. } => "chi",
            Command::Yzseries { .. } => "yzseries",
            Command::Gwsum { .. } => "gwsum",
            Command::Verify => "verify",
        }
    }
}

pub struct Output {
    pub text: String,
    pub json: Value,
    pub exit: i32,
}

fn effective_config(g: &GlobalOpts) -> Result<RunConfig, CliError> {
    let mut cfg = match &g.config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    };
    if let Some(v) = g.seed {
        cfg.seed = v;
    }
    if let Some(v) = g.eps {
        cfg.eps = v;
    }
    if let Some(v) = g.tau {
        cfg.tau = v;
    }
    if let Some(v) = g.trials {
        cfg.trials = v;
    }
    if let Some(v) = g.step_cap {
        cfg.step_cap = v;
    }
    if let Some(v) = g.workers {
        cfg.workers = v;
    }
    if !g.suite.is_empty() {
        cfg.suites = g.suite.clone();
    }
    cfg.validate()?;
    Ok(cfg)
}

fn germ(s: &str) -> Result<PolyQ, CliError> {
    Ok(parse(s, 2)?)
}

fn ext(v: ExtNat) -> Value {
    match v {
        ExtNat::Finite(n) => json!(n),
        ExtNat::Infinite => json!("infinity"),
    }
}

fn big(b: &impl ToString) -> Value {
    let s = b.to_string();
    s.parse::<u64>()
        .map(Value::from)
        .unwrap_or(Value::String(s))
}

fn scalar(v: Value) -> (String, Value) {
    let text = match &v {
        Value::String(s) => format!("{s}\n"),
        other => format!("{other}\n"),
    };
    (text, v)
}

/// Parses `[COUNT*]DEGREE:TYPE+TYPE...`.
pub fn parse_curve_spec(spec: &str) -> Result<Vec<LedgerCurve>, CliError> {
    let bad = || CliError::Config(format!("bad curve '{spec}', expected [COUNT*]DEGREE:TYPES"));
    let (count, rest) = match spec.split_once('*') {
        Some((n, r)) => (n.trim().parse::<usize>().map_err(|_| bad())?, r),
        None => (1, spec),
    };
    let (deg, types) = rest.split_once(':').ok_or_else(bad)?;
    let degree = deg.trim().parse::<u64>().map_err(|_| bad())?;
    let locals = types
        .split('+')
        .filter(|t| !t.trim().is_empty())
        .map(str::parse::<LocalSingularity>)
        .collect::<Result<Vec<_>, _>>()?;
    let curve = LedgerCurve::new(degree, locals)?;
    Ok(vec![curve; count])
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let cfg = effective_config(&cli.global)?;
    let limits = Limits {
        step_cap: cfg.step_cap,
    };
    let rc = ResolutionConfig {
        limits,
        ..Default::default()
    };
    let mut exit = 0;
    let (text, result) = match &cli.command {
        Command::Ord { germ: s } => scalar(ext(germ(s)?.ord())),
        Command::Mult { germ: s } => {
            let ideal = LocalIdeal::maximal_in(germ(s)?)?;
            let rec = hs_multiplicity_with(
                &ideal,
                HsConfig {
                    limits,
                    ..Default::default()
                },
            )?;
            scalar(json!(rec.e))
        }
        Command::Hs { germ: s, imax } => {
            let ideal = LocalIdeal::maximal_in(germ(s)?)?;
            let seq = hilbert_samuel_sequence(&ideal, *imax)?;
            let rec = hs_multiplicity_with(
                &ideal,
                HsConfig {
                    limits,
                    ..Default::default()
                },
            )?;
            let mut text = String::from("i  length\n");
            for (i, l) in seq.lengths.iter().enumerate() {
                text.push_str(&format!("{:<2} {l}\n", i + 1));
            }
            text.push_str(&format!(
                "e = {} (dimension {}, stable from i = {})\n",
                rec.e.map_or("?".into(), |e| e.to_string()),
                rec.dim,
                rec.stabilization_index
                    .map_or("?".into(), |i| i.to_string())
            ));
            let v = json!({ "lengths": seq.lengths, "e": rec.e, "dim": rec.dim,
                            "stabilization_index": rec.stabilization_index });
            (text, v)
        }
        Command::Intersect { f, g } => scalar(ext(intersection_multiplicity_with(
            &germ(f)?,
            &germ(g)?,
            limits,
        )?)),
        Command::Minline { germ: s } => {
            let m = min_line_multiplicity(&germ(s)?, &[])?;
            let mut text = format!("{}\nwitness: {}\n", m.value, m.witness);
            for (l, i) in &m.evaluated {
                text.push_str(&format!("  {l}: {i}\n"));
            }
            let lines: Vec<Value> = m
                .evaluated
                .iter()
                .map(|(l, i)| json!({ "line": l.to_string(), "value": ext(*i) }))
                .collect();
            (
                text,
                json!({ "value": m.value, "witness": m.witness.to_string(), "lines": lines }),
            )
        }
        Command::Dynmult { germ: s } => {
            let params = DynamicParams {
                eps: cfg.eps,
                tau: cfg.tau,
                trials: cfg.trials,
                seed: cfg.seed,
                ..DynamicParams::default()
            };
            let r = dynamic_multiplicity(&germ(s)?, &params)?;
            let text = format!(
                "{}\nper trial: {:?}, retries {}, seed {}\n",
                r.count, r.per_trial, r.retries, r.seed
            );
            (
                text,
                json!({ "count": r.count, "per_trial": r.per_trial, "retries": r.retries, "seed": r.seed }),
            )
        }
        Command::Milnor { germ: s } => scalar(ext(milnor_with(&germ(s)?, limits)?)),
        Command::Tjurina { germ: s } => scalar(ext(tjurina_with(&germ(s)?, limits)?)),
        Command::Delta { germ: s, tree } => {
            let t = blowup_tree_with(&germ(s)?, rc)?;
            let mut text = format!("{}\n", t.delta());
            if *tree {
                text.push_str(&format!("{t}\n"));
            }
            (
                text,
                json!({ "delta": t.delta(), "branches": t.branches(), "blowup_nodes": t.node_count() }),
            )
        }
        Command::Branches { germ: s } => scalar(json!(blowup_tree_with(&germ(s)?, rc)?.branches())),
        Command::Genus { degree, deltas } => scalar(json!(geometric_genus(*degree, deltas)?)),
        Command::Semigroup { p, q } => {
            let s = semigroup(*p, *q)?;
            let gaps: Vec<String> = s.gaps.iter().map(u64::to_string).collect();
            let text = format!(
                "gaps: {}\nconductor: {}\ngenus: {}\n",
                gaps.join(", "),
                s.conductor,
                s.genus()
            );
            (
                text,
                json!({ "p": s.p, "q": s.q, "gaps": s.gaps, "conductor": s.conductor }),
            )
        }
        Command::Semimodules { p, q, list } => {
            let all = enumerate_semimodules(*p, *q)?;
            let mut text = format!("{}\n", all.len());
            if *list {
                for m in &all {
                    let c: Vec<String> = m.complement.iter().map(u64::to_string).collect();
                    text.push_str(&format!("  {{{}}}\n", c.join(", ")));
                }
            }
            let comps: Vec<&Vec<u64>> = all.iter().map(|m| &m.complement).collect();
            (text, json!({ "count": all.len(), "complements": comps }))
        }
        Command::Catalan { p, q } => scalar(big(&rational_catalan(*p, *q)?)),
        Command::Paths { p, q } => scalar(big(&count_lattice_paths(*p, *q)?)),
        Command::Chi { genus, locals } => {
            let locals: Vec<_> = locals.iter().map(|&l| l.into()).collect();
            scalar(big(&chi_jacobian(*genus, &locals)))
        }
        Command::Yzseries { gmax } => {
            let s = yz_series(*gmax)?;
            let text: String = s
                .iter()
                .enumerate()
                .map(|(i, a)| format!("{i} {a}\n"))
                .collect();
            (text, Value::Array(s.iter().map(big).collect()))
        }
        Command::Gwsum { curves } => {
            let mut ledger = Vec::new();
            for c in curves {
                ledger.extend(parse_curve_spec(c)?);
            }
            scalar(big(&gw_local_sum(&ledger)?))
        }
        Command::Verify => {
            let suites = Suite::parse_list(&cfg.suites)?;
            let report = verify(&cfg, &suites)?;
            if !report.all_passed() {
                exit = 1;
            }
            if let Some(path) = &cli.global.json {
                write_json(path, &report.to_json())?;
            }
            return Ok(Output {
                text: report.to_table(),
                json: serde_json::to_value(&report).expect("json"),
                exit,
            });
        }
    };
    let json = json!({
        "tool_version": env!("CARGO_PKG_VERSION"),
        "command": cli.command.name(),
        "result": result,
    });
    if let Some(path) = &cli.global.json {
        write_json(path, &serde_json::to_string_pretty(&json).expect("json"))?;
    }
    Ok(Output { text, json, exit })
}

fn write_json(path: &std::path::Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, format!("{text}\n"))
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<Output, CliError> {
        let mut full = vec!["germlab"];
        full.extend_from_slice(args);
        run(&Cli::try_parse_from(full).expect("arguments parse"))
    }

    #[test]
    fn documented_examples() {
        assert_eq!(run_args(&["mult", "x^2 - y^3"]).unwrap().text, "2\n");
        assert_eq!(
            run_args(&["chi", "--genus", "0", "--locals", "2"])
                .unwrap()
                .text,
            "2\n"
        );
        assert_eq!(run_args(&["ord", "0"]).unwrap().text, "infinity\n");
        assert_eq!(run_args(&["delta", "-y^3 + x^2"]).unwrap().text, "1\n");
        assert_eq!(
            run_args(&["gwsum", "--curve", "24*3:node"]).unwrap().text,
            "24\n"
        );
        assert_eq!(
            run_args(&["gwsum", "--curve", "3:<2,3>", "--curve", "3:node"])
                .unwrap()
                .text,
            "3\n"
        );
        assert_eq!(
            run_args(&["genus", "--degree", "4", "--deltas", "1,1,1"])
                .unwrap()
                .text,
            "0\n"
        );
    }

    #[test]
    fn error_codes() {
        assert_eq!(run_args(&["ord", "x^^2"]).err().unwrap().exit_code(), 2);
        assert_eq!(
            run_args(&["catalan", "2", "4"]).err().unwrap().exit_code(),
            3
        );
        assert_eq!(run_args(&["delta", "x^2"]).err().unwrap().exit_code(), 2);
        assert_eq!(
            run_args(&["dynmult", "x*y", "--eps", "1e-9"])
                .err()
                .unwrap()
                .exit_code(),
            2
        );
        assert_eq!(
            run_args(&["gwsum", "--curve", "3:"])
                .err()
                .unwrap()
                .exit_code(),
            2
        );
    }

    #[test]
    fn curve_specs() {
        assert_eq!(parse_curve_spec("24*3:node").unwrap().len(), 24);
        assert_eq!(
            parse_curve_spec("4:node+node+node").unwrap()[0]
                .locals
                .len(),
            3
        );
        assert!(parse_curve_spec("node").is_err());
    }
}
