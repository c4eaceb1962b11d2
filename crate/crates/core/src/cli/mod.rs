//! The `qprob` command-line front end.
//!
//! Every command prints one JSON record
//! `{"command", "args", "spec", "results", "seed"?}` with rationals as exact
//! `num/den` strings and intervals as `{"lo", "hi"}`. `pmf` also speaks CSV.
//! [`run`] does all the work and returns what the binary should print, so the
//! front end is testable without spawning a process.

mod args;

use clap::Parser;
use serde_json::{json, Map, Value};

pub use args::{Cli, Command, Family, Format, Params};

use crate::error::{QError, Result};
use crate::qdist::{
    bernoulli_inf_moments, bernoulli_inf_pmf, bernoulli_moments, bernoulli_pmf, contagious_pmf, geometric_pmf,
    hypergeom_pmf, negbinomial_pmf, parties_probabilities, poisson_moments, poisson_pmf, range_pmf,
    range_pmf_alt_n2, uniform_moments, uniform_pmf, EnclosedPmf, ExactPmf, MomentReport,
};
use crate::qnum::{format_rational, parse_rational, Interval, QBase, Rational};
use crate::qprocess::{sample_paths, Scheme};
use crate::qverify::{
    default_grid, gate, limit_table, run_all, run_identities, ConvergenceTable, IdentityCheck, LimitName, LimitSpec,
    Outcome,
};

/// Exit code for a failed gate or a domain error.
pub const EXIT_FAILURE: i32 = 1;
/// Exit code for malformed invocations: bad flags, unknown ids, unparsable numbers.
pub const EXIT_USAGE: i32 = 2;

/// What the binary prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses `argv` (including the program name) and executes the command.
pub fn run<I, T>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                CliOutput { stdout: text, stderr: String::new(), code }
            } else {
                CliOutput { stdout: String::new(), stderr: text, code }
            };
        }
    };
    let echo = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect::<Vec<_>>().join(" ");
    match execute(&cli.command, &echo) {
        Ok((stdout, code)) => CliOutput { stdout, stderr: String::new(), code },
        Err(e) => {
            let code = match e {
                QError::Parse(_) | QError::Unknown(_) => EXIT_USAGE,
                _ => EXIT_FAILURE,
            };
            CliOutput { stdout: String::new(), stderr: format!("error: {e}\n"), code }
        }
    }
}

fn execute(command: &Command, echo: &str) -> Result<(String, i32)> {
    match command {
        Command::Pmf { family, params, format } => {
            let (spec, table) = build_pmf(*family, params)?;
            match format {
                Format::Json => Ok((render(record("pmf", echo, spec, table.to_json(), None)), 0)),
                Format::Csv => Ok((table.to_csv(), 0)),
            }
        }
        Command::Moments { family, params, format } => {
            json_only(*format)?;
            let (spec, report) = build_moments(*family, params)?;
            Ok((render(record("moments", echo, spec, moments_json(&report), None)), 0))
        }
        Command::Verify { ids, all, grid, include_watchlist, format } => {
            json_only(*format)?;
            if ids.is_empty() && !all {
                return Err(QError::Parse("give identity ids or --all".into()));
            }
            let grid = default_grid().with_overrides(grid)?;
            let reports = if *all { run_all(&grid) } else { run_identities(ids, &grid)? };
            let passed = gate(&reports, *include_watchlist);
            let results = json!({
                "passed": passed,
                "include_watchlist": include_watchlist,
                "identities": reports.iter().map(identity_json).collect::<Vec<_>>(),
            });
            let spec = vec![
                ("qs".to_string(), list(&grid.qs)),
                ("super_qs".to_string(), list(&grid.super_qs)),
                ("ps".to_string(), list(&grid.ps)),
                ("max_int".to_string(), grid.max_int.to_string()),
            ];
            let code = if passed { 0 } else { EXIT_FAILURE };
            Ok((render(record("verify", echo, spec, results, None)), code))
        }
        Command::Sample { family, params, samples, seed, format } => {
            json_only(*format)?;
            let (scheme, n) = build_scheme(*family, params)?;
            let report = sample_paths(&scheme, n, *samples, *seed)?;
            let (_, exact) = build_pmf(*family, params)?;
            let spec = report.spec.params().into_iter().map(|(k, v)| (k.to_string(), v)).collect();
            let results = json!({
                "n_samples": report.n_samples,
                "counts": report.counts.iter().map(|(k, c)| (k.to_string(), json!(c))).collect::<Map<_, _>>(),
                "empirical": rational_map(report.empirical.iter()),
                "exact": exact.to_json()["entries"].clone(),
                "tv_distance": format_rational(&report.tv_distance),
            });
            Ok((render(record("sample", echo, spec, results, Some(report.seed))), 0))
        }
        Command::Limit { name, params, c, at, e1_target, format } => {
            json_only(*format)?;
            let name: LimitName = name.parse()?;
            let spec = build_limit(name, params, *c, *e1_target)?;
            let sequence = if at.is_empty() { name.default_sequence() } else { at.clone() };
            let eps = params.eps.clone().map_or_else(|| parse_rational("1e-30"), Ok)?;
            let table = limit_table(&spec, &sequence, &eps)?;
            let mut echo_spec = vec![("name".to_string(), name.to_string())];
            echo_spec.extend(table.params.iter().cloned());
            Ok((render(record("limit", echo, echo_spec, limit_json(&table), None)), 0))
        }
    }
}

fn json_only(format: Format) -> Result<()> {
    match format {
        Format::Json => Ok(()),
        Format::Csv => Err(QError::Parse("csv output is available for pmf tables only".into())),
    }
}

fn render(value: Value) -> String {
    let mut text = serde_json::to_string_pretty(&value).expect("json values always serialize");
    text.push('\n');
    text
}

fn record(command: &str, echo: &str, spec: Vec<(String, String)>, results: Value, seed: Option<u64>) -> Value {
    let mut out = Map::new();
    out.insert("command".into(), json!(command));
    out.insert("args".into(), json!(echo));
    out.insert("spec".into(), Value::Object(spec.into_iter().map(|(k, v)| (k, json!(v))).collect()));
    out.insert("results".into(), results);
    if let Some(seed) = seed {
        out.insert("seed".into(), json!(seed));
    }
    Value::Object(out)
}

fn list(values: &[Rational]) -> String {
    values.iter().map(format_rational).collect::<Vec<_>>().join(",")
}

/// `{"lo": "a/b", "hi": "c/d"}`.
pub fn interval_json(x: &Interval) -> Value {
    json!({ "lo": format_rational(x.lo()), "hi": format_rational(x.hi()) })
}

fn rational_map<'a>(rows: impl Iterator<Item = (&'a u32, &'a Rational)>) -> Value {
    Value::Object(rows.map(|(k, v)| (k.to_string(), json!(format_rational(v)))).collect())
}

fn moments_json(m: &MomentReport) -> Value {
    json!({
        "mean": format_rational(&m.mean),
        "second_moment": format_rational(&m.second_moment),
        "variance": format_rational(&m.variance),
    })
}

fn identity_json(r: &IdentityCheck) -> Value {
    let (outcome, counterexample) = match &r.outcome {
        Outcome::Pass => ("pass", Value::Null),
        Outcome::Fail { binding, lhs, rhs } => (
            "fail",
            json!({
                "binding": binding.0.iter().map(|(k, v)| (k.clone(), json!(v))).collect::<Map<_, _>>(),
                "lhs": lhs,
                "rhs": rhs,
            }),
        ),
    };
    json!({
        "id": r.id,
        "statement": r.statement,
        "mode": r.mode.to_string(),
        "outcome": outcome,
        "watchlist": r.watchlist,
        "bindings": r.bindings,
        "max_width": r.max_width.as_ref().map(format_rational),
        "skipped": r.skipped,
        "counterexample": counterexample,
    })
}

fn limit_json(t: &ConvergenceTable) -> Value {
    json!({
        "rows": t.rows.iter().map(|r| json!({ "index": r.index, "distance": interval_json(&r.distance) })).collect::<Vec<_>>(),
        "strictly_decreasing": t.strictly_decreasing,
        "nonincreasing": t.nonincreasing,
    })
}

/// A computed pmf in one of its three shapes.
enum Table {
    Exact(ExactPmf),
    Enclosed(EnclosedPmf),
    /// Named event probabilities, for the division of stakes.
    Events(Vec<(&'static str, Rational)>),
}

impl Table {
    fn to_json(&self) -> Value {
        match self {
            Table::Exact(pmf) => json!({
                "entries": rational_map(pmf.entries.iter()),
                "values": rational_map(pmf.values.iter()),
                "defect": format_rational(&pmf.defect),
            }),
            Table::Enclosed(pmf) => json!({
                "entries": pmf.entries.iter().map(|(k, e)| (k.to_string(), interval_json(e))).collect::<Map<_, _>>(),
                "values": rational_map(pmf.values.iter()),
                "defect": interval_json(&pmf.defect),
                "max_width": format_rational(&pmf.max_width()),
            }),
            Table::Events(rows) => json!({
                "entries": rows.iter().map(|(k, v)| (k.to_string(), json!(format_rational(v)))).collect::<Map<_, _>>(),
            }),
        }
    }

    fn to_csv(&self) -> String {
        let mut out = String::new();
        match self {
            Table::Exact(pmf) => {
                out.push_str("k,value,probability\n");
                for (k, e) in &pmf.entries {
                    out.push_str(&format!("{k},{},{}\n", pmf.values[k], format_rational(e)));
                }
                out.push_str(&format!("defect,,{}\n", format_rational(&pmf.defect)));
            }
            Table::Enclosed(pmf) => {
                out.push_str("k,value,lo,hi\n");
                for (k, e) in &pmf.entries {
                    out.push_str(&format!("{k},{},{},{}\n", pmf.values[k], e.lo(), e.hi()));
                }
                out.push_str(&format!("defect,,{},{}\n", pmf.defect.lo(), pmf.defect.hi()));
            }
            Table::Events(rows) => {
                out.push_str("event,probability\n");
                for (k, v) in rows {
                    out.push_str(&format!("{k},{}\n", format_rational(v)));
                }
            }
        }
        out
    }
}

fn need<T: Clone>(value: &Option<T>, flag: &str, what: &str) -> Result<T> {
    value.clone().ok_or_else(|| QError::Parse(format!("{what} needs --{flag}")))
}

fn base(params: &Params, what: &str) -> Result<QBase> {
    QBase::new(need(&params.q, "q", what)?)
}

fn family_name(family: Family) -> &'static str {
    match family {
        Family::Bernoulli => "bernoulli",
        Family::BernoulliInf => "bernoulli-inf",
        Family::Geometric => "geometric",
        Family::Negbinomial => "negbinomial",
        Family::Poisson => "poisson",
        Family::Hypergeom => "hypergeom",
        Family::Contagious => "contagious",
        Family::Uniform => "uniform",
        Family::Range => "range",
        Family::RangeAlt => "range-alt",
        Family::Parties => "parties",
    }
}

/// Collects `(name, text)` pairs for the echoed spec.
struct SpecEcho(Vec<(String, String)>);

impl SpecEcho {
    fn new(family: Family) -> Self {
        Self(vec![("family".into(), family_name(family).into())])
    }

    fn add(&mut self, name: &str, value: impl ToString) -> &mut Self {
        self.0.push((name.into(), value.to_string()));
        self
    }
}

fn default_eps(params: &Params) -> Result<Rational> {
    params.eps.clone().map_or_else(|| parse_rational("1e-12"), Ok)
}

fn build_pmf(family: Family, params: &Params) -> Result<(Vec<(String, String)>, Table)> {
    let what = family_name(family);
    let q = base(params, what)?;
    let mut spec = SpecEcho::new(family);
    let table = match family {
        Family::Bernoulli => {
            let (n, p) = (need(&params.n, "n", what)?, need(&params.p, "p", what)?);
            spec.add("n", n).add("p", &p);
            Table::Exact(bernoulli_pmf(n, &p, &q)?)
        }
        Family::BernoulliInf => {
            let p = need(&params.p, "p", what)?;
            let eps = default_eps(params)?;
            spec.add("p", &p).add("kappa_max", params.kappa_max).add("eps", &eps);
            Table::Enclosed(bernoulli_inf_pmf(&p, &q, params.kappa_max, &eps)?)
        }
        Family::Geometric => {
            let p = need(&params.p, "p", what)?;
            let eps = default_eps(params)?;
            spec.add("p", &p).add("rescaled", params.rescaled).add("kappa_max", params.kappa_max).add("eps", &eps);
            Table::Enclosed(geometric_pmf(&p, &q, params.kappa_max, params.rescaled, &eps)?)
        }
        Family::Negbinomial => {
            let (r, p) = (need(&params.r, "r", what)?, need(&params.p, "p", what)?);
            let eps = default_eps(params)?;
            spec.add("r", r).add("p", &p).add("kappa_max", params.kappa_max).add("eps", &eps);
            Table::Enclosed(negbinomial_pmf(r, &p, &q, params.kappa_max, &eps)?)
        }
        Family::Poisson => {
            let lambda = need(&params.lambda, "lambda", what)?;
            let eps = default_eps(params)?;
            spec.add("lambda", &lambda).add("kappa_max", params.kappa_max).add("eps", &eps);
            Table::Enclosed(poisson_pmf(&lambda, &q, params.kappa_max, &eps)?)
        }
        Family::Hypergeom => {
            let (m, u, n) = (need(&params.m, "m", what)?, need(&params.u, "u", what)?, need(&params.n, "n", what)?);
            spec.add("m", m).add("u", u).add("n", n);
            Table::Exact(hypergeom_pmf(m, u, n, &q)?)
        }
        Family::Contagious => {
            let (m, u, n) = (need(&params.m, "m", what)?, need(&params.u, "u", what)?, need(&params.n, "n", what)?);
            let s = need(&params.s, "s", what)?;
            spec.add("m", m).add("u", u).add("s", s).add("n", n);
            Table::Exact(contagious_pmf(m, u, s, n, &q)?)
        }
        Family::Uniform => {
            let max_index = need(&params.max_index, "M", what)?;
            spec.add("M", max_index);
            Table::Exact(uniform_pmf(max_index, &q))
        }
        Family::Range => {
            let (max_index, n) = (need(&params.max_index, "M", what)?, need(&params.n, "n", what)?);
            spec.add("M", max_index).add("n", n);
            Table::Exact(range_pmf(max_index, n, &q)?)
        }
        Family::RangeAlt => {
            let max_index = need(&params.max_index, "M", what)?;
            spec.add("M", max_index).add("n", 2);
            Table::Exact(range_pmf_alt_n2(max_index, &q))
        }
        Family::Parties => {
            let (a, b, p) = (need(&params.a, "a", what)?, need(&params.b, "b", what)?, need(&params.p, "p", what)?);
            spec.add("a", a).add("b", b).add("p", &p);
            let parties = parties_probabilities(a, b, &p, &q)?;
            Table::Events(vec![("p1", parties.p1), ("p2", parties.p2)])
        }
    };
    spec.add("q", &q);
    Ok((spec.0, table))
}

fn build_moments(family: Family, params: &Params) -> Result<(Vec<(String, String)>, MomentReport)> {
    let what = family_name(family);
    let q = base(params, what)?;
    let mut spec = SpecEcho::new(family);
    let report = match family {
        Family::Bernoulli => {
            let (n, p) = (need(&params.n, "n", what)?, need(&params.p, "p", what)?);
            spec.add("n", n).add("p", &p);
            bernoulli_moments(n, &p, &q)?
        }
        Family::BernoulliInf => {
            let p = need(&params.p, "p", what)?;
            spec.add("p", &p);
            bernoulli_inf_moments(&p, &q)?
        }
        Family::Poisson => {
            let lambda = need(&params.lambda, "lambda", what)?;
            spec.add("lambda", &lambda);
            poisson_moments(&lambda, &q)?
        }
        Family::Uniform => {
            let max_index = need(&params.max_index, "M", what)?;
            spec.add("M", max_index);
            uniform_moments(max_index, &q)
        }
        Family::Hypergeom | Family::Contagious | Family::Range | Family::RangeAlt => {
            let (echo, table) = build_pmf(family, params)?;
            let Table::Exact(pmf) = table else { unreachable!("finite families have exact tables") };
            // The echo already ends with q.
            return Ok((echo, pmf.moments()));
        }
        Family::Geometric | Family::Negbinomial | Family::Parties => {
            return Err(QError::Domain(format!("no moment report for {what}")));
        }
    };
    spec.add("q", &q);
    Ok((spec.0, report))
}

fn build_scheme(family: Family, params: &Params) -> Result<(Scheme, u32)> {
    let what = family_name(family);
    let q = base(params, what)?;
    let n = need(&params.n, "n", what)?;
    let scheme = match family {
        Family::Bernoulli => Scheme::Bernoulli { p: need(&params.p, "p", what)?, q },
        Family::Hypergeom => Scheme::Hypergeom { m: need(&params.m, "m", what)?, u: need(&params.u, "u", what)?, q },
        Family::Contagious => Scheme::Contagious {
            m: need(&params.m, "m", what)?,
            u: need(&params.u, "u", what)?,
            s: need(&params.s, "s", what)?,
            q,
        },
        _ => return Err(QError::Domain(format!("sampling covers bernoulli, hypergeom and contagious, not {what}"))),
    };
    Ok((scheme, n))
}

fn build_limit(name: LimitName, params: &Params, c: Option<u32>, e1_target: bool) -> Result<LimitSpec> {
    let q = params.q.clone().map(QBase::new).transpose()?;
    let spec = match name.default_spec() {
        LimitSpec::BernoulliInfinite { p, q: q0 } => {
            LimitSpec::BernoulliInfinite { p: params.p.clone().unwrap_or(p), q: q.unwrap_or(q0) }
        }
        LimitSpec::UrnToBernoulli { q: q0, c: c0, n } => {
            LimitSpec::UrnToBernoulli { q: q.unwrap_or(q0), c: c.unwrap_or(c0), n: params.n.unwrap_or(n) }
        }
        LimitSpec::UrnToDualBernoulli { big_q, c: c0, n } => {
            LimitSpec::UrnToDualBernoulli { big_q: q.unwrap_or(big_q), c: c.unwrap_or(c0), n: params.n.unwrap_or(n) }
        }
        LimitSpec::SuperUnitProduct { lambda, q: q0 } | LimitSpec::SuperUnitExponential { lambda, q: q0 } => {
            let (lambda, q) = (params.lambda.clone().unwrap_or(lambda), q.unwrap_or(q0));
            if e1_target {
                LimitSpec::SuperUnitExponential { lambda, q }
            } else {
                LimitSpec::SuperUnitProduct { lambda, q }
            }
        }
    };
    if e1_target && name != LimitName::I4_24 {
        return Err(QError::Parse("--e1-target applies to I4_24 only".into()));
    }
    Ok(spec)
}
