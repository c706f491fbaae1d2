//! Command implementations: each returns rendered output and an exit code.

use num_traits::{One, Zero};
use serde_json::Value;

use randword::asymptotics::{
    limit_cdf, mean_asymptotic, mean_regime, variance_asymptotic, LimitMethod, LimitSpec, McConfig,
    QuadratureConfig,
};
use randword::crosscheck::{crosscheck, default_models, Outcome, Routes};
use randword::measure::length_pmf_exact;
use randword::rational::{format_decimal, format_rational, to_f64};
use randword::simulate::{simulate_lwis, SimConfig};
use randword::streams::resolve_workers;
use randword::table1::TABLE1;
use randword::toeplitz::cdf_row_via_toeplitz;
use randword::{BigRational, Error, ProbModel};

use crate::output::{Body, Report};
use crate::{Command, LimitMethodArg, OutputArgs};

const DECIMALS: usize = 15;

pub fn run(command: Command) -> anyhow::Result<(String, u8)> {
    let (report, out, code) = match command {
        Command::Exact { model, n_len, n, out } => {
            let m = ProbModel::parse(&model.probs)?;
            let pmf = length_pmf_exact(n_len, &m, out.workers)?;
            let cdf = cumulative(&pmf);
            (cdf_report("exact", &m, n_len, n, &cdf, &out), out, 0)
        }
        Command::Toeplitz { model, n_len, n, out } => {
            let m = ProbModel::parse(&model.probs)?;
            let cdf = cdf_row_via_toeplitz(n_len, &m);
            (cdf_report("toeplitz", &m, n_len, n, &cdf, &out), out, 0)
        }
        Command::Simulate { model, n_len, samples, seed, out } => {
            let m = ProbModel::parse(&model.probs)?;
            (simulate(&m, n_len, samples, seed, &out)?, out, 0)
        }
        Command::Limit { model, s, method, samples, seed, out } => {
            let m = ProbModel::parse(&model.probs)?;
            (limit(&m, s, method, samples, seed, &out)?, out, 0)
        }
        Command::Table1 { samples, seed, max_n_len, out } => (table1(samples, seed, max_n_len, &out)?, out, 0),
        Command::Crosscheck { probs, max_n_len, inject_fault, out } => {
            let (report, ok) = run_crosscheck(probs.as_deref(), max_n_len, inject_fault, &out)?;
            (report, out, if ok { 0 } else { 1 })
        }
    };
    Ok((report.render(out.format)?, code))
}

fn rational(v: &BigRational) -> Value {
    format_rational(v).into()
}

fn decimal(v: &BigRational) -> Value {
    format_decimal(v, DECIMALS).into()
}

fn probs_value(m: &ProbModel) -> Value {
    Value::Array(m.probs().iter().map(rational).collect())
}

fn cumulative(pmf: &[BigRational]) -> Vec<BigRational> {
    let mut acc = BigRational::zero();
    pmf.iter()
        .map(|p| {
            acc += p;
            acc.clone()
        })
        .collect()
}

fn cdf_report(
    command: &'static str,
    m: &ProbModel,
    n_len: u32,
    n: Option<u32>,
    cdf: &[BigRational],
    out: &OutputArgs,
) -> Report {
    let pmf_at = |i: usize| if i == 0 { cdf[0].clone() } else { &cdf[i] - &cdf[i - 1] };
    let row = |i: u32| {
        let (f, p) = if i > n_len {
            (BigRational::one(), BigRational::zero())
        } else {
            (cdf[i as usize].clone(), pmf_at(i as usize))
        };
        vec![i.into(), rational(&f), decimal(&f), rational(&p)]
    };
    let rows = match n {
        Some(i) => vec![row(i)],
        None => (0..=n_len).map(row).collect(),
    };
    Report {
        command,
        params: vec![
            ("probs", probs_value(m)),
            ("N", n_len.into()),
            ("n", n.map_or(Value::Null, Value::from)),
        ],
        seed: None,
        workers: resolve_workers(out.workers),
        body: Body::Rows {
            columns: vec!["n", "cdf", "cdf_decimal", "pmf"],
            rows,
        },
    }
}

/// Asymptotic mean, variance and regime label, or nulls without a strict leader.
fn asymptotic_columns(m: &ProbModel, n_len: u32) -> anyhow::Result<(Value, Value, Value)> {
    match mean_regime(m) {
        Ok(regime) => {
            let mean = mean_asymptotic(m, n_len as u64)?;
            let var = variance_asymptotic(m, n_len as u64)?;
            Ok((
                format_decimal(&mean, 2).into(),
                format_decimal(&var, 2).into(),
                regime.as_str().into(),
            ))
        }
        Err(Error::DegenerateLeader(_)) => Ok((Value::Null, Value::Null, "degenerate leader".into())),
        Err(e) => Err(e.into()),
    }
}

fn simulate(m: &ProbModel, n_len: u32, samples: usize, seed: u64, out: &OutputArgs) -> anyhow::Result<Report> {
    if samples == 0 {
        return Err(Error::InvalidArgument("--samples must be positive".into()).into());
    }
    let cfg = SimConfig { n_len: n_len as usize, samples, seed, workers: out.workers };
    let sim = simulate_lwis(m, &cfg)?;
    let (mean, var, regime) = asymptotic_columns(m, n_len)?;
    let half = 4.0 * sim.std_error;
    Ok(Report {
        command: "simulate",
        params: vec![("probs", probs_value(m)), ("N", n_len.into()), ("samples", samples.into())],
        seed: Some(seed),
        workers: resolve_workers(out.workers),
        body: Body::Summary(vec![
            ("samples", sim.samples.into()),
            ("mean", sim.mean.into()),
            ("variance", sim.variance.into()),
            ("std_error", sim.std_error.into()),
            ("min", sim.min.into()),
            ("max", sim.max.into()),
            ("band_low", (sim.mean - half).into()),
            ("band_high", (sim.mean + half).into()),
            ("asymptotic_mean", mean),
            ("asymptotic_variance", var),
            ("regime", regime),
        ]),
    })
}

fn limit(
    m: &ProbModel,
    s: f64,
    method: LimitMethodArg,
    samples: usize,
    seed: u64,
    out: &OutputArgs,
) -> anyhow::Result<Report> {
    let (method, name, seed) = match method {
        LimitMethodArg::Reduced => (LimitMethod::Reduced(QuadratureConfig::default()), "reduced", None),
        LimitMethodArg::Mc => {
            if samples == 0 {
                return Err(Error::InvalidArgument("--samples must be positive".into()).into());
            }
            let cfg = McConfig { samples, seed, workers: out.workers };
            (LimitMethod::MonteCarlo(cfg), "mc", Some(seed))
        }
    };
    let spec = LimitSpec { model: m.clone(), s, method };
    let r = limit_cdf(&spec)?;
    let mut params = vec![("probs", probs_value(m)), ("s", s.into()), ("method", name.into())];
    if seed.is_some() {
        params.push(("samples", samples.into()));
    }
    Ok(Report {
        command: "limit",
        params,
        seed,
        workers: resolve_workers(out.workers),
        body: Body::Summary(vec![("value", r.value.into()), ("error_estimate", r.error_estimate.into())]),
    })
}

fn table1(samples: Option<usize>, seed: u64, max_n_len: Option<u32>, out: &OutputArgs) -> anyhow::Result<Report> {
    if samples == Some(0) {
        return Err(Error::InvalidArgument("--samples must be positive".into()).into());
    }
    let mut rows = Vec::new();
    for row in TABLE1.iter().filter(|r| max_n_len.is_none_or(|max| r.n_len <= max)) {
        let m = row.model()?;
        let n_s = samples.unwrap_or(row.samples);
        let sim = simulate_lwis(&m, &SimConfig { n_len: row.n_len as usize, samples: n_s, seed, workers: out.workers })?;
        let (formula, _, regime) = asymptotic_columns(&m, row.n_len)?;
        let p1 = to_f64(m.prob(1));
        let band = 4.0 * (row.n_len as f64 * p1 * (1.0 - p1) / n_s as f64).sqrt();
        rows.push(vec![
            m.k().into(),
            row.probs.into(),
            row.n_len.into(),
            n_s.into(),
            sim.mean.into(),
            sim.std_error.into(),
            row.sim_mean.into(),
            formula.clone(),
            row.formula.into(),
            (formula.as_str() == Some(row.formula)).into(),
            band.into(),
            ((sim.mean - row.sim_mean).abs() > band).into(),
            regime,
        ]);
    }
    Ok(Report {
        command: "table1",
        params: vec![
            ("samples", samples.map_or(Value::Null, Value::from)),
            ("max_N", max_n_len.map_or(Value::Null, Value::from)),
        ],
        seed: Some(seed),
        workers: resolve_workers(out.workers),
        body: Body::Rows {
            columns: vec![
                "k",
                "probs",
                "N",
                "N_S",
                "sim_mean",
                "sim_std_error",
                "published_mean",
                "formula",
                "published_formula",
                "formula_matches",
                "band",
                "flagged",
                "regime",
            ],
            rows,
        },
    })
}

/// Toeplitz route with one deliberately wrong value, for checking that the
/// comparison actually detects disagreement.
fn faulty_toeplitz(n_len: u32, model: &ProbModel) -> Vec<BigRational> {
    let mut row = cdf_row_via_toeplitz(n_len, model);
    if n_len == 2 {
        row[1] += BigRational::new(1.into(), 1_000_000_007.into());
    }
    row
}

fn run_crosscheck(
    probs: Option<&str>,
    max_n_len: u32,
    inject_fault: bool,
    out: &OutputArgs,
) -> anyhow::Result<(Report, bool)> {
    let models = match probs {
        Some(p) => vec![ProbModel::parse(p)?],
        None => default_models(),
    };
    let mut routes = Routes::default();
    if inject_fault {
        routes.toeplitz = faulty_toeplitz;
    }
    let outcome = crosscheck(&models, max_n_len, &routes);
    let null = || Value::Null;
    let (summary, ok) = match outcome {
        Outcome::AllEqual { comparisons } => (
            vec![
                ("status", "ALL-EQUAL".into()),
                ("comparisons", comparisons.into()),
                ("probs", null()),
                ("k", null()),
                ("N", null()),
                ("n", null()),
                ("enumeration", null()),
                ("exact", null()),
                ("toeplitz", null()),
            ],
            true,
        ),
        Outcome::Mismatch(d) => {
            eprintln!(
                "first discrepancy: probs {} k={} N={} n={}: enumeration {}, exact {}, toeplitz {}",
                d.probs, d.k, d.n_len, d.n, d.enumeration, d.exact, d.toeplitz
            );
            (
                vec![
                    ("status", "MISMATCH".into()),
                    ("comparisons", null()),
                    ("probs", d.probs.into()),
                    ("k", d.k.into()),
                    ("N", d.n_len.into()),
                    ("n", d.n.into()),
                    ("enumeration", d.enumeration.into()),
                    ("exact", d.exact.into()),
                    ("toeplitz", d.toeplitz.into()),
                ],
                false,
            )
        }
    };
    let model_list: Vec<Value> = models.iter().map(|m| m.to_string().into()).collect();
    Ok((
        Report {
            command: "crosscheck",
            params: vec![("models", Value::Array(model_list)), ("max_N", max_n_len.into())],
            seed: None,
            workers: resolve_workers(out.workers),
            body: Body::Summary(summary),
        },
        ok,
    ))
}
