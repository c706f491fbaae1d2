//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use randword::asymptotics::{
    limit_cdf_mc, limit_cdf_reduced, limit_const, mean_asymptotic, McConfig, QuadratureConfig,
};
use randword::crosscheck::{crosscheck, Outcome, Routes};
use randword::measure::prob_partition;
use randword::rational::{format_decimal, ratio, to_f64};
use randword::schur::{schur_bialternant, schur_jacobi_trudi};
use randword::simulate::{simulate_lwis, SimConfig};
use randword::table1::TABLE1;
use randword::{partitions_of, Partition, ProbModel};

const SEED: u64 = 42;

struct Verdict {
    pass: bool,
    detail: String,
    budget: Duration,
}

fn verdict(pass: bool, detail: impl Into<String>, budget_secs: u64) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
        budget: Duration::from_secs(budget_secs),
    }
}

fn model(probs: &str) -> ProbModel {
    ProbModel::parse(probs).expect("valid model")
}

fn mean_formula_matches_table() -> Verdict {
    let mut bad = Vec::new();
    for row in TABLE1.iter() {
        let got = format_decimal(&mean_asymptotic(&row.model().unwrap(), row.n_len as u64).unwrap(), 2);
        if got != row.formula {
            bad.push(format!("({}) N={}: {got} vs {}", row.probs, row.n_len, row.formula));
        }
    }
    verdict(bad.is_empty(), format!("{} rows, mismatches: {bad:?}", TABLE1.len()), 1)
}

fn simulation_reproduces_table() -> Verdict {
    let samples = 20_000;
    let mut lines = Vec::new();
    let mut all_inside = true;
    for row in TABLE1.iter().filter(|r| r.n_len <= 200) {
        let m = row.model().unwrap();
        let cfg = SimConfig { n_len: row.n_len as usize, samples, seed: SEED, workers: 0 };
        let sim = simulate_lwis(&m, &cfg).unwrap();
        let p1 = to_f64(m.prob(1));
        let band = 4.0 * (row.n_len as f64 * p1 * (1.0 - p1)).sqrt() / (samples as f64).sqrt();
        let inside = (sim.mean - row.sim_mean).abs() <= band;
        all_inside &= inside;
        lines.push(format!(
            "({}) N={} mean {:.3} vs {:.2} band {:.3}{}",
            row.probs,
            row.n_len,
            sim.mean,
            row.sim_mean,
            band,
            if inside { "" } else { " OUTSIDE" }
        ));
    }
    verdict(all_inside && lines.len() >= 4, lines.join("; "), 120)
}

fn triple_crosscheck() -> Verdict {
    let models: Vec<ProbModel> = ["1", "5/7,2/7", "1/2,1/2", "6/11,5/11", "1/2,5/14,1/7", "3/8,5/16,5/16", "3/8,3/8,1/4", "1/3,1/3,1/3"]
        .iter()
        .map(|s| model(s))
        .collect();
    match crosscheck(&models, 8, &Routes::default()) {
        Outcome::AllEqual { comparisons } => verdict(true, format!("{comparisons} exact comparisons"), 300),
        Outcome::Mismatch(d) => verdict(false, format!("{d:?}"), 300),
    }
}

fn normalization() -> Verdict {
    let models = ["1", "5/7,2/7", "1/2,1/2", "1/2,5/14,1/7", "1/3,1/3,1/3", "1/4,1/4,1/4,1/4", "2/5,1/5,1/5,1/5", "1/3,1/4,1/5,13/60"];
    let mut bad = Vec::new();
    let mut checked = 0;
    for probs in models {
        let m = model(probs);
        for n_len in 0..=25u32 {
            let total: BigRational = partitions_of(n_len, m.k()).map(|l| prob_partition(&l, &m)).sum();
            checked += 1;
            if !total.is_one() {
                bad.push(format!("({probs}) N={n_len}"));
            }
        }
    }
    verdict(bad.is_empty(), format!("{checked} (model, N) sums, failures: {bad:?}"), 120)
}

fn random_model(rng: &mut ChaCha8Rng, tied: bool) -> ProbModel {
    let k = rng.gen_range(1..=5);
    let weights: Vec<i64> = if tied {
        // at least one repeated weight when k > 1
        let mut w: Vec<i64> = (0..k).map(|_| rng.gen_range(1..=3)).collect();
        if k > 1 {
            w[1] = w[0];
        }
        w
    } else {
        let mut pool: Vec<i64> = (1..=12).collect();
        pool.shuffle(rng);
        pool[..k].to_vec()
    };
    let total: i64 = weights.iter().sum();
    let probs: Vec<BigRational> = weights.iter().map(|&w| ratio(w, total)).collect();
    ProbModel::new(&probs).unwrap()
}

fn schur_equivalence() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut bad = Vec::new();
    let mut with_ties = 0;
    for i in 0..200 {
        let m = random_model(&mut rng, i % 2 == 0);
        if !m.all_distinct() {
            with_ties += 1;
        }
        let n = rng.gen_range(0..=12);
        let all: Vec<Partition> = partitions_of(n, m.k()).collect();
        let lambda = all.choose(&mut rng).unwrap();
        if schur_jacobi_trudi(lambda, &m).value != schur_bialternant(lambda, &m).value {
            bad.push(format!("({m}) {lambda}"));
        }
    }
    verdict(bad.is_empty(), format!("200 pairs ({with_ties} with ties), mismatches: {bad:?}"), 60)
}

fn gaussian_limit() -> Verdict {
    let m = model("5/7,2/7");
    let cfg = QuadratureConfig::default();
    let worst = (-3..=3)
        .map(|s| {
            let s = s as f64;
            (limit_cdf_reduced(&m, s, &cfg).unwrap().value - phi(s / (2.0f64 / 7.0).sqrt())).abs()
        })
        .fold(0.0, f64::max);
    verdict(worst < 1e-8, format!("max |error| {worst:.2e}"), 60)
}

fn constant_check() -> Verdict {
    let cases = [(1usize, 5i64, 7i64), (2, 5, 16), (2, 3, 8), (3, 1, 5), (3, 3, 10)];
    let mut worst: f64 = 0.0;
    for (k1, num, den) in cases {
        let p1 = num as f64 / den as f64;
        let closed = limit_const(k1, &ratio(num, den)).unwrap();
        let brute = trapezoid_box(k1, 10.0, 0.1, |x| reduced_integrand(x, k1, p1));
        worst = worst.max(((closed - brute) / brute).abs());
    }
    verdict(worst < 1e-6, format!("k1 = 1..3, max relative error {worst:.2e}"), 60)
}

fn mc_agreement() -> Verdict {
    let cfg = McConfig { samples: 1_000_000, seed: SEED, workers: 0 };
    let mut lines = Vec::new();
    let mut ok = true;
    let mut check = |label: String, est: f64, se: f64, oracle: f64| {
        let inside = (est - oracle).abs() <= 3.0 * se;
        ok &= inside;
        lines.push(format!("{label}: {est:.5} vs {oracle:.5} (3se {:.5}){}", 3.0 * se, if inside { "" } else { " OUTSIDE" }));
    };
    let homogeneous = model("1/3,1/3,1/3");
    for s in [0.8, 1.5] {
        let r = limit_cdf_mc(&homogeneous, s, &cfg).unwrap();
        check(format!("(1/3,1/3,1/3) s={s}"), r.value, r.error_estimate, homogeneous_three_letter_cdf(s));
    }
    let two = model("1/2,1/2");
    let r = limit_cdf_mc(&two, 1.0, &cfg).unwrap();
    check("(1/2,1/2) s=1".into(), r.value, r.error_estimate, homogeneous_two_letter_cdf(1.0));
    let leader = model("3/8,5/16,5/16");
    for s in [-0.5, 0.5] {
        let r = limit_cdf_mc(&leader, s, &cfg).unwrap();
        check(format!("(3/8,5/16,5/16) s={s}"), r.value, r.error_estimate, phi(s / (5.0f64 / 8.0).sqrt()));
    }
    verdict(ok, lines.join("; "), 120)
}

fn variance_convergence() -> Verdict {
    let m = model("5/7,2/7");
    let cfg = SimConfig { n_len: 200, samples: 20_000, seed: SEED, workers: 0 };
    let sim = simulate_lwis(&m, &cfg).unwrap();
    let target = 200.0 * 10.0 / 49.0;
    let rel = (sim.variance - target).abs() / target;
    verdict(rel <= 0.10, format!("variance {:.3} vs {target:.3}, relative gap {rel:.3}", sim.variance), 120)
}

type Criterion = (&'static str, fn() -> Verdict);

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 asymptotic mean vs published formula column", mean_formula_matches_table),
        ("2 simulated means within 4 standard errors", simulation_reproduces_table),
        ("3 enumeration = partition sum = Toeplitz", triple_crosscheck),
        ("4 partition measure normalization", normalization),
        ("5 Jacobi-Trudi = confluent bialternant", schur_equivalence),
        ("6 Gaussian limit for a single leader", gaussian_limit),
        ("7 closed-form normalizing constant", constant_check),
        ("8 Monte Carlo vs oracles", mc_agreement),
        ("9 variance at N = 200", variance_convergence),
    ];
    let mut failures = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let v = run();
        let elapsed = start.elapsed();
        let pass = v.pass && elapsed <= v.budget;
        if !pass {
            failures += 1;
        }
        println!(
            "{} criterion {name} [{:.2}s / {}s]: {}",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            v.budget.as_secs(),
            v.detail
        );
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
