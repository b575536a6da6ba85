//! End-to-end acceptance run: one PASS/FAIL line per criterion.
//!
//! The zero-dependent criterion needs a table of 10^6 zeros. It is generated
//! once with `zerogen` and cached under the cargo target tmpdir.

use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};

use primebias::bias::{bias_integral_series, q_decomposition_series};
use primebias::sieve::stream_primes;
use primebias::smooth::{
    antiderivative_li_over_t, antiderivative_li_over_t2, antiderivative_li_over_tc, antiderivative_of_li,
    weight_integral,
};
use primebias::verify::{self, log_grid, CheckStatus, VerificationReport, VerifyOptions, MERTENS_B, MERTENS_E};
use primebias::zeros::{gamma_square_partial_sum, load_zero_table, mellin_identity_check, psi1_explicit, MellinKind};
use primebias::{bias_integral, Antiderivative, BiasIntegralSpec, CountingFunction, SieveConfig, SmoothFn};
use primebias_testkit as oracle;

const X_MAX: u64 = 10_000_000;
const ZERO_COUNT: usize = 1_000_000;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self {
            pass,
            detail: detail.into(),
        }
    }
}

fn sieve(x_max: u64) -> SieveConfig {
    SieveConfig::new(x_max).unwrap()
}

fn zero_table_path() -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(format!("zeta-zeros-{ZERO_COUNT}.txt"));
    let usable = load_zero_table(&path).is_ok_and(|t| t.len() == ZERO_COUNT);
    if !usable {
        let started = Instant::now();
        let gammas = zerogen::zeros(ZERO_COUNT, 1e-10).expect("zero generation");
        let partial = path.with_extension("partial");
        zerogen::write_table_file(&partial, &gammas).expect("write zero table");
        std::fs::rename(&partial, &path).expect("move zero table into place");
        println!(
            "generated {ZERO_COUNT} zeros in {:.1}s -> {}",
            started.elapsed().as_secs_f64(),
            path.display()
        );
    }
    path
}

/// Status of registered checks in a full verification run.
fn checks_pass(report: &VerificationReport, ids: &[&str]) -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for id in ids {
        let c = report.get(id).unwrap_or_else(|| panic!("check {id} missing"));
        ok &= c.status == CheckStatus::Pass;
        parts.push(format!(
            "{id} {} (margin {:.3e} at {})",
            c.status.as_str(),
            c.worst_margin.unwrap_or(f64::NAN),
            c.worst_location.unwrap_or(f64::NAN)
        ));
    }
    (ok, parts.join("; "))
}

fn criterion_1() -> Outcome {
    let cases = [
        ("pi", "li", -30_000.0, -29_000.0),
        ("theta", "t", -140_000.0, -130_000.0),
        ("psi", "t", -2900.0, -2800.0),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (f, g, lo, hi) in cases {
        let started = Instant::now();
        let out = Command::new(env!("CARGO_BIN_EXE_primebias"))
            .args(["compute", "--fn", f, "--smooth", g, "--c", "0", "--x", "3000"])
            .output()
            .expect("run primebias");
        let secs = started.elapsed().as_secs_f64();
        let json: serde_json::Value = serde_json::from_slice(&out.stdout).expect("compute prints JSON");
        let value = json["value"].as_f64().unwrap();
        let pass = out.status.success() && value > lo && value < hi && secs < 1.0;
        ok &= pass;
        parts.push(format!("{f}-{g}={value:.2} in {secs:.3}s"));
    }
    Outcome::new(ok, parts.join(", "))
}

fn criterion_2(report: &VerificationReport) -> Outcome {
    let started = Instant::now();
    let mut opts = VerifyOptions::new(X_MAX);
    opts.checks = Some(
        [
            "pi-li-weighted-negative",
            "theta-weighted-negative",
            "bigpi-li-weighted-negative",
            "psi-weighted-negative",
        ]
        .map(String::from)
        .to_vec(),
    );
    let own = verify::run(&opts).unwrap();
    let secs = started.elapsed().as_secs_f64();
    let ids = [
        "pi-li-weighted-negative",
        "theta-weighted-negative",
        "bigpi-li-weighted-negative",
        "psi-weighted-negative",
    ];
    let (ok, detail) = checks_pass(&own, &ids);
    let (ok_full, _) = checks_pass(report, &ids);
    Outcome::new(ok && ok_full && secs < 120.0, format!("{detail}; {secs:.2}s"))
}

fn criterion_3(report: &VerificationReport) -> Outcome {
    let (ok, detail) = checks_pass(
        report,
        &[
            "pi-below-li",
            "theta-below-x",
            "pi-li-integral-negative",
            "theta-integral-negative",
        ],
    );
    Outcome::new(ok, detail)
}

fn criterion_4(report: &VerificationReport) -> Outcome {
    // pointwise at every prime, independent of the interval walk
    let mut recip = 0.0;
    let mut logp = 0.0;
    let mut recip_fail = Vec::new();
    let mut logp_fail = Vec::new();
    for p in stream_primes(&sieve(X_MAX)).unwrap() {
        let x = p as f64;
        recip += 1.0 / x;
        logp += x.ln() / x;
        let l = x.ln();
        if recip >= l.ln() + MERTENS_B + 1.0 / (l * l) {
            recip_fail.push(p);
        }
        if logp >= l + MERTENS_E + 1.0 / l {
            logp_fail.push(p);
        }
    }
    // The log p/p bound is only valid from x = 31.7 on; below that it fails
    // at exactly these primes.
    let expected_logp_fail: Vec<u64> = vec![3, 5, 7, 11, 13, 17, 19, 23, 31];
    let pointwise = recip_fail.is_empty() && logp_fail == expected_logp_fail;
    let (ok, detail) = checks_pass(report, &["mertens-reciprocal", "mertens-logp", "partial-summation"]);
    let ps = report.get("partial-summation").unwrap();
    Outcome::new(
        ok && pointwise && ps.evaluations == 100,
        format!(
            "1/p bound violations {recip_fail:?}; log p/p bound violations {logp_fail:?} (valid for x >= 32); {detail}"
        ),
    )
}

fn criterion_5() -> Outcome {
    let points = log_grid(3000.0, 1e6, 20);
    let rows = q_decomposition_series(&points, &sieve(1_000_000)).unwrap();
    let c = rows[0].c;
    let worst = rows.iter().map(|r| r.residual.abs()).fold(0.0, f64::max);
    Outcome::new(
        (c + 0.4351).abs() <= 1e-4 && worst < 1e-4 && rows.len() == 20,
        format!("C={c:.9}, max residual {worst:.2e} over 20 points"),
    )
}

fn criterion_6(report: &VerificationReport, zeros_path: &PathBuf) -> Outcome {
    let table = load_zero_table(zeros_path).unwrap();
    let n = table.len();
    let mut increasing = true;
    let mut prev = 0.0;
    for k in 1..=n {
        let s = gamma_square_partial_sum(&table, k).unwrap();
        increasing &= s > prev;
        prev = s;
    }
    let in_window = prev > 0.0462 && prev < 0.046210;

    // explicit formula against the exact sieve value of ψ₁
    let points = log_grid(1e3, 1e6, 10);
    let exact = bias_integral_series(
        CountingFunction::Psi,
        SmoothFn::Identity,
        0.0,
        &points,
        &sieve(1_000_000),
    )
    .unwrap();
    let mut explicit_ok = true;
    let mut worst_ratio: f64 = 0.0;
    for p in &exact {
        let e = psi1_explicit(p.x, &table).unwrap();
        let gap = (e.psi1_explicit - p.step_part).abs();
        let allowed = e.truncation_bound + 1e-6 * p.x.powf(1.5);
        explicit_ok &= gap <= allowed;
        worst_ratio = worst_ratio.max(gap / allowed);
    }
    let (ok, detail) = checks_pass(report, &["psi-integral-bound", "gamma-square-sum", "explicit-formula"]);
    Outcome::new(
        ok && increasing && in_window && explicit_ok && n >= 10_000,
        format!(
            "{n} zeros, partial sum {prev:.10} increasing={increasing}; explicit/exact gap at most {:.2e} of allowance; {detail}",
            worst_ratio
        ),
    )
}

fn criterion_7() -> Outcome {
    let cfg = sieve(1_000_000);
    let mut ok = true;
    let mut worst: f64 = 0.0;
    for s in [1.5, 2.0, 3.0] {
        for c in [0.0, 0.5, 1.5] {
            let m = mellin_identity_check(MellinKind::LogZeta, s, c, 1e6, &cfg).unwrap();
            ok &= m.passes();
            worst = worst.max((m.lhs - m.rhs).abs() / m.tail_bound);
            if s == 2.0 {
                let anchor = (std::f64::consts::PI.powi(2) / 6.0).ln();
                ok &= (m.lhs - anchor).abs() < 1e-14;
            }
        }
    }
    Outcome::new(
        ok,
        format!("9 pairs at x_cut=1e6, |lhs-rhs| at most {worst:.3} of tail bound"),
    )
}

fn oracle_smooth(g: SmoothFn, t: f64) -> f64 {
    match g {
        SmoothFn::Li => oracle::li_series(t),
        SmoothFn::Identity => t,
    }
}

/// `∫_2^x (F − G)/t^c` by adaptive quadrature on each constancy interval.
fn quadrature_bias(f: CountingFunction, g: SmoothFn, c: f64, x: f64) -> f64 {
    let events: Vec<(f64, f64)> = oracle::prime_powers_upto(x.floor() as u64)
        .into_iter()
        .filter_map(|(n, p, m)| {
            let delta = match f {
                CountingFunction::Pi => (m == 1).then_some(1.0),
                CountingFunction::Theta => (m == 1).then(|| (p as f64).ln()),
                CountingFunction::Psi => Some((p as f64).ln()),
                CountingFunction::BigPi => Some(1.0 / f64::from(m)),
            }?;
            Some((n as f64, delta))
        })
        .collect();
    let mut total = 0.0;
    let mut level = 0.0;
    for (i, &(a, delta)) in events.iter().enumerate() {
        level += delta;
        let b = events.get(i + 1).map_or(x, |e| e.0).min(x);
        if b > a {
            total += oracle::integrate(|t| (level - oracle_smooth(g, t)) / t.powf(c), a, b, 1e-300, 1e-13);
        }
    }
    total
}

/// Derivative by Richardson-extrapolated central differences.
fn derivative(f: impl Fn(f64) -> f64, x: f64) -> f64 {
    let d = |h: f64| (f(x + h) - f(x - h)) / (2.0 * h);
    let h = 1e-3 * x;
    (4.0 * d(h / 2.0) - d(h)) / 3.0
}

fn criterion_8() -> Outcome {
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed_0b1a5);
    let cfg = sieve(100_000);
    let mut worst_oracle: f64 = 0.0;
    for _ in 0..20 {
        let f = CountingFunction::ALL[rng.gen_range(0..4)];
        let g = [SmoothFn::Li, SmoothFn::Identity][rng.gen_range(0..2)];
        let c: f64 = rng.gen_range(0.0..=2.0);
        let x = (rng.gen_range(3f64.ln()..1e5f64.ln())).exp();
        let got = bias_integral(&BiasIntegralSpec::new(f, g, c, x), &cfg).unwrap().value;
        let want = quadrature_bias(f, g, c, x);
        worst_oracle = worst_oracle.max((got - want).abs() / want.abs());
    }

    let mut worst_fd: f64 = 0.0;
    let mut check = |anti: &dyn Fn(f64) -> f64, integrand: &dyn Fn(f64) -> f64, x: f64| {
        let d = derivative(anti, x);
        let want = integrand(x);
        worst_fd = worst_fd.max((d - want).abs() / want.abs());
    };
    for _ in 0..100 {
        let x = (rng.gen_range(1.5f64.ln()..1e8f64.ln())).exp();
        let c: f64 = rng.gen_range(-1.0..=2.0);
        let li = oracle::li_series;
        check(&|t| antiderivative_of_li(t).unwrap(), &li, x);
        check(&|t| antiderivative_li_over_t2(t).unwrap(), &|t| li(t) / (t * t), x);
        check(&|t| antiderivative_li_over_t(t).unwrap(), &|t| li(t) / t, x);
        if c != 1.0 && c != 2.0 {
            check(&|t| antiderivative_li_over_tc(t, c).unwrap(), &|t| li(t) / t.powf(c), x);
        }
        for g in [SmoothFn::Li, SmoothFn::Identity] {
            let a = Antiderivative::new(g, c);
            check(&|t| a.evaluate(t).unwrap(), &|t| oracle_smooth(g, t) / t.powf(c), x);
        }
        check(&|t| weight_integral(2.0, t, c), &|t| t.powf(-c), x);
    }
    Outcome::new(
        worst_oracle <= 1e-7 && worst_fd <= 1e-6,
        format!("quadrature oracle rel err {worst_oracle:.2e} on 20 cases; finite-difference rel err {worst_fd:.2e}"),
    )
}

fn criterion_9(report: &VerificationReport) -> Outcome {
    let (ok, detail) = checks_pass(
        report,
        &[
            "pi-bounds",
            "theta-bounds",
            "bigpi-pi-sandwich",
            "psi-theta-sandwich",
            "li-upper-bound",
        ],
    );
    let li = report.get("li-upper-bound").unwrap();
    Outcome::new(ok && li.evaluations == 1000 && li.range.1 == 1e10, detail)
}

fn main() {
    let zeros = zero_table_path();
    let mut opts = VerifyOptions::new(X_MAX);
    opts.zero_table_path = Some(zeros.clone());
    let report = verify::run(&opts).expect("verification run");
    println!("full verification at x_max=1e7: {:.2}s", report.runtime_seconds);

    type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        ("integral brackets at 3000", Box::new(criterion_1)),
        (
            "weighted integrals negative with envelopes",
            Box::new(|| criterion_2(&report)),
        ),
        ("pi < li and theta < x", Box::new(|| criterion_3(&report))),
        (
            "Mertens bounds and partial summation",
            Box::new(|| criterion_4(&report)),
        ),
        ("decomposition constant", Box::new(criterion_5)),
        (
            "zero sums and explicit formula",
            Box::new(|| criterion_6(&report, &zeros)),
        ),
        ("Mellin identities", Box::new(criterion_7)),
        ("oracle equivalence", Box::new(criterion_8)),
        ("bound suites", Box::new(|| criterion_9(&report))),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let o = run();
        if !o.pass {
            failed += 1;
        }
        println!(
            "criterion {} {}: {} [{:.2}s] {}",
            i + 1,
            name,
            if o.pass { "PASS" } else { "FAIL" },
            started.elapsed().as_secs_f64(),
            o.detail
        );
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
