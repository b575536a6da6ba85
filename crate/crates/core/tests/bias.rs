use primebias::bias::{bias_integral_series, sweep};
use primebias::{bias_integral, BiasIntegralSpec, CountingFunction, SieveConfig, SignCertificate, SmoothFn};
use primebias_testkit::{integrate, li_series, prime_powers_upto, step_value};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};

fn oracle_jumps(kind: CountingFunction, x: f64) -> Vec<(f64, f64)> {
    prime_powers_upto(x.floor() as u64)
        .into_iter()
        .filter_map(|(n, p, m)| {
            let d = match kind {
                CountingFunction::Pi => (m == 1).then_some(1.0),
                CountingFunction::Theta => (m == 1).then(|| (p as f64).ln()),
                CountingFunction::Psi => Some((p as f64).ln()),
                CountingFunction::BigPi => Some(1.0 / f64::from(m)),
            }?;
            Some((n as f64, d))
        })
        .collect()
}

fn oracle(kind: CountingFunction, smooth: SmoothFn, c: f64, x: f64) -> f64 {
    let jumps = oracle_jumps(kind, x);
    let g = |t: f64| match smooth {
        SmoothFn::Li => li_series(t),
        SmoothFn::Identity => t,
    };
    let mut pts = vec![2.0];
    pts.extend(jumps.iter().map(|j| j.0).filter(|&t| t > 2.0 && t < x));
    pts.push(x);
    let mut total = 0.0;
    for w in pts.windows(2) {
        let level = step_value(&jumps, w[0]);
        // split so each quadrature has a one-signed integrand
        let weight = integrate(|t| t.powf(-c), w[0], w[1], 1e-300, 1e-14);
        total += level * weight - integrate(|t| g(t) / t.powf(c), w[0], w[1], 1e-300, 1e-14);
    }
    total
}

#[test]
fn matches_quadrature_oracle() {
    let cfg = SieveConfig::new(20_000).unwrap();
    let mut rng = rand::rngs::StdRng::seed_from_u64(2024);
    for _ in 0..24 {
        let kind = CountingFunction::ALL[rng.gen_range(0..4)];
        let smooth = if rng.gen_bool(0.5) {
            SmoothFn::Li
        } else {
            SmoothFn::Identity
        };
        let c = [0.0, 1.0, 2.0, rng.gen_range(-1.0..2.0)][rng.gen_range(0..4)];
        let x = rng.gen_range(2.0..20_000.0);
        let r = bias_integral(&BiasIntegralSpec::new(kind, smooth, c, x), &cfg).unwrap();
        let want = oracle(kind, smooth, c, x);
        let tol = 1e-10 * r.step_part.abs().max(r.smooth_part.abs()).max(1.0);
        assert!(
            (r.value - want).abs() <= tol,
            "{kind} {smooth} c={c} x={x}: {} vs {want}",
            r.value
        );
        assert!(r.error_bound <= tol);
    }
}

#[test]
fn series_matches_single_evaluations() {
    let cfg = SieveConfig::new(100_000).unwrap();
    let points = [2.0, 2.0, 2.5, 3.0, 10.0, 1000.0, 1000.5, 65_536.0, 100_000.0];
    for kind in CountingFunction::ALL {
        for smooth in [SmoothFn::Li, SmoothFn::Identity] {
            let series = bias_integral_series(kind, smooth, 1.5, &points, &cfg).unwrap();
            for (p, &x) in series.iter().zip(&points) {
                let single = bias_integral(&BiasIntegralSpec::new(kind, smooth, 1.5, x), &cfg).unwrap();
                assert_eq!(p.value, single.value, "{kind} {smooth} x={x}");
            }
        }
    }
    assert!(bias_integral_series(CountingFunction::Pi, SmoothFn::Li, 0.0, &[10.0, 5.0], &cfg).is_err());
}

#[test]
fn sweep_is_continuous_and_ends_at_x_max() {
    let cfg = SieveConfig::new(5000).unwrap();
    let mut last_end: Option<(f64, f64)> = None;
    let mut count = 0;
    sweep(CountingFunction::Theta, SmoothFn::Identity, 2.0, &cfg, |iv| {
        if let Some((b, v)) = last_end {
            assert_eq!(b, iv.a);
            assert_eq!(v, iv.start.value);
        }
        assert!(iv.peak.value >= iv.start.value.max(iv.end.value));
        assert!(iv.trough.value <= iv.start.value.min(iv.end.value));
        last_end = Some((iv.b, iv.end.value));
        count += 1;
    })
    .unwrap();
    assert_eq!(last_end.unwrap().0, 5000.0);
    assert_eq!(count, primebias_testkit::primes_upto(5000).len());
}

#[test]
fn canonical_integrals_negative() {
    let cfg = SieveConfig::new(1_000_000).unwrap();
    for (kind, smooth, c) in [
        (CountingFunction::Pi, SmoothFn::Li, 0.0),
        (CountingFunction::Theta, SmoothFn::Identity, 0.0),
        (CountingFunction::Pi, SmoothFn::Li, 2.0),
        (CountingFunction::Theta, SmoothFn::Identity, 2.0),
        (CountingFunction::BigPi, SmoothFn::Li, 2.0),
        (CountingFunction::Psi, SmoothFn::Identity, 2.0),
    ] {
        for x in [3.0, 1e3, 1e6] {
            let r = bias_integral(&BiasIntegralSpec::new(kind, smooth, c, x), &cfg).unwrap();
            assert_eq!(
                r.sign_certificate,
                SignCertificate::Negative,
                "{kind} {smooth} c={c} x={x}"
            );
            assert!(r.canonical);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn certificate_respects_error_bound(x in 2.0f64..5000.0, c in -1.0f64..=2.0, k in 0usize..4) {
        let cfg = SieveConfig::new(5000).unwrap();
        let r = bias_integral(&BiasIntegralSpec::new(CountingFunction::ALL[k], SmoothFn::Li, c, x), &cfg).unwrap();
        prop_assert!(r.error_bound >= 0.0);
        match r.sign_certificate {
            SignCertificate::Negative => prop_assert!(r.value + r.error_bound < 0.0),
            SignCertificate::Positive => prop_assert!(r.value - r.error_bound > 0.0),
            _ => prop_assert!(r.value.abs() <= r.error_bound),
        }
        prop_assert!((r.value - (r.step_part - r.smooth_part)).abs() <= r.error_bound);
    }

    #[test]
    fn theta_minus_t_integral_decreases(x in 3.0f64..4000.0, dx in 0.0f64..1000.0) {
        let cfg = SieveConfig::new(5000).unwrap();
        let spec = |x| BiasIntegralSpec::new(CountingFunction::Theta, SmoothFn::Identity, 1.0, x);
        let a = bias_integral(&spec(x), &cfg).unwrap();
        let b = bias_integral(&spec(x + dx), &cfg).unwrap();
        prop_assert!(b.jump_count >= a.jump_count);
        // θ(t) < t throughout, so the integrand is negative
        prop_assert!(b.value <= a.value + a.error_bound + b.error_bound);
    }
}
