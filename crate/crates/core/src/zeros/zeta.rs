//! ζ(s) and ζ'(s)/ζ(s) for real s > 1 by Euler–Maclaurin summation.

use crate::error::{Error, Result};
use crate::summation::NeumaierSum;

/// Terms summed directly before the Euler–Maclaurin tail.
const HEAD: u32 = 20;

/// B_{2k} / (2k)! for k = 1..=10.
const BERNOULLI_OVER_FACTORIAL: [f64; 10] = [
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40_320.0,
    5.0 / 66.0 / 3_628_800.0,
    -691.0 / 2730.0 / 479_001_600.0,
    7.0 / 6.0 / 87_178_291_200.0,
    -3617.0 / 510.0 / 20_922_789_888_000.0,
    43_867.0 / 798.0 / 6_402_373_705_728_000.0,
    -174_611.0 / 330.0 / 2_432_902_008_176_640_000.0,
];

/// Returns (ζ(s), ζ'(s)).
fn zeta_and_derivative(s: f64) -> Result<(f64, f64)> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(Error::Divergence(s));
    }
    let mut value = NeumaierSum::new();
    let mut deriv = NeumaierSum::new();
    for n in 1..HEAD {
        let nf = f64::from(n);
        let term = nf.powf(-s);
        value += term;
        deriv += -nf.ln() * term;
    }
    let n = f64::from(HEAD);
    let log_n = n.ln();
    let n_pow = n.powf(-s);
    // N^{1-s}/(s-1) + N^{-s}/2
    value += n * n_pow / (s - 1.0);
    deriv += -n * n_pow * (log_n / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0)));
    value += 0.5 * n_pow;
    deriv += -0.5 * log_n * n_pow;
    // B_{2k}/(2k)! · s(s+1)…(s+2k−2) · N^{−s−2k+1}
    let mut rising = s;
    let mut rising_log_deriv = 1.0 / s;
    let mut power = n_pow / n;
    for (k, &coef) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        if k > 0 {
            let a = s + (2 * k - 1) as f64;
            let b = s + (2 * k) as f64;
            rising *= a * b;
            rising_log_deriv += 1.0 / a + 1.0 / b;
            power /= n * n;
        }
        let term = coef * rising * power;
        value += term;
        deriv += term * (rising_log_deriv - log_n);
    }
    Ok((value.value(), deriv.value()))
}

/// Riemann zeta function for real s > 1.
pub fn zeta(s: f64) -> Result<f64> {
    Ok(zeta_and_derivative(s)?.0)
}

/// ζ'(s)/ζ(s) for real s > 1.
pub fn zeta_log_derivative(s: f64) -> Result<f64> {
    let (z, d) = zeta_and_derivative(s)?;
    Ok(d / z)
}
