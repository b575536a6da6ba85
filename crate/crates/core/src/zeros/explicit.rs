//! Truncated explicit formula for `ψ₁(x) = ∫_2^x ψ(t) dt`:
//!
//! `ψ₁(x) = x²/2 − Σ_ρ x^{ρ+1}/(ρ(ρ+1)) − x·(ζ'/ζ)(0) + (ζ'/ζ)(−1) − Σ_{r≥1} x^{1−2r}/(2r(2r−1))`.

use rayon::prelude::*;
use serde::Serialize;

use super::table::{gamma_square_partial_sum, ZeroTable};
use super::{SUM_INV_GAMMA_SQ_UPPER, ZERO_SUM_COEFFICIENT};
use crate::error::{Error, Result};
use crate::summation::NeumaierSum;

/// (ζ'/ζ)(0) = log 2π.
pub const LOG_DERIV_AT_ZERO: f64 = 1.837_877_066_409_345_5;
/// (ζ'/ζ)(−1) = ζ'(−1)/ζ(−1) = 12·(log A − 1/12), A the Glaisher–Kinkelin constant.
pub const LOG_DERIV_AT_MINUS_ONE: f64 = 1.985_053_724_405_411;

const BLOCK: usize = 4096;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExplicitFormulaResult {
    pub x: f64,
    pub psi1_explicit: f64,
    /// `Σ_ρ x^{ρ+1}/(ρ(ρ+1))` over the used zeros and their conjugates.
    pub zero_sum: f64,
    /// `Σ_{r≥1} x^{1−2r}/(2r(2r−1))`.
    pub trivial_sum: f64,
    /// Bound on the omitted zeros: `x^{3/2}·(0.046210 − Σ_used 1/γ²)`.
    pub truncation_bound: f64,
    pub zeros_used: usize,
}

/// `2·Re(x^{ρ+1}/(ρ(ρ+1)))` for ρ = 1/2 + iγ, divided by `x^{3/2}`.
#[inline]
fn pair_term(gamma: f64, log_x: f64) -> f64 {
    // ρ(ρ+1) = 3/4 − γ² + 2iγ
    let re = 0.75 - gamma * gamma;
    let im = 2.0 * gamma;
    let (sin, cos) = (gamma * log_x).sin_cos();
    2.0 * (re * cos + im * sin) / (re * re + im * im)
}

/// Zero sum `Σ_ρ x^{ρ+1}/(ρ(ρ+1))` with blocks reduced in table order.
fn zero_sum(gammas: &[f64], x: f64) -> f64 {
    let log_x = x.ln();
    let blocks: Vec<NeumaierSum> = gammas
        .par_chunks(BLOCK)
        .map(|chunk| chunk.iter().map(|&g| pair_term(g, log_x)).sum())
        .collect();
    let mut total = NeumaierSum::new();
    for b in blocks {
        total += b.value();
    }
    x.powf(1.5) * total.value()
}

/// `Σ_{r≥1} x^{1−2r}/(2r(2r−1))` for x > 1.
fn trivial_zero_sum(x: f64) -> f64 {
    let inv_sq = 1.0 / (x * x);
    let mut power = x;
    let mut acc = NeumaierSum::new();
    for r in 1..10_000u32 {
        power *= inv_sq;
        let r2 = 2.0 * f64::from(r);
        let term = power / (r2 * (r2 - 1.0));
        acc += term;
        if term < 1e-18 * acc.value() {
            break;
        }
    }
    acc.value()
}

/// Evaluate the explicit formula for ψ₁ at `x >= 2` with every zero of the table.
pub fn psi1_explicit(x: f64, zeros: &ZeroTable) -> Result<ExplicitFormulaResult> {
    if zeros.is_empty() {
        return Err(Error::EmptyTable);
    }
    if !(x >= 2.0) || !x.is_finite() {
        return Err(Error::Domain {
            value: x,
            domain: "[2, inf)",
        });
    }
    let zero_sum = zero_sum(zeros.gammas(), x);
    let trivial_sum = trivial_zero_sum(x);
    let mut psi1 = NeumaierSum::new();
    psi1 += 0.5 * x * x;
    psi1 += -zero_sum;
    psi1 += -x * LOG_DERIV_AT_ZERO;
    psi1 += LOG_DERIV_AT_MINUS_ONE;
    psi1 += -trivial_sum;
    let used = gamma_square_partial_sum(zeros, zeros.len())?;
    let truncation_bound = x.powf(1.5) * (SUM_INV_GAMMA_SQ_UPPER - used).max(0.0);
    Ok(ExplicitFormulaResult {
        x,
        psi1_explicit: psi1.value(),
        zero_sum,
        trivial_sum,
        truncation_bound,
        zeros_used: zeros.len(),
    })
}

/// `0.04621·x^{3/2}`, the bound on the full zero sum under RH.
pub fn zero_sum_magnitude_bound(x: f64) -> f64 {
    ZERO_SUM_COEFFICIENT * x.powf(1.5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn first_zeros() -> ZeroTable {
        ZeroTable::new(
            vec![14.134_725_141_734_694, 21.022_039_638_771_555, 25.010_857_580_145_69],
            "first three",
        )
        .unwrap()
    }

    #[test]
    fn constants() {
        assert_relative_eq!(
            LOG_DERIV_AT_ZERO,
            (2.0 * std::f64::consts::PI).ln(),
            max_relative = 1e-16
        );
        assert!((LOG_DERIV_AT_MINUS_ONE - 1.985).abs() < 1e-3);
    }

    #[test]
    fn trivial_sum_bounds() {
        for x in [2.0, 3.0, 100.0, 1e6] {
            let s = trivial_zero_sum(x);
            assert!(s >= 0.0 && s <= x / (2.0 * (x * x - 1.0)));
            assert_relative_eq!(s, 1.0 / (2.0 * x), max_relative = 0.5);
        }
        // closed form: Σ x^{1-2r}/(2r(2r-1)) = x·[u·atanh(u) + ½·log(1−u²)] with u = 1/x
        let x: f64 = 3.0;
        let u = 1.0 / x;
        let closed = x * (u * u.atanh() + 0.5 * (1.0 - u * u).ln());
        assert_relative_eq!(trivial_zero_sum(x), closed, max_relative = 1e-14);
    }

    #[test]
    fn single_pair_term() {
        // x^{ρ+1}/(ρ(ρ+1)) by complex arithmetic
        use num_complex::Complex64;
        let g = 14.134_725_141_734_694;
        let x: f64 = 1234.5;
        let rho = Complex64::new(0.5, g);
        let direct = (rho + 1.0) * x.ln();
        let term = direct.exp() / (rho * (rho + 1.0));
        assert_relative_eq!(pair_term(g, x.ln()) * x.powf(1.5), 2.0 * term.re, max_relative = 1e-12);
    }

    #[test]
    fn error_paths() {
        assert!(psi1_explicit(1.0, &first_zeros()).is_err());
        let r = psi1_explicit(100.0, &first_zeros()).unwrap();
        assert_eq!(r.zeros_used, 3);
        assert!(r.zero_sum.abs() <= zero_sum_magnitude_bound(100.0));
        assert!(r.truncation_bound > 0.0);
    }
}
