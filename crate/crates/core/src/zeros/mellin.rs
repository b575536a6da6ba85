//! Truncated Mellin identities
//!
//! `log ζ(s)  = s(s+1−c) ∫_1^∞ Π_{1,c}(x)/x^{s+2−c} dx` and
//! `−ζ'/ζ(s) = s(s+1−c) ∫_1^∞ ψ_{1,c}(x)/x^{s+2−c} dx`,
//!
//! with `F_{1,c}(x) = ∫_2^x F(t)/t^c dt`, evaluated up to a cut `X` in closed
//! form on every constancy interval of F, plus an explicit bound on the tail.

use serde::Serialize;

use super::zeta::{zeta, zeta_log_derivative};
use crate::error::{Error, Result};
use crate::sieve::SieveConfig;
use crate::smooth::weight_integral;
use crate::step::{jumps, CountingFunction};
use crate::summation::NeumaierSum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MellinKind {
    /// Π against log ζ(s).
    LogZeta,
    /// ψ against −ζ'(s)/ζ(s).
    LogDerivative,
}

impl MellinKind {
    pub fn counting(self) -> CountingFunction {
        match self {
            Self::LogZeta => CountingFunction::BigPi,
            Self::LogDerivative => CountingFunction::Psi,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MellinCheck {
    pub kind: MellinKind,
    pub s: f64,
    pub c: f64,
    pub x_cut: f64,
    pub lhs: f64,
    pub rhs: f64,
    /// Bound on `lhs − rhs`, which is the nonnegative tail beyond `x_cut`.
    pub tail_bound: f64,
}

impl MellinCheck {
    pub fn passes(&self) -> bool {
        (self.lhs - self.rhs).abs() <= self.tail_bound
    }
}

/// Smallest cut for which the explicit growth constants below hold.
const MIN_CUT: f64 = 17.0;

/// `(E(k1) − E(k2))/(k1 − k2)` with `E(k) = ∫_0^r e^{ky} dy`, by its power
/// series `Σ_{n≥1} h_n r^{n+1}/(n+1)!` with `h_n = (k1^n − k2^n)/(k1 − k2)`.
/// Exact up to rounding and free of the cancellation in the difference form.
fn exp_divided_difference(k1: f64, k2: f64, r: f64) -> f64 {
    let mut h = 1.0; // h_1
    let mut k2_pow = 1.0; // k2^{n-1}
    let mut r_pow = r * r / 2.0; // r^{n+1}/(n+1)!
    let mut acc = NeumaierSum::new();
    acc += h * r_pow;
    for n in 2..400u32 {
        k2_pow *= k2;
        h = k1 * h + k2_pow;
        r_pow *= r / f64::from(n + 1);
        let term = h * r_pow;
        acc += term;
        if term.abs() <= 1e-18 * acc.value().abs() && f64::from(n) > (k1.abs().max(k2.abs()) * r) {
            break;
        }
    }
    acc.value()
}

/// `∫_a^b (∫_a^t u^{-c} du) · t^{-α} dt` with `β = α + c − 1`, in closed form.
fn inner_weight_integral(a: f64, b: f64, c: f64, alpha: f64) -> f64 {
    let r = ((b - a) / a).ln_1p();
    let beta = alpha + c - 1.0;
    a.powf(1.0 - beta) * exp_divided_difference(1.0 - beta, 1.0 - alpha, r)
}

/// Check one Mellin identity at real `s > 1` with weight `c < 2`, truncated at `x_cut`.
pub fn mellin_identity_check(kind: MellinKind, s: f64, c: f64, x_cut: f64, cfg: &SieveConfig) -> Result<MellinCheck> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(Error::Divergence(s));
    }
    if !(c < 2.0) || !c.is_finite() {
        return Err(Error::UnsupportedWeight(c));
    }
    if !(x_cut >= MIN_CUT && x_cut <= cfg.x_max as f64) {
        return Err(Error::Domain {
            value: x_cut,
            domain: "[17, x_max]",
        });
    }
    let lhs = match kind {
        MellinKind::LogZeta => zeta(s)?.ln(),
        MellinKind::LogDerivative => -zeta_log_derivative(s)?,
    };
    let alpha = s + 2.0 - c;
    let upto = SieveConfig {
        x_max: x_cut.floor() as u64,
        ..cfg.clone()
    };

    // level = F(a), primitive = F_{1,c}(a), outer = ∫_2^a F_{1,c}(t) t^{-α} dt
    let mut level = NeumaierSum::new();
    let mut primitive = NeumaierSum::new();
    let mut outer = NeumaierSum::new();
    let mut left = 2.0;
    let mut advance = |to: f64, level: &NeumaierSum, primitive: &mut NeumaierSum, left: &mut f64| {
        let a = *left;
        if to <= a {
            return;
        }
        let f = level.value();
        outer += primitive.value() * weight_integral(a, to, alpha) + f * inner_weight_integral(a, to, c, alpha);
        *primitive += f * weight_integral(a, to, c);
        *left = to;
    };
    for j in jumps(kind.counting(), &upto)? {
        advance(j.location as f64, &level, &mut primitive, &mut left);
        level += j.delta;
    }
    advance(x_cut, &level, &mut primitive, &mut left);
    let scale = s * (s + 1.0 - c);
    let rhs = scale * outer.value();

    // F(t) ≤ K·t for t ≥ X: π(t) < 1.3t/log t and Π − π < 1.9√t (t ≥ 17); ψ(t) < 1.04t.
    let growth = match kind {
        MellinKind::LogZeta => 1.3 / x_cut.ln() + 1.9 / x_cut.sqrt(),
        MellinKind::LogDerivative => 1.04,
    };
    // F_{1,c}(t) ≤ F_{1,c}(X) + K t^{2−c}/(2−c) beyond the cut
    let tail = primitive.value() * x_cut.powf(-(s + 1.0 - c)) / (s + 1.0 - c)
        + growth * x_cut.powf(1.0 - s) / ((2.0 - c) * (s - 1.0));
    let rounding = 64.0 * f64::EPSILON * (lhs.abs() + rhs.abs());
    Ok(MellinCheck {
        kind,
        s,
        c,
        x_cut,
        lhs,
        rhs,
        tail_bound: scale * tail + rounding,
    })
}
