//! The logarithmic and exponential integrals, and the closed-form
//! antiderivatives needed to integrate `G(t)/t^c` exactly for `G ∈ {li, t}`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::summation::NeumaierSum;

/// Euler–Mascheroni constant to 20 digits.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Largest argument for which Ei is finite in double precision.
const EI_MAX_ARG: f64 = 700.0;

/// Exponential integral Ei(z) for real `z != 0`.
///
/// For `z >= -1` the convergent series `γ + log|z| + Σ z^k/(k·k!)` is summed
/// with compensation; on that side every term is positive (z > 0) or the
/// terms are bounded by 1 (−1 ≤ z < 0). Further left the series cancels
/// catastrophically and `Ei(z) = −E1(−z)` is taken from the continued fraction.
pub fn ei(z: f64) -> Result<f64> {
    if z == 0.0 {
        return Err(Error::Pole("Ei"));
    }
    if !z.is_finite() || z > EI_MAX_ARG {
        return Err(Error::Domain {
            value: z,
            domain: "(-inf, 700] without 0",
        });
    }
    if z < -1.0 {
        return Ok(-e1_continued_fraction(-z));
    }
    Ok(ei_series(z).0)
}

/// Series value of Ei and the number of terms used.
pub(crate) fn ei_series(z: f64) -> (f64, usize) {
    let mut sum = NeumaierSum::new();
    sum += EULER_GAMMA;
    sum += z.abs().ln();
    let mut power = 1.0; // z^k / k!
    let mut k = 1usize;
    loop {
        power *= z / k as f64;
        let term = power / k as f64;
        sum += term;
        if k as f64 > z.abs() && term.abs() < 1e-18 * sum.value().abs() {
            return (sum.value(), k);
        }
        k += 1;
    }
}

/// E1(x) for x > 1 by the modified Lentz evaluation of its continued fraction.
fn e1_continued_fraction(x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut b = x + 1.0;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..10_000 {
        let an = -((i * i) as f64);
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < 1e-16 {
            break;
        }
    }
    h * (-x).exp()
}

/// Principal-value logarithmic integral `li(x) = Ei(log x)`.
pub fn li(x: f64) -> Result<f64> {
    if x == 1.0 {
        return Err(Error::Pole("li"));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain {
            value: x,
            domain: "(0, inf) without 1",
        });
    }
    ei(x.ln())
}

/// `expm1(y) / y`, equal to 1 at y = 0.
pub(crate) fn exprel(y: f64) -> f64 {
    if y.abs() < 1e-5 {
        1.0 + y / 2.0 + y * y / 6.0
    } else {
        y.exp_m1() / y
    }
}

/// `∫_a^b t^{-c} dt` for `0 < a <= b`, without cancellation near c = 1.
pub fn weight_integral(a: f64, b: f64, c: f64) -> f64 {
    if c == 0.0 {
        return b - a;
    }
    if c == 2.0 {
        return (b - a) / (a * b);
    }
    let r = ((b - a) / a).ln_1p();
    if c == 1.0 {
        return r;
    }
    a.powf(1.0 - c) * r * exprel((1.0 - c) * r)
}

fn require_above_one(x: f64) -> Result<()> {
    if x > 1.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain {
            value: x,
            domain: "(1, inf)",
        })
    }
}

/// `x·li(x) − li(x²)`, an antiderivative of li.
pub fn antiderivative_of_li(x: f64) -> Result<f64> {
    require_above_one(x)?;
    Ok(x * li(x)? - ei(2.0 * x.ln())?)
}

/// `−li(x)/x + log log x`, an antiderivative of `li(x)/x²`.
pub fn antiderivative_li_over_t2(x: f64) -> Result<f64> {
    require_above_one(x)?;
    Ok(-li(x)? / x + x.ln().ln())
}

/// `li(x)·log x − x`, an antiderivative of `li(x)/x`.
pub fn antiderivative_li_over_t(x: f64) -> Result<f64> {
    require_above_one(x)?;
    Ok(li(x)? * x.ln() - x)
}

/// `[li(x)·x^{1−c} − Ei((2−c)·log x)] / (1−c)`, an antiderivative of
/// `li(x)/x^c` for `c ∉ {1, 2}`.
pub fn antiderivative_li_over_tc(x: f64, c: f64) -> Result<f64> {
    require_above_one(x)?;
    if c == 1.0 || c == 2.0 {
        return Err(Error::SpecialWeight(c));
    }
    let log_x = x.ln();
    Ok((li(x)? * ((1.0 - c) * log_x).exp() - ei((2.0 - c) * log_x)?) / (1.0 - c))
}

/// The smooth comparison function G in `∫ (F − G)/t^c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SmoothFn {
    /// G(t) = li(t).
    Li,
    /// G(t) = t.
    Identity,
}

impl SmoothFn {
    pub fn name(self) -> &'static str {
        match self {
            Self::Li => "li",
            Self::Identity => "t",
        }
    }

    pub fn eval(self, t: f64) -> Result<f64> {
        match self {
            Self::Li => li(t),
            Self::Identity => Ok(t),
        }
    }
}

impl fmt::Display for SmoothFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SmoothFn {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "li" => Ok(Self::Li),
            "t" | "x" | "identity" => Ok(Self::Identity),
            other => Err(format!("unknown smooth function {other:?} (li, t)")),
        }
    }
}

/// Below this distance from c = 1 the general li form loses digits to the
/// 0/0 cancellation and a first-order expansion in `1 − c` is used instead.
const NEAR_ONE: f64 = 1e-6;

/// Closed-form antiderivative of `G(t)/t^c`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Antiderivative {
    pub smooth: SmoothFn,
    pub c: f64,
}

impl Antiderivative {
    pub fn new(smooth: SmoothFn, c: f64) -> Self {
        Self { smooth, c }
    }

    /// Value of the antiderivative at `x > 1`, paired with the magnitude of
    /// the largest term formed, for rounding estimates.
    pub fn evaluate_scaled(&self, x: f64) -> Result<(f64, f64)> {
        require_above_one(x)?;
        let c = self.c;
        match self.smooth {
            SmoothFn::Identity => {
                let d = 2.0 - c;
                if d == 0.0 {
                    let v = x.ln();
                    Ok((v, v.abs()))
                } else {
                    let v = (d * x.ln()).exp() / d;
                    Ok((v, v.abs()))
                }
            }
            SmoothFn::Li => {
                let log_x = x.ln();
                if c == 0.0 {
                    let (a, b) = (x * li(x)?, ei(2.0 * log_x)?);
                    Ok((a - b, a.abs().max(b.abs())))
                } else if c == 2.0 {
                    let (a, b) = (li(x)? / x, log_x.ln());
                    Ok((b - a, a.abs().max(b.abs())))
                } else if (c - 1.0).abs() < NEAR_ONE {
                    let eps = 1.0 - c;
                    let lx = li(x)?;
                    let base = lx * log_x - x;
                    let first = 0.5 * (lx * log_x * log_x - (x * log_x - x));
                    Ok((base + eps * first, (lx * log_x).abs().max(x)))
                } else {
                    let a = li(x)? * ((1.0 - c) * log_x).exp();
                    let b = ei((2.0 - c) * log_x)?;
                    Ok(((a - b) / (1.0 - c), a.abs().max(b.abs()) / (1.0 - c).abs()))
                }
            }
        }
    }

    pub fn evaluate(&self, x: f64) -> Result<f64> {
        Ok(self.evaluate_scaled(x)?.0)
    }

    /// `∫_a^b G(t)/t^c dt` with `1 < a <= b`, and a rounding scale.
    pub fn definite_scaled(&self, a: f64, b: f64) -> Result<(f64, f64)> {
        require_above_one(a)?;
        require_above_one(b)?;
        if self.smooth == SmoothFn::Identity {
            // ∫ t^{1-c} = weight integral with exponent c - 1
            let v = weight_integral(a, b, self.c - 1.0);
            return Ok((v, v.abs()));
        }
        let (fb, sb) = self.evaluate_scaled(b)?;
        let (fa, sa) = self.evaluate_scaled(a)?;
        Ok((fb - fa, sa + sb))
    }

    pub fn definite(&self, a: f64, b: f64) -> Result<f64> {
        Ok(self.definite_scaled(a, b)?.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn li_reference_values() {
        assert_relative_eq!(li(2.0).unwrap(), 1.045_163_780_117_492_7, max_relative = 1e-15);
        assert_relative_eq!(
            li(4.0).unwrap() - li(2.0).unwrap(),
            1.922_421_314_921_558,
            max_relative = 1e-14
        );
        assert_relative_eq!(li(3000.0).unwrap(), 442.759_203_376_643_4, max_relative = 1e-15);
        assert_relative_eq!(ei(1.0).unwrap(), 1.895_117_816_355_936_8, max_relative = 1e-15);
    }

    #[test]
    fn li_poles_and_domain() {
        assert!(matches!(li(1.0), Err(Error::Pole(_))));
        assert!(matches!(li(0.0), Err(Error::Domain { .. })));
        assert!(matches!(li(-3.0), Err(Error::Domain { .. })));
        assert!(matches!(ei(0.0), Err(Error::Pole(_))));
        assert!(li(1.0 + 1e-12).unwrap() < -25.0);
        assert!(li(1.0 + 1e-12).unwrap() > li(1.0 + 1e-15).unwrap());
    }

    #[test]
    fn negative_arguments_use_continued_fraction() {
        // Ei(-1) = -0.219383934395520273677163775460...
        assert_relative_eq!(ei(-1.0).unwrap(), -0.219_383_934_395_520_27, max_relative = 1e-14);
        // Ei(-5) = -0.001148295591275325797342...
        assert_relative_eq!(ei(-5.0).unwrap(), -0.001_148_295_591_275_325_8, max_relative = 1e-13);
        // continuity across the switch point
        let left = ei(-1.0 - 1e-9).unwrap();
        let right = ei(-1.0 + 1e-9).unwrap();
        assert!((left - right).abs() < 1e-8);
    }

    #[test]
    fn series_length_at_forty() {
        let (v, terms) = ei_series(40.0);
        assert!(terms < 200, "{terms} terms");
        // Ei(40) = 6.0397182636112415...e15
        assert_relative_eq!(v, 6.039_718_263_611_242e15, max_relative = 1e-14);
    }

    #[test]
    fn special_weights_rejected_by_general_form() {
        assert!(matches!(
            antiderivative_li_over_tc(10.0, 1.0),
            Err(Error::SpecialWeight(_))
        ));
        assert!(matches!(
            antiderivative_li_over_tc(10.0, 2.0),
            Err(Error::SpecialWeight(_))
        ));
        assert!(matches!(antiderivative_of_li(1.0), Err(Error::Domain { .. })));
        assert!(matches!(antiderivative_li_over_t2(0.5), Err(Error::Domain { .. })));
    }

    #[test]
    fn general_form_matches_dedicated_forms() {
        let a = antiderivative_li_over_tc(50.0, 0.0).unwrap();
        assert_relative_eq!(a, antiderivative_of_li(50.0).unwrap(), max_relative = 1e-14);
        let bank = Antiderivative::new(SmoothFn::Li, 1.0 + 1e-8);
        let near = bank.definite(2.0, 1e4).unwrap();
        let exact = antiderivative_li_over_t(1e4).unwrap() - antiderivative_li_over_t(2.0).unwrap();
        assert_relative_eq!(near, exact, max_relative = 1e-7);
    }

    #[test]
    fn weight_integral_forms() {
        assert_relative_eq!(weight_integral(2.0, 8.0, 0.0), 6.0);
        assert_relative_eq!(weight_integral(2.0, 8.0, 1.0), 4f64.ln(), max_relative = 1e-15);
        assert_relative_eq!(weight_integral(2.0, 8.0, 2.0), 0.375, max_relative = 1e-15);
        assert_relative_eq!(
            weight_integral(2.0, 8.0, 0.5),
            2.0 * (8f64.sqrt() - 2f64.sqrt()),
            max_relative = 1e-15
        );
        assert_relative_eq!(
            weight_integral(2.0, 8.0, 3.0),
            0.5 * (0.25 - 1.0 / 64.0),
            max_relative = 1e-15
        );
        assert_eq!(weight_integral(5.0, 5.0, 1.7), 0.0);
    }

    #[test]
    fn identity_definite_continuous_at_two() {
        let at_two = Antiderivative::new(SmoothFn::Identity, 2.0)
            .definite(2.0, 10.0)
            .unwrap();
        assert_relative_eq!(at_two, 5f64.ln(), max_relative = 1e-15);
        let near = Antiderivative::new(SmoothFn::Identity, 2.0 - 1e-9)
            .definite(2.0, 10.0)
            .unwrap();
        assert!((near - at_two).abs() < 1e-8);
    }
}
