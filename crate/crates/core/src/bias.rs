//! Exact evaluation of `∫_2^x (F(t) − G(t))/t^c dt`.
//!
//! F is piecewise constant, so its part of the integral is a sum over
//! constancy intervals `[a, b)` of `F(a)·∫_a^b t^{-c} dt`, each taken in closed
//! form. G's part comes from the antiderivative bank. Nothing is integrated
//! numerically.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sieve::{stream_prime_powers, SieveConfig};
use crate::smooth::{li, weight_integral, Antiderivative, SmoothFn};
use crate::step::{jumps, CountingFunction};
use crate::summation::NeumaierSum;

/// Lower limit of every bias integral.
pub const LOWER_LIMIT: f64 = 2.0;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BiasIntegralSpec {
    pub counting: CountingFunction,
    pub smooth: SmoothFn,
    pub c: f64,
    pub x: f64,
}

impl BiasIntegralSpec {
    pub fn new(counting: CountingFunction, smooth: SmoothFn, c: f64, x: f64) -> Self {
        Self { counting, smooth, c, x }
    }

    /// (π, li), (θ, t), (Π, li) and (ψ, t) are the pairings with a bias
    /// result behind them; anything else is computed but flagged.
    pub fn is_canonical(&self) -> bool {
        matches!(
            (self.counting, self.smooth),
            (CountingFunction::Pi, SmoothFn::Li)
                | (CountingFunction::BigPi, SmoothFn::Li)
                | (CountingFunction::Theta, SmoothFn::Identity)
                | (CountingFunction::Psi, SmoothFn::Identity)
        )
    }

    pub fn validate(&self, cfg: &SieveConfig) -> Result<()> {
        check_weight(self.c)?;
        if !(self.x >= LOWER_LIMIT && self.x <= cfg.x_max as f64) {
            return Err(Error::Domain {
                value: self.x,
                domain: "[2, x_max]",
            });
        }
        Ok(())
    }
}

fn check_weight(c: f64) -> Result<()> {
    if c.is_finite() && c <= 2.0 {
        Ok(())
    } else {
        Err(Error::UnsupportedWeight(c))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum SignCertificate {
    Negative,
    Positive,
    Indeterminate,
}

impl SignCertificate {
    pub fn from_bounds(value: f64, error_bound: f64) -> Self {
        if value + error_bound < 0.0 {
            Self::Negative
        } else if value - error_bound > 0.0 {
            Self::Positive
        } else {
            Self::Indeterminate
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Negative => "NEGATIVE",
            Self::Positive => "POSITIVE",
            Self::Indeterminate => "INDETERMINATE",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BiasIntegralResult {
    pub spec: BiasIntegralSpec,
    pub value: f64,
    pub step_part: f64,
    pub smooth_part: f64,
    pub jump_count: u64,
    pub error_bound: f64,
    pub sign_certificate: SignCertificate,
    pub canonical: bool,
}

/// Rounding budget per unit of accumulated magnitude. Compensated sums keep a
/// few ulps; the special functions are good to a few ulps of their terms.
const ROUNDING_FACTOR: f64 = 16.0 * f64::EPSILON;

/// Running `∫_2^x F(t)/t^c dt` over a jump stream.
#[derive(Clone, Debug)]
pub struct StepIntegral {
    c: f64,
    level: NeumaierSum,
    left: u64,
    integral: NeumaierSum,
    abs_sum: f64,
    jumps: u64,
}

impl StepIntegral {
    pub fn new(c: f64) -> Self {
        Self {
            c,
            level: NeumaierSum::new(),
            left: 2,
            integral: NeumaierSum::new(),
            abs_sum: 0.0,
            jumps: 0,
        }
    }

    /// Advance to `location` and apply a jump of size `delta` there.
    pub fn push(&mut self, location: u64, delta: f64) {
        debug_assert!(location >= self.left);
        if location > self.left {
            let inc = self.increment(location as f64);
            self.integral += inc;
            self.abs_sum += inc.abs();
            self.left = location;
        }
        self.level += delta;
        self.jumps += 1;
    }

    /// Integral from the current left endpoint to `x` at the current level.
    #[inline]
    fn increment(&self, x: f64) -> f64 {
        let a = self.left as f64;
        if x <= a {
            return 0.0;
        }
        self.level.value() * weight_integral(a, x, self.c)
    }

    /// Start of the current constancy interval.
    pub fn left(&self) -> u64 {
        self.left
    }

    /// F on the current constancy interval.
    pub fn level(&self) -> f64 {
        self.level.value()
    }

    pub fn jump_count(&self) -> u64 {
        self.jumps
    }

    /// `∫_2^x F(t)/t^c dt` for `x` in the current constancy interval, and
    /// the sum of absolute increments so far.
    pub fn value_at(&self, x: f64) -> (f64, f64) {
        let inc = self.increment(x);
        let mut total = self.integral;
        total += inc;
        (total.value(), self.abs_sum + inc.abs())
    }
}

/// Value of a bias integral at one point, with its error bookkeeping.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BiasPoint {
    pub x: f64,
    pub value: f64,
    pub step_part: f64,
    pub smooth_part: f64,
    pub error_bound: f64,
}

/// Streaming evaluator for one `(F, G, c)` triple.
#[derive(Clone, Debug)]
pub struct BiasAccumulator {
    pub counting: CountingFunction,
    pub smooth: SmoothFn,
    antiderivative: Antiderivative,
    step: StepIntegral,
    smooth_at_two: f64,
    smooth_scale_at_two: f64,
}

impl BiasAccumulator {
    pub fn new(counting: CountingFunction, smooth: SmoothFn, c: f64) -> Result<Self> {
        check_weight(c)?;
        let antiderivative = Antiderivative::new(smooth, c);
        let (smooth_at_two, smooth_scale_at_two) = match smooth {
            SmoothFn::Li => antiderivative.evaluate_scaled(LOWER_LIMIT)?,
            SmoothFn::Identity => (0.0, 0.0),
        };
        Ok(Self {
            counting,
            smooth,
            antiderivative,
            step: StepIntegral::new(c),
            smooth_at_two,
            smooth_scale_at_two,
        })
    }

    pub fn c(&self) -> f64 {
        self.antiderivative.c
    }

    pub fn push(&mut self, location: u64, delta: f64) {
        self.step.push(location, delta);
    }

    pub fn step(&self) -> &StepIntegral {
        &self.step
    }

    /// Integral value at `x`, which must lie in the current constancy interval.
    pub fn value_at(&self, x: f64) -> Result<BiasPoint> {
        if x <= LOWER_LIMIT {
            return Ok(BiasPoint {
                x,
                value: 0.0,
                step_part: 0.0,
                smooth_part: 0.0,
                error_bound: 0.0,
            });
        }
        let (step_part, step_abs) = self.step.value_at(x);
        let (smooth_part, smooth_scale) = match self.smooth {
            // the power form cancels badly near c = 2; use the direct integral
            SmoothFn::Identity => {
                let v = self.antiderivative.definite(LOWER_LIMIT, x)?;
                (v, v.abs())
            }
            SmoothFn::Li => {
                let (anti, scale) = self.antiderivative.evaluate_scaled(x)?;
                (anti - self.smooth_at_two, scale + self.smooth_scale_at_two)
            }
        };
        let error_bound = ROUNDING_FACTOR * (step_abs + step_part.abs() + smooth_scale + smooth_part.abs());
        Ok(BiasPoint {
            x,
            value: step_part - smooth_part,
            step_part,
            smooth_part,
            error_bound,
        })
    }

    /// Point in `[left, b]` where the integral peaks. The integrand
    /// `(F(a) − G(t))/t^c` is decreasing in t on a constancy interval, so the
    /// integral rises while `G(t) < F(a)` and falls afterwards.
    pub fn peak_location(&self, b: f64) -> Result<f64> {
        let a = self.step.left() as f64;
        let level = self.step.level();
        if b <= a {
            return Ok(a);
        }
        let g_a = self.smooth.eval(a.max(LOWER_LIMIT))?;
        if level <= g_a {
            return Ok(a);
        }
        let t = match self.smooth {
            SmoothFn::Identity => level,
            SmoothFn::Li => {
                if li(b)? <= level {
                    return Ok(b);
                }
                solve_li(level, a)?
            }
        };
        Ok(t.clamp(a, b))
    }
}

/// Solve `li(t) = target` by Newton's method from `start`, where
/// `li(start) < target`. li is increasing and concave, so the iterates stay
/// left of the root and increase monotonically.
fn solve_li(target: f64, start: f64) -> Result<f64> {
    let mut t = start;
    for _ in 0..100 {
        let next = t - (li(t)? - target) * t.ln();
        if next - t <= 1e-13 * t {
            return Ok(next.max(t));
        }
        t = next;
    }
    Ok(t)
}

/// One constancy interval `[a, b]` of a sweep with the integral's extremes on it.
#[derive(Clone, Copy, Debug)]
pub struct SweepInterval {
    pub a: f64,
    pub b: f64,
    /// F on `[a, b)`.
    pub level: f64,
    pub start: BiasPoint,
    pub end: BiasPoint,
    /// Maximum of the integral over `[a, b]`.
    pub peak: BiasPoint,
    /// Minimum of the integral over `[a, b]` (always an endpoint).
    pub trough: BiasPoint,
}

/// Walk every constancy interval of F in `[2, cfg.x_max]`, calling `visit`
/// with the integral at both ends and at its peak.
pub fn sweep<V>(counting: CountingFunction, smooth: SmoothFn, c: f64, cfg: &SieveConfig, mut visit: V) -> Result<()>
where
    V: FnMut(&SweepInterval),
{
    let mut acc = BiasAccumulator::new(counting, smooth, c)?;
    let mut stream = jumps(counting, cfg)?;
    let first = stream.next().expect("2 is a jump of every counting function");
    acc.push(first.location, first.delta);
    let mut start = acc.value_at(LOWER_LIMIT)?;
    let x_end = cfg.x_max as f64;
    let mut pending = stream.next();
    loop {
        let b = pending.map_or(x_end, |j| j.location as f64);
        let a = acc.step().left() as f64;
        if b > a {
            let end = acc.value_at(b)?;
            let peak_t = acc.peak_location(b)?;
            let peak = if peak_t == a {
                start
            } else if peak_t == b {
                end
            } else {
                acc.value_at(peak_t)?
            };
            let trough = if start.value <= end.value { start } else { end };
            visit(&SweepInterval {
                a,
                b,
                level: acc.step().level(),
                start,
                end,
                peak,
                trough,
            });
            start = end;
        }
        match pending {
            Some(j) => {
                acc.push(j.location, j.delta);
                pending = stream.next();
            }
            None => return Ok(()),
        }
    }
}

/// `∫_2^x (F(t) − G(t))/t^c dt` for one specification.
pub fn bias_integral(spec: &BiasIntegralSpec, cfg: &SieveConfig) -> Result<BiasIntegralResult> {
    spec.validate(cfg)?;
    let mut acc = BiasAccumulator::new(spec.counting, spec.smooth, spec.c)?;
    let upto = SieveConfig {
        x_max: spec.x.floor() as u64,
        ..cfg.clone()
    };
    for j in jumps(spec.counting, &upto)? {
        acc.push(j.location, j.delta);
    }
    let point = acc.value_at(spec.x)?;
    Ok(BiasIntegralResult {
        spec: *spec,
        value: point.value,
        step_part: point.step_part,
        smooth_part: point.smooth_part,
        jump_count: acc.step().jump_count(),
        error_bound: point.error_bound,
        sign_certificate: SignCertificate::from_bounds(point.value, point.error_bound),
        canonical: spec.is_canonical(),
    })
}

/// Evaluate one specification at many points in a single sieve pass.
/// Points must be sorted ascending and lie in `[2, cfg.x_max]`.
pub fn bias_integral_series(
    counting: CountingFunction,
    smooth: SmoothFn,
    c: f64,
    points: &[f64],
    cfg: &SieveConfig,
) -> Result<Vec<BiasPoint>> {
    check_weight(c)?;
    if let Some(&bad) = points.iter().find(|&&x| !(x >= LOWER_LIMIT && x <= cfg.x_max as f64)) {
        return Err(Error::Domain {
            value: bad,
            domain: "[2, x_max]",
        });
    }
    if points.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::Config("evaluation points must be sorted".into()));
    }
    let mut out = Vec::with_capacity(points.len());
    let Some(&last) = points.last() else {
        return Ok(out);
    };
    let mut acc = BiasAccumulator::new(counting, smooth, c)?;
    let upto = SieveConfig {
        x_max: last.floor() as u64,
        ..cfg.clone()
    };
    let mut next_point = points.iter().peekable();
    for j in jumps(counting, &upto)? {
        while let Some(&&x) = next_point.peek() {
            if x >= j.location as f64 {
                break;
            }
            out.push(acc.value_at(x)?);
            next_point.next();
        }
        acc.push(j.location, j.delta);
    }
    for &x in next_point {
        out.push(acc.value_at(x)?);
    }
    Ok(out)
}

fn check_point(x: f64, cfg: &SieveConfig) -> Result<u64> {
    if !(x >= LOWER_LIMIT && x <= cfg.x_max as f64) {
        return Err(Error::Domain {
            value: x,
            domain: "[2, x_max]",
        });
    }
    Ok(x.floor() as u64)
}

fn prime_sum(x: f64, cfg: &SieveConfig, term: impl Fn(f64) -> f64) -> Result<f64> {
    let n = check_point(x, cfg)?;
    let upto = SieveConfig {
        x_max: n,
        ..cfg.clone()
    };
    let mut acc = NeumaierSum::new();
    for p in crate::sieve::stream_primes(&upto)? {
        acc += term(p as f64);
    }
    Ok(acc.value())
}

/// `Σ_{p ≤ x} 1/p`.
pub fn mertens_sum_reciprocal(x: f64, cfg: &SieveConfig) -> Result<f64> {
    prime_sum(x, cfg, |p| 1.0 / p)
}

/// `Σ_{p ≤ x} (log p)/p`.
pub fn mertens_sum_logp(x: f64, cfg: &SieveConfig) -> Result<f64> {
    prime_sum(x, cfg, |p| p.ln() / p)
}

/// Both sides of `Σ_{p≤x} 1/p = π(x)/x + ∫_2^x π(t)/t² dt`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PartialSummation {
    pub x: f64,
    pub lhs: f64,
    pub rhs: f64,
}

impl PartialSummation {
    pub fn relative_gap(&self) -> f64 {
        (self.lhs - self.rhs).abs() / self.lhs.abs()
    }
}

/// Left side from the reciprocal sum, right side from the exact step integral.
pub fn partial_summation_check(x: f64, cfg: &SieveConfig) -> Result<PartialSummation> {
    Ok(partial_summation_series(&[x], cfg)?[0])
}

/// [`partial_summation_check`] at sorted points in one sieve pass.
pub fn partial_summation_series(points: &[f64], cfg: &SieveConfig) -> Result<Vec<PartialSummation>> {
    for &x in points {
        check_point(x, cfg)?;
    }
    if points.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::Config("evaluation points must be sorted".into()));
    }
    let Some(&last) = points.last() else {
        return Ok(Vec::new());
    };
    let upto = SieveConfig {
        x_max: last.floor() as u64,
        ..cfg.clone()
    };
    let mut out = Vec::with_capacity(points.len());
    let mut reciprocal = NeumaierSum::new();
    let mut integral = StepIntegral::new(2.0);
    let mut next_point = points.iter().peekable();
    let emit = |x: f64, reciprocal: &NeumaierSum, integral: &StepIntegral| PartialSummation {
        x,
        lhs: reciprocal.value(),
        rhs: integral.level() / x + integral.value_at(x).0,
    };
    for p in crate::sieve::stream_primes(&upto)? {
        while let Some(&&x) = next_point.peek() {
            if x >= p as f64 {
                break;
            }
            out.push(emit(x, &reciprocal, &integral));
            next_point.next();
        }
        reciprocal += 1.0 / p as f64;
        integral.push(p, 1.0);
    }
    for &x in next_point {
        out.push(emit(x, &reciprocal, &integral));
    }
    Ok(out)
}

/// Anchor of the Q(x) decomposition.
pub const Q_ANCHOR: f64 = 3000.0;

/// `Q(x) = Π(x) − li(x)` split as
/// `R(x)/log x + R₁(x)/(x log²x) + ∫_{3000}^x R₁(t)(1/(t² log²t) + 2/(t² log³t)) dt + C`
/// with `R = ψ − t` and `R₁(x) = ∫_2^x R`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QDecomposition {
    pub x: f64,
    pub q: f64,
    pub r: f64,
    pub r1: f64,
    pub integral_term: f64,
    pub c: f64,
    /// `Q − (R/log x + R₁/(x log²x) + integral_term + C)`.
    pub residual: f64,
}

// 8-point Gauss–Legendre on [-1, 1]: nodes ±x_i, weights w_i.
const GL8_NODES: [f64; 4] = [
    0.183_434_642_495_649_8,
    0.525_532_409_916_329,
    0.796_666_477_413_626_7,
    0.960_289_856_497_536_3,
];
const GL8_WEIGHTS: [f64; 4] = [
    0.362_683_783_378_362,
    0.313_706_645_877_887_27,
    0.222_381_034_453_374_48,
    0.101_228_536_290_376_26,
];

/// `1/(t² log²t) + 2/(t² log³t)`.
#[inline]
fn q_weight(t: f64) -> f64 {
    let l = t.ln();
    (1.0 + 2.0 / l) / (t * t * l * l)
}

/// `∫_lo^hi R₁(t)·w(t) dt` on a panel where ψ is constant, with
/// `R₁(t) = R₁(a) + ψ(a)(t − a) − (t² − a²)/2` exact.
///
/// Panels are at most one prime gap wide and start at t ≥ 3000, where w is
/// smooth on the scale of t; the 8-point rule's error is of order
/// `(h/t)^16` relative, far below rounding for the gaps involved.
fn q_panel(lo: f64, hi: f64, a: f64, r1_a: f64, psi_a: f64) -> f64 {
    let mid = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let r1 = |t: f64| r1_a + (t - a) * (psi_a - 0.5 * (t + a));
    let mut acc = 0.0;
    for (&node, &weight) in GL8_NODES.iter().zip(&GL8_WEIGHTS) {
        let (t1, t2) = (mid - half * node, mid + half * node);
        acc += weight * (r1(t1) * q_weight(t1) + r1(t2) * q_weight(t2));
    }
    acc * half
}

/// Q(x) decomposition at one point `x >= 3000`.
pub fn q_decomposition(x: f64, cfg: &SieveConfig) -> Result<QDecomposition> {
    Ok(q_decomposition_series(&[x], cfg)?[0])
}

/// Q(x) decomposition at sorted points in one sieve pass.
pub fn q_decomposition_series(points: &[f64], cfg: &SieveConfig) -> Result<Vec<QDecomposition>> {
    for &x in points {
        if !(x >= Q_ANCHOR && x <= cfg.x_max as f64) {
            return Err(Error::Domain {
                value: x,
                domain: "[3000, x_max]",
            });
        }
    }
    if points.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::Config("evaluation points must be sorted".into()));
    }
    let Some(&last) = points.last() else {
        return Ok(Vec::new());
    };
    let upto = SieveConfig {
        x_max: last.floor() as u64,
        ..cfg.clone()
    };

    struct State {
        left: f64,
        psi: NeumaierSum,
        big_pi: NeumaierSum,
        r1: NeumaierSum,
        integral: NeumaierSum,
        constant: Option<f64>,
    }

    impl State {
        fn r1_at(&self, t: f64) -> f64 {
            let a = self.left;
            let mut r1 = self.r1;
            r1 += (t - a) * (self.psi.value() - 0.5 * (t + a));
            r1.value()
        }

        /// Advance the R₁ and panel integrals from `left` to `t` at constant ψ.
        fn advance(&mut self, t: f64) {
            let a = self.left;
            if t <= a {
                return;
            }
            if t > Q_ANCHOR {
                let lo = a.max(Q_ANCHOR);
                self.integral += q_panel(lo, t, a, self.r1.value(), self.psi.value());
            }
            self.r1 += (t - a) * (self.psi.value() - 0.5 * (t + a));
            self.left = t;
        }

        fn decompose(&self, x: f64) -> Result<(f64, f64, f64, f64)> {
            let q = self.big_pi.value() - li(x)?;
            let r = self.psi.value() - x;
            let r1 = self.r1_at(x);
            let l = x.ln();
            Ok((q, r, r1, r / l + r1 / (x * l * l)))
        }
    }

    let mut st = State {
        left: 2.0,
        psi: NeumaierSum::new(),
        big_pi: NeumaierSum::new(),
        r1: NeumaierSum::new(),
        integral: NeumaierSum::new(),
        constant: None,
    };
    let mut out = Vec::with_capacity(points.len());
    let mut next_point = points.iter().peekable();

    let mut settle = |st: &mut State, upto_t: f64, out: &mut Vec<QDecomposition>| -> Result<()> {
        // record C on reaching the anchor, then every requested point before `upto_t`
        if st.constant.is_none() && upto_t > Q_ANCHOR {
            st.advance(Q_ANCHOR);
            let (_, _, _, head) = st.decompose(Q_ANCHOR)?;
            let (q, ..) = st.decompose(Q_ANCHOR)?;
            st.constant = Some(q - head);
        }
        while let Some(&&x) = next_point.peek() {
            if x >= upto_t {
                break;
            }
            st.advance(x);
            let (q, r, r1, head) = st.decompose(x)?;
            let c = st.constant.expect("anchor precedes every point");
            let integral_term = st.integral.value();
            out.push(QDecomposition {
                x,
                q,
                r,
                r1,
                integral_term,
                c,
                residual: q - (head + integral_term + c),
            });
            next_point.next();
        }
        Ok(())
    };

    for ev in stream_prime_powers(&upto)? {
        let n = ev.n as f64;
        settle(&mut st, n, &mut out)?;
        st.advance(n);
        st.psi += (ev.p as f64).ln();
        st.big_pi += 1.0 / f64::from(ev.m);
    }
    settle(&mut st, f64::INFINITY, &mut out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn cfg(x: u64) -> SieveConfig {
        SieveConfig::new(x).unwrap()
    }

    #[test]
    fn empty_interval_is_zero() {
        for counting in CountingFunction::ALL {
            for smooth in [SmoothFn::Li, SmoothFn::Identity] {
                let r = bias_integral(&BiasIntegralSpec::new(counting, smooth, 1.3, 2.0), &cfg(10)).unwrap();
                assert_eq!(r.value, 0.0);
                assert_eq!(r.sign_certificate, SignCertificate::Indeterminate);
            }
        }
    }

    #[test]
    fn hand_computed_pi_minus_t() {
        // ∫_2^10 π(t) dt = 1·1 + 2·2 + 3·2 + 4·3 = 23, ∫_2^10 t dt = 48
        let spec = BiasIntegralSpec::new(CountingFunction::Pi, SmoothFn::Identity, 0.0, 10.0);
        let r = bias_integral(&spec, &cfg(10)).unwrap();
        assert_relative_eq!(r.step_part, 23.0, max_relative = 1e-15);
        assert_relative_eq!(r.smooth_part, 48.0, max_relative = 1e-15);
        assert!(!r.canonical);
        assert_eq!(r.jump_count, 4);
        assert_eq!(r.sign_certificate, SignCertificate::Negative);
    }

    #[test]
    fn weight_above_two_rejected() {
        let spec = BiasIntegralSpec::new(CountingFunction::Pi, SmoothFn::Li, 2.5, 100.0);
        assert!(matches!(
            bias_integral(&spec, &cfg(100)),
            Err(Error::UnsupportedWeight(_))
        ));
        let spec = BiasIntegralSpec::new(CountingFunction::Pi, SmoothFn::Li, 0.0, 200.0);
        assert!(matches!(bias_integral(&spec, &cfg(100)), Err(Error::Domain { .. })));
    }

    #[test]
    fn mertens_small_values() {
        let c = cfg(100);
        assert_relative_eq!(
            mertens_sum_reciprocal(10.0, &c).unwrap(),
            0.5 + 1.0 / 3.0 + 0.2 + 1.0 / 7.0,
            max_relative = 1e-15
        );
        assert_eq!(mertens_sum_reciprocal(2.0, &c).unwrap(), 0.5);
        assert_relative_eq!(
            mertens_sum_logp(10.0, &c).unwrap(),
            2f64.ln() / 2.0 + 3f64.ln() / 3.0 + 5f64.ln() / 5.0 + 7f64.ln() / 7.0,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            mertens_sum_logp(2.0, &c).unwrap(),
            2f64.ln() / 2.0,
            max_relative = 1e-15
        );
    }

    #[test]
    fn partial_summation_at_ten() {
        let ps = partial_summation_check(10.0, &cfg(10)).unwrap();
        // π(t)/t² integrated by hand over [2,3), [3,5), [5,7), [7,10)
        let rhs = 0.4 + (1.0 / 6.0 + 4.0 / 15.0 + 6.0 / 35.0 + 6.0 / 35.0);
        assert_relative_eq!(ps.rhs, rhs, max_relative = 1e-15);
        assert_relative_eq!(ps.lhs, rhs, max_relative = 1e-15);
        let ps = partial_summation_check(2.0, &cfg(10)).unwrap();
        assert_eq!((ps.lhs, ps.rhs), (0.5, 0.5));
    }

    #[test]
    fn q_decomposition_anchor() {
        let d = q_decomposition(Q_ANCHOR, &cfg(5000)).unwrap();
        assert_eq!(d.integral_term, 0.0);
        assert!(d.residual.abs() < 1e-12);
        assert!(matches!(q_decomposition(2999.0, &cfg(5000)), Err(Error::Domain { .. })));
    }

    #[test]
    fn sweep_endpoints_match_direct_evaluation() {
        let c = cfg(500);
        let mut seen = Vec::new();
        sweep(CountingFunction::Psi, SmoothFn::Identity, 0.7, &c, |iv| {
            seen.push((iv.b, iv.end.value));
            assert!(iv.peak.value >= iv.start.value && iv.peak.value >= iv.end.value);
            assert!(iv.trough.value <= iv.start.value && iv.trough.value <= iv.end.value);
        })
        .unwrap();
        assert_eq!(seen.last().unwrap().0, 500.0);
        for &(b, v) in seen.iter().step_by(17) {
            let direct = bias_integral(
                &BiasIntegralSpec::new(CountingFunction::Psi, SmoothFn::Identity, 0.7, b),
                &c,
            )
            .unwrap();
            assert_relative_eq!(direct.value, v, max_relative = 1e-12, epsilon = 1e-12);
        }
    }
}
