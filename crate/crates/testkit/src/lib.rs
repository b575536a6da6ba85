//! Independent oracles for the test suites.
//!
//! Nothing here shares code with the production crate: primes come from trial
//! division, integrals from adaptive Gauss–Kronrod quadrature.

/// Trial-division primality.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes up to `n` by trial division.
pub fn primes_upto(n: u64) -> Vec<u64> {
    (2..=n).filter(|&k| is_prime(k)).collect()
}

/// All `(p^m, p, m)` with `p^m <= n`, sorted by `p^m`.
pub fn prime_powers_upto(n: u64) -> Vec<(u64, u64, u32)> {
    let mut out = Vec::new();
    for p in primes_upto(n) {
        let mut q = p;
        let mut m = 1;
        loop {
            out.push((q, p, m));
            match q.checked_mul(p) {
                Some(next) if next <= n => {
                    q = next;
                    m += 1;
                }
                _ => break,
            }
        }
    }
    out.sort_unstable();
    out
}

/// Largest integer `r` with `r^m <= x`, by integer search.
pub fn integer_root(x: u64, m: u32) -> u64 {
    if m == 1 {
        return x;
    }
    let mut lo = 0u64;
    let mut hi = 1u64 << (64 / m + 1).min(63);
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if mid.checked_pow(m).is_some_and(|v| v <= x) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

// Gauss–Kronrod 7/15 nodes and weights on [-1, 1].
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_5,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_48,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224,
    0.063_092_092_629_978_56,
    0.104_790_010_322_250_19,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_42,
    0.204_432_940_075_298_89,
    0.209_482_141_084_727_82,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_64,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let s = f(center - dx) + f(center + dx);
        kronrod += WGK[j] * s;
        if j % 2 == 1 {
            gauss += WG[j / 2] * s;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

/// Adaptive Gauss–Kronrod quadrature of `f` over `[a, b]` to absolute
/// tolerance `abs_tol` or relative tolerance `rel_tol`, whichever is looser.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, abs_tol: f64, rel_tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let mut panels = vec![(a, b, gk15(&f, a, b))];
    for _ in 0..200_000 {
        let total: f64 = panels.iter().map(|p| p.2 .0).sum();
        let err: f64 = panels.iter().map(|p| p.2 .1).sum();
        if err <= abs_tol.max(rel_tol * total.abs()) {
            return total;
        }
        let (idx, _) = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .2 .1.total_cmp(&y.1 .2 .1))
            .unwrap();
        let (lo, hi, _) = panels.swap_remove(idx);
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            panels.push((lo, hi, (gk15(&f, lo, hi).0, 0.0)));
            continue;
        }
        panels.push((lo, mid, gk15(&f, lo, mid)));
        panels.push((mid, hi, gk15(&f, mid, hi)));
    }
    panels.iter().map(|p| p.2 .0).sum()
}

/// Integral over `[a, b]` split at the given interior breakpoints.
pub fn integrate_pieces<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, breaks: &[f64], rel_tol: f64) -> f64 {
    let mut pts = vec![a];
    pts.extend(breaks.iter().copied().filter(|&t| t > a && t < b));
    pts.push(b);
    pts.windows(2).map(|w| integrate(&f, w[0], w[1], 1e-300, rel_tol)).sum()
}

/// `li(x)` for `x > 1` as the principal value of `∫_0^x dt / log t`.
///
/// The singular part is removed analytically:
/// `PV ∫_0^x dt/log t = ∫_0^x (1/log t - 1/(t-1)) dt + log(x-1)`,
/// and the bracketed integrand is bounded near `t = 1`.
pub fn li_quadrature(x: f64) -> f64 {
    assert!(x > 1.0);
    let regular = |t: f64| {
        if t <= 0.0 {
            return 1.0; // limit of 1/log t - 1/(t-1) as t -> 0 is 1
        }
        let u = t - 1.0;
        if u.abs() < 1e-4 {
            // 1/log(1+u) - 1/u = 1/2 - u/12 + u^2/24 - ...
            return 0.5 - u / 12.0 + u * u / 24.0;
        }
        1.0 / t.ln() - 1.0 / u
    };
    let mut total = integrate(regular, 0.0, 1.0, 1e-15, 1e-14);
    total += integrate(regular, 1.0, x, 1e-15, 1e-14);
    total + (x - 1.0).ln()
}

/// `li(x)` for `x > 1` by Ramanujan's series
/// `γ + log log x + √x Σ_{n≥1} (−1)^{n−1} (log x)^n / (n! 2^{n−1}) Σ_{k<=(n−1)/2} 1/(2k+1)`.
/// Fast enough to sit inside quadrature integrands.
pub fn li_series(x: f64) -> f64 {
    assert!(x > 1.0);
    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
    let l = x.ln();
    let mut term = 1.0; // (−1)^{n−1} l^n / (n! 2^{n−1}) before the first update
    let mut inner = 0.0;
    let mut sum = 0.0;
    for n in 1..400 {
        let nf = n as f64;
        term *= if n == 1 { l } else { -l / (nf * 2.0) };
        if (n - 1) % 2 == 0 {
            inner += 1.0 / nf;
        }
        let add = term * inner;
        sum += add;
        if n > 2 && add.abs() <= 1e-17 * sum.abs() {
            break;
        }
    }
    EULER_GAMMA + l.ln() + x.sqrt() * sum
}

/// `Ei(x)` for `x > 0` via `li(e^x)`.
pub fn ei_quadrature(x: f64) -> f64 {
    li_quadrature(x.exp())
}

/// Step-function value `F(t)` for jumps given as sorted `(location, delta)`.
pub fn step_value(jumps: &[(f64, f64)], t: f64) -> f64 {
    jumps.iter().take_while(|j| j.0 <= t).map(|j| j.1).sum()
}
