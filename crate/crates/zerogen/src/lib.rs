//! Ordinates of the nontrivial zeros of ζ on the critical line.
//!
//! Hardy's `Z(t)` is evaluated with the Riemann–Siegel formula and the
//! correction terms `C0..C4`. Zeros are isolated between Gram points, grouped
//! into blocks bounded by good Gram points, and each block is sampled more
//! densely until it shows as many sign changes as Rosser's rule predicts.
//! Every bracket is then refined by the Illinois variant of regula falsi.

use std::f64::consts::PI;
use std::io::{self, Write};
use std::path::Path;

use num_complex::Complex64;
use rayon::prelude::*;

mod coefficients;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("Gram block [{start}, {end}] shows {found} sign changes, expected {expected}")]
    MissingZeros {
        start: f64,
        end: f64,
        found: usize,
        expected: usize,
    },
    #[error("I/O error writing {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Riemann–Siegel theta function, asymptotic expansion (valid for `t > 5`).
pub fn theta(t: f64) -> f64 {
    let r = 1.0 / t;
    let r2 = r * r;
    0.5 * t * (t / (2.0 * PI)).ln() - 0.5 * t - PI / 8.0
        + r * (1.0 / 48.0 + r2 * (7.0 / 5760.0 + r2 * (31.0 / 80640.0 + r2 * 127.0 / 430080.0)))
}

fn theta_prime(t: f64) -> f64 {
    0.5 * (t / (2.0 * PI)).ln()
}

fn horner(coeffs: &[f64], z: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * z + c)
}

/// Below this height `Z` comes from Euler–Maclaurin instead of Riemann–Siegel.
const LOW_HEIGHT: f64 = 400.0;

// B_2k / (2k)!
const BERNOULLI_OVER_FACTORIAL: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30_240.0,
    -1.0 / 1_209_600.0,
    1.0 / 47_900_160.0,
    -691.0 / 1_307_674_368_000.0,
    1.0 / 74_724_249_600.0,
    -3617.0 / 10_670_622_842_880_000.0,
    43_867.0 / 5_109_094_217_170_944_000.0,
    -174_611.0 / 802_857_662_698_291_200_000.0,
];

/// ζ(1/2 + it) by Euler–Maclaurin summation.
fn zeta_critical(t: f64) -> Complex64 {
    let s = Complex64::new(0.5, t);
    let n = (t.abs() + 30.0).ceil() as u64;
    let nf = n as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 1..n {
        sum += (-s * (k as f64).ln()).exp();
    }
    let n_pow = (-s * nf.ln()).exp();
    sum += n_pow * nf / (s - 1.0) + 0.5 * n_pow;
    // rising factorial s(s+1)...(s+2k-2) times N^{-s-2k+1}
    let mut term = s * n_pow / nf;
    for (k, &b) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        sum += b * term;
        let j = 2.0 * k as f64;
        term *= (s + j + 1.0) * (s + j + 2.0) / (nf * nf);
    }
    sum
}

/// Hardy's function `Z(t) = e^{iθ(t)} ζ(1/2 + it)` for `t >= 10`.
pub fn hardy_z(t: f64) -> f64 {
    if t < LOW_HEIGHT {
        return (Complex64::from_polar(1.0, theta(t)) * zeta_critical(t)).re;
    }
    riemann_siegel_z(t)
}

fn riemann_siegel_z(t: f64) -> f64 {
    let a = (t / (2.0 * PI)).sqrt();
    let n = a.floor();
    let p = a - n;
    let th = theta(t);
    let mut main = 0.0;
    for k in 1..=n as u64 {
        let kf = k as f64;
        main += (th - t * kf.ln()).cos() / kf.sqrt();
    }
    let z = p - 0.5;
    let inv = 1.0 / a;
    let correction = horner(&coefficients::C0, z)
        + inv
            * (horner(&coefficients::C1, z)
                + inv
                    * (horner(&coefficients::C2, z)
                        + inv * (horner(&coefficients::C3, z) + inv * horner(&coefficients::C4, z))));
    let sign = if (n as u64) % 2 == 1 { 1.0 } else { -1.0 };
    2.0 * main + sign * correction / a.sqrt()
}

/// Gram point `g_n`, the solution of `θ(g_n) = nπ`, for `n >= -1`.
pub fn gram_point(n: i64) -> f64 {
    let target = n as f64 * PI;
    // fixed point of θ(t) ≈ (t/2) log(t/2πe) - π/8 as a starting guess
    let mut t: f64 = 20.0;
    if n > 1 {
        for _ in 0..6 {
            t = 2.0 * PI * (n as f64 + 0.125) / (t / (2.0 * PI * std::f64::consts::E)).ln().max(0.1);
        }
    } else {
        t = 10.0 + 4.0 * (n + 1) as f64;
    }
    for _ in 0..60 {
        let step = (theta(t) - target) / theta_prime(t);
        t -= step;
        if step.abs() <= 1e-13 * t {
            break;
        }
    }
    t
}

/// Refines a sign change of `Z` in `[a, b]` to `tol` by the Illinois method.
pub fn refine(mut a: f64, mut b: f64, mut fa: f64, mut fb: f64, tol: f64) -> f64 {
    let tol = tol.max(4.0 * f64::EPSILON * b.abs());
    let mut side = 0i8;
    for _ in 0..200 {
        if (b - a).abs() <= tol {
            break;
        }
        let c = (a * fb - b * fa) / (fb - fa);
        let c = if c > a && c < b { c } else { 0.5 * (a + b) };
        let fc = hardy_z(c);
        if fc == 0.0 {
            return c;
        }
        if fc.signum() == fb.signum() {
            b = c;
            fb = fc;
            if side == 1 {
                fa *= 0.5;
            }
            side = 1;
        } else {
            a = c;
            fa = fc;
            if side == -1 {
                fb *= 0.5;
            }
            side = -1;
        }
    }
    if fa.abs() < fb.abs() {
        a
    } else {
        b
    }
}

const MAX_SUBDIVISION: usize = 1 << 12;

/// Zeros in a Gram block `(g_j, g_k)`, expected to hold exactly `k - j`.
fn block_zeros(grams: &[(f64, f64)], tol: f64) -> Result<Vec<f64>> {
    let expected = grams.len() - 1;
    let mut per_interval = 1;
    loop {
        let mut samples = Vec::with_capacity(expected * per_interval + 1);
        for w in grams.windows(2) {
            let (a, za) = w[0];
            let b = w[1].0;
            samples.push((a, za));
            for i in 1..per_interval {
                let t = a + (b - a) * i as f64 / per_interval as f64;
                samples.push((t, hardy_z(t)));
            }
        }
        samples.push(*grams.last().unwrap());
        let brackets: Vec<_> = samples
            .windows(2)
            .filter(|w| w[0].1.signum() != w[1].1.signum())
            .map(|w| (w[0], w[1]))
            .collect();
        if brackets.len() == expected {
            return Ok(brackets
                .into_iter()
                .map(|((a, fa), (b, fb))| refine(a, b, fa, fb, tol))
                .collect());
        }
        if per_interval >= MAX_SUBDIVISION || brackets.len() > expected {
            return Err(Error::MissingZeros {
                start: grams[0].0,
                end: grams[expected].0,
                found: brackets.len(),
                expected,
            });
        }
        per_interval *= 2;
    }
}

/// The first `count` positive zero ordinates, in increasing order, each
/// located to within `tol`.
pub fn zeros(count: usize, tol: f64) -> Result<Vec<f64>> {
    if count == 0 {
        return Ok(Vec::new());
    }
    // N(g_n) = n + 1 at good Gram points; the headroom covers a trailing bad block.
    let mut headroom = 64;
    loop {
        let mut out = zeros_below_gram(count as i64 + headroom, tol)?;
        if out.len() >= count {
            out.truncate(count);
            return Ok(out);
        }
        headroom *= 4;
    }
}

/// All zeros up to the last good Gram point with index at most `last`.
fn zeros_below_gram(last: i64, tol: f64) -> Result<Vec<f64>> {
    let grams: Vec<(f64, f64)> = (-1..=last)
        .into_par_iter()
        .map(|n| {
            let g = gram_point(n);
            (g, hardy_z(g))
        })
        .collect();
    // grams[i] is g_{i-1}; good when (-1)^{i-1} Z > 0
    let bounds: Vec<usize> = (0..grams.len())
        .filter(|&i| {
            let s = if i % 2 == 1 { 1.0 } else { -1.0 };
            s * grams[i].1 > 0.0
        })
        .collect();
    if bounds.first() != Some(&0) {
        return Err(Error::MissingZeros {
            start: 0.0,
            end: grams[0].0,
            found: 0,
            expected: 0,
        });
    }
    let blocks: Vec<Vec<f64>> = bounds
        .par_windows(2)
        .map(|w| block_zeros(&grams[w[0]..=w[1]], tol))
        .collect::<Result<_>>()?;
    Ok(blocks.into_iter().flatten().collect())
}

/// Writes `index gamma` lines with a comment header.
pub fn write_table<W: Write>(mut out: W, gammas: &[f64]) -> io::Result<()> {
    writeln!(out, "# nontrivial zeta zeros 1/2 + i*gamma; columns: index gamma")?;
    for (i, g) in gammas.iter().enumerate() {
        writeln!(out, "{} {:.12}", i + 1, g)?;
    }
    out.flush()
}

pub fn write_table_file(path: &Path, gammas: &[f64]) -> Result<()> {
    let io_err = |source| Error::Io {
        path: path.display().to_string(),
        source,
    };
    let file = std::fs::File::create(path).map_err(io_err)?;
    write_table(io::BufWriter::new(file), gammas).map_err(io_err)
}
