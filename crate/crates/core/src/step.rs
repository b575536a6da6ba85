//! The prime-counting step functions π, θ, ψ and Π.
//!
//! All four are right-continuous step functions whose jumps sit on prime
//! powers. π and θ jump only at primes; ψ and Π jump at every `p^m`, by
//! `log p` and `1/m` respectively.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sieve::{stream_prime_powers, PrimePowerEvent, PrimePowerStream, SieveConfig};
use crate::summation::NeumaierSum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CountingFunction {
    /// π(x), the number of primes up to x.
    Pi,
    /// θ(x) = Σ_{p ≤ x} log p.
    Theta,
    /// ψ(x) = Σ_{p^m ≤ x} log p.
    Psi,
    /// Π(x) = Σ_{p^m ≤ x} 1/m.
    BigPi,
}

impl CountingFunction {
    pub const ALL: [CountingFunction; 4] = [Self::Pi, Self::Theta, Self::Psi, Self::BigPi];

    /// Jump size contributed by a prime power, or `None` if this function
    /// does not jump there.
    #[inline]
    pub fn jump(self, ev: &PrimePowerEvent) -> Option<f64> {
        match self {
            Self::Pi => (ev.m == 1).then_some(1.0),
            Self::Theta => (ev.m == 1).then(|| (ev.p as f64).ln()),
            Self::Psi => Some((ev.p as f64).ln()),
            Self::BigPi => Some(1.0 / f64::from(ev.m)),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Pi => "pi",
            Self::Theta => "theta",
            Self::Psi => "psi",
            Self::BigPi => "bigpi",
        }
    }
}

impl fmt::Display for CountingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CountingFunction {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "pi" => Ok(Self::Pi),
            "theta" => Ok(Self::Theta),
            "psi" => Ok(Self::Psi),
            "bigpi" | "big_pi" | "pi_star" => Ok(Self::BigPi),
            other => Err(format!("unknown counting function {other:?} (pi, theta, psi, bigpi)")),
        }
    }
}

/// A jump of a counting function.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Jump {
    pub location: u64,
    pub delta: f64,
}

/// Lazily generated jumps of one counting function.
pub struct Jumps {
    kind: CountingFunction,
    events: PrimePowerStream,
}

impl Iterator for Jumps {
    type Item = Jump;

    fn next(&mut self) -> Option<Jump> {
        for ev in self.events.by_ref() {
            if let Some(delta) = self.kind.jump(&ev) {
                return Some(Jump { location: ev.n, delta });
            }
        }
        None
    }
}

pub fn jumps(kind: CountingFunction, cfg: &SieveConfig) -> Result<Jumps> {
    Ok(Jumps {
        kind,
        events: stream_prime_powers(cfg)?,
    })
}

/// Materialized jump list of one counting function over `[2, x_max]`.
#[derive(Clone, Debug, Serialize)]
pub struct StepFunctionStream {
    pub kind: CountingFunction,
    pub jumps: Vec<Jump>,
    pub x_max: u64,
}

impl StepFunctionStream {
    pub fn collect(kind: CountingFunction, cfg: &SieveConfig) -> Result<Self> {
        Ok(Self {
            kind,
            jumps: jumps(kind, cfg)?.collect(),
            x_max: cfg.x_max,
        })
    }

    /// Value at `x` by compensated summation of the jumps at or below `x`.
    pub fn value_at(&self, x: f64) -> f64 {
        let end = self.jumps.partition_point(|j| (j.location as f64) <= x);
        self.jumps[..end].iter().map(|j| j.delta).sum::<NeumaierSum>().value()
    }
}

/// π, θ, ψ and Π at one point, from one sieve pass.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PrimeCountSnapshot {
    pub x: f64,
    pub pi: u64,
    pub theta: f64,
    pub psi: f64,
    pub big_pi: f64,
    /// `power_counts[m]` is the number of prime powers `p^m <= x` with
    /// exponent exactly `m`, so `Π(x) = Σ_m power_counts[m] / m` exactly.
    pub power_counts: Vec<u64>,
}

fn check_range(x: f64, cfg: &SieveConfig) -> Result<u64> {
    if !(x >= 2.0 && x <= cfg.x_max as f64) {
        return Err(Error::Domain {
            value: x,
            domain: "[2, x_max]",
        });
    }
    Ok(x.floor() as u64)
}

fn truncated(cfg: &SieveConfig, n: u64) -> SieveConfig {
    SieveConfig {
        x_max: n,
        ..cfg.clone()
    }
}

/// Value of one counting function at `x`.
pub fn evaluate_at(kind: CountingFunction, x: f64, cfg: &SieveConfig) -> Result<f64> {
    let n = check_range(x, cfg)?;
    let mut acc = NeumaierSum::new();
    for j in jumps(kind, &truncated(cfg, n))? {
        acc += j.delta;
    }
    Ok(acc.value())
}

pub fn snapshot(x: f64, cfg: &SieveConfig) -> Result<PrimeCountSnapshot> {
    let n = check_range(x, cfg)?;
    let mut pi = 0u64;
    let mut theta = NeumaierSum::new();
    let mut psi = NeumaierSum::new();
    let mut power_counts = vec![0u64; 2];
    for ev in stream_prime_powers(&truncated(cfg, n))? {
        let log_p = (ev.p as f64).ln();
        if ev.m == 1 {
            pi += 1;
            theta += log_p;
        }
        psi += log_p;
        let m = ev.m as usize;
        if power_counts.len() <= m {
            power_counts.resize(m + 1, 0);
        }
        power_counts[m] += 1;
    }
    let big_pi = power_counts
        .iter()
        .enumerate()
        .skip(1)
        .map(|(m, &c)| c as f64 / m as f64)
        .sum::<NeumaierSum>()
        .value();
    Ok(PrimeCountSnapshot {
        x,
        pi,
        theta: theta.value(),
        psi: psi.value(),
        big_pi,
        power_counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn cfg(x: u64) -> SieveConfig {
        SieveConfig::new(x).unwrap()
    }

    #[test]
    fn values_at_ten() {
        let c = cfg(100);
        assert_eq!(evaluate_at(CountingFunction::Pi, 10.0, &c).unwrap(), 4.0);
        assert_relative_eq!(
            evaluate_at(CountingFunction::Psi, 10.0, &c).unwrap(),
            2520f64.ln(),
            max_relative = 1e-15
        );
        assert_relative_eq!(
            evaluate_at(CountingFunction::BigPi, 10.0, &c).unwrap(),
            16.0 / 3.0,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            evaluate_at(CountingFunction::Theta, 10.5, &c).unwrap(),
            210f64.ln(),
            max_relative = 1e-15
        );
    }

    #[test]
    fn snapshot_boundaries() {
        let s = snapshot(2.0, &cfg(2)).unwrap();
        assert_eq!(s.pi, 1);
        assert_eq!(s.theta, 2f64.ln());
        assert_eq!(s.psi, 2f64.ln());
        assert_eq!(s.big_pi, 1.0);

        let s = snapshot(10.0, &cfg(10)).unwrap();
        assert_eq!(s.pi, 4);
        assert_relative_eq!(s.theta, 210f64.ln(), max_relative = 1e-15);
        assert_relative_eq!(s.psi, 2520f64.ln(), max_relative = 1e-15);
        assert_relative_eq!(s.big_pi, 16.0 / 3.0, max_relative = 1e-15);
        assert_eq!(s.power_counts, vec![0, 4, 2, 1]);
    }

    #[test]
    fn out_of_range_is_domain_error() {
        let c = cfg(100);
        assert!(matches!(
            evaluate_at(CountingFunction::Pi, 1.5, &c),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            evaluate_at(CountingFunction::Pi, 101.0, &c),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(snapshot(f64::NAN, &c), Err(Error::Domain { .. })));
    }

    #[test]
    fn parse_kinds() {
        for k in CountingFunction::ALL {
            assert_eq!(k.name().parse::<CountingFunction>().unwrap(), k);
        }
        assert!("zeta".parse::<CountingFunction>().is_err());
    }

    #[test]
    fn materialized_stream_invariants() {
        for kind in CountingFunction::ALL {
            let s = StepFunctionStream::collect(kind, &cfg(2000)).unwrap();
            assert!(s.jumps.windows(2).all(|w| w[0].location < w[1].location));
            assert!(s.jumps.iter().all(|j| j.delta > 0.0));
            assert_eq!(s.value_at(2000.0), evaluate_at(kind, 2000.0, &cfg(2000)).unwrap());
        }
    }
}
