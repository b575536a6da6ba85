use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::summation::NeumaierSum;

/// Positive ordinates γ of nontrivial zeros, strictly increasing, with
/// prefix sums of `2/γ²` and `2/(γ(γ+1))` (each γ counted with its conjugate).
#[derive(Clone, Debug, Serialize)]
pub struct ZeroTable {
    pub source_label: String,
    gammas: Vec<f64>,
    #[serde(skip)]
    inv_sq_prefix: Vec<f64>,
    #[serde(skip)]
    inv_shift_prefix: Vec<f64>,
}

impl ZeroTable {
    /// Validate ordinates and build the prefix-sum caches.
    pub fn new(gammas: Vec<f64>, source_label: impl Into<String>) -> Result<Self> {
        if gammas.is_empty() {
            return Err(Error::EmptyTable);
        }
        validate(&gammas, |k| k + 1)?;
        let mut inv_sq = NeumaierSum::new();
        let mut inv_shift = NeumaierSum::new();
        let mut inv_sq_prefix = Vec::with_capacity(gammas.len() + 1);
        let mut inv_shift_prefix = Vec::with_capacity(gammas.len() + 1);
        inv_sq_prefix.push(0.0);
        inv_shift_prefix.push(0.0);
        for &g in &gammas {
            inv_sq += 2.0 / (g * g);
            inv_shift += 2.0 / (g * (g + 1.0));
            inv_sq_prefix.push(inv_sq.value());
            inv_shift_prefix.push(inv_shift.value());
        }
        Ok(Self {
            source_label: source_label.into(),
            gammas,
            inv_sq_prefix,
            inv_shift_prefix,
        })
    }

    /// Parse the ASCII table format: one γ per line, or `index γ` pairs;
    /// several whitespace-separated ordinates on one line are also accepted.
    /// Blank lines and lines starting with `#` are skipped.
    pub fn parse(text: &str, source_label: impl Into<String>) -> Result<Self> {
        let mut gammas = Vec::new();
        let mut lines = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let indexed = tokens.len() == 2 && tokens[0].parse::<u64>().is_ok();
            for tok in &tokens[usize::from(indexed)..] {
                let g: f64 = tok.parse().map_err(|_| Error::Parse {
                    line: i + 1,
                    text: raw.to_string(),
                })?;
                if !g.is_finite() {
                    return Err(Error::Parse {
                        line: i + 1,
                        text: raw.to_string(),
                    });
                }
                gammas.push(g);
                lines.push(i + 1);
            }
        }
        if gammas.is_empty() {
            return Err(Error::EmptyTable);
        }
        validate(&gammas, |k| lines[k])?;
        Self::new(gammas, source_label)
    }

    pub fn len(&self) -> usize {
        self.gammas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gammas.is_empty()
    }

    pub fn gammas(&self) -> &[f64] {
        &self.gammas
    }

    /// Keep only the first `n` ordinates.
    pub fn truncated(&self, n: usize) -> Result<Self> {
        Self::new(self.gammas[..n.min(self.len())].to_vec(), self.source_label.clone())
    }

    /// `Σ_{k≤n} 2/(γ_k(γ_k+1))`.
    pub fn shifted_partial_sum(&self, n: usize) -> Option<f64> {
        self.inv_shift_prefix.get(n).copied()
    }
}

fn validate(gammas: &[f64], line_of: impl Fn(usize) -> usize) -> Result<()> {
    let first = gammas[0];
    if !(first > 14.0 && first < 14.2) {
        return Err(Error::CorruptTable {
            line: line_of(0),
            reason: format!("first ordinate {first} is not the first zero 14.1347…"),
        });
    }
    for (k, w) in gammas.windows(2).enumerate() {
        if !(w[1] > w[0]) {
            return Err(Error::CorruptTable {
                line: line_of(k + 1),
                reason: format!("ordinate {} does not exceed its predecessor {}", w[1], w[0]),
            });
        }
    }
    Ok(())
}

/// Read a zero table from disk.
pub fn load_zero_table(path: impl AsRef<Path>) -> Result<ZeroTable> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    ZeroTable::parse(&text, path.display().to_string())
}

/// `Σ_{k≤n} 1/γ_k²` summed over the first `n` zeros together with their
/// conjugates, i.e. `Σ_{k≤n} 2/γ_k²`. Tends to 0.0462099862… as n grows.
pub fn gamma_square_partial_sum(zeros: &ZeroTable, n: usize) -> Result<f64> {
    zeros.inv_sq_prefix.get(n).copied().ok_or(Error::Domain {
        value: n as f64,
        domain: "[0, table size]",
    })
}
