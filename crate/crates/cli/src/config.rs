//! `key=value` configuration files for `verify`.

use std::path::{Path, PathBuf};

use crate::{Failure, Format};

#[derive(Debug, Default)]
pub struct FileConfig {
    pub x_max: Option<u64>,
    pub zeros: Option<PathBuf>,
    pub format: Option<Format>,
    pub checks: Option<Vec<String>>,
    pub out: Option<PathBuf>,
    pub grid_points: Option<usize>,
    pub li_grid_points: Option<usize>,
    pub workers: Option<usize>,
}

/// Parses a sieve limit such as `10000000` or `1e7`.
pub fn parse_limit(s: &str) -> Result<u64, String> {
    let v: f64 = s.trim().parse().map_err(|_| format!("{s:?} is not a number"))?;
    if !(v >= 2.0 && v.fract() == 0.0 && v < 1.8e19) {
        return Err(format!("{s:?} is not an integer of at least 2"));
    }
    Ok(v as u64)
}

pub fn load(path: &Path) -> Result<FileConfig, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

pub fn parse(text: &str) -> Result<FileConfig, String> {
    let mut cfg = FileConfig::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected key=value", i + 1))?;
        let (key, value) = (key.trim(), value.trim());
        let bad = |what: &str| format!("line {}: {what}", i + 1);
        let count = || {
            value
                .parse::<usize>()
                .map_err(|_| bad(&format!("{key} must be a count")))
        };
        match key {
            "x_max" => cfg.x_max = Some(parse_limit(value).map_err(|e| bad(&e))?),
            "zeros" => cfg.zeros = Some(PathBuf::from(value)),
            "format" => {
                cfg.format = Some(match value {
                    "csv" => Format::Csv,
                    "json" => Format::Json,
                    _ => return Err(bad("format must be csv or json")),
                })
            }
            "checks" => cfg.checks = Some(value.split(',').map(|s| s.trim().to_string()).collect()),
            "out" => cfg.out = Some(PathBuf::from(value)),
            "grid_points" => cfg.grid_points = Some(count()?),
            "li_grid_points" => cfg.li_grid_points = Some(count()?),
            "workers" => cfg.workers = Some(count()?),
            _ => return Err(bad(&format!("unknown key {key:?}"))),
        }
    }
    Ok(cfg)
}
