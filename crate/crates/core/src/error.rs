use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("cannot allocate a sieve segment of {0} integers")]
    Allocation(usize),
    #[error("argument {value} outside the domain {domain}")]
    Domain { value: f64, domain: &'static str },
    #[error("{0} has a pole at this argument")]
    Pole(&'static str),
    #[error("weight exponent c = {0} is unsupported (need c <= 2)")]
    UnsupportedWeight(f64),
    #[error("weight exponent c = {0} needs the dedicated antiderivative")]
    SpecialWeight(f64),
    #[error("s = {0} is outside the half-plane of convergence s > 1")]
    Divergence(f64),
    #[error("zero table is empty")]
    EmptyTable,
    #[error("zero table is corrupt at line {line}: {reason}")]
    CorruptTable { line: usize, reason: String },
    #[error("cannot parse line {line} of zero table: {text:?}")]
    Parse { line: usize, text: String },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
