//! Segmented sieve of Eratosthenes producing primes and prime powers in order.
//!
//! Each segment stores one bit per odd integer. Batches of `worker_count`
//! segments are sieved in parallel and emitted strictly in segment order, so
//! the output never depends on the number of workers.
//!
//! Higher prime powers `p^m` (m >= 2) only involve primes up to `sqrt(x_max)`;
//! they are produced by integer exponentiation, sorted once, and merged into
//! the prime stream.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// Sieve limits and parallelism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SieveConfig {
    pub x_max: u64,
    pub segment_size: usize,
    pub worker_count: usize,
}

impl SieveConfig {
    /// Integers per segment. 2^21 integers is a 128 KiB odd-only bitset,
    /// which sits in L2 on current desktop parts.
    pub const DEFAULT_SEGMENT_SIZE: usize = 1 << 21;
    pub const MIN_SEGMENT_SIZE: usize = 64;
    /// Segments above this size are refused rather than attempted.
    pub const MAX_SEGMENT_SIZE: usize = 1 << 34;
    /// Upper limit accepted for `x_max`. Everything this crate verifies is
    /// reachable well below it.
    pub const X_MAX_CAP: u64 = 1_000_000_000;

    pub fn new(x_max: u64) -> Result<Self> {
        let cfg = Self {
            x_max,
            segment_size: Self::DEFAULT_SEGMENT_SIZE,
            worker_count: 1,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_segment_size(mut self, segment_size: usize) -> Result<Self> {
        self.segment_size = segment_size;
        self.validate()?;
        Ok(self)
    }

    pub fn with_workers(mut self, worker_count: usize) -> Result<Self> {
        self.worker_count = worker_count;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if self.x_max < 2 {
            return Err(Error::Config(format!("x_max = {} is below 2", self.x_max)));
        }
        if self.x_max > Self::X_MAX_CAP {
            return Err(Error::Config(format!(
                "x_max = {} exceeds the cap {}",
                self.x_max,
                Self::X_MAX_CAP
            )));
        }
        if self.segment_size < Self::MIN_SEGMENT_SIZE {
            return Err(Error::Config(format!(
                "segment_size = {} is below {}",
                self.segment_size,
                Self::MIN_SEGMENT_SIZE
            )));
        }
        if self.segment_size > Self::MAX_SEGMENT_SIZE {
            return Err(Error::Allocation(self.segment_size));
        }
        if self.worker_count == 0 {
            return Err(Error::Config("worker_count must be positive".into()));
        }
        Ok(())
    }
}

/// One prime power `n = p^m` with `m >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PrimePowerEvent {
    pub n: u64,
    pub p: u64,
    pub m: u32,
}

/// Floor of the square root, exact for all `u64`.
pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).is_none_or(|sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= n) {
        r += 1;
    }
    r
}

/// Plain sieve for the base primes up to `limit`.
fn small_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Primes in `[lo, hi)` using odd base primes whose squares are below `hi`.
fn sieve_segment(lo: u64, hi: u64, base: &[u64]) -> Vec<u64> {
    let mut out = Vec::new();
    if lo <= 2 && 2 < hi {
        out.push(2);
    }
    let start = lo.max(3) | 1;
    if start >= hi {
        return out;
    }
    let len = ((hi - start) as usize).div_ceil(2);
    let mut bits = vec![u64::MAX; len.div_ceil(64)];
    if !len.is_multiple_of(64) {
        *bits.last_mut().unwrap() = (1u64 << (len % 64)) - 1;
    }
    for &p in base.iter().skip(1) {
        let sq = p * p;
        if sq >= hi {
            break;
        }
        let mut m = if sq >= start { sq } else { start.div_ceil(p) * p };
        if m % 2 == 0 {
            m += p;
        }
        let mut idx = ((m - start) / 2) as usize;
        let step = p as usize;
        while idx < len {
            bits[idx >> 6] &= !(1u64 << (idx & 63));
            idx += step;
        }
    }
    for (w, &word) in bits.iter().enumerate() {
        let mut word = word;
        while word != 0 {
            let bit = word.trailing_zeros() as u64;
            out.push(start + 2 * ((w as u64) * 64 + bit));
            word &= word - 1;
        }
    }
    out
}

/// Ordered stream of the primes in `[2, x_max]`.
pub struct PrimeStream {
    x_max: u64,
    segment: u64,
    workers: usize,
    base: Vec<u64>,
    next_lo: u64,
    buffer: Vec<u64>,
    pos: usize,
    pool: Option<rayon::ThreadPool>,
}

impl PrimeStream {
    fn new(cfg: &SieveConfig) -> Result<Self> {
        cfg.validate()?;
        let words = (cfg.segment_size / 128) + 1;
        let mut probe: Vec<u64> = Vec::new();
        probe
            .try_reserve_exact(words.saturating_mul(cfg.worker_count))
            .map_err(|_| Error::Allocation(cfg.segment_size))?;
        drop(probe);
        let pool = if cfg.worker_count > 1 {
            Some(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(cfg.worker_count)
                    .build()
                    .map_err(|e| Error::Config(format!("cannot start sieve workers: {e}")))?,
            )
        } else {
            None
        };
        Ok(Self {
            x_max: cfg.x_max,
            segment: cfg.segment_size as u64,
            workers: cfg.worker_count,
            base: small_primes(isqrt(cfg.x_max)),
            next_lo: 0,
            buffer: Vec::new(),
            pos: 0,
            pool,
        })
    }

    fn refill(&mut self) -> bool {
        let end = self.x_max + 1;
        if self.next_lo >= end {
            return false;
        }
        let ranges: Vec<(u64, u64)> = (0..self.workers as u64)
            .map(|k| self.next_lo.saturating_add(k * self.segment))
            .take_while(|&lo| lo < end)
            .map(|lo| (lo, (lo + self.segment).min(end)))
            .collect();
        self.next_lo = ranges.last().map_or(end, |r| r.1);
        let base = &self.base;
        self.buffer = match &self.pool {
            Some(pool) => pool.install(|| {
                ranges
                    .par_iter()
                    .map(|&(lo, hi)| sieve_segment(lo, hi, base))
                    .collect::<Vec<_>>()
                    .concat()
            }),
            None => ranges
                .iter()
                .flat_map(|&(lo, hi)| sieve_segment(lo, hi, base))
                .collect(),
        };
        self.pos = 0;
        true
    }
}

impl Iterator for PrimeStream {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        while self.pos >= self.buffer.len() {
            if !self.refill() {
                return None;
            }
        }
        let p = self.buffer[self.pos];
        self.pos += 1;
        Some(p)
    }
}

/// Ordered stream of all prime powers `p^m <= x_max`.
pub struct PrimePowerStream {
    primes: std::iter::Peekable<PrimeStream>,
    higher: Vec<PrimePowerEvent>,
    next_higher: usize,
}

impl Iterator for PrimePowerStream {
    type Item = PrimePowerEvent;

    fn next(&mut self) -> Option<PrimePowerEvent> {
        let pending = self.higher.get(self.next_higher).copied();
        match (self.primes.peek().copied(), pending) {
            (Some(p), Some(h)) if h.n < p => {
                self.next_higher += 1;
                Some(h)
            }
            (Some(p), _) => {
                self.primes.next();
                Some(PrimePowerEvent { n: p, p, m: 1 })
            }
            (None, Some(h)) => {
                self.next_higher += 1;
                Some(h)
            }
            (None, None) => None,
        }
    }
}

/// Powers `p^m` with `m >= 2` and `p^m <= x_max`, sorted by value.
fn higher_powers(base: &[u64], x_max: u64) -> Vec<PrimePowerEvent> {
    let mut out = Vec::new();
    for &p in base {
        let mut n = p;
        let mut m = 1;
        while let Some(next) = n.checked_mul(p).filter(|&v| v <= x_max) {
            n = next;
            m += 1;
            out.push(PrimePowerEvent { n, p, m });
        }
    }
    out.sort_unstable();
    out
}

/// Primes in `[2, cfg.x_max]` in increasing order.
pub fn stream_primes(cfg: &SieveConfig) -> Result<PrimeStream> {
    PrimeStream::new(cfg)
}

/// Prime powers in `[2, cfg.x_max]` in increasing order of `p^m`.
pub fn stream_prime_powers(cfg: &SieveConfig) -> Result<PrimePowerStream> {
    let primes = PrimeStream::new(cfg)?;
    let higher = higher_powers(&primes.base, cfg.x_max);
    Ok(PrimePowerStream {
        primes: primes.peekable(),
        higher,
        next_higher: 0,
    })
}
