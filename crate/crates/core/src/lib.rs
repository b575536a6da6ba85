//! Exact piecewise evaluation of the bias integrals `∫_2^x (F(t) − G(t))/t^c dt`
//! for the prime-counting functions F ∈ {π, θ, ψ, Π} against G ∈ {li, t},
//! together with the explicit inequalities around them.
//!
//! The step functions come from a segmented sieve; between consecutive jumps
//! every integral is taken in closed form, so the only error sources are
//! floating-point accumulation and the special functions.

pub mod bias;
pub mod error;
pub mod sieve;
pub mod smooth;
pub mod step;
pub mod summation;
pub mod verify;
pub mod zeros;

pub use bias::{
    bias_integral, mertens_sum_logp, mertens_sum_reciprocal, partial_summation_check, q_decomposition,
    BiasIntegralResult, BiasIntegralSpec, QDecomposition, SignCertificate,
};
pub use error::{Error, Result};
pub use sieve::{stream_prime_powers, stream_primes, PrimePowerEvent, SieveConfig};
pub use smooth::{ei, li, Antiderivative, SmoothFn};
pub use step::{evaluate_at, snapshot, CountingFunction, PrimeCountSnapshot, StepFunctionStream};
