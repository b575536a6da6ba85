//! Nontrivial zeta zeros and the explicit-formula machinery built on them.
//!
//! Zeros are consumed under the Riemann hypothesis normalization ρ = 1/2 + iγ;
//! a table lists the positive ordinates γ only, and every sum over ρ pairs
//! each γ with its conjugate.

mod explicit;
mod mellin;
mod table;
mod zeta;

pub use explicit::{psi1_explicit, zero_sum_magnitude_bound, ExplicitFormulaResult};
pub use mellin::{mellin_identity_check, MellinCheck, MellinKind};
pub use table::{gamma_square_partial_sum, load_zero_table, ZeroTable};
pub use zeta::{zeta, zeta_log_derivative};

/// `Σ_ρ 1/γ²` over all nontrivial zeros (both signs of γ), rounded up.
pub const SUM_INV_GAMMA_SQ_UPPER: f64 = 0.046210;

/// Coefficient of the zero-sum bound `|Σ_ρ x^{ρ+1}/(ρ(ρ+1))| ≤ 0.04621·x^{3/2}`.
pub const ZERO_SUM_COEFFICIENT: f64 = 0.04621;

/// Environment variable naming the default zero-table file.
pub const ZERO_TABLE_ENV: &str = "PRIMEBIAS_ZEROS";
