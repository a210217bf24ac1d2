//! Scalar special functions: gamma family, Pochhammer symbols, generalized
//! binomial coefficients, the Gauss hypergeometric function ₂F₁ on the real
//! line `z ≤ 1`, the Lerch transcendent Φ(z,s,b) for `|z| < 1`, Bernoulli
//! numbers, and a few dedicated series used as closed forms.
//!
//! All functions are pure and operate in `f64`; series are terminated with a
//! common rule (three consecutive terms below `1e-16` of the partial sum).

use core::fmt;

mod bernoulli;
mod gamma;
mod hyp2f1;
mod incgamma;
mod series;
mod trig;

pub use bernoulli::{bernoulli_numbers, ln_cos_series};
pub use gamma::{binomial_general, factorial, gamma, pochhammer, rgamma};
pub use hyp2f1::gauss_2f1;
pub use incgamma::upper_incomplete_gamma;
pub use series::{lerch_phi, r1_series};
pub use trig::{cos_power_expansion, CosinePowerExpansion};

/// Relative size at which a series term counts as negligible.
pub(crate) const SERIES_EPS: f64 = 1e-16;

/// Consecutive negligible terms required before a series is declared summed.
pub(crate) const SERIES_RUN: u32 = 3;

/// Errors from special-function evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecFunError {
    /// Argument sits on a pole (gamma at a nonpositive integer, ₂F₁ with
    /// nonpositive-integer denominator parameter).
    Pole,
    /// Argument outside the supported real domain.
    Domain,
    /// The requested value diverges (₂F₁ at z = 1 with c − a − b ≤ 0).
    Divergent,
    /// Series or continued fraction failed to converge within its budget.
    NoConvergence,
}

impl fmt::Display for SpecFunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Pole => write!(f, "argument is a pole of the function"),
            Self::Domain => write!(f, "argument outside the supported domain"),
            Self::Divergent => write!(f, "value diverges for these arguments"),
            Self::NoConvergence => write!(f, "series did not converge within the iteration budget"),
        }
    }
}

impl std::error::Error for SpecFunError {}

/// True when `x` is exactly 0, −1, −2, …
pub(crate) fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.trunc()
}
