//! Gauss hypergeometric function ₂F₁(a, b; c; z) for real argument z ≤ 1.
//!
//! Evaluation is dispatched by argument region:
//!
//! * `|z| ≤ 1/2` — defining power series;
//! * `z < −1/2` — Pfaff transformation `z → z/(z−1)`, which maps the whole
//!   negative axis into `(0, 1)`;
//! * `1/2 < z < 1` — two-series connection formula in powers of `1 − z`
//!   when `c − a − b` is not close to an integer; otherwise the power series
//!   in `z` directly (it converges on the whole open disc, only more slowly);
//! * `z = 1` — Gauss summation, requiring `c − a − b > 0`.
//!
//! Arguments are internally ordered so the result is exactly symmetric in
//! `(a, b)`.

use super::gamma::{gamma, rgamma};
use super::{is_nonpositive_integer, SpecFunError, SERIES_EPS, SERIES_RUN};

const MAX_TERMS: usize = 1_000_000;

/// Distance from an integer below which `c − a − b` is treated as integral
/// and the 1 − z connection formula is avoided.
const NEAR_INTEGER: f64 = 0.02;

fn series(a: f64, b: f64, c: f64, z: f64) -> Result<f64, SpecFunError> {
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut run = 0u32;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        sum += term;
        if term.abs() <= SERIES_EPS * sum.abs() {
            run += 1;
            if run >= SERIES_RUN {
                return Ok(sum);
            }
        } else {
            run = 0;
        }
    }
    Err(SpecFunError::NoConvergence)
}

/// ₂F₁(a, b; c; 1) by Gauss summation; requires c − a − b > 0.
fn gauss_summation(a: f64, b: f64, c: f64) -> Result<f64, SpecFunError> {
    let s = c - a - b;
    Ok(gamma(c)? * gamma(s)? * rgamma(c - a) * rgamma(c - b))
}

/// Connection formula in powers of 1 − z, valid when s = c − a − b is not an
/// integer.
fn connection_1mz(a: f64, b: f64, c: f64, z: f64) -> Result<f64, SpecFunError> {
    let s = c - a - b;
    let w = 1.0 - z;
    let first = gamma(c)? * gamma(s)? * rgamma(c - a) * rgamma(c - b) * series(a, b, 1.0 - s, w)?;
    let second = w.powf(s)
        * gamma(c)?
        * gamma(-s)?
        * rgamma(a)
        * rgamma(b)
        * series(c - a, c - b, 1.0 + s, w)?;
    Ok(first + second)
}

/// Gauss hypergeometric function ₂F₁(a, b; c; z) for real z ≤ 1.
///
/// Errors: [`SpecFunError::Pole`] when c is zero or a negative integer,
/// [`SpecFunError::Domain`] for z > 1, and [`SpecFunError::Divergent`] at
/// z = 1 when c − a − b ≤ 0.
///
/// ```
/// use quadcheck::specfun::gauss_2f1;
///
/// // x ₂F₁(1/2, 1/2; 3/2; −x²) = asinh x
/// let x = 0.75f64;
/// let v = x * gauss_2f1(0.5, 0.5, 1.5, -x * x).unwrap();
/// assert!((v - x.asinh()).abs() < 1e-12);
/// ```
pub fn gauss_2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64, SpecFunError> {
    if is_nonpositive_integer(c) {
        return Err(SpecFunError::Pole);
    }
    if !z.is_finite() || z > 1.0 {
        return Err(SpecFunError::Domain);
    }
    // Symmetry in (a, b) holds exactly: both orderings run the same path.
    let (a, b) = if a <= b { (a, b) } else { (b, a) };

    if z == 1.0 {
        // Terminating series stays finite at z = 1 even when c − a − b ≤ 0.
        if is_nonpositive_integer(a) || is_nonpositive_integer(b) {
            return series(a, b, c, z);
        }
        if c - a - b <= 0.0 {
            return Err(SpecFunError::Divergent);
        }
        return gauss_summation(a, b, c);
    }
    if z.abs() <= 0.5 {
        return series(a, b, c, z);
    }
    if z < -0.5 {
        // Pfaff: ₂F₁(a,b;c;z) = (1−z)^{−a} ₂F₁(a, c−b; c; z/(z−1)).
        let w = z / (z - 1.0);
        return Ok((1.0 - z).powf(-a) * series(a, c - b, c, w)?);
    }
    // 1/2 < z < 1.
    let s = c - a - b;
    if (s - s.round()).abs() > NEAR_INTEGER {
        connection_1mz(a, b, c, z)
    } else {
        series(a, b, c, z)
    }
}
