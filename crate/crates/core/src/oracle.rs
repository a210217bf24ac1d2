//! Independent brute-force evaluators used to cross-check both sides of the
//! registry identities: the trigonometric moment recursion for
//! I_{r,p,q} = ∫₀^π x^r sin^p x cos^q x dx, product closed forms for the
//! weighted odd-sine moments, the hypergeometric antiderivative of
//! t sin t cos^m t, and plain series summation.

use core::fmt;
use std::collections::HashMap;

use crate::quadrature::integrate_finite;
use crate::specfun::{gamma, gauss_2f1};

/// Errors from the oracle evaluators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleError {
    /// r + p + q exceeded the recursion-depth guard (60).
    RecursionDepth,
    /// A series failed to converge within its term budget.
    SeriesDivergence,
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::RecursionDepth => write!(f, "moment recursion depth guard exceeded (r+p+q > 60)"),
            Self::SeriesDivergence => write!(f, "series did not converge within 10^6 terms"),
        }
    }
}

impl std::error::Error for OracleError {}

/// Index of one trigonometric moment integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MomentIndex {
    pub r: u32,
    pub p: u32,
    pub q: u32,
}

/// ∫₀^π sin^p x cos^q x dx: zero for odd q by antisymmetry about π/2,
/// otherwise the Beta value Γ((p+1)/2)Γ((q+1)/2)/Γ((p+q)/2 + 1).
fn pure_trig_moment(p: u32, q: u32) -> f64 {
    if q % 2 == 1 {
        return 0.0;
    }
    let ph = (p as f64 + 1.0) / 2.0;
    let qh = (q as f64 + 1.0) / 2.0;
    gamma(ph).expect("positive argument") * gamma(qh).expect("positive argument")
        / gamma((p + q) as f64 / 2.0 + 1.0).expect("positive argument")
}

/// Boundary bracket of the recursion, x^r-weighted, with 0⁰ = 1.
fn boundary(x: f64, r: u32, p: u32, q: u32) -> f64 {
    let powi = |base: f64, e: i64| -> f64 {
        if e == 0 {
            1.0
        } else {
            base.powi(e as i32)
        }
    };
    let s = x.sin();
    let c = x.cos();
    (p + q) as f64 * powi(x, r as i64) * powi(s, p as i64 + 1) * powi(c, q as i64 - 1)
        + r as f64 * powi(x, r as i64 - 1) * powi(s, p as i64) * powi(c, q as i64)
}

fn moment_inner(
    idx: MomentIndex,
    memo: &mut HashMap<MomentIndex, f64>,
) -> Result<f64, OracleError> {
    if idx.r + idx.p + idx.q > 60 {
        return Err(OracleError::RecursionDepth);
    }
    if let Some(&v) = memo.get(&idx) {
        return Ok(v);
    }
    let MomentIndex { r, p, q } = idx;
    let value = if r == 0 {
        pure_trig_moment(p, q)
    } else if q <= 1 {
        // Closed forms where they exist, quadrature otherwise, so the
        // recursion stays independent of the identities under test.
        match (r, q) {
            // ∫₀^π x sin^p x dx = (π/2) ∫₀^π sin^p x dx by x → π − x.
            (1, 0) => std::f64::consts::FRAC_PI_2 * pure_trig_moment(p, 0),
            // ∫₀^π x sin^p x cos x dx = −∫₀^π sin^{p+1}x dx / (p+1) by parts.
            (1, 1) => -pure_trig_moment(p + 1, 0) / (p as f64 + 1.0),
            _ => {
                let quad = integrate_finite(
                    |x: f64| x.powi(r as i32) * x.sin().powi(p as i32) * x.cos().powi(q as i32),
                    0.0,
                    std::f64::consts::PI,
                    1e-12,
                );
                quad.value
            }
        }
    } else {
        // I_{r,p,q} = (1/(p+q)²) [ B(π) − B(0) − r(r−1) I_{r−2,p,q}
        //             − rp I_{r−1,p−1,q−1} + (q−1)(p+q) I_{r,p,q−2} ],
        // with coefficients that vanish guarding the invalid index shifts.
        let pq = (p + q) as f64;
        let mut acc = boundary(std::f64::consts::PI, r, p, q) - boundary(0.0, r, p, q);
        if r >= 2 {
            acc -= (r * (r - 1)) as f64 * moment_inner(MomentIndex { r: r - 2, p, q }, memo)?;
        }
        if p >= 1 {
            acc -= (r as f64)
                * (p as f64)
                * moment_inner(
                    MomentIndex {
                        r: r - 1,
                        p: p - 1,
                        q: q - 1,
                    },
                    memo,
                )?;
        }
        acc += (q as f64 - 1.0) * pq * moment_inner(MomentIndex { r, p, q: q - 2 }, memo)?;
        acc / (pq * pq)
    };
    memo.insert(idx, value);
    Ok(value)
}

/// I_{r,p,q} = ∫₀^π x^r sin^p x cos^q x dx by the moment recursion, with
/// base cases from Beta closed forms (quadrature only where no closed form
/// exists). Guarded by r + p + q ≤ 60.
pub fn moment_recursive(idx: MomentIndex) -> Result<f64, OracleError> {
    let mut memo = HashMap::new();
    moment_inner(idx, &mut memo)
}

/// Closed form 2^j j! π / ((2m+1)(2m+3)⋯(2m+2j+1)) for
/// ∫₀^π θ sin^{2j+1}θ cos^{2m}θ dθ.
pub fn lemma1_closed_form(j: u32, m: u32) -> f64 {
    let mut v = std::f64::consts::PI * 2f64.powi(j as i32);
    for i in 1..=j {
        v *= i as f64;
    }
    for i in 0..=j {
        v /= (2 * m + 2 * i + 1) as f64;
    }
    v
}

/// ∫₀^π θ sin θ cos^m θ dθ for any integer m ≥ 0 via the Beta-function
/// evaluation (√π/(2(m+1))) Γ(m/2+1)/Γ(m/2+3/2) (1−(−1)^m) − (π/(m+1))(−1)^{m+1}.
pub fn odd_power_moment_first_entry(m: u32) -> f64 {
    let mf = m as f64;
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 }; // (−1)^m
    let beta_part = std::f64::consts::PI.sqrt() / (2.0 * (mf + 1.0))
        * gamma(mf / 2.0 + 1.0).expect("positive argument")
        / gamma(mf / 2.0 + 1.5).expect("positive argument")
        * (1.0 - sign);
    beta_part - std::f64::consts::PI / (mf + 1.0) * (-sign)
}

/// The antiderivative F(t) of t sin t cos^m t (m even):
/// F(t) = −cos^{m+1}t/((m+1)(m+2)) [ cos t ₂F₁(1/2, m/2+1; m/2+2; cos²t) + (m+2) t ].
///
/// Only differences F(b) − F(a) are meaningful.
pub fn lemma2_antiderivative(t: f64, m: u32) -> f64 {
    assert!(m.is_multiple_of(2), "lemma2_antiderivative requires even m");
    let mf = m as f64;
    let c = t.cos();
    let h = gauss_2f1(0.5, mf / 2.0 + 1.0, mf / 2.0 + 2.0, c * c)
        .expect("cos²t ∈ [0,1] with positive exponent gap");
    -c.powi(m as i32 + 1) / ((mf + 1.0) * (mf + 2.0)) * (c * h + (mf + 2.0) * t)
}

/// Partial summation with the stopping rule of the rest of the crate: three
/// consecutive terms below `tol·max(1, |sum|)`; errors out after 10⁶ terms.
pub fn series_sum(terms: impl Fn(u64) -> f64, tol: f64) -> Result<f64, OracleError> {
    let mut sum = 0.0f64;
    let mut run = 0u32;
    for n in 0..1_000_000u64 {
        let term = terms(n);
        sum += term;
        if term.abs() <= tol * sum.abs().max(1.0) {
            run += 1;
            if run >= 3 {
                return Ok(sum);
            }
        } else {
            run = 0;
        }
    }
    Err(OracleError::SeriesDivergence)
}
