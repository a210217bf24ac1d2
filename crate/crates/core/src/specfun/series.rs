//! Dedicated series evaluators: the Lerch transcendent and the exponential
//! moment series Σ xⁿ/(n!(n+r+1)).

use super::{SpecFunError, SERIES_EPS, SERIES_RUN};

const MAX_TERMS: usize = 1_000_000;

/// Lerch transcendent Φ(z, s, b) = Σ_{n≥0} zⁿ / (n + b)^s for |z| < 1, b > 0.
pub fn lerch_phi(z: f64, s: f64, b: f64) -> Result<f64, SpecFunError> {
    if z.abs() >= 1.0 || b <= 0.0 || !z.is_finite() {
        return Err(SpecFunError::Domain);
    }
    let mut sum = 0.0f64;
    let mut zp = 1.0f64;
    let mut run = 0u32;
    for n in 0..MAX_TERMS {
        let term = zp / (n as f64 + b).powf(s);
        sum += term;
        zp *= z;
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

/// Σ_{n≥0} xⁿ / (n! (n + r + 1)) for r > −1; entire in x.
///
/// This is the closed form of ∫₀^∞ e^{−(r+1)z + x e^{−z}} dz.
pub fn r1_series(r: f64, x: f64) -> f64 {
    let mut sum = 0.0f64;
    let mut fact_term = 1.0f64; // xⁿ / n!
    let mut run = 0u32;
    let mut n = 0.0f64;
    loop {
        let term = fact_term / (n + r + 1.0);
        sum += term;
        n += 1.0;
        fact_term *= x / n;
        if term.abs() <= SERIES_EPS * sum.abs() {
            run += 1;
            if run >= SERIES_RUN {
                return sum;
            }
        } else {
            run = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::integrate_semi_infinite;

    fn rel_close(a: f64, b: f64, tol: f64) {
        let denom = b.abs().max(1.0);
        assert!(
            ((a - b) / denom).abs() < tol,
            "rel_close failed: {a} vs {b} (tol {tol})"
        );
    }

    #[test]
    fn lerch_single_term() {
        // z = 0 keeps only n = 0: 1 / b^s
        rel_close(lerch_phi(0.0, 1.0, 0.25).unwrap(), 4.0, 1e-15);
    }

    #[test]
    fn lerch_log_identity() {
        // Φ(z, 1, 1) = −ln(1−z)/z; at z = 1/2 this is 2 ln 2.
        rel_close(lerch_phi(0.5, 1.0, 1.0).unwrap(), 2.0 * 2f64.ln(), 1e-13);
    }

    #[test]
    fn lerch_quartic_series_oracle() {
        // Φ(x⁴, 1, 1/4) / 4 = Σ x^{4n} / (4n + 1), brute force.
        let x: f64 = 0.6;
        let mut oracle = 0.0;
        for n in 0..300 {
            oracle += x.powi(4 * n) / (4.0 * n as f64 + 1.0);
        }
        rel_close(
            lerch_phi(x.powi(4), 1.0, 0.25).unwrap() / 4.0,
            oracle,
            1e-13,
        );
    }

    #[test]
    fn lerch_integral_representation() {
        // Φ(z, s, b) = (1/Γ(s)) ∫₀^∞ t^{s−1} e^{−bt} / (1 − z e^{−t}) dt
        // for s > 0, b > 0, z < 1 — an independent quadrature oracle.
        for &(z, s, b) in &[
            (0.5, 1.0, 1.0),
            (-0.7, 2.0, 0.5),
            (0.9, 1.5, 0.25),
            (0.3, 3.0, 2.0),
        ] {
            let quad = integrate_semi_infinite(
                |t: f64| {
                    if t == 0.0 {
                        return 0.0;
                    }
                    t.powf(s - 1.0) * (-b * t).exp() / (1.0 - z * (-t).exp())
                },
                1e-12,
            );
            assert!(quad.converged);
            let reference = quad.value / crate::specfun::gamma(s).unwrap();
            let got = lerch_phi(z, s, b).unwrap();
            assert!(
                ((got - reference) / reference).abs() < 1e-10,
                "Φ({z},{s},{b}): {got} vs {reference}"
            );
        }
    }

    #[test]
    fn lerch_domain_errors() {
        assert_eq!(lerch_phi(1.0, 1.0, 1.0), Err(SpecFunError::Domain));
        assert_eq!(lerch_phi(-1.2, 1.0, 1.0), Err(SpecFunError::Domain));
        assert_eq!(lerch_phi(0.5, 1.0, 0.0), Err(SpecFunError::Domain));
    }

    #[test]
    fn r1_single_term() {
        for &r in &[0.0, 0.5, 2.0] {
            rel_close(r1_series(r, 0.0), 1.0 / (r + 1.0), 1e-15);
        }
    }

    #[test]
    fn r1_exponential_value() {
        // Σ 1/(n!(n+1)) = e − 1
        rel_close(r1_series(0.0, 1.0), std::f64::consts::E - 1.0, 1e-14);
        rel_close(r1_series(0.0, 1.0), 1.7182818, 1e-7);
    }

    #[test]
    fn r1_quadrature_oracle() {
        // ∫₀^∞ exp(−3z + 0.5 e^{−z}) dz = r1_series(2, 0.5)
        let quad = integrate_semi_infinite(|z| (-3.0 * z + 0.5 * (-z).exp()).exp(), 1e-12);
        assert!(quad.converged);
        rel_close(r1_series(2.0, 0.5), quad.value, 1e-12);
    }
}
