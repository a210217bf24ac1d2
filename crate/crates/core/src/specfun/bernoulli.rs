//! Bernoulli numbers by the defining recurrence, carried in exact rational
//! arithmetic (the recurrence cancels catastrophically in floating point
//! beyond n ≈ 25), plus the even-power expansion of ln cos x built on them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Bernoulli numbers B₀ … B_nmax (convention B₁ = −1/2) as floats.
///
/// Computed exactly from Σ_{j≤n} C(n+1, j) B_j = 0 and converted at the end;
/// nmax ≤ 60 keeps the conversions inside double range with full precision.
pub fn bernoulli_numbers(nmax: u32) -> Vec<f64> {
    assert!(nmax <= 60, "bernoulli_numbers supports nmax <= 60");
    bernoulli_exact(nmax)
        .iter()
        .map(|r| r.to_f64().expect("Bernoulli number within f64 range"))
        .collect()
}

fn bernoulli_exact(nmax: u32) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(nmax as usize + 1);
    b.push(BigRational::one());
    for n in 1..=nmax as usize {
        // B_n = −(1/(n+1)) Σ_{j<n} C(n+1, j) B_j
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one(); // C(n+1, j), built incrementally
        for (j, bj) in b.iter().enumerate().take(n) {
            if !bj.is_zero() {
                acc += bj * BigRational::from_integer(binom.clone());
            }
            binom = binom * BigInt::from(n + 1 - j) / BigInt::from(j + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(n + 1)));
    }
    b
}

/// Bernoulli partial sum for ln cos x with an optional (−1)^k factor.
fn ln_cos_partial(b: &[f64], x: f64, kmax: u32, flip_odd: bool) -> f64 {
    let mut sum = 0.0;
    let mut fact = 2.0; // (2k)!
    for k in 1..=kmax {
        let kf = k as f64;
        if k > 1 {
            fact *= (2.0 * kf - 1.0) * (2.0 * kf);
        }
        let pow4 = 4f64.powi(k as i32);
        let mut coeff = 0.5 * pow4 * (pow4 - 1.0) * b[2 * k as usize] / (kf * fact);
        if flip_odd && k % 2 == 1 {
            coeff = -coeff;
        }
        sum += coeff * x.powi(2 * k as i32);
    }
    sum
}

/// Partial sum (k = 1 … kmax) of the Bernoulli-number expansion of ln cos x,
/// valid for |x| < π/2.
///
/// The coefficient 2^{2k−1}(2^{2k}−1) B_{2k} / (k (2k)!) circulates with two
/// sign conventions that differ by a factor (−1)^k; the convention is fixed
/// numerically against the companion expansion −(1/2) Σ_k sin^{2k}x / k at a
/// probe point before the sum is formed.
pub fn ln_cos_series(x: f64, kmax: u32) -> f64 {
    assert!((2..=30).contains(&kmax), "kmax must lie in 2..=30");
    let b = bernoulli_numbers(2 * kmax);
    let probe = 0.25f64;
    let mut reference = 0.0;
    for k in 1..=40 {
        reference -= 0.5 * probe.sin().powi(2 * k) / k as f64;
    }
    let plain = ln_cos_partial(&b, probe, kmax, false);
    let flipped = ln_cos_partial(&b, probe, kmax, true);
    let flip = (flipped - reference).abs() < (plain - reference).abs();
    ln_cos_partial(&b, x, kmax, flip)
}
