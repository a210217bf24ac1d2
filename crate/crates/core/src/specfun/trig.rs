//! Finite Fourier expansion of even cosine powers.

/// cos^{2m} x written as a cosine polynomial: a constant term plus harmonics
/// at the even frequencies 2(m−k).
#[derive(Debug, Clone, PartialEq)]
pub struct CosinePowerExpansion {
    /// (frequency, coefficient) pairs, frequency = 2(m−k) for k = 0 … m−1.
    pub harmonics: Vec<(u32, f64)>,
    /// Constant term C(2m, m) / 4^m.
    pub constant: f64,
}

impl CosinePowerExpansion {
    /// Reconstruct cos^{2m} x from the expansion.
    pub fn eval(&self, x: f64) -> f64 {
        let mut v = self.constant;
        for &(freq, coeff) in &self.harmonics {
            v += coeff * (freq as f64 * x).cos();
        }
        v
    }
}

fn binomial_u128(n: u32, k: u32) -> u128 {
    let k = k.min(n - k);
    let mut num: u128 = 1;
    for i in 0..k {
        num = num * (n - i) as u128 / (i + 1) as u128
    }
    num
}

/// Expansion cos^{2m} x = 4^{−m} [ Σ_{k<m} 2 C(2m,k) cos 2(m−k)x + C(2m,m) ].
pub fn cos_power_expansion(m: u32) -> CosinePowerExpansion {
    assert!((1..=30).contains(&m), "m must lie in 1..=30");
    let scale = 4f64.powi(-(m as i32));
    let harmonics = (0..m)
        .map(|k| (2 * (m - k), 2.0 * binomial_u128(2 * m, k) as f64 * scale))
        .collect();
    let constant = binomial_u128(2 * m, m) as f64 * scale;
    CosinePowerExpansion {
        harmonics,
        constant,
    }
}
