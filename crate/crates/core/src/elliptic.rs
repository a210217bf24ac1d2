//! Complete elliptic integral of the first kind via the arithmetic–geometric
//! mean, and Jacobi elliptic functions sn, cn, dn by the descending
//! Landen/AGM recursion.
//!
//! Throughout this crate the second slot of the Jacobi functions and of K is
//! the PARAMETER m = k² (so the lemniscatic point is m = 1/2).

use core::fmt;

/// Error for elliptic-function arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EllipticError {
    /// Parameter m outside [0, 1); K(m) diverges as m → 1.
    ParameterOutOfRange,
}

impl fmt::Display for EllipticError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "elliptic parameter m must lie in [0, 1)")
    }
}

impl std::error::Error for EllipticError {}

/// Validated elliptic parameter m = k² ∈ [0, 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticParameter(f64);

impl EllipticParameter {
    pub fn new(m: f64) -> Result<Self, EllipticError> {
        if (0.0..1.0).contains(&m) {
            Ok(Self(m))
        } else {
            Err(EllipticError::ParameterOutOfRange)
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// Values of sn, cn, dn at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiTriple {
    pub sn: f64,
    pub cn: f64,
    pub dn: f64,
}

/// Arithmetic–geometric mean of a, b > 0, to machine precision.
pub fn agm(a: f64, b: f64) -> f64 {
    assert!(a > 0.0 && b > 0.0, "agm requires positive arguments");
    let (mut a, mut b) = (a, b);
    for _ in 0..40 {
        if (a - b).abs() <= 4.0 * f64::EPSILON * a.abs() {
            break;
        }
        let an = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = an;
    }
    0.5 * (a + b)
}

/// Complete elliptic integral of the first kind,
/// K(m) = ∫₀^{π/2} dθ/√(1 − m sin²θ) = π / (2 agm(1, √(1−m))).
pub fn ellip_k(m: EllipticParameter) -> f64 {
    std::f64::consts::FRAC_PI_2 / agm(1.0, (1.0 - m.get()).sqrt())
}

/// Jacobi elliptic functions (sn, cn, dn)(z | m) for real z.
///
/// Descending AGM scale with backward recovery of dn through the cotangent
/// chain; the quarter period comes out at z = K(m).
pub fn jacobi(z: f64, m: EllipticParameter) -> JacobiTriple {
    let m = m.get();
    if m == 0.0 {
        return JacobiTriple {
            sn: z.sin(),
            cn: z.cos(),
            dn: 1.0,
        };
    }
    const CA: f64 = 1e-15;
    const LEVELS: usize = 16;
    let mut em = [0.0f64; LEVELS];
    let mut en = [0.0f64; LEVELS];
    let mut a = 1.0f64;
    let mut emc = 1.0 - m;
    let mut c = 0.0f64;
    let mut l = 0usize;
    for i in 0..LEVELS {
        l = i;
        em[i] = a;
        emc = emc.sqrt();
        en[i] = emc;
        c = 0.5 * (a + emc);
        if (a - emc).abs() <= CA * a {
            break;
        }
        emc *= a;
        a = c;
    }
    let u = c * z;
    let (mut sn, mut cn) = (u.sin(), u.cos());
    let mut dn = 1.0f64;
    if sn != 0.0 {
        let mut t = cn / sn;
        c *= t;
        for i in (0..=l).rev() {
            let b = em[i];
            t *= c;
            c *= dn;
            dn = (en[i] + t) / (b + t);
            t = c / b;
        }
        let amp = 1.0 / (c * c + 1.0).sqrt();
        sn = if sn >= 0.0 { amp } else { -amp };
        cn = c * sn;
    }
    JacobiTriple { sn, cn, dn }
}

/// Gauss's constant G = Γ²(1/4) / (2π)^{3/2} = (√2/π) K at parameter 1/2.
pub fn gauss_constant() -> f64 {
    let g_quarter = crate::specfun::gamma(0.25).expect("1/4 is not a pole");
    g_quarter * g_quarter / (2.0 * std::f64::consts::PI).powf(1.5)
}
