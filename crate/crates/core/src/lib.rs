//! Special functions, rigorous quadrature, and a registry of definite-integral
//! identities that are verified numerically: each identity pairs an integral
//! (evaluated by adaptive Gauss–Kronrod or double-exponential quadrature) with
//! a closed form (gamma functions, Gauss hypergeometric ₂F₁, Lerch Φ, Jacobi
//! elliptic functions), swept over its parameter domain.
//!
//! The crate is organised around the verification pipeline:
//!
//! * [`specfun`] — gamma family, ₂F₁, Lerch transcendent, Bernoulli numbers,
//!   and the series forms used as closed-form right-hand sides.
//! * [`elliptic`] — AGM, complete elliptic integral K, Jacobi sn/cn/dn.
//! * [`quadrature`] — adaptive Gauss–Kronrod on finite intervals and
//!   exp-sinh double-exponential integration on `[0, ∞)`.
//! * [`oracle`] — independent brute-force evaluators (moment recursion,
//!   plain series summation, closed-form antiderivatives) used to cross-check
//!   both sides of identities.
//! * [`identities`] — the registry: one machine-checkable record per identity.
//! * [`harness`] — sweep runner, report serialization, CI exit status.
//!
//! # Example
//!
//! ```
//! use quadcheck::identities::{find, verify, ParamPoint};
//!
//! // ∫₀^π θ sinθ/(1−x²cos²θ) dθ = (π/2x) ln((1+x)/(1−x)) at x = 1/2.
//! let spec = find("R2").unwrap();
//! let record = verify(&spec, &ParamPoint::new(vec![("x", 0.5)]), None);
//! assert!(record.pass);
//! assert!((record.rhs - std::f64::consts::PI * 3f64.ln()).abs() < 1e-12);
//! ```

pub mod elliptic;
pub mod harness;
pub mod identities;
pub mod oracle;
pub mod quadrature;
pub mod specfun;
