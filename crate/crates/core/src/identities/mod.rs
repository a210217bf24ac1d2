//! The identity registry: one machine-checkable record per catalogued
//! definite-integral identity, pairing a left-hand integral with a
//! closed-form (or second-integral) right-hand side and a deterministic
//! parameter-sampling plan.

mod registry;

pub use registry::{find, registry};

use crate::quadrature::{Integrand, QuadratureResult};

/// One named parameter assignment, ordered as declared by the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamPoint(Vec<(&'static str, f64)>);

impl ParamPoint {
    pub fn new(values: Vec<(&'static str, f64)>) -> Self {
        Self(values)
    }

    /// Value of a named parameter; panics if the registry wired a name wrong.
    pub fn get(&self, name: &str) -> f64 {
        self.try_get(name)
            .unwrap_or_else(|| panic!("parameter `{name}` missing from point"))
    }

    pub fn try_get(&self, name: &str) -> Option<f64> {
        self.0.iter().find(|(n, _)| *n == name).map(|&(_, v)| v)
    }

    pub fn iter(&self) -> impl Iterator<Item = &(&'static str, f64)> {
        self.0.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Sampling description of one parameter.
#[derive(Debug, Clone)]
pub enum ParameterKind {
    /// Real interval; `mandatory` points are always included in sweeps.
    Continuous {
        lo: f64,
        hi: f64,
        mandatory: &'static [f64],
    },
    /// Explicit integer set, swept in order.
    Integers(&'static [i64]),
}

/// One named parameter with its admissible values.
#[derive(Debug, Clone)]
pub struct ParameterSpec {
    pub name: &'static str,
    pub kind: ParameterKind,
}

/// The (possibly empty) parameter domain of an identity.
#[derive(Debug, Clone)]
pub struct ParameterDomain {
    pub params: Vec<ParameterSpec>,
}

impl ParameterDomain {
    pub fn empty() -> Self {
        Self { params: Vec::new() }
    }

    /// Deterministic low-discrepancy sampling: `per_param` points per
    /// continuous parameter (golden-ratio sequence offset by the seed, plus
    /// any mandatory points), full Cartesian product across parameters.
    pub fn sample(&self, per_param: usize, seed: u64) -> Vec<ParamPoint> {
        let per_axis: Vec<Vec<f64>> = self
            .params
            .iter()
            .map(|p| p.kind.sample(p.name, per_param, seed))
            .collect();
        let mut points = vec![Vec::new()];
        for (spec, values) in self.params.iter().zip(&per_axis) {
            let mut next = Vec::with_capacity(points.len() * values.len());
            for stem in &points {
                for &v in values {
                    let mut p: Vec<(&'static str, f64)> = stem.clone();
                    p.push((spec.name, v));
                    next.push(p);
                }
            }
            points = next;
        }
        points.into_iter().map(ParamPoint).collect()
    }
}

const GOLDEN_FRAC: f64 = 0.618_033_988_749_894_9;

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100_0000_01b3);
    }
    h
}

impl ParameterKind {
    fn sample(&self, name: &str, per_param: usize, seed: u64) -> Vec<f64> {
        match self {
            Self::Continuous { lo, hi, mandatory } => {
                let mut state = fnv1a(name.as_bytes()) ^ seed.wrapping_mul(0x9E37_79B9_7F4A_7C15);
                state = (state ^ (state >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
                let offset = (state >> 11) as f64 / (1u64 << 53) as f64;
                let mut values: Vec<f64> = (0..per_param)
                    .map(|i| {
                        let u = (offset + (i as f64 + 1.0) * GOLDEN_FRAC).fract();
                        lo + u * (hi - lo)
                    })
                    .collect();
                values.extend_from_slice(mandatory);
                values.sort_by(f64::total_cmp);
                values.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
                values
            }
            Self::Integers(set) => {
                if per_param >= set.len() {
                    set.iter().map(|&k| k as f64).collect()
                } else {
                    // Evenly strided deterministic subset.
                    (0..per_param)
                        .map(|i| {
                            let idx = if per_param == 1 {
                                0
                            } else {
                                i * (set.len() - 1) / (per_param - 1)
                            };
                            set[idx] as f64
                        })
                        .collect()
                }
            }
        }
    }
}

/// Tolerance regime of an identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ToleranceClass {
    /// Smooth integrand, closed-form right-hand side: 1e−9.
    Smooth,
    /// Loses smoothness near |x| = 1: 1e−7 once |x| ≥ 0.9, 1e−9 below.
    NearSingular,
    /// Jacobi-elliptic integrand: 1e−9.
    Elliptic,
    /// Both sides are themselves quadratures: 1e−8.
    TwoSided,
}

impl ToleranceClass {
    pub fn tolerance(self, point: &ParamPoint) -> f64 {
        match self {
            Self::Smooth | Self::Elliptic => 1e-9,
            Self::TwoSided => 1e-8,
            Self::NearSingular => {
                if point.try_get("x").is_some_and(|x| x.abs() >= 0.9) {
                    1e-7
                } else {
                    1e-9
                }
            }
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::Smooth => "smooth",
            Self::NearSingular => "near-singular",
            Self::Elliptic => "elliptic",
            Self::TwoSided => "two-sided",
        }
    }
}

/// Left-hand side: an integral built from the parameter point.
pub enum Lhs {
    Integral(fn(&ParamPoint) -> Integrand),
}

/// Right-hand side: a closed form, or a prefactor times another integral.
pub enum Rhs {
    Closed(fn(&ParamPoint) -> f64),
    Quadrature(fn(&ParamPoint) -> (f64, Integrand)),
}

/// One verifiable identity.
pub struct IdentitySpec {
    pub id: &'static str,
    pub description: &'static str,
    /// Display form of the identity (doubles as coverage documentation).
    pub statement: &'static str,
    pub domain: ParameterDomain,
    pub tolerance_class: ToleranceClass,
    pub lhs: Lhs,
    pub rhs: Rhs,
    /// Convention or coverage remark carried into every record.
    pub note: Option<&'static str>,
}

impl IdentitySpec {
    /// Evaluate the left integral at `point` to quadrature tolerance `tol`.
    pub fn lhs_value(&self, point: &ParamPoint, tol: f64) -> QuadratureResult {
        let Lhs::Integral(build) = self.lhs;
        build(point).integrate(tol)
    }

    /// Evaluate the right-hand side; returns (value, quadrature error,
    /// converged).
    pub fn rhs_value(&self, point: &ParamPoint, tol: f64) -> (f64, f64, bool) {
        match self.rhs {
            Rhs::Closed(f) => (f(point), 0.0, true),
            Rhs::Quadrature(build) => {
                let (prefactor, integrand) = build(point);
                let q = integrand.integrate(tol);
                (
                    prefactor * q.value,
                    prefactor.abs() * q.error_estimate,
                    q.converged,
                )
            }
        }
    }
}

/// Outcome of one (identity, parameter-point) comparison.
#[derive(Debug, Clone)]
pub struct VerificationRecord {
    pub id: String,
    pub params: ParamPoint,
    pub lhs: f64,
    /// Summed quadrature error estimate (both sides when both integrate).
    pub lhs_error: f64,
    pub rhs: f64,
    pub abs_diff: f64,
    pub rel_diff: f64,
    pub tol: f64,
    pub pass: bool,
    pub note: Option<String>,
}

/// Quadrature tolerance used for a verification at identity tolerance `tol`.
fn quad_tol(tol: f64) -> f64 {
    (tol / 50.0).max(1e-13)
}

/// Verify one identity at one parameter point.
///
/// Passes iff `|lhs − rhs| ≤ tol·max(1, |rhs|)` and the combined quadrature
/// error estimate meets the same bound; quadrature non-convergence fails the
/// record with a reason in `note`.
pub fn verify(
    spec: &IdentitySpec,
    point: &ParamPoint,
    tol_override: Option<f64>,
) -> VerificationRecord {
    let tol = tol_override.unwrap_or_else(|| spec.tolerance_class.tolerance(point));
    let qtol = quad_tol(tol);
    let lhs = spec.lhs_value(point, qtol);
    let (rhs, rhs_err, rhs_converged) = spec.rhs_value(point, qtol);
    let abs_diff = (lhs.value - rhs).abs();
    let scale = rhs.abs().max(1.0);
    let rel_diff = abs_diff / scale;
    let total_err = lhs.error_estimate + rhs_err;
    let converged = lhs.converged && rhs_converged;
    let pass = converged && abs_diff <= tol * scale && total_err <= tol * scale;
    let note = if !converged {
        Some("quadrature did not converge within its evaluation budget".to_string())
    } else {
        spec.note.map(str::to_string)
    };
    VerificationRecord {
        id: spec.id.to_string(),
        params: point.clone(),
        lhs: lhs.value,
        lhs_error: total_err,
        rhs,
        abs_diff,
        rel_diff,
        tol,
        pass,
        note,
    }
}

/// Sweep an identity over its sampled domain; one record per point, in
/// deterministic order.
pub fn sweep(spec: &IdentitySpec, samples_per_param: usize, seed: u64) -> Vec<VerificationRecord> {
    spec.domain
        .sample(samples_per_param, seed)
        .iter()
        .map(|point| verify(spec, point, None))
        .collect()
}

#[cfg(test)]
mod tests;
