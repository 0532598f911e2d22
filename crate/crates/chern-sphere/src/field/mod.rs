//! GUE-valued random fields on the unit sphere with prescribed
//! matrix-element correlations.
//!
//! Distances are chordal (straight-line in the embedding space), so the
//! admissible range on the unit sphere is `[0, 2]`. Every family is
//! normalized to `c(0) = 1`, matching unit element-magnitude variance.

mod harmonics;
mod realization;
mod spectrum;

pub use harmonics::{eval_real_sh, sh_coef_count};
pub use realization::FieldRealization;
pub use spectrum::{legendre_spectrum, AngularSpectrum};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default truncation tolerance for the angular power spectrum.
pub const DEFAULT_SPECTRUM_TOL: f64 = 1e-9;
/// Default hard cap on the harmonic cutoff degree.
pub const DEFAULT_L_MAX_CAP: u32 = 4096;

#[derive(Debug, Error)]
pub enum FieldError {
    #[error("distance {0} outside the chordal range [0, 2]")]
    DistanceOutOfRange(f64),
    #[error("invalid correlation spec: {0}")]
    InvalidSpec(String),
    #[error("harmonic cutoff would exceed the cap L_max = {cap} (residual {residual:.3e} > tol {tol:.3e}); correlation length too short for the harmonic budget")]
    LMaxCapExceeded { cap: u32, residual: f64, tol: f64 },
    #[error("clipped negative spectral mass {clipped:.3e} exceeds tol {tol:.3e}; covariance not positive-definite at the requested accuracy")]
    NotPositiveDefinite { clipped: f64, tol: f64 },
    #[error("quadrature for the angular spectrum did not converge (panel budget exhausted)")]
    QuadratureDiverged,
    #[error("angular spectrum is only defined for the gaussian and lorentzian families; the four-matrix model is an exact finite-rank ensemble")]
    NoSpectrumForFamily,
    #[error("matrix dimension must be at least 2, got {0}")]
    MatrixDimTooSmall(usize),
}

/// One of the three matrix-element correlation families.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", content = "scale", rename_all = "snake_case")]
pub enum CorrelationFamily {
    /// `c(d) = exp(-d^2 / (2 r^2))` with scale `r > 0`.
    Gaussian(f64),
    /// `c(d) = 1 / (1 + (d/l)^2)` with scale `l > 0`.
    Lorentzian(f64),
    /// Four fixed GUE draws mixed as `cos(a) H0 + sin(a) p.Hvec`;
    /// `c(d) = cos^2(a) + sin^2(a) (2 - d^2) / 2` with `a` in `[0, pi/2]`.
    FourMatrix(f64),
}

impl CorrelationFamily {
    pub fn name(&self) -> &'static str {
        match self {
            CorrelationFamily::Gaussian(_) => "gaussian",
            CorrelationFamily::Lorentzian(_) => "lorentzian",
            CorrelationFamily::FourMatrix(_) => "four_matrix",
        }
    }

    pub fn scale(&self) -> f64 {
        match self {
            CorrelationFamily::Gaussian(s)
            | CorrelationFamily::Lorentzian(s)
            | CorrelationFamily::FourMatrix(s) => *s,
        }
    }

    pub fn from_name(name: &str, scale: f64) -> Result<Self, FieldError> {
        let family = match name {
            "gaussian" => CorrelationFamily::Gaussian(scale),
            "lorentzian" => CorrelationFamily::Lorentzian(scale),
            "four_matrix" => CorrelationFamily::FourMatrix(scale),
            other => {
                return Err(FieldError::InvalidSpec(format!(
                    "unknown family \"{other}\" (expected gaussian | lorentzian | four_matrix)"
                )))
            }
        };
        Ok(family)
    }
}

/// A correlation family together with the tolerances that govern its
/// harmonic representation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CorrelationSpec {
    #[serde(flatten)]
    pub family: CorrelationFamily,
    #[serde(default = "default_spectrum_tol")]
    pub spectrum_tol: f64,
    #[serde(default = "default_l_max_cap")]
    pub l_max_cap: u32,
}

fn default_spectrum_tol() -> f64 {
    DEFAULT_SPECTRUM_TOL
}

fn default_l_max_cap() -> u32 {
    DEFAULT_L_MAX_CAP
}

impl CorrelationSpec {
    pub fn new(family: CorrelationFamily) -> Result<Self, FieldError> {
        let spec = CorrelationSpec {
            family,
            spectrum_tol: DEFAULT_SPECTRUM_TOL,
            l_max_cap: DEFAULT_L_MAX_CAP,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn gaussian(r: f64) -> Result<Self, FieldError> {
        Self::new(CorrelationFamily::Gaussian(r))
    }

    pub fn lorentzian(l: f64) -> Result<Self, FieldError> {
        Self::new(CorrelationFamily::Lorentzian(l))
    }

    pub fn four_matrix(alpha: f64) -> Result<Self, FieldError> {
        Self::new(CorrelationFamily::FourMatrix(alpha))
    }

    pub fn validate(&self) -> Result<(), FieldError> {
        match self.family {
            CorrelationFamily::Gaussian(r) if !(r > 0.0 && r.is_finite()) => Err(
                FieldError::InvalidSpec(format!("gaussian scale must be positive, got {r}")),
            ),
            CorrelationFamily::Lorentzian(l) if !(l > 0.0 && l.is_finite()) => Err(
                FieldError::InvalidSpec(format!("lorentzian scale must be positive, got {l}")),
            ),
            CorrelationFamily::FourMatrix(a) if !(0.0..=std::f64::consts::FRAC_PI_2).contains(&a) => {
                Err(FieldError::InvalidSpec(format!(
                    "four-matrix mixing angle must lie in [0, pi/2], got {a}"
                )))
            }
            _ if !(self.spectrum_tol > 0.0) => Err(FieldError::InvalidSpec(format!(
                "spectrum_tol must be positive, got {}",
                self.spectrum_tol
            ))),
            _ => Ok(()),
        }
    }
}

/// Matrix-element correlation `c(d)` at chordal distance `d` in `[0, 2]`.
pub fn correlation_at(spec: &CorrelationSpec, d: f64) -> Result<f64, FieldError> {
    if !(0.0..=2.0).contains(&d) {
        return Err(FieldError::DistanceOutOfRange(d));
    }
    Ok(correlation_unchecked(&spec.family, d))
}

pub(crate) fn correlation_unchecked(family: &CorrelationFamily, d: f64) -> f64 {
    match *family {
        CorrelationFamily::Gaussian(r) => (-d * d / (2.0 * r * r)).exp(),
        CorrelationFamily::Lorentzian(l) => 1.0 / (1.0 + (d / l) * (d / l)),
        CorrelationFamily::FourMatrix(a) => {
            let (s, c) = a.sin_cos();
            c * c + s * s * (2.0 - d * d) / 2.0
        }
    }
}

/// Parametric sensitivity `sigma^2 = -c''(0) / 2`, per family in closed form.
pub fn sensitivity(spec: &CorrelationSpec) -> f64 {
    match spec.family {
        CorrelationFamily::Gaussian(r) => 1.0 / (2.0 * r * r),
        CorrelationFamily::Lorentzian(l) => 1.0 / (l * l),
        CorrelationFamily::FourMatrix(a) => {
            let s = a.sin();
            s * s / 2.0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn correlation_is_one_at_zero_for_all_families() {
        for spec in [
            CorrelationSpec::gaussian(0.7).unwrap(),
            CorrelationSpec::lorentzian(0.3).unwrap(),
            CorrelationSpec::four_matrix(1.1).unwrap(),
        ] {
            assert_relative_eq!(correlation_at(&spec, 0.0).unwrap(), 1.0);
        }
    }

    #[test]
    fn four_matrix_antipodal_value() {
        // c(2) = cos^2 a - sin^2 a, by substituting d^2 = 4.
        for a in [0.0, 0.4, std::f64::consts::FRAC_PI_2] {
            let spec = CorrelationSpec::four_matrix(a).unwrap();
            let expect = a.cos().powi(2) - a.sin().powi(2);
            assert_relative_eq!(correlation_at(&spec, 2.0).unwrap(), expect, epsilon = 1e-15);
        }
    }

    #[test]
    fn gaussian_unit_scale_at_unit_distance() {
        let spec = CorrelationSpec::gaussian(1.0).unwrap();
        assert_relative_eq!(
            correlation_at(&spec, 1.0).unwrap(),
            (-0.5f64).exp(),
            epsilon = 1e-15
        );
    }

    #[test]
    fn correlation_rejects_out_of_range_distances() {
        let spec = CorrelationSpec::gaussian(1.0).unwrap();
        assert!(correlation_at(&spec, -0.1).is_err());
        assert!(correlation_at(&spec, 2.0 + 1e-9).is_err());
    }

    #[test]
    fn correlation_non_increasing_on_the_chordal_range() {
        for spec in [
            CorrelationSpec::gaussian(0.4).unwrap(),
            CorrelationSpec::lorentzian(0.8).unwrap(),
            CorrelationSpec::four_matrix(0.9).unwrap(),
        ] {
            let mut prev = f64::INFINITY;
            for k in 0..=200 {
                let d = 2.0 * k as f64 / 200.0;
                let c = correlation_at(&spec, d).unwrap();
                assert!(c <= prev + 1e-14, "c({d}) = {c} > previous {prev}");
                prev = c;
            }
        }
    }

    #[test]
    fn sensitivity_closed_forms() {
        assert_relative_eq!(sensitivity(&CorrelationSpec::gaussian(1.0).unwrap()), 0.5);
        assert_relative_eq!(sensitivity(&CorrelationSpec::lorentzian(1.0).unwrap()), 1.0);
        assert_relative_eq!(
            sensitivity(&CorrelationSpec::four_matrix(std::f64::consts::FRAC_PI_2).unwrap()),
            0.5
        );
    }

    #[test]
    fn sensitivity_matches_a_central_difference_of_c() {
        // Independent check: -c''(0)/2 by fourth-order finite differences.
        for spec in [
            CorrelationSpec::gaussian(0.9).unwrap(),
            CorrelationSpec::lorentzian(1.3).unwrap(),
            CorrelationSpec::four_matrix(0.7).unwrap(),
        ] {
            let h = 1e-4;
            let c = |d: f64| correlation_unchecked(&spec.family, d.abs());
            let c2 = (-c(2.0 * h) + 16.0 * c(h) - 30.0 * c(0.0) + 16.0 * c(-h) - c(-2.0 * h))
                / (12.0 * h * h);
            assert_relative_eq!(sensitivity(&spec), -0.5 * c2, epsilon = 1e-7);
        }
    }

    #[test]
    fn invalid_specs_are_rejected() {
        assert!(CorrelationSpec::gaussian(0.0).is_err());
        assert!(CorrelationSpec::lorentzian(-1.0).is_err());
        assert!(CorrelationSpec::four_matrix(2.0).is_err());
    }

    #[test]
    fn spec_round_trips_through_toml() {
        let spec = CorrelationSpec::gaussian(0.75).unwrap();
        let text = toml::to_string(&spec).unwrap();
        let back: CorrelationSpec = toml::from_str(&text).unwrap();
        assert_eq!(spec, back);
        assert!(text.contains("family = \"gaussian\""));
        assert!(text.contains("scale = 0.75"));
    }
}
