//! s-wave scattering length of the attractive spherical well, and
//! calibration of the well depth against a target scattering length.
//!
//! For two identical bosons of unit mass the relative motion carries reduced
//! mass 1/2, so the interior wave number of a well of depth v is
//! k0 = sqrt(v) in trap units and the zero-energy scattering length is
//!
//!   a = R * (1 - tan(x)/x),    x = k0 * R.
//!
//! On the branch x in (0, pi/2) the well supports no two-body bound state
//! and a runs monotonically from 0- down to -infinity, so any negative
//! target is reached by exactly one depth.

use crate::error::{Error, Result};

const HALF_PI: f64 = std::f64::consts::FRAC_PI_2;
const MAX_BISECTIONS: u32 = 200;

/// Calibrated well depth for a requested scattering length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CalibrationResult {
    /// Depth magnitude |V| (trap-unit energy).
    pub v: f64,
    /// Dimensionless well parameter x = k0 * R, strictly below pi/2.
    pub x: f64,
    /// Scattering length reproduced by the calibrated depth (trap length).
    pub a_achieved: f64,
    /// Bisection steps used.
    pub iterations: u32,
    /// |a_achieved - a_target| / |a_target|.
    pub residual: f64,
}

/// Scattering length of a well of depth `v` and range `r` (trap units).
/// Valid on any branch away from the resonances at odd multiples of pi/2.
pub fn scattering_length(v: f64, r: f64) -> Result<f64> {
    if !v.is_finite() || v <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "well depth must be positive, got {v}"
        )));
    }
    if !r.is_finite() || r <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "well range must be positive, got {r}"
        )));
    }
    let x = v.sqrt() * r;
    let k = ((x / HALF_PI - 1.0) / 2.0).round();
    let nearest_resonance = (2.0 * k + 1.0) * HALF_PI;
    if nearest_resonance > 0.0 && (x - nearest_resonance).abs() < 1e-9 {
        return Err(Error::Resonance { x });
    }
    Ok(r * (1.0 - x.tan() / x))
}

/// Find the unique depth on the bound-state-free branch x in (0, pi/2)
/// whose scattering length equals `a_target` (< 0), by bracketing bisection
/// on x. Returns the depth v = (x/r)^2 together with branch diagnostics.
pub fn calibrate_depth(a_target: f64, r: f64) -> Result<CalibrationResult> {
    if !r.is_finite() || r <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "well range must be positive, got {r}"
        )));
    }
    if !a_target.is_finite() {
        return Err(Error::InvalidInput(format!(
            "target scattering length must be finite, got {a_target}"
        )));
    }
    if a_target >= 0.0 {
        return Err(Error::UnreachableBranch { a_target });
    }

    // a(x) = r (1 - tan x / x) is strictly decreasing on (0, pi/2), so a
    // sign change of f brackets the root. The deep-resonance start narrows
    // the bracket when the target sits close to x = pi/2.
    let f = |x: f64| r * (1.0 - x.tan() / x) - a_target;
    let (mut lo, mut hi) = if a_target.abs() > 10.0 * r {
        (HALF_PI - 1.0, HALF_PI - 1e-12)
    } else {
        (1e-12, HALF_PI - 1e-12)
    };
    let flo = f(lo);
    let fhi = f(hi);
    let bracketed = flo > 0.0 && fhi < 0.0;
    if !bracketed {
        return Err(Error::BracketInvalid(format!(
            "no sign change on [{lo}, {hi}]: f(lo)={flo}, f(hi)={fhi}"
        )));
    }

    let mut iterations = 0;
    while iterations < MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // interval at f64 resolution
        }
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }

    let x = 0.5 * (lo + hi);
    let a_achieved = r * (1.0 - x.tan() / x);
    let residual = ((a_achieved - a_target) / a_target).abs();
    if residual > 1e-10 {
        return Err(Error::NoConvergence {
            context: format!(
                "depth calibration for a_target={a_target}, r={r}: residual {residual}"
            ),
            iterations,
        });
    }
    Ok(CalibrationResult {
        v: (x / r) * (x / r),
        x,
        a_achieved,
        iterations,
        residual,
    })
}
