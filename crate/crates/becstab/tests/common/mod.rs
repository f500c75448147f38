//! Shared oracle helpers for the integration suites. These stay independent
//! of the library's evaluation paths: quadrature instead of closed forms.

/// Adaptive Simpson quadrature with Richardson correction.
#[allow(clippy::too_many_arguments)]
fn simpson_rec(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let split = left + right;
    if depth == 0 || (split - whole).abs() <= 15.0 * tol {
        split + (split - whole) / 15.0
    } else {
        simpson_rec(f, a, m, fa, flm, fm, 0.5 * tol, depth - 1)
            + simpson_rec(f, m, b, fm, frm, fb, 0.5 * tol, depth - 1)
    }
}

pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let m = 0.5 * (a + b);
    simpson_rec(&f, a, b, f(a), f(m), f(b), tol, 48)
}

/// Quadrature oracle for the sphere-enclosed mass of the pair correlation:
/// in the scaled variable t = r sqrt(w/2) the integral over the sphere of
/// radius x becomes (4/sqrt(pi)) * int_0^x t^2 exp(-t^2) dt.
pub fn sphere_fraction_quadrature(x: f64) -> f64 {
    let sqrt_pi = std::f64::consts::PI.sqrt();
    let cutoff = x.min(12.0);
    integrate(
        |t| 4.0 / sqrt_pi * t * t * (-t * t).exp(),
        0.0,
        cutoff,
        1e-15,
    )
}

/// One pass/fail line per acceptance criterion.
pub fn report(id: u32, name: &str, pass: bool, detail: &str) {
    println!(
        "criterion {id:>2} ({name}): {} — {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
}
