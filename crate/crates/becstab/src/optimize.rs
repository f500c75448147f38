//! One-dimensional minimization, critical-point enumeration on logarithmic
//! grids, stability classification, and the critical-particle-number solve.
//!
//! The local-minimum existence predicate used throughout is fixed policy: a
//! strict discrete sign change of the slope on a log grid of at least
//! [`DEFAULT_POINTS_PER_DECADE`] points per decade inside the trap-scale
//! window [`LOCAL_MIN_WINDOW`] (in units of the trap frequency), followed by
//! golden-section refinement. Near the critical particle number the minimum
//! merges with an inflection, so the reported threshold is defined relative
//! to this grid policy.

use crate::energy::{self, bound_objective};
use crate::error::{Error, Result};
use crate::model::{Interaction, PrefactorVariant, TrapSystem, VariationalBound};

/// Trap-scale window (in units of Omega) in which the metastable local
/// minimum is sought.
pub const LOCAL_MIN_WINDOW: (f64, f64) = (1e-2, 1e2);

/// Default upper edge of global scans (units of Omega).
pub const DEFAULT_SCAN_MAX: f64 = 1e12;

/// Default log-grid resolution for critical-point detection.
pub const DEFAULT_POINTS_PER_DECADE: usize = 200;

/// Energy threshold (hbar*Omega) below which a probe counts as evidence of
/// collapse.
pub const DEFAULT_COLLAPSE_FLOOR: f64 = -1e6;

const GOLDEN_TOL: f64 = 1e-10;
const INV_PHI: f64 = 0.618_033_988_749_895;

/// A refined stationary point (or boundary trend) of a 1D energy landscape.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalPoint {
    /// w or sigma, in trap units.
    pub location: f64,
    /// Energy at the location (hbar*Omega).
    pub energy: f64,
    pub kind: CriticalPointKind,
    /// +1 at minima, -1 at maxima, 0 for boundary trends.
    pub curvature_sign: i8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriticalPointKind {
    LocalMin,
    LocalMax,
    /// A local minimum that is also the lowest one found on a scan with no
    /// decreasing boundary.
    GlobalMin,
    /// The landscape is still strictly decreasing outward at this window
    /// edge, so the true extremum lies outside the scanned range.
    BoundaryDecreasing,
}

impl CriticalPointKind {
    pub fn is_minimum(&self) -> bool {
        matches!(
            self,
            CriticalPointKind::LocalMin | CriticalPointKind::GlobalMin
        )
    }
}

impl std::fmt::Display for CriticalPointKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CriticalPointKind::LocalMin => "local-min",
            CriticalPointKind::LocalMax => "local-max",
            CriticalPointKind::GlobalMin => "global-min",
            CriticalPointKind::BoundaryDecreasing => "boundary-decreasing",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stability {
    BoundedBelow,
    UnboundedBelow,
}

impl std::fmt::Display for Stability {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Stability::BoundedBelow => write!(f, "bounded-below"),
            Stability::UnboundedBelow => write!(f, "unbounded-below"),
        }
    }
}

/// A probe location whose energy lies below the collapse floor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollapseWitness {
    pub w: f64,
    pub energy: f64,
}

/// Outcome of the analytic stability rule plus numeric confirmation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StabilityVerdict {
    pub classification: Stability,
    /// Present for unbounded landscapes (barring strengths so small that no
    /// f64 probe location reaches the floor).
    pub witness: Option<CollapseWitness>,
    /// True when a trap-scale local minimum coexists with the unbounded
    /// direction or with a lower minimum elsewhere.
    pub metastable: bool,
}

/// Result of the integer bisection for the largest particle number that
/// still supports a trap-scale local minimum.
#[derive(Debug, Clone, PartialEq)]
pub struct CriticalNumberResult {
    pub n_max: u32,
    /// (last N with a local minimum, first N without one).
    pub bracket: (u32, u32),
    /// The detection policy the threshold is defined against.
    pub criterion: String,
}

/// Endpoint-inclusive logarithmic grid with `points_per_decade` resolution.
pub(crate) fn log_grid(lo: f64, hi: f64, points_per_decade: usize) -> Vec<f64> {
    let decades = (hi / lo).log10();
    let n = ((decades * points_per_decade as f64).round() as usize).max(1) + 1;
    let step = (hi.ln() - lo.ln()) / (n - 1) as f64;
    let mut grid: Vec<f64> = (0..n).map(|k| (lo.ln() + step * k as f64).exp()).collect();
    grid[0] = lo;
    grid[n - 1] = hi;
    grid
}

fn golden_section<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64) -> (f64, f64) {
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..256 {
        if (b - a).abs() <= GOLDEN_TOL * 0.5 * (a.abs() + b.abs()) {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// Refine the minimum of `objective` inside `bracket` to a relative location
/// tolerance of 1e-10. Errors if no interior probe point lies strictly below
/// both bracket ends.
pub fn minimize_local<F: Fn(f64) -> f64>(objective: F, bracket: (f64, f64)) -> Result<(f64, f64)> {
    let (lo, hi) = bracket;
    if !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(Error::BracketInvalid(format!(
            "need lo < hi, got [{lo}, {hi}]"
        )));
    }
    let flo = objective(lo);
    let fhi = objective(hi);
    let edge = flo.min(fhi);
    let mut bracketed = false;
    for k in 1..64 {
        let x = lo + (hi - lo) * k as f64 / 64.0;
        if objective(x) < edge {
            bracketed = true;
            break;
        }
    }
    if !bracketed {
        return Err(Error::NoInteriorMinimum { lo, hi });
    }
    Ok(golden_section(&objective, lo, hi))
}

/// Enumerate critical points of `objective` on a log grid over
/// [`w_min`, `w_max`]: strict discrete slope sign changes are refined by
/// golden section and labeled; a `BoundaryDecreasing` entry is appended for
/// each window edge at which the landscape still falls outward. When the
/// scan has no decreasing boundary, the lowest minimum is relabeled
/// `GlobalMin`.
pub fn find_critical_points<F: Fn(f64) -> f64>(
    objective: F,
    w_min: f64,
    w_max: f64,
    points_per_decade: usize,
) -> Result<Vec<CriticalPoint>> {
    if !w_min.is_finite() || !w_max.is_finite() || w_min <= 0.0 || w_max <= w_min {
        return Err(Error::InvalidInput(format!(
            "need 0 < w_min < w_max, got [{w_min}, {w_max}]"
        )));
    }
    if points_per_decade < 50 {
        return Err(Error::InvalidInput(format!(
            "points_per_decade must be >= 50, got {points_per_decade}"
        )));
    }
    let grid = log_grid(w_min, w_max, points_per_decade);
    let values: Vec<f64> = grid.iter().map(|&w| objective(w)).collect();
    let n = grid.len();

    let mut points = Vec::new();
    for i in 1..n - 1 {
        if values[i] < values[i - 1] && values[i] < values[i + 1] {
            let (x, e) = golden_section(&objective, grid[i - 1], grid[i + 1]);
            points.push(CriticalPoint {
                location: x,
                energy: e,
                kind: CriticalPointKind::LocalMin,
                curvature_sign: 1,
            });
        } else if values[i] > values[i - 1] && values[i] > values[i + 1] {
            let neg = |w: f64| -objective(w);
            let (x, e) = golden_section(&neg, grid[i - 1], grid[i + 1]);
            points.push(CriticalPoint {
                location: x,
                energy: -e,
                kind: CriticalPointKind::LocalMax,
                curvature_sign: -1,
            });
        }
    }

    // Decreasing outward at an edge: falling toward w_max on the right,
    // rising in +w at the left edge (i.e. falling toward w -> 0).
    if values[0] < values[1] {
        points.insert(
            0,
            CriticalPoint {
                location: grid[0],
                energy: values[0],
                kind: CriticalPointKind::BoundaryDecreasing,
                curvature_sign: 0,
            },
        );
    }
    let falling_at_wmax = values[n - 1] < values[n - 2];
    if falling_at_wmax {
        points.push(CriticalPoint {
            location: grid[n - 1],
            energy: values[n - 1],
            kind: CriticalPointKind::BoundaryDecreasing,
            curvature_sign: 0,
        });
    }

    let any_boundary = points
        .iter()
        .any(|p| p.kind == CriticalPointKind::BoundaryDecreasing);
    if !any_boundary {
        if let Some(best) = points
            .iter()
            .enumerate()
            .filter(|(_, p)| p.kind == CriticalPointKind::LocalMin)
            .min_by(|a, b| a.1.energy.total_cmp(&b.1.energy))
            .map(|(i, _)| i)
        {
            points[best].kind = CriticalPointKind::GlobalMin;
        }
    }
    Ok(points)
}

/// True when the scan found at least one (local or global) minimum.
pub fn has_local_minimum(points: &[CriticalPoint]) -> bool {
    points.iter().any(|p| p.kind.is_minimum())
}

/// Analytic stability rule with numeric confirmation.
///
/// An attractive zero-range interaction with at least one pair drives the
/// bound to -infinity as w grows (the interaction falls like -w^(3/2)
/// against a +w kinetic cost); a step well saturates and stays bounded. For
/// unbounded landscapes the returned witness is a probe at w = 1e12 Omega
/// (pushed further out in decades if the floor is not yet crossed there).
pub fn classify_stability(
    system: &TrapSystem,
    interaction: &Interaction,
) -> Result<StabilityVerdict> {
    interaction.validate()?;
    let omega = system.omega();
    let sys = *system;
    let inter = *interaction;
    let objective = move |w: f64| energy::harmonic_total(w, &sys, &inter);

    let unbounded = system.n() >= 2 && matches!(*interaction, Interaction::Delta { b } if b < 0.0);
    if unbounded {
        let mut w = DEFAULT_SCAN_MAX * omega;
        let mut e = objective(w);
        while e >= DEFAULT_COLLAPSE_FLOOR && w < 1e200 {
            w *= 10.0;
            e = objective(w);
        }
        let witness = (e < DEFAULT_COLLAPSE_FLOOR).then_some(CollapseWitness { w, energy: e });
        let trap_points = find_critical_points(
            objective,
            LOCAL_MIN_WINDOW.0 * omega,
            LOCAL_MIN_WINDOW.1 * omega,
            DEFAULT_POINTS_PER_DECADE,
        )?;
        Ok(StabilityVerdict {
            classification: Stability::UnboundedBelow,
            witness,
            metastable: has_local_minimum(&trap_points),
        })
    } else {
        let points = find_critical_points(
            objective,
            LOCAL_MIN_WINDOW.0 * omega,
            DEFAULT_SCAN_MAX * omega,
            DEFAULT_POINTS_PER_DECADE,
        )?;
        let minima = points.iter().filter(|p| p.kind.is_minimum()).count();
        Ok(StabilityVerdict {
            classification: Stability::BoundedBelow,
            witness: None,
            metastable: minima >= 2,
        })
    }
}

/// Stability of the Gaussian-width bound: unbounded below (as sigma -> 0)
/// whenever the attractive contact term carries a nonzero pair count. The
/// witness probe starts at sigma = 1e-6 and moves inward by decades until
/// the energy crosses the collapse floor.
pub fn classify_gaussian_stability(
    system: &TrapSystem,
    b: f64,
    variant: PrefactorVariant,
) -> Result<StabilityVerdict> {
    if !b.is_finite() {
        return Err(Error::InvalidInput(format!(
            "delta strength must be finite, got {b}"
        )));
    }
    let omega = system.omega();
    let sys = *system;
    let objective = move |s: f64| energy::gaussian_total(s, &sys, b, variant);
    let window = (
        LOCAL_MIN_WINDOW.0 / omega.sqrt(),
        LOCAL_MIN_WINDOW.1 / omega.sqrt(),
    );
    let unbounded = b < 0.0 && system.pair_count(variant) > 0.0;
    if unbounded {
        let mut s = 1e-6 / omega.sqrt();
        let mut e = objective(s);
        while e >= DEFAULT_COLLAPSE_FLOOR && s > 1e-200 {
            s /= 10.0;
            e = objective(s);
        }
        let witness = (e < DEFAULT_COLLAPSE_FLOOR).then_some(CollapseWitness { w: s, energy: e });
        let trap_points =
            find_critical_points(objective, window.0, window.1, DEFAULT_POINTS_PER_DECADE)?;
        Ok(StabilityVerdict {
            classification: Stability::UnboundedBelow,
            witness,
            metastable: has_local_minimum(&trap_points),
        })
    } else {
        Ok(StabilityVerdict {
            classification: Stability::BoundedBelow,
            witness: None,
            metastable: false,
        })
    }
}

/// Largest particle number for which a trap-scale local minimum of the
/// selected bound exists, by integer bisection between `n_lo` (must have
/// one) and `n_hi` (must not).
pub fn critical_number(
    bound: VariationalBound,
    interaction: &Interaction,
    omega: f64,
    variant: PrefactorVariant,
    n_lo: u32,
    n_hi: u32,
) -> Result<CriticalNumberResult> {
    if n_lo < 1 || n_lo >= n_hi {
        return Err(Error::BracketInvalid(format!(
            "need 1 <= n_lo < n_hi, got ({n_lo}, {n_hi})"
        )));
    }
    // The trap-scale window in the scan parameter: w scales with Omega,
    // sigma with the oscillator length 1/sqrt(Omega).
    let (lo, hi) = match bound {
        VariationalBound::Harmonic => (LOCAL_MIN_WINDOW.0 * omega, LOCAL_MIN_WINDOW.1 * omega),
        VariationalBound::Gaussian => (
            LOCAL_MIN_WINDOW.0 / omega.sqrt(),
            LOCAL_MIN_WINDOW.1 / omega.sqrt(),
        ),
    };
    let predicate = |n: u32| -> Result<bool> {
        let system = TrapSystem::new(n, omega)?;
        let objective = bound_objective(bound, system, *interaction, variant)?;
        let points = find_critical_points(objective, lo, hi, DEFAULT_POINTS_PER_DECADE)?;
        Ok(has_local_minimum(&points))
    };

    if !predicate(n_lo)? {
        return Err(Error::BracketInvalid(format!(
            "no trap-scale local minimum at n_lo = {n_lo}"
        )));
    }
    if predicate(n_hi)? {
        return Err(Error::BracketInvalid(format!(
            "a trap-scale local minimum still exists at n_hi = {n_hi}"
        )));
    }

    let (mut stable, mut unstable) = (n_lo, n_hi);
    while unstable - stable > 1 {
        let mid = stable + (unstable - stable) / 2;
        if predicate(mid)? {
            stable = mid;
        } else {
            unstable = mid;
        }
    }
    Ok(CriticalNumberResult {
        n_max: stable,
        bracket: (stable, unstable),
        criterion: format!(
            "strict discrete slope sign change on a log grid ({DEFAULT_POINTS_PER_DECADE} points/decade) \
             within the trap-scale window [{:e}, {:e}]",
            lo, hi
        ),
    })
}

/// Exact merge point of the reduced width-family landscape
/// e(s) = (3/4)(s^-2 + s^2) - c s^-3 at unit trap frequency: solving
/// e' = e'' = 0 gives s* = 5^(-1/4) and c* = (2/5) 5^(-1/4). A local
/// minimum exists iff the reduced coupling c = (pair_count/N) |B|
/// (2 pi)^(-3/2) stays below c*.
pub fn critical_strength_gaussian() -> (f64, f64) {
    let s_star = 5f64.powf(-0.25);
    (s_star, 0.4 * s_star)
}
