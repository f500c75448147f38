//! Sampled energy landscapes, barrier reports, and CSV/SVG export.

use std::io::Write;

use crate::energy::{self, EnergyBreakdown};
use crate::error::{Error, Result};
use crate::model::{Interaction, PrefactorVariant, TrapSystem, VariationalBound};
use crate::optimize::{
    self, find_critical_points, CriticalPoint, CriticalPointKind, DEFAULT_POINTS_PER_DECADE,
    LOCAL_MIN_WINDOW,
};

/// A sampled (parameter, energy-breakdown) curve on a log grid.
#[derive(Debug, Clone)]
pub struct EnergyLandscape {
    pub bound: VariationalBound,
    /// Strictly increasing, all positive.
    pub grid: Vec<(f64, EnergyBreakdown)>,
    pub system: TrapSystem,
    pub interaction: Interaction,
    pub variant: PrefactorVariant,
}

impl EnergyLandscape {
    /// "sigma" or "w".
    pub fn parameter_name(&self) -> &'static str {
        self.bound.parameter_name()
    }
}

/// Metastability summary for a bounded double-minimum landscape.
#[derive(Debug, Clone)]
pub struct BarrierReport {
    /// The trap-scale local minimum.
    pub local_min: CriticalPoint,
    /// The maximum separating it from the cluster state.
    pub barrier_top: CriticalPoint,
    /// The lower cluster minimum, when one exists.
    pub global_min: Option<CriticalPoint>,
    /// barrier_top.energy - local_min.energy (hbar*Omega).
    pub barrier_height: f64,
    /// barrier_height / |V| for the step well.
    pub depth_ratio: f64,
}

/// Evaluate the selected bound on an endpoint-inclusive log grid.
pub fn scan(
    bound: VariationalBound,
    system: &TrapSystem,
    interaction: &Interaction,
    variant: PrefactorVariant,
    w_min: f64,
    w_max: f64,
    points_per_decade: usize,
) -> Result<EnergyLandscape> {
    if !w_min.is_finite() || !w_max.is_finite() || w_min <= 0.0 || w_max <= w_min {
        return Err(Error::InvalidInput(format!(
            "need 0 < w_min < w_max, got [{w_min}, {w_max}]"
        )));
    }
    if points_per_decade < 1 {
        return Err(Error::InvalidInput("points_per_decade must be >= 1".into()));
    }
    if bound == VariationalBound::Gaussian && !matches!(interaction, Interaction::Delta { .. }) {
        return Err(Error::InvalidInput(
            "the Gaussian bound is defined for the zero-range interaction only".into(),
        ));
    }
    interaction.validate()?;
    let mut grid = Vec::new();
    for x in optimize::log_grid(w_min, w_max, points_per_decade) {
        let breakdown = match bound {
            VariationalBound::Harmonic => energy::harmonic_bound(x, system, interaction),
            VariationalBound::Gaussian => match *interaction {
                Interaction::Delta { b } => energy::gaussian_bound(x, system, b, variant),
                _ => unreachable!(),
            },
        }
        .map_err(|e| Error::EvaluationAt {
            location: x,
            source: Box::new(e),
        })?;
        grid.push((x, breakdown));
    }
    Ok(EnergyLandscape {
        bound,
        grid,
        system: *system,
        interaction: *interaction,
        variant,
    })
}

/// Locate the trap-scale minimum, the barrier top, and the cluster minimum
/// of a bounded step-well landscape. The global-minimum search extends out
/// to w = 1e12 Omega. Errors when the landscape has no metastable structure
/// (a single minimum only).
pub fn barrier_report(
    system: &TrapSystem,
    interaction: &Interaction,
    _variant: PrefactorVariant,
) -> Result<BarrierReport> {
    let v = match *interaction {
        Interaction::StepWell { v, .. } => v,
        Interaction::Delta { .. } => {
            return Err(Error::InvalidInput(
                "barrier reports are defined for the step well only".into(),
            ))
        }
    };
    let verdict = optimize::classify_stability(system, interaction)?;
    if verdict.classification != optimize::Stability::BoundedBelow || !verdict.metastable {
        return Err(Error::NoMetastableState(format!(
            "classification {} with metastable = {}",
            verdict.classification, verdict.metastable
        )));
    }
    let omega = system.omega();
    let sys = *system;
    let inter = *interaction;
    let objective = move |w: f64| energy::harmonic_total(w, &sys, &inter);
    let points = find_critical_points(
        objective,
        LOCAL_MIN_WINDOW.0 * omega,
        optimize::DEFAULT_SCAN_MAX * omega,
        DEFAULT_POINTS_PER_DECADE,
    )?;
    assemble_barrier(&points, v, omega)
}

/// Build the report out of an already-computed critical-point list. Kept
/// separate so the landscape machinery has a single source of truth for the
/// point locations.
pub fn assemble_barrier(
    points: &[CriticalPoint],
    well_depth: f64,
    omega: f64,
) -> Result<BarrierReport> {
    let minima: Vec<&CriticalPoint> = points.iter().filter(|p| p.kind.is_minimum()).collect();
    let local_min = minima
        .iter()
        .find(|p| p.location <= LOCAL_MIN_WINDOW.1 * omega)
        .copied()
        .ok_or_else(|| Error::NoMetastableState("no trap-scale local minimum".into()))?;
    let global_min = minima
        .iter()
        .copied()
        .min_by(|a, b| a.energy.total_cmp(&b.energy))
        .filter(|p| p.location > local_min.location && p.energy < local_min.energy);
    let global = global_min.ok_or_else(|| {
        Error::NoMetastableState("no second minimum below the trap-scale one".into())
    })?;
    let barrier_top = points
        .iter()
        .filter(|p| {
            p.kind == CriticalPointKind::LocalMax
                && p.location > local_min.location
                && p.location < global.location
        })
        .max_by(|a, b| a.energy.total_cmp(&b.energy))
        .ok_or_else(|| Error::NoMetastableState("no barrier top between the minima".into()))?;
    let barrier_height = barrier_top.energy - local_min.energy;
    Ok(BarrierReport {
        local_min: *local_min,
        barrier_top: *barrier_top,
        global_min: Some(*global),
        barrier_height,
        depth_ratio: barrier_height / well_depth,
    })
}

/// Write the landscape as CSV: header `param,total,kinetic_trap,
/// com_correction,interaction`, one row per grid point, 17 significant
/// digits so every f64 round-trips exactly.
pub fn export_csv(landscape: &EnergyLandscape, destination: &mut dyn Write) -> Result<()> {
    writeln!(
        destination,
        "param,total,kinetic_trap,com_correction,interaction"
    )?;
    for (x, e) in &landscape.grid {
        writeln!(
            destination,
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
            x, e.total, e.kinetic_trap, e.com_correction, e.interaction
        )?;
    }
    Ok(())
}

/// Parse CSV produced by [`export_csv`] back into grid rows.
pub fn parse_csv(text: &str) -> Result<Vec<(f64, EnergyBreakdown)>> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::InvalidInput("empty CSV".into()))?;
    if header != "param,total,kinetic_trap,com_correction,interaction" {
        return Err(Error::InvalidInput(format!(
            "unexpected CSV header: {header}"
        )));
    }
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 5 {
            return Err(Error::InvalidInput(format!("row {i}: expected 5 fields")));
        }
        let parse = |s: &str| -> Result<f64> {
            s.parse::<f64>()
                .map_err(|e| Error::InvalidInput(format!("row {i}: {e}")))
        };
        rows.push((
            parse(fields[0])?,
            EnergyBreakdown {
                total: parse(fields[1])?,
                kinetic_trap: parse(fields[2])?,
                com_correction: parse(fields[3])?,
                interaction: parse(fields[4])?,
            },
        ));
    }
    Ok(rows)
}

const SVG_W: f64 = 800.0;
const SVG_H: f64 = 520.0;
const MARGIN: f64 = 60.0;

/// Render the landscape as a standalone SVG: log-scaled abscissa, linear or
/// symmetric-log ordinate (the latter when the energies change sign or span
/// more than six decades), the landscape polyline, and one circle marker per
/// critical point.
pub fn render_svg(
    landscape: &EnergyLandscape,
    critical_points: &[CriticalPoint],
    destination: &mut dyn Write,
) -> Result<()> {
    if landscape.grid.len() < 2 {
        return Err(Error::InvalidInput(
            "SVG rendering needs at least 2 grid points".into(),
        ));
    }
    let xs: Vec<f64> = landscape.grid.iter().map(|(x, _)| x.log10()).collect();
    let totals: Vec<f64> = landscape.grid.iter().map(|(_, e)| e.total).collect();

    let sign_change = totals.iter().any(|&e| e < 0.0) && totals.iter().any(|&e| e > 0.0);
    let abs_nonzero: Vec<f64> = totals
        .iter()
        .map(|e| e.abs())
        .filter(|&a| a > 0.0)
        .collect();
    let wide = match (
        abs_nonzero.iter().cloned().reduce(f64::min),
        abs_nonzero.iter().cloned().reduce(f64::max),
    ) {
        (Some(lo), Some(hi)) => hi / lo > 1e6,
        _ => false,
    };
    let symlog = sign_change || wide;
    let transform = |e: f64| {
        if symlog {
            e.signum() * (1.0 + e.abs()).log10()
        } else {
            e
        }
    };

    let ys: Vec<f64> = totals.iter().map(|&e| transform(e)).collect();
    let (x_lo, x_hi) = (xs[0], xs[xs.len() - 1]);
    let mut y_lo = ys.iter().cloned().fold(f64::INFINITY, f64::min);
    let mut y_hi = ys.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if y_hi - y_lo < 1e-12 {
        y_lo -= 1.0;
        y_hi += 1.0;
    }
    let px = |x: f64| MARGIN + (x - x_lo) / (x_hi - x_lo) * (SVG_W - 2.0 * MARGIN);
    let py = |y: f64| SVG_H - MARGIN - (y - y_lo) / (y_hi - y_lo) * (SVG_H - 2.0 * MARGIN);

    let mut poly = String::new();
    for (x, y) in xs.iter().zip(&ys) {
        poly.push_str(&format!("{:.2},{:.2} ", px(*x), py(*y)));
    }

    writeln!(
        destination,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_W}" height="{SVG_H}" viewBox="0 0 {SVG_W} {SVG_H}">"#
    )?;
    writeln!(
        destination,
        r##"  <rect x="{MARGIN}" y="{MARGIN}" width="{}" height="{}" fill="none" stroke="#888"/>"##,
        SVG_W - 2.0 * MARGIN,
        SVG_H - 2.0 * MARGIN
    )?;
    writeln!(
        destination,
        r#"  <text x="{}" y="{}" text-anchor="middle" font-size="14">log10({} / Omega units)</text>"#,
        SVG_W / 2.0,
        SVG_H - 18.0,
        landscape.parameter_name()
    )?;
    writeln!(
        destination,
        r#"  <text x="18" y="{}" text-anchor="middle" font-size="14" transform="rotate(-90 18 {})">energy ({}hbar*Omega)</text>"#,
        SVG_H / 2.0,
        SVG_H / 2.0,
        if symlog { "sym-log, " } else { "" }
    )?;
    writeln!(
        destination,
        r##"  <polyline points="{}" fill="none" stroke="#1a6fb0" stroke-width="1.5"/>"##,
        poly.trim_end()
    )?;
    for p in critical_points {
        writeln!(
            destination,
            r##"  <circle cx="{:.2}" cy="{:.2}" r="4" fill="#d73027" stroke="#600" stroke-width="1"><title>{} at {:.6e}, {:.6e} hbar*Omega</title></circle>"##,
            px(p.location.log10()),
            py(transform(p.energy)),
            p.kind,
            p.location,
            p.energy
        )?;
    }
    writeln!(destination, "</svg>")?;
    Ok(())
}
