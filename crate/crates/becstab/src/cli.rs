//! Command-line interface.
//!
//! Four subcommands tie the library together: `scan` (landscape to
//! CSV/SVG), `minimize` (stability verdict and minimizers), `critical-n`
//! (largest N with a trap-scale local minimum, with an optional range
//! sweep), and `calibrate` (well depth from a scattering length).
//!
//! Exit codes: 0 ok, 2 invalid input, 3 no convergence, 4 unbounded-below
//! landscape.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::energy;
use crate::error::{Error, Result};
use crate::landscape::{self, EnergyLandscape};
use crate::model::{Interaction, PrefactorVariant, TrapSystem, VariationalBound};
use crate::optimize::{
    self, classify_gaussian_stability, classify_stability, critical_number, find_critical_points,
    CriticalPoint, Stability, StabilityVerdict, DEFAULT_POINTS_PER_DECADE,
};
use crate::scattering;
use crate::scenario::{builtin, InteractionSpec, Scenario};
use crate::units;

pub fn run() -> i32 {
    run_from(std::env::args_os())
}

/// Parse and execute; returns the process exit code.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let mut source = std::error::Error::source(&e);
            while let Some(s) = source {
                eprintln!("  caused by: {s}");
                source = s.source();
            }
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidInput(_)
        | Error::UnreachableBranch { .. }
        | Error::BracketInvalid(_)
        | Error::Json(_)
        | Error::Io(_) => 2,
        Error::NoConvergence { .. }
        | Error::Resonance { .. }
        | Error::NoInteriorMinimum { .. }
        | Error::NoMetastableState(_) => 3,
        Error::EvaluationAt { source, .. } => exit_code(source),
    }
}

#[derive(Parser)]
#[command(
    name = "becstab",
    version,
    about = "Variational stability analysis of trapped attractive Bose gases"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample an energy landscape; write CSV/SVG and a critical-point summary
    Scan(ScanArgs),
    /// Classify stability and report minimizers
    Minimize(MinimizeArgs),
    /// Largest particle number with a trap-scale local minimum
    CriticalN(CriticalNArgs),
    /// Calibrate the step-well depth to a target scattering length
    Calibrate(CalibrateArgs),
}

#[derive(Args)]
struct SystemArgs {
    /// Built-in scenario name (li7-hulet) or path to a scenario JSON file
    #[arg(long)]
    scenario: Option<String>,
    /// Particle count (overrides the scenario value)
    #[arg(long)]
    n: Option<u32>,
    /// Trap frequency in Hz (flag mode)
    #[arg(long, default_value_t = 145.0)]
    omega_hz: f64,
    /// Particle mass in amu (flag mode)
    #[arg(long, default_value_t = 7.016)]
    mass_amu: f64,
    /// Interaction style in flag mode: delta | step
    #[arg(long)]
    interaction: Option<String>,
    /// Zero-range strength in trap units (negative = attractive)
    #[arg(long, allow_hyphen_values = true)]
    b: Option<f64>,
    /// Step-well depth in trap quanta
    #[arg(long)]
    v: Option<f64>,
    /// Step-well range in Bohr radii
    #[arg(long)]
    r_bohr: Option<f64>,
    /// Target s-wave scattering length in angstrom
    #[arg(long, allow_hyphen_values = true)]
    a_angstrom: Option<f64>,
    /// Pair-count prefactor: paper | corrected
    #[arg(long)]
    variant: Option<String>,
    /// Which bound to analyze: harmonic (over w) | gaussian (over sigma)
    #[arg(long, default_value = "harmonic")]
    bound: String,
}

struct Resolved {
    system: TrapSystem,
    interaction: Interaction,
    variant: PrefactorVariant,
    bound: VariationalBound,
    scenario: Scenario,
}

impl SystemArgs {
    fn scenario(&self) -> Result<Scenario> {
        if let Some(name_or_path) = &self.scenario {
            if let Some(s) = builtin(name_or_path) {
                return Ok(s);
            }
            let text = fs::read_to_string(name_or_path).map_err(|e| {
                Error::InvalidInput(format!(
                    "'{name_or_path}' is not a built-in scenario and could not be read as a file: {e}"
                ))
            })?;
            return Scenario::from_json(&text);
        }
        let interaction = match self.interaction.as_deref() {
            Some("delta") => InteractionSpec::Delta {
                b: self.b.ok_or_else(|| {
                    Error::InvalidInput("--b is required with --interaction delta".into())
                })?,
            },
            Some("step") => {
                let r_bohr = self.r_bohr.ok_or_else(|| {
                    Error::InvalidInput("--r-bohr is required with --interaction step".into())
                })?;
                match (self.v, self.a_angstrom) {
                    (Some(v), None) => InteractionSpec::StepWell { v, r_bohr },
                    (None, Some(a_angstrom)) => {
                        InteractionSpec::ScatteringLength { a_angstrom, r_bohr }
                    }
                    (Some(_), Some(_)) => {
                        return Err(Error::InvalidInput(
                            "give exactly one of --v and --a-angstrom".into(),
                        ))
                    }
                    (None, None) => {
                        return Err(Error::InvalidInput(
                            "--interaction step needs either --v or --a-angstrom".into(),
                        ))
                    }
                }
            }
            Some(other) => {
                return Err(Error::InvalidInput(format!(
                    "unknown interaction style '{other}' (expected delta or step)"
                )))
            }
            None => {
                return Err(Error::InvalidInput(
                    "either --scenario or --interaction delta|step is required".into(),
                ))
            }
        };
        Ok(Scenario {
            name: "cli".into(),
            frequency_hz: self.omega_hz,
            mass_amu: self.mass_amu,
            n: self.n,
            variant: PrefactorVariant::CorrectedPairCount,
            interaction,
        })
    }

    fn variant_override(&self) -> Result<Option<PrefactorVariant>> {
        match self.variant.as_deref() {
            None => Ok(None),
            Some("paper") => Ok(Some(PrefactorVariant::PaperNSquared)),
            Some("corrected") => Ok(Some(PrefactorVariant::CorrectedPairCount)),
            Some(other) => Err(Error::InvalidInput(format!(
                "unknown variant '{other}' (expected paper or corrected)"
            ))),
        }
    }

    fn bound(&self) -> Result<VariationalBound> {
        match self.bound.as_str() {
            "harmonic" => Ok(VariationalBound::Harmonic),
            "gaussian" => Ok(VariationalBound::Gaussian),
            other => Err(Error::InvalidInput(format!(
                "unknown bound '{other}' (expected harmonic or gaussian)"
            ))),
        }
    }

    fn resolve(&self) -> Result<Resolved> {
        self.resolve_inner(None)
    }

    /// Like `resolve`, but tolerates a missing particle count (commands
    /// that search over N do not need one).
    fn resolve_with_fallback_n(&self, fallback: u32) -> Result<Resolved> {
        self.resolve_inner(Some(fallback))
    }

    fn resolve_inner(&self, fallback_n: Option<u32>) -> Result<Resolved> {
        let scenario = self.scenario()?;
        let variant_override = self.variant_override()?;
        let n = self.n.or(scenario.n).or(fallback_n);
        let resolved = scenario.resolve(n, variant_override)?;
        Ok(Resolved {
            system: resolved.system,
            interaction: resolved.interaction,
            variant: scenario.variant_with(variant_override),
            bound: self.bound()?,
            scenario,
        })
    }
}

#[derive(Serialize)]
struct CriticalPointReport {
    kind: String,
    location: f64,
    energy: f64,
}

impl From<&CriticalPoint> for CriticalPointReport {
    fn from(p: &CriticalPoint) -> Self {
        CriticalPointReport {
            kind: p.kind.to_string(),
            location: p.location,
            energy: p.energy,
        }
    }
}

fn write_json<T: Serialize>(path: &Option<PathBuf>, report: &T) -> Result<()> {
    if let Some(path) = path {
        let mut text = serde_json::to_string_pretty(report)?;
        text.push('\n');
        fs::write(path, text)?;
    }
    Ok(())
}

fn print_points(points: &[CriticalPoint], parameter: &str) {
    if points.is_empty() {
        println!("critical points: none");
        return;
    }
    println!("critical points:");
    println!("  {:<22} {:<26} energy (hbar*Omega)", "kind", parameter);
    for p in points {
        println!(
            "  {:<22} {:<26} {:.16e}",
            p.kind.to_string(),
            format!("{:.16e}", p.location),
            p.energy
        );
    }
}

fn summary_points(resolved: &Resolved, lo: f64, hi: f64, ppd: usize) -> Result<Vec<CriticalPoint>> {
    let objective = energy::bound_objective(
        resolved.bound,
        resolved.system,
        resolved.interaction,
        resolved.variant,
    )?;
    find_critical_points(objective, lo, hi, ppd.max(DEFAULT_POINTS_PER_DECADE))
}

// ---------------------------------------------------------------- scan ----

#[derive(Args)]
struct ScanArgs {
    #[command(flatten)]
    system: SystemArgs,
    /// Lower edge of the scan window (w in units of Omega, sigma in trap lengths)
    #[arg(long, default_value_t = 1e-3)]
    wmin: f64,
    /// Upper edge of the scan window
    #[arg(long, default_value_t = 1e12)]
    wmax: f64,
    #[arg(long, default_value_t = 200)]
    points_per_decade: usize,
    /// CSV output path
    #[arg(long)]
    out: Option<PathBuf>,
    /// SVG output path
    #[arg(long)]
    svg: Option<PathBuf>,
    /// JSON report path
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Serialize)]
struct ScanReport {
    command: &'static str,
    scenario: String,
    parameter: &'static str,
    n: u32,
    variant: String,
    interaction: String,
    window: [f64; 2],
    grid_points: usize,
    critical_points: Vec<CriticalPointReport>,
    energy_min: f64,
    energy_max: f64,
    csv: Option<String>,
    svg: Option<String>,
}

fn cmd_scan(args: ScanArgs) -> Result<i32> {
    let resolved = args.system.resolve()?;
    let scanned: EnergyLandscape = landscape::scan(
        resolved.bound,
        &resolved.system,
        &resolved.interaction,
        resolved.variant,
        args.wmin,
        args.wmax,
        args.points_per_decade,
    )?;
    let points = summary_points(&resolved, args.wmin, args.wmax, args.points_per_decade)?;

    let totals: Vec<f64> = scanned.grid.iter().map(|(_, e)| e.total).collect();
    let e_min = totals.iter().cloned().fold(f64::INFINITY, f64::min);
    let e_max = totals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);

    println!(
        "landscape: parameter={} n={} omega=1 interaction={} variant={}",
        scanned.parameter_name(),
        resolved.system.n(),
        resolved.interaction,
        resolved.variant
    );
    println!(
        "grid: {} points in [{:e}, {:e}]",
        scanned.grid.len(),
        args.wmin,
        args.wmax
    );
    println!("energy range: [{:.16e}, {:.16e}]", e_min, e_max);
    print_points(&points, scanned.parameter_name());

    if let Some(path) = &args.out {
        let mut file = fs::File::create(path)?;
        landscape::export_csv(&scanned, &mut file)?;
        println!("wrote CSV: {}", path.display());
    }
    if let Some(path) = &args.svg {
        let mut file = fs::File::create(path)?;
        landscape::render_svg(&scanned, &points, &mut file)?;
        println!("wrote SVG: {}", path.display());
    }
    write_json(
        &args.json,
        &ScanReport {
            command: "scan",
            scenario: resolved.scenario.name.clone(),
            parameter: scanned.parameter_name(),
            n: resolved.system.n(),
            variant: resolved.variant.to_string(),
            interaction: resolved.interaction.to_string(),
            window: [args.wmin, args.wmax],
            grid_points: scanned.grid.len(),
            critical_points: points.iter().map(Into::into).collect(),
            energy_min: e_min,
            energy_max: e_max,
            csv: args.out.as_ref().map(|p| p.display().to_string()),
            svg: args.svg.as_ref().map(|p| p.display().to_string()),
        },
    )?;
    Ok(0)
}

// ------------------------------------------------------------ minimize ----

#[derive(Args)]
struct MinimizeArgs {
    #[command(flatten)]
    system: SystemArgs,
    #[arg(long, default_value_t = 1e-3)]
    wmin: f64,
    #[arg(long, default_value_t = 1e12)]
    wmax: f64,
    /// JSON report path
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Serialize)]
struct MinimizeReport {
    command: &'static str,
    scenario: String,
    parameter: &'static str,
    n: u32,
    stability: String,
    metastable: bool,
    witness: Option<CriticalPointReport>,
    minima: Vec<CriticalPointReport>,
    barrier_height: Option<f64>,
    depth_ratio: Option<f64>,
}

fn cmd_minimize(args: MinimizeArgs) -> Result<i32> {
    let resolved = args.system.resolve()?;
    let verdict: StabilityVerdict = match resolved.bound {
        VariationalBound::Harmonic => classify_stability(&resolved.system, &resolved.interaction)?,
        VariationalBound::Gaussian => match resolved.interaction {
            Interaction::Delta { b } => {
                classify_gaussian_stability(&resolved.system, b, resolved.variant)?
            }
            _ => {
                return Err(Error::InvalidInput(
                    "the Gaussian bound is defined for the zero-range interaction only".into(),
                ))
            }
        },
    };
    println!(
        "stability: {}{}",
        verdict.classification,
        if verdict.metastable {
            " (metastable)"
        } else {
            ""
        }
    );

    let parameter = resolved.bound.parameter_name();
    let points = summary_points(&resolved, args.wmin, args.wmax, DEFAULT_POINTS_PER_DECADE)?;
    let minima: Vec<CriticalPoint> = points
        .iter()
        .filter(|p| p.kind.is_minimum())
        .copied()
        .collect();

    if verdict.classification == Stability::UnboundedBelow {
        let witness = verdict.witness;
        if let Some(w) = witness {
            println!(
                "witness: E({parameter}={:.6e}) = {:.6e} hbar*Omega, below the collapse floor {:.1e}",
                w.w,
                w.energy,
                optimize::DEFAULT_COLLAPSE_FLOOR
            );
        }
        if !minima.is_empty() {
            print_points(&minima, parameter);
        }
        println!("the bound is unbounded below (collapse); no global minimizer exists");
        write_json(
            &args.json,
            &MinimizeReport {
                command: "minimize",
                scenario: resolved.scenario.name.clone(),
                parameter,
                n: resolved.system.n(),
                stability: verdict.classification.to_string(),
                metastable: verdict.metastable,
                witness: witness.map(|w| CriticalPointReport {
                    kind: "collapse-witness".into(),
                    location: w.w,
                    energy: w.energy,
                }),
                minima: minima.iter().map(Into::into).collect(),
                barrier_height: None,
                depth_ratio: None,
            },
        )?;
        return Ok(4);
    }

    let mut barrier_height = None;
    let mut depth_ratio = None;
    if minima.is_empty() {
        // Flat (single particle) or boundary-minimal landscape: report the
        // grid argmin.
        let objective = energy::bound_objective(
            resolved.bound,
            resolved.system,
            resolved.interaction,
            resolved.variant,
        )?;
        let samples: Vec<(f64, f64)> = (0..=600)
            .map(|k| args.wmin * (args.wmax / args.wmin).powf(k as f64 / 600.0))
            .map(|x| (x, objective(x)))
            .collect();
        let (loc, e) = samples
            .iter()
            .copied()
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        let e_hi = samples
            .iter()
            .map(|p| p.1)
            .fold(f64::NEG_INFINITY, f64::max);
        if (e_hi - e).abs() <= 1e-9 * e_hi.abs().max(1.0) {
            println!(
                "landscape is flat: energy {:.16e} hbar*Omega for all {parameter}",
                e
            );
        } else {
            println!(
                "no interior minimum; lowest sampled energy {:.16e} hbar*Omega at {parameter}={:.6e}",
                e, loc
            );
        }
    } else {
        print_points(&minima, parameter);
        if verdict.metastable {
            if let Interaction::StepWell { v, .. } = resolved.interaction {
                if let Ok(report) = landscape::assemble_barrier(&points, v, resolved.system.omega())
                {
                    println!(
                        "barrier: top at {parameter}={:.6e}, height {:.6e} hbar*Omega, height/|V| = {:.6e}",
                        report.barrier_top.location, report.barrier_height, report.depth_ratio
                    );
                    barrier_height = Some(report.barrier_height);
                    depth_ratio = Some(report.depth_ratio);
                }
            }
        }
    }
    write_json(
        &args.json,
        &MinimizeReport {
            command: "minimize",
            scenario: resolved.scenario.name.clone(),
            parameter,
            n: resolved.system.n(),
            stability: verdict.classification.to_string(),
            metastable: verdict.metastable,
            witness: None,
            minima: minima.iter().map(Into::into).collect(),
            barrier_height,
            depth_ratio,
        },
    )?;
    Ok(0)
}

// ----------------------------------------------------------- critical-n ----

#[derive(Args)]
struct CriticalNArgs {
    #[command(flatten)]
    system: SystemArgs,
    /// Lower bisection bracket (defaults to 1 for the gaussian bound, 2 for harmonic)
    #[arg(long)]
    n_lo: Option<u32>,
    /// Upper bisection bracket
    #[arg(long, default_value_t = 1_000_000)]
    n_hi: u32,
    /// Sweep the well range: lo:hi:steps in Bohr radii (scattering-length scenarios)
    #[arg(long)]
    r_sweep: Option<String>,
    /// JSON report path
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Serialize)]
struct SweepRow {
    r_bohr: f64,
    v_trap: f64,
    n_max: u32,
}

#[derive(Serialize)]
struct CriticalNReport {
    command: &'static str,
    scenario: String,
    criterion: String,
    n_max: Option<u32>,
    bracket: Option<[u32; 2]>,
    sweep: Option<Vec<SweepRow>>,
    exploratory_note: &'static str,
}

const EXPLORATORY_NOTE: &str =
    "threshold defined by the fixed grid policy; range and frequency are scenario choices";

fn parse_sweep(spec: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(Error::InvalidInput(format!(
            "--r-sweep wants lo:hi:steps, got '{spec}'"
        )));
    }
    let lo: f64 = parts[0]
        .parse()
        .map_err(|e| Error::InvalidInput(format!("--r-sweep lo: {e}")))?;
    let hi: f64 = parts[1]
        .parse()
        .map_err(|e| Error::InvalidInput(format!("--r-sweep hi: {e}")))?;
    let steps: usize = parts[2]
        .parse()
        .map_err(|e| Error::InvalidInput(format!("--r-sweep steps: {e}")))?;
    if !lo.is_finite() || !hi.is_finite() || lo <= 0.0 || hi < lo || steps < 1 {
        return Err(Error::InvalidInput(format!(
            "--r-sweep needs 0 < lo <= hi and steps >= 1, got '{spec}'"
        )));
    }
    if steps == 1 {
        return Ok(vec![lo]);
    }
    Ok((0..steps)
        .map(|k| lo + (hi - lo) * k as f64 / (steps - 1) as f64)
        .collect())
}

fn cmd_critical_n(args: CriticalNArgs) -> Result<i32> {
    let resolved = args.system.resolve_with_fallback_n(1)?;
    let n_lo = args.n_lo.unwrap_or(match resolved.bound {
        VariationalBound::Gaussian => 1,
        VariationalBound::Harmonic => 2, // N = 1 is exactly flat
    });

    if let Some(spec) = &args.r_sweep {
        let radii = parse_sweep(spec)?;
        let base = &resolved.scenario;
        let a_angstrom = match base.interaction {
            InteractionSpec::ScatteringLength { a_angstrom, .. } => a_angstrom,
            _ => {
                return Err(Error::InvalidInput(
                    "--r-sweep needs a scattering-length interaction specification".into(),
                ))
            }
        };
        println!(
            "criterion: strict discrete slope sign change, {} points/decade, trap-scale window",
            DEFAULT_POINTS_PER_DECADE
        );
        println!("{:<10} {:<26} n_max", "R (a0)", "V (hbar*Omega)");
        let mut rows = Vec::new();
        for r_bohr in radii {
            let mut scenario = base.clone();
            scenario.interaction = InteractionSpec::ScatteringLength { a_angstrom, r_bohr };
            let res = scenario.resolve(Some(resolved.system.n()), Some(resolved.variant))?;
            let result = critical_number(
                resolved.bound,
                &res.interaction,
                res.system.omega(),
                resolved.variant,
                n_lo,
                args.n_hi,
            )?;
            let v = match res.interaction {
                Interaction::StepWell { v, .. } => v,
                _ => unreachable!(),
            };
            println!(
                "{:<10} {:<26} {}",
                r_bohr,
                format!("{:.16e}", v),
                result.n_max
            );
            rows.push(SweepRow {
                r_bohr,
                v_trap: v,
                n_max: result.n_max,
            });
        }
        println!("note: {EXPLORATORY_NOTE}");
        write_json(
            &args.json,
            &CriticalNReport {
                command: "critical-n",
                scenario: resolved.scenario.name.clone(),
                criterion: format!(
                    "strict discrete slope sign change, {} points/decade",
                    DEFAULT_POINTS_PER_DECADE
                ),
                n_max: None,
                bracket: None,
                sweep: Some(rows),
                exploratory_note: EXPLORATORY_NOTE,
            },
        )?;
        return Ok(0);
    }

    let result = critical_number(
        resolved.bound,
        &resolved.interaction,
        resolved.system.omega(),
        resolved.variant,
        n_lo,
        args.n_hi,
    )?;
    println!("criterion: {}", result.criterion);
    println!("n_max = {}", result.n_max);
    println!("bracket = ({}, {})", result.bracket.0, result.bracket.1);
    println!("note: {EXPLORATORY_NOTE}");
    write_json(
        &args.json,
        &CriticalNReport {
            command: "critical-n",
            scenario: resolved.scenario.name.clone(),
            criterion: result.criterion.clone(),
            n_max: Some(result.n_max),
            bracket: Some([result.bracket.0, result.bracket.1]),
            sweep: None,
            exploratory_note: EXPLORATORY_NOTE,
        },
    )?;
    Ok(0)
}

// ------------------------------------------------------------ calibrate ----

#[derive(Args)]
struct CalibrateArgs {
    #[command(flatten)]
    system: SystemArgs,
    /// JSON report path
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Serialize)]
struct CalibrateReport {
    command: &'static str,
    scenario: String,
    a_target_angstrom: f64,
    r_bohr: f64,
    x: f64,
    v_trap: f64,
    v_joule: f64,
    a_achieved_angstrom: f64,
    residual: f64,
    iterations: u32,
}

fn cmd_calibrate(args: CalibrateArgs) -> Result<i32> {
    let scenario = args.system.scenario()?;
    let (a_angstrom, r_bohr) = match scenario.interaction {
        InteractionSpec::ScatteringLength { a_angstrom, r_bohr } => (a_angstrom, r_bohr),
        _ => {
            return Err(Error::InvalidInput(
                "calibration needs a target scattering length: use --a-angstrom and --r-bohr \
                 or a scattering-length scenario"
                    .into(),
            ))
        }
    };
    let ctx = units::make_context(scenario.frequency_hz, scenario.mass_amu)?;
    let a = ctx.length_to_trap(a_angstrom * units::ANGSTROM_SI);
    let r = ctx.length_to_trap(r_bohr * units::BOHR_RADIUS_SI);
    let cal = scattering::calibrate_depth(a, r)?;
    let a_achieved_angstrom = ctx.length_to_si(cal.a_achieved) / units::ANGSTROM_SI;
    println!(
        "calibration: a_target = {a_angstrom} angstrom, R = {r_bohr} Bohr radii \
         ({} Hz, {} amu)",
        scenario.frequency_hz, scenario.mass_amu
    );
    println!(
        "x = k0*R = {:.16e} (branch: no two-body bound state, x < pi/2)",
        cal.x
    );
    println!(
        "V = {:.16e} hbar*Omega = {:.16e} J",
        cal.v,
        ctx.energy_to_si(cal.v)
    );
    println!(
        "achieved a = {:.16e} angstrom, residual = {:.3e}, iterations = {}",
        a_achieved_angstrom, cal.residual, cal.iterations
    );
    write_json(
        &args.json,
        &CalibrateReport {
            command: "calibrate",
            scenario: scenario.name.clone(),
            a_target_angstrom: a_angstrom,
            r_bohr,
            x: cal.x,
            v_trap: cal.v,
            v_joule: ctx.energy_to_si(cal.v),
            a_achieved_angstrom,
            residual: cal.residual,
            iterations: cal.iterations,
        },
    )?;
    Ok(0)
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Scan(args) => cmd_scan(args),
        Command::Minimize(args) => cmd_minimize(args),
        Command::CriticalN(args) => cmd_critical_n(args),
        Command::Calibrate(args) => cmd_calibrate(args),
    }
}
