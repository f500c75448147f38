//! Variational stability analysis of a harmonically trapped Bose gas with
//! attractive interactions.
//!
//! The crate evaluates two variational upper bounds on the N-boson ground
//! state energy — a Gaussian-width bound and a harmonic-model
//! (Jensen-Feynman) bound — for zero-range and finite-range attractive
//! step-well interactions, in trap units. On top of the bounds it provides:
//!
//! * landscape scans over the variational parameter with critical-point
//!   detection ([`landscape`], [`optimize`]);
//! * a stability classifier separating collapsing (unbounded-below) from
//!   bounded landscapes, with metastability flags and barrier reports;
//! * the critical particle number below which a trap-scale local minimum
//!   survives ([`optimize::critical_number`]);
//! * square-well depth calibration against an s-wave scattering length
//!   ([`scattering`]);
//! * SI/trap unit conversion ([`units`]) and named scenarios
//!   ([`scenario`]), including the lithium-7 reference case;
//! * deterministic CSV and SVG export ([`landscape`]).
//!
//! Start with the runnable examples (`cargo run --example ...`) or the
//! `becstab` command-line binary.

pub mod cli;
pub mod energy;
pub mod error;
pub mod landscape;
pub mod model;
pub mod optimize;
pub mod scattering;
pub mod scenario;
pub mod units;

pub use energy::{
    bound_objective, effective_delta_strength, gaussian_bound, harmonic_bound, interaction_term,
    pair_correlation, sphere_fraction, EnergyBreakdown,
};
pub use error::{Error, Result};
pub use landscape::{barrier_report, export_csv, render_svg, scan, BarrierReport, EnergyLandscape};
pub use model::{Interaction, PrefactorVariant, TrapSystem, VariationalBound};
pub use optimize::{
    classify_stability, critical_number, critical_strength_gaussian, find_critical_points,
    minimize_local, CriticalNumberResult, CriticalPoint, CriticalPointKind, Stability,
    StabilityVerdict,
};
pub use scattering::{calibrate_depth, scattering_length, CalibrationResult};
pub use scenario::{builtin, InteractionSpec, ResolvedScenario, Scenario};
pub use units::{make_context, UnitContext};
