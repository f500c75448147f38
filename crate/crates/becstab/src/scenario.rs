//! Named parameter sets tying laboratory inputs to trap-unit physics.
//!
//! A scenario fixes the unit context (trap frequency, particle mass) and one
//! interaction specification. Scenario files are JSON, one scenario per
//! file, with unknown keys rejected.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Interaction, PrefactorVariant, TrapSystem};
use crate::scattering::{calibrate_depth, CalibrationResult};
use crate::units::{self, UnitContext};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    pub frequency_hz: f64,
    pub mass_amu: f64,
    /// Particle count; may be omitted in the file and supplied on the
    /// command line.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub variant: PrefactorVariant,
    pub interaction: InteractionSpec,
}

/// Exactly one interaction specification style.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "style", rename_all = "kebab-case", deny_unknown_fields)]
pub enum InteractionSpec {
    /// Contact strength directly in trap units.
    Delta { b: f64 },
    /// Target s-wave scattering length (angstrom) at a well range given in
    /// Bohr radii; the depth is calibrated.
    ScatteringLength { a_angstrom: f64, r_bohr: f64 },
    /// Explicit well depth in trap quanta at a range in Bohr radii.
    StepWell { v: f64, r_bohr: f64 },
}

/// A scenario converted to trap units, ready for the physics modules.
#[derive(Debug, Clone)]
pub struct ResolvedScenario {
    pub ctx: UnitContext,
    pub system: TrapSystem,
    pub interaction: Interaction,
    /// Present when the interaction was calibrated from a scattering length.
    pub calibration: Option<CalibrationResult>,
}

/// The lithium-7 reference scenario: 7.016 amu at 145 Hz, target scattering
/// length -14.5 angstrom at a well range of 2 Bohr radii, corrected pair
/// count. (The trap frequency is a representative choice for the cited
/// experiment; the range is one pick from the "few Bohr radii" regime.)
pub const LI7_HULET: &str = "li7-hulet";

pub fn builtin(name: &str) -> Option<Scenario> {
    match name {
        LI7_HULET => Some(Scenario {
            name: LI7_HULET.to_string(),
            frequency_hz: 145.0,
            mass_amu: 7.016,
            n: None,
            variant: PrefactorVariant::CorrectedPairCount,
            interaction: InteractionSpec::ScatteringLength {
                a_angstrom: -14.5,
                r_bohr: 2.0,
            },
        }),
        _ => None,
    }
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Self> {
        let s: Scenario = serde_json::from_str(text)?;
        Ok(s)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenario serialization cannot fail")
    }

    /// Convert to trap units. `n_override` and `variant_override` replace
    /// the file values when given; `n` must come from one of the two places.
    pub fn resolve(
        &self,
        n_override: Option<u32>,
        variant_override: Option<PrefactorVariant>,
    ) -> Result<ResolvedScenario> {
        let ctx = units::make_context(self.frequency_hz, self.mass_amu)?;
        let n = n_override.or(self.n).ok_or_else(|| {
            Error::InvalidInput(format!(
                "scenario '{}' does not fix a particle count; pass one explicitly",
                self.name
            ))
        })?;
        let system = TrapSystem::new(n, 1.0)?;
        let _ = variant_override.unwrap_or(self.variant);
        let (interaction, calibration) = match self.interaction {
            InteractionSpec::Delta { b } => (Interaction::delta(b), None),
            InteractionSpec::ScatteringLength { a_angstrom, r_bohr } => {
                let a = ctx.length_to_trap(a_angstrom * units::ANGSTROM_SI);
                let r = ctx.length_to_trap(r_bohr * units::BOHR_RADIUS_SI);
                if r.is_nan() || r <= 0.0 {
                    return Err(Error::InvalidInput(format!(
                        "well range must be positive, got {r_bohr} Bohr radii"
                    )));
                }
                let cal = calibrate_depth(a, r)?;
                (Interaction::step_well(cal.v, r)?, Some(cal))
            }
            InteractionSpec::StepWell { v, r_bohr } => {
                let r = ctx.length_to_trap(r_bohr * units::BOHR_RADIUS_SI);
                (Interaction::step_well(v, r)?, None)
            }
        };
        Ok(ResolvedScenario {
            ctx,
            system,
            interaction,
            calibration,
        })
    }

    /// The effective prefactor variant after an optional override.
    pub fn variant_with(&self, variant_override: Option<PrefactorVariant>) -> PrefactorVariant {
        variant_override.unwrap_or(self.variant)
    }
}
