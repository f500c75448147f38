//! Conversion between laboratory (SI) inputs and trap units.
//!
//! All physics modules work in natural trap units with hbar = m = 1, where
//! lengths are measured in the oscillator length a_ho = sqrt(hbar/(m*Omega))
//! and energies in quanta of hbar*Omega. Conversions happen only at the
//! interface boundary; everything downstream is dimensionless.

use crate::error::{Error, Result};

/// Reduced Planck constant (J s), CODATA 2018.
pub const HBAR_SI: f64 = 1.054571817e-34;

/// Unified atomic mass unit (kg), CODATA 2018.
pub const ATOMIC_MASS_SI: f64 = 1.66053906660e-27;

/// Bohr radius (m), CODATA 2018.
pub const BOHR_RADIUS_SI: f64 = 0.529177210903e-10;

/// One angstrom (m).
pub const ANGSTROM_SI: f64 = 1e-10;

/// A trap-unit system fixed by the particle mass and the confinement
/// frequency. Derived scales (oscillator length, energy quantum) are
/// recomputed from the stored pair on every access so they can never drift
/// out of sync.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitContext {
    omega_si: f64,
    mass_si: f64,
}

/// Build a context from a trap frequency in Hz and a particle mass in amu.
pub fn make_context(frequency_hz: f64, mass_amu: f64) -> Result<UnitContext> {
    if !frequency_hz.is_finite() || frequency_hz <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "trap frequency must be positive and finite, got {frequency_hz} Hz"
        )));
    }
    if !mass_amu.is_finite() || mass_amu <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "particle mass must be positive and finite, got {mass_amu} amu"
        )));
    }
    UnitContext::from_si(
        2.0 * std::f64::consts::PI * frequency_hz,
        mass_amu * ATOMIC_MASS_SI,
    )
}

impl UnitContext {
    /// Build a context directly from SI values (angular frequency in rad/s,
    /// mass in kg).
    pub fn from_si(omega_si: f64, mass_si: f64) -> Result<Self> {
        if !omega_si.is_finite() || omega_si <= 0.0 {
            return Err(Error::InvalidInput(format!(
                "angular frequency must be positive and finite, got {omega_si} rad/s"
            )));
        }
        if !mass_si.is_finite() || mass_si <= 0.0 {
            return Err(Error::InvalidInput(format!(
                "mass must be positive and finite, got {mass_si} kg"
            )));
        }
        Ok(UnitContext { omega_si, mass_si })
    }

    /// Angular trap frequency (rad/s).
    pub fn omega_si(&self) -> f64 {
        self.omega_si
    }

    /// Particle mass (kg).
    pub fn mass_si(&self) -> f64 {
        self.mass_si
    }

    /// Oscillator length a_ho = sqrt(hbar/(m*Omega)) (m).
    pub fn trap_length_si(&self) -> f64 {
        (HBAR_SI / (self.mass_si * self.omega_si)).sqrt()
    }

    /// Energy quantum hbar*Omega (J).
    pub fn energy_quantum_si(&self) -> f64 {
        HBAR_SI * self.omega_si
    }

    /// SI length (m) to trap units. Sign is preserved; scattering lengths
    /// may be negative.
    pub fn length_to_trap(&self, x_si: f64) -> f64 {
        x_si / self.trap_length_si()
    }

    /// Trap-unit length back to meters.
    pub fn length_to_si(&self, x_trap: f64) -> f64 {
        x_trap * self.trap_length_si()
    }

    /// SI energy (J) to units of hbar*Omega.
    pub fn energy_to_trap(&self, e_si: f64) -> f64 {
        e_si / self.energy_quantum_si()
    }

    /// Trap-unit energy back to joules.
    pub fn energy_to_si(&self, e_trap: f64) -> f64 {
        e_trap * self.energy_quantum_si()
    }
}
