//! Domain types shared by the physics modules: the trapped system, the
//! two-body interaction, and the pair-count prefactor switch.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// N bosons in an isotropic harmonic trap of frequency `omega` (trap units;
/// normally 1 after unit conversion).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrapSystem {
    n: u32,
    omega: f64,
}

impl TrapSystem {
    pub fn new(n: u32, omega: f64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidInput("particle count must be >= 1".into()));
        }
        if !omega.is_finite() || omega <= 0.0 {
            return Err(Error::InvalidInput(format!(
                "trap frequency must be positive and finite, got {omega}"
            )));
        }
        Ok(TrapSystem { n, omega })
    }

    /// Particle count.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Trap frequency in trap units.
    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// Pair-count prefactor of the interaction term: N^2 or N(N-1)
    /// depending on the variant.
    pub fn pair_count(&self, variant: PrefactorVariant) -> f64 {
        let n = f64::from(self.n);
        match variant {
            PrefactorVariant::PaperNSquared => n * n,
            PrefactorVariant::CorrectedPairCount => n * (n - 1.0),
        }
    }
}

/// Two-body interaction. Energies and lengths are in trap units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Interaction {
    /// Zero-range (contact) interaction of strength `b` (energy x length^3);
    /// `b < 0` is attractive.
    Delta { b: f64 },
    /// Attractive spherical well of depth magnitude `v > 0` and range `r > 0`.
    StepWell { v: f64, r: f64 },
}

impl Interaction {
    pub fn delta(b: f64) -> Self {
        Interaction::Delta { b }
    }

    pub fn step_well(v: f64, r: f64) -> Result<Self> {
        if !v.is_finite() || v <= 0.0 {
            return Err(Error::InvalidInput(format!(
                "step-well depth must be positive and finite, got {v}"
            )));
        }
        if !r.is_finite() || r <= 0.0 {
            return Err(Error::InvalidInput(format!(
                "step-well range must be positive and finite, got {r}"
            )));
        }
        Ok(Interaction::StepWell { v, r })
    }

    pub(crate) fn validate(&self) -> Result<()> {
        match *self {
            Interaction::Delta { b } => {
                if !b.is_finite() {
                    return Err(Error::InvalidInput(format!(
                        "delta strength must be finite, got {b}"
                    )));
                }
            }
            Interaction::StepWell { v, r } => {
                Self::step_well(v, r)?;
            }
        }
        Ok(())
    }
}

impl std::fmt::Display for Interaction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Interaction::Delta { b } => write!(f, "delta(b={b:e})"),
            Interaction::StepWell { v, r } => write!(f, "step-well(v={v:e}, r={r:e})"),
        }
    }
}

/// Which pair-count prefactor multiplies the interaction term of the
/// width-family bound. `PaperNSquared` keeps the N^2 prefactor as printed;
/// `CorrectedPairCount` uses N(N-1), which removes the spurious N=1
/// self-interaction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PrefactorVariant {
    #[serde(rename = "paper")]
    PaperNSquared,
    #[serde(rename = "corrected")]
    CorrectedPairCount,
}

impl std::fmt::Display for PrefactorVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PrefactorVariant::PaperNSquared => write!(f, "paper"),
            PrefactorVariant::CorrectedPairCount => write!(f, "corrected"),
        }
    }
}

/// The two variational bounds implemented by this crate, named by their
/// variational parameter: the Gaussian bound is minimized over a trial width
/// sigma, the harmonic-model bound over an internal-mode frequency w.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VariationalBound {
    Gaussian,
    Harmonic,
}

impl VariationalBound {
    /// Name of the scan parameter: "sigma" for the Gaussian bound, "w" for
    /// the harmonic-model bound.
    pub fn parameter_name(&self) -> &'static str {
        match self {
            VariationalBound::Gaussian => "sigma",
            VariationalBound::Harmonic => "w",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_count_examples() {
        let one = TrapSystem::new(1, 1.0).unwrap();
        assert_eq!(one.pair_count(PrefactorVariant::CorrectedPairCount), 0.0);
        assert_eq!(one.pair_count(PrefactorVariant::PaperNSquared), 1.0);
        let five = TrapSystem::new(5, 1.0).unwrap();
        assert_eq!(five.pair_count(PrefactorVariant::CorrectedPairCount), 20.0);
        assert_eq!(five.pair_count(PrefactorVariant::PaperNSquared), 25.0);
    }

    #[test]
    fn pair_count_identity_and_monotonicity() {
        let mut prev_corr = -1.0;
        let mut prev_paper = -1.0;
        for n in 1..2000u32 {
            let sys = TrapSystem::new(n, 1.0).unwrap();
            let corr = sys.pair_count(PrefactorVariant::CorrectedPairCount);
            let paper = sys.pair_count(PrefactorVariant::PaperNSquared);
            let nf = f64::from(n);
            assert_eq!(corr, nf * nf - nf);
            assert!(corr >= prev_corr && paper >= prev_paper);
            prev_corr = corr;
            prev_paper = paper;
        }
    }

    #[test]
    fn constructors_validate() {
        assert!(TrapSystem::new(0, 1.0).is_err());
        assert!(TrapSystem::new(1, 0.0).is_err());
        assert!(Interaction::step_well(0.0, 1.0).is_err());
        assert!(Interaction::step_well(1.0, -1.0).is_err());
        assert!(Interaction::step_well(1.0, 1.0).is_ok());
    }
}
