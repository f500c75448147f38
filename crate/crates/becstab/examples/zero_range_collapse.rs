//! Zero-range attraction destabilizes the trapped gas as soon as there is
//! one pair: the harmonic-model bound falls without limit as the internal
//! frequency grows. The same run shows the N = 1 artefact of the
//! uncorrected N^2 prefactor in the Gaussian-width bound, and how the
//! N(N-1) pair count removes it.

use becstab::model::PrefactorVariant::{CorrectedPairCount, PaperNSquared};
use becstab::{
    classify_stability, gaussian_bound, harmonic_bound, Interaction, Stability, TrapSystem,
};

fn main() -> becstab::Result<()> {
    let interaction = Interaction::delta(-1e-3);
    println!("zero-range attraction, b = -1e-3:");
    for n in [1u32, 2, 10, 100] {
        let system = TrapSystem::new(n, 1.0)?;
        let verdict = classify_stability(&system, &interaction)?;
        match verdict.classification {
            Stability::UnboundedBelow => {
                let w = verdict.witness.expect("collapse witness");
                println!(
                    "  N = {n:3}: unbounded below{}; E(w = {:.0e}) = {:.3e} hbar*Omega",
                    if verdict.metastable {
                        " with a metastable trap-scale minimum"
                    } else {
                        ""
                    },
                    w.w,
                    w.energy
                );
            }
            Stability::BoundedBelow => {
                let e = harmonic_bound(1.0, &system, &interaction)?.total;
                println!("  N = {n:3}: bounded below (E(w = Omega) = {e:.6} hbar*Omega)");
            }
        }
    }

    println!();
    println!("the N = 1 prefactor artefact in the Gaussian-width bound (b = -1):");
    let one = TrapSystem::new(1, 1.0)?;
    for sigma in [1.0, 0.1, 0.01, 1e-3] {
        let paper = gaussian_bound(sigma, &one, -1.0, PaperNSquared)?.total;
        let corrected = gaussian_bound(sigma, &one, -1.0, CorrectedPairCount)?.total;
        println!("  sigma = {sigma:>6}: N^2 prefactor K = {paper:>14.4e},  N(N-1) prefactor K = {corrected:>12.6e}");
    }
    println!("  (the N^2 column dives to -infinity; the corrected column is the bare oscillator)");
    Ok(())
}
