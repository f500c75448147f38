//! A single trapped particle is the exact oscillator ground state: the
//! harmonic-model bound evaluates to (3/2) hbar*Omega for every value of
//! the variational frequency, across eighteen decades and for either
//! interaction type.

use becstab::{harmonic_bound, Interaction, TrapSystem};

fn main() -> becstab::Result<()> {
    let system = TrapSystem::new(1, 1.0)?;
    let interactions = [
        ("zero-range, b = -1", Interaction::delta(-1.0)),
        (
            "step well, v = 1e9, r = 1e-4",
            Interaction::step_well(1e9, 1e-4)?,
        ),
    ];

    for (label, interaction) in &interactions {
        let mut max_dev: f64 = 0.0;
        for k in 0..=1800 {
            let w = 1e-6 * 10f64.powf(k as f64 * 0.01);
            let e = harmonic_bound(w, &system, interaction)?;
            max_dev = max_dev.max((e.total - 1.5).abs());
        }
        println!("{label}: max |E - 3/2| = {max_dev:.3e} hbar*Omega over w in [1e-6, 1e12]");
    }

    println!();
    println!("sample breakdown at w = 10 (still 3/2 in total):");
    let e = harmonic_bound(10.0, &system, &Interaction::delta(-1.0))?;
    println!("  kinetic+trap   = {:+.6} hbar*Omega", e.kinetic_trap);
    println!("  com correction = {:+.6} hbar*Omega", e.com_correction);
    println!("  interaction    = {:+.6} hbar*Omega", e.interaction);
    println!("  total          = {:+.6} hbar*Omega", e.total);
    Ok(())
}
