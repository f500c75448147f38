//! How many attractive bosons can the trap hold in a metastable condensate?
//! Sweeps the well range at fixed scattering length and reports the largest
//! N that still supports a trap-scale local minimum of the harmonic-model
//! bound.

use becstab::model::PrefactorVariant::CorrectedPairCount;
use becstab::units::{ANGSTROM_SI, BOHR_RADIUS_SI};
use becstab::{
    calibrate_depth, classify_stability, critical_number, make_context, Interaction, TrapSystem,
    VariationalBound,
};

fn main() -> becstab::Result<()> {
    let ctx = make_context(145.0, 7.016)?;
    let a = ctx.length_to_trap(-14.5 * ANGSTROM_SI);

    println!("lithium-7, a = -14.5 angstrom, 145 Hz trap (corrected pair count)");
    println!("{:<8} {:<14} n_max", "R (a0)", "V (hbar*Om)");
    let mut last = None;
    for k in 1..=5 {
        let r = ctx.length_to_trap(k as f64 * BOHR_RADIUS_SI);
        let cal = calibrate_depth(a, r)?;
        let interaction = Interaction::step_well(cal.v, r)?;
        let res = critical_number(
            VariationalBound::Harmonic,
            &interaction,
            1.0,
            CorrectedPairCount,
            2,
            1_000_000,
        )?;
        println!("{:<8} {:<14.6e} {}", k, cal.v, res.n_max);
        last = Some((interaction, res));
    }

    let (interaction, res) = last.expect("at least one row");
    println!();
    println!("detection policy: {}", res.criterion);

    // Just above the threshold the trap-scale minimum is gone; the gas can
    // only sit in the cluster state.
    let above = TrapSystem::new(res.n_max + 1, 1.0)?;
    let verdict = classify_stability(&above, &interaction)?;
    println!(
        "at N = {} (R = 5 a0): bounded = {}, metastable = {}",
        res.n_max + 1,
        verdict.classification,
        verdict.metastable
    );
    Ok(())
}
