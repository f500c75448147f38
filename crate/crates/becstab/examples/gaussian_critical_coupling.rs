//! The Gaussian-width bound supports a trap-scale local minimum only while
//! the reduced attraction stays below a critical coupling. This example
//! prints the closed-form merge point and the resulting critical atom
//! number for a range of contact strengths.

use becstab::model::PrefactorVariant::CorrectedPairCount;
use becstab::{critical_number, critical_strength_gaussian, Interaction, VariationalBound};

fn main() -> becstab::Result<()> {
    let (s_star, c_star) = critical_strength_gaussian();
    println!("merge point of the reduced landscape e(s) = (3/4)(s^-2 + s^2) - c s^-3:");
    println!("  s* = {s_star:.10}   (width at which the minimum and the barrier coalesce)");
    println!("  c* = {c_star:.10}   (largest reduced coupling with a local minimum)");
    println!();

    println!("critical atom number for attractive contact strengths (corrected pair count):");
    println!("  {:<10} n_max", "b");
    for b in [-0.003, -0.01, -0.03, -0.1, -1.0] {
        let res = critical_number(
            VariationalBound::Gaussian,
            &Interaction::delta(b),
            1.0,
            CorrectedPairCount,
            1,
            1_000_000,
        )?;
        println!("  {b:<10} {}", res.n_max);
    }
    println!();
    println!("(n_max scales like 1/|b|: the reduced coupling is (N-1) |b| (2pi)^(-3/2))");
    Ok(())
}
