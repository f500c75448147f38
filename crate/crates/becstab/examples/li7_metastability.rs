//! The finite-range landscape for 1000 lithium-7 atoms: a metastable
//! trap-scale condensate minimum, a barrier, and a much deeper cluster
//! minimum at high internal frequency. Writes the sampled landscape to
//! li7_landscape.csv and li7_landscape.svg in the working directory.

use becstab::model::PrefactorVariant::CorrectedPairCount;
use becstab::{
    barrier_report, bound_objective, builtin, export_csv, find_critical_points, render_svg, scan,
    VariationalBound,
};

fn main() -> becstab::Result<()> {
    let scenario = builtin("li7-hulet").expect("built-in scenario");
    let resolved = scenario.resolve(Some(1000), None)?;
    let cal = resolved.calibration.as_ref().expect("calibrated well");
    println!(
        "scenario {}: N = 1000, calibrated V = {:.4e} hbar*Omega at x = {:.6}",
        scenario.name, cal.v, cal.x
    );

    let report = barrier_report(&resolved.system, &resolved.interaction, CorrectedPairCount)?;
    let global = report.global_min.expect("cluster minimum");
    println!();
    println!("critical structure (w in units of Omega, E in hbar*Omega):");
    println!(
        "  condensate minimum   w = {:<12.6e} E = {:+.6e}",
        report.local_min.location, report.local_min.energy
    );
    println!(
        "  barrier top          w = {:<12.6e} E = {:+.6e}",
        report.barrier_top.location, report.barrier_top.energy
    );
    println!(
        "  cluster minimum      w = {:<12.6e} E = {:+.6e}",
        global.location, global.energy
    );
    println!(
        "  barrier height = {:.6e} hbar*Omega ({:.3e} of the well depth)",
        report.barrier_height, report.depth_ratio
    );

    let landscape = scan(
        VariationalBound::Harmonic,
        &resolved.system,
        &resolved.interaction,
        CorrectedPairCount,
        1e-3,
        1e12,
        200,
    )?;
    let objective = bound_objective(
        VariationalBound::Harmonic,
        resolved.system,
        resolved.interaction,
        CorrectedPairCount,
    )?;
    let points = find_critical_points(objective, 1e-3, 1e12, 200)?;

    let mut csv = std::fs::File::create("li7_landscape.csv")?;
    export_csv(&landscape, &mut csv)?;
    let mut svg = std::fs::File::create("li7_landscape.svg")?;
    render_svg(&landscape, &points, &mut svg)?;
    println!();
    println!(
        "wrote li7_landscape.csv and li7_landscape.svg ({} grid points)",
        landscape.grid.len()
    );
    Ok(())
}
