//! Acceptance suite. Every test prints one pass/fail line with the measured
//! values (run with `cargo test --test acceptance -- --nocapture` to see
//! them all).
//!
//! Two checks (criteria 6 and 7) encode literature-anchored
//! order-of-magnitude expectations for the lithium-7 scenario that the
//! implemented bound does not reproduce at these scenario parameters; they
//! are asserted as stated rather than loosened, so they fail with the
//! measured numbers in the message.

mod common;

use std::time::Instant;

use becstab::model::PrefactorVariant::{CorrectedPairCount, PaperNSquared};
use becstab::optimize::CollapseWitness;
use becstab::units::{ANGSTROM_SI, BOHR_RADIUS_SI};
use becstab::{
    barrier_report, bound_objective, calibrate_depth, classify_stability, critical_number,
    critical_strength_gaussian, effective_delta_strength, find_critical_points, gaussian_bound,
    harmonic_bound, interaction_term, make_context, minimize_local, scattering_length,
    sphere_fraction, CalibrationResult, Interaction, Stability, TrapSystem, UnitContext,
    VariationalBound,
};
use common::{report, sphere_fraction_quadrature};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn li7() -> (UnitContext, f64, f64) {
    let ctx = make_context(145.0, 7.016).unwrap();
    let a = ctx.length_to_trap(-14.5 * ANGSTROM_SI);
    let r2 = ctx.length_to_trap(2.0 * BOHR_RADIUS_SI);
    (ctx, a, r2)
}

fn li7_well_at(r_bohr: f64) -> (Interaction, f64, CalibrationResult) {
    let (ctx, a, _) = li7();
    let r = ctx.length_to_trap(r_bohr * BOHR_RADIUS_SI);
    let cal = calibrate_depth(a, r).unwrap();
    (Interaction::step_well(cal.v, r).unwrap(), r, cal)
}

#[test]
fn criterion_01_single_particle_exactness() {
    let start = Instant::now();
    let system = TrapSystem::new(1, 1.0).unwrap();
    let interactions = [
        Interaction::delta(-1.0),
        Interaction::step_well(1e9, 1e-4).unwrap(),
    ];
    let mut max_dev: f64 = 0.0;
    let n_points = 10_000;
    for k in 0..n_points {
        let w = 1e-6 * 10f64.powf(18.0 * k as f64 / (n_points - 1) as f64);
        for inter in &interactions {
            let e = harmonic_bound(w, &system, inter).unwrap().total;
            max_dev = max_dev.max((e - 1.5).abs());
        }
    }
    let elapsed = start.elapsed();
    let pass = max_dev <= 1e-9 && elapsed.as_secs_f64() < 1.0;
    report(
        1,
        "N=1 exactness",
        pass,
        &format!(
            "max |E - 1.5| = {max_dev:.3e} over {n_points} w in [1e-6, 1e12] x 2 interactions, {:.3}s",
            elapsed.as_secs_f64()
        ),
    );
    assert!(pass, "max deviation {max_dev:e}, elapsed {elapsed:?}");
}

#[test]
fn criterion_02_gaussian_critical_coupling() {
    let start = Instant::now();
    let (s_star, c_star) = critical_strength_gaussian();
    let s_ok = (s_star - 0.66874030).abs() <= 1e-6;
    let c_ok = (c_star - 0.26749612).abs() <= 1e-6;

    // Independent oracle: dense log-grid scan of the reduced landscape
    // e(s) = (3/4)(s^-2 + s^2) - c s^-3 for a strict interior minimum.
    let has_min = |c: f64| -> bool {
        let (lo, hi, ppd) = (0.3f64, 1.3f64, 4000.0);
        let n = ((hi / lo).log10() * ppd).round() as usize + 1;
        let e: Vec<f64> = (0..n)
            .map(|k| lo * (hi / lo).powf(k as f64 / (n - 1) as f64))
            .map(|s| 0.75 * (1.0 / (s * s) + s * s) - c / (s * s * s))
            .collect();
        (1..n - 1).any(|i| e[i] < e[i - 1] && e[i] < e[i + 1])
    };
    let below = has_min(c_star * (1.0 - 1e-4));
    let above = has_min(c_star * (1.0 + 1e-4));
    let elapsed = start.elapsed();
    let pass = s_ok && c_ok && below && !above && elapsed.as_secs_f64() < 5.0;
    report(
        2,
        "Gaussian critical coupling",
        pass,
        &format!(
            "s* = {s_star:.8}, c* = {c_star:.8}; minimum exists at c*(1-1e-4): {below}, at c*(1+1e-4): {above}; {:.3}s",
            elapsed.as_secs_f64()
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_03_collapse_classification() {
    let (li7_inter, _, _) = li7_well_at(2.0);
    let mut pass = true;
    let mut worst_witness = f64::INFINITY;
    for &n in &[2u32, 10, 100] {
        let system = TrapSystem::new(n, 1.0).unwrap();
        for &b in &[-1e-3, -0.1, -10.0] {
            let verdict = classify_stability(&system, &Interaction::delta(b)).unwrap();
            let CollapseWitness { w, energy } = verdict.witness.expect("witness expected");
            let ok =
                verdict.classification == Stability::UnboundedBelow && w == 1e12 && energy < -1e6;
            worst_witness = worst_witness.min(-energy);
            pass &= ok;
        }
        for inter in [li7_inter, Interaction::step_well(10.0, 0.5).unwrap()] {
            let verdict = classify_stability(&system, &inter).unwrap();
            pass &= verdict.classification == Stability::BoundedBelow;
        }
    }
    report(
        3,
        "collapse classification",
        pass,
        &format!(
            "delta b<0 unbounded with witness at w=1e12 (|E| >= {worst_witness:.3e} > 1e6); step wells bounded, N in {{2,10,100}}"
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_04_single_particle_artefact() {
    let system = TrapSystem::new(1, 1.0).unwrap();
    let probe = gaussian_bound(1e-4, &system, -1.0, PaperNSquared)
        .unwrap()
        .total;
    let artefact_ok = probe < -1e6;

    let objective = |s: f64| {
        gaussian_bound(s, &system, -1.0, CorrectedPairCount)
            .unwrap()
            .total
    };
    let (s_min, e_min) = minimize_local(objective, (0.1, 10.0)).unwrap();
    let corrected_ok = (s_min - 1.0).abs() <= 1e-7 && (e_min - 1.5).abs() <= 1e-12;
    let pass = artefact_ok && corrected_ok;
    report(
        4,
        "N=1 artefact",
        pass,
        &format!(
            "paper-variant K(1e-4) = {probe:.3e} < -1e6; corrected minimum {e_min:.12} at sigma = {s_min:.9}"
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_05_li7_calibration_order() {
    let (ctx, a, _) = li7();
    let mut pass = true;
    let mut detail = String::new();
    for k in 1..=5 {
        let r = ctx.length_to_trap(k as f64 * BOHR_RADIUS_SI);
        let cal = calibrate_depth(a, r).unwrap();
        let back = scattering_length(cal.v, r).unwrap();
        let round_trip = ((back - a) / a).abs();
        let ok = cal.v >= 1e7 && cal.v <= 1e10 && round_trip <= 1e-8 && cal.residual <= 1e-10;
        pass &= ok;
        detail.push_str(&format!("R={k}a0: V={:.3e} rt={:.1e}; ", cal.v, round_trip));
    }
    report(5, "li7 calibration order", pass, detail.trim_end());
    assert!(pass);
}

#[test]
fn criterion_06_metastability_structure() {
    let start = Instant::now();
    let (inter, _, cal) = li7_well_at(2.0);
    let system = TrapSystem::new(1000, 1.0).unwrap();
    let rep = barrier_report(&system, &inter, CorrectedPairCount).unwrap();
    let elapsed = start.elapsed();

    let global = rep.global_min.expect("global minimum expected");
    let local_ok = rep.local_min.location >= 1e-1 && rep.local_min.location <= 1e1;
    let global_ok = global.location >= 1e7 && global.location <= 1e10;
    let ratio_ok = rep.depth_ratio >= 1e-2 && rep.depth_ratio <= 1e2;
    let time_ok = elapsed.as_secs_f64() < 30.0;
    let pass = local_ok && global_ok && ratio_ok && time_ok;
    report(
        6,
        "li7 metastability structure",
        pass,
        &format!(
            "V = {:.4e}; local min w = {:.4e} in [1e-1,1e1]: {local_ok}; global min w = {:.4e} in [1e7,1e10]: {global_ok}; \
             barrier/|V| = {:.4e} in [1e-2,1e2]: {ratio_ok}; {:.2}s",
            cal.v,
            rep.local_min.location,
            global.location,
            rep.depth_ratio,
            elapsed.as_secs_f64()
        ),
    );
    assert!(
        pass,
        "local w = {:.6e} (ok: {local_ok}), global w = {:.6e} (ok: {global_ok}), \
         barrier height = {:.6e}, depth ratio = {:.6e} (ok: {ratio_ok})",
        rep.local_min.location, global.location, rep.barrier_height, rep.depth_ratio
    );
}

#[test]
fn criterion_07_critical_number() {
    let (ctx, a, _) = li7();
    let target = 2875.0;
    let mut rows = Vec::new();
    for k in 1..=5 {
        let r = ctx.length_to_trap(k as f64 * BOHR_RADIUS_SI);
        let cal = calibrate_depth(a, r).unwrap();
        let inter = Interaction::step_well(cal.v, r).unwrap();
        let res = critical_number(
            VariationalBound::Harmonic,
            &inter,
            1.0,
            CorrectedPairCount,
            2,
            1_000_000,
        )
        .unwrap();
        rows.push((k, res.n_max));
    }
    let monotone = rows.windows(2).all(|p| p[1].1 < p[0].1);
    let factor = |n: u32| {
        let nf = n as f64;
        (nf / target).max(target / nf)
    };
    let best = rows
        .iter()
        .map(|&(_, n)| factor(n))
        .fold(f64::INFINITY, f64::min);
    let within_factor_3 = best <= 3.0;
    let five_pct: Vec<u32> = rows
        .iter()
        .filter(|&&(_, n)| (n as f64 - target).abs() / target <= 0.05)
        .map(|&(k, _)| k)
        .collect();
    let table: Vec<String> = rows
        .iter()
        .map(|(k, n)| format!("R={k}a0: n_max={n}"))
        .collect();
    let pass = within_factor_3 && monotone;
    report(
        7,
        "li7 critical number (exploratory)",
        pass,
        &format!(
            "{}; best factor vs 2875 = {best:.2} (<= 3: {within_factor_3}); R reproducing 2875 within 5%: {}; table monotone in R: {monotone}",
            table.join(", "),
            if five_pct.is_empty() { "none in [1,5]a0".to_string() } else { format!("{five_pct:?} a0") },
        ),
    );
    assert!(
        pass,
        "n_max table {table:?}, best factor vs 2875 = {best:.3} (required <= 3)"
    );
}

#[test]
fn criterion_08_delta_limit_consistency() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0bec_57ab);
    let mut max_rel: f64 = 0.0;
    for _ in 0..100 {
        let n: u32 = rng.gen_range(2..=1000);
        let system = TrapSystem::new(n, 1.0).unwrap();
        let v = 10f64.powf(rng.gen_range(-3.0..9.0));
        let r = 10f64.powf(rng.gen_range(-5.0..-1.0));
        let x = 10f64.powf(rng.gen_range(-6.0..-2.0));
        let w = 2.0 * (x / r) * (x / r);
        let well = Interaction::step_well(v, r).unwrap();
        let direct = interaction_term(w, &system, &well).unwrap();
        let eff = interaction_term(
            w,
            &system,
            &Interaction::delta(effective_delta_strength(v, r)),
        )
        .unwrap();
        max_rel = max_rel.max(((direct - eff) / eff).abs());
    }
    let pass = max_rel <= 5e-3;
    report(
        8,
        "delta-limit consistency",
        pass,
        &format!(
            "max relative deviation {max_rel:.3e} over 100 samples with x <= 1e-2 (allowed 5e-3)"
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_09_oracle_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    let (w_lo, w_hi) = (1e-3f64, 1e7f64);
    let dense_n = 100_001usize;
    let cell = (w_hi / w_lo).log10() / (dense_n - 1) as f64;
    let mut pass = true;
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let n: u32 = rng.gen_range(2..=50);
        let v = 10f64.powf(rng.gen_range(-1.0..2.0));
        let r = 10f64.powf(rng.gen_range(-1.3..0.3));
        let system = TrapSystem::new(n, 1.0).unwrap();
        let inter = Interaction::step_well(v, r).unwrap();
        let objective = bound_objective(
            VariationalBound::Harmonic,
            system,
            inter,
            CorrectedPairCount,
        )
        .unwrap();

        let points = find_critical_points(&objective, w_lo, w_hi, 200).unwrap();
        let best = points
            .iter()
            .filter(|p| p.kind.is_minimum())
            .min_by(|a, b| a.energy.total_cmp(&b.energy))
            .expect("bounded landscape must have a minimum");

        let dense_argmin = (0..dense_n)
            .map(|k| w_lo * (w_hi / w_lo).powf(k as f64 / (dense_n - 1) as f64))
            .map(|w| (w, objective(w)))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap()
            .0;
        let dev = (best.location.log10() - dense_argmin.log10()).abs();
        worst = worst.max(dev / cell);
        pass &= dev <= cell;
    }
    report(
        9,
        "oracle equivalence",
        pass,
        &format!("worst |argmin offset| = {worst:.2} dense-grid cells over 20 random bounded systems (allowed 1)"),
    );
    assert!(pass);
}

#[test]
fn criterion_10_special_function_accuracy() {
    let mut max_rel: f64 = 0.0;
    for k in 0..50 {
        let x = 1e-4 * 10f64.powf(6.0 * k as f64 / 49.0);
        let oracle = sphere_fraction_quadrature(x);
        let got = sphere_fraction(x * std::f64::consts::SQRT_2, 1.0).unwrap();
        max_rel = max_rel.max(((got - oracle) / oracle).abs());
    }
    let pass = max_rel <= 1e-8;
    report(
        10,
        "special-function accuracy",
        pass,
        &format!("max relative error vs adaptive quadrature {max_rel:.3e} over 50 x in [1e-4, 1e2] (allowed 1e-8)"),
    );
    assert!(pass);
}
