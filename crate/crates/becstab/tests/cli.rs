//! End-to-end checks of the command-line interface: exit codes, file
//! outputs, determinism, and scenario-file/flag equivalence.

use std::path::Path;
use std::process::{Command, Output};

fn becstab(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_becstab"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn scan_li7_writes_csv_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let out = becstab(
        &[
            "scan",
            "--scenario",
            "li7-hulet",
            "--n",
            "1000",
            "--out",
            "out.csv",
            "--svg",
            "out.svg",
        ],
        dir.path(),
    );
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let csv = std::fs::read_to_string(dir.path().join("out.csv")).unwrap();
    assert!(csv.starts_with("param,total,kinetic_trap,com_correction,interaction\n"));
    assert_eq!(csv.lines().count(), 3002); // 15 decades x 200 + 1, plus header
    let svg = std::fs::read_to_string(dir.path().join("out.svg")).unwrap();
    assert!(svg.starts_with("<svg"));
    let text = stdout(&out);
    assert!(text.contains("local-min"));
    assert!(text.contains("global-min"));
}

#[test]
fn scan_flat_single_particle() {
    let dir = tempfile::tempdir().unwrap();
    let out = becstab(
        &[
            "scan",
            "--n",
            "1",
            "--interaction",
            "delta",
            "--b",
            "-1",
            "--wmin",
            "1e-3",
            "--wmax",
            "1e3",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("critical points: none"));
    assert!(text.contains("energy range: [1.5000000000000000e0, 1.5000000000000000e0]"));
}

#[test]
fn scan_rejects_invalid_counts() {
    let dir = tempfile::tempdir().unwrap();
    let out = becstab(
        &["scan", "--n", "0", "--interaction", "delta", "--b", "-1"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
    let out = becstab(&["scan", "--interaction", "delta"], dir.path());
    assert_eq!(out.status.code(), Some(2)); // missing --b
    let out = becstab(&["scan", "--n", "2"], dir.path());
    assert_eq!(out.status.code(), Some(2)); // no interaction at all
}

#[test]
fn minimize_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    // Attractive zero range with a pair: collapse, exit 4.
    let out = becstab(
        &[
            "minimize",
            "--n",
            "2",
            "--interaction",
            "delta",
            "--b",
            "-1",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(4));
    assert!(stdout(&out).contains("unbounded-below"));
    // Single particle: flat 1.5.
    let out = becstab(
        &[
            "minimize",
            "--n",
            "1",
            "--interaction",
            "delta",
            "--b",
            "-1",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("1.5000000000000000e0"));
    // li7 at N=1000: local and global minima both reported.
    let out = becstab(
        &["minimize", "--scenario", "li7-hulet", "--n", "1000"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("local-min"));
    assert!(text.contains("global-min"));
    assert!(text.contains("barrier"));
}

#[test]
fn critical_n_gaussian_mode() {
    let dir = tempfile::tempdir().unwrap();
    let out = becstab(
        &[
            "critical-n",
            "--interaction",
            "delta",
            "--b",
            "-0.01",
            "--bound",
            "gaussian",
        ],
        dir.path(),
    );
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    assert!(text.contains("n_max = 422"));
    assert!(text.contains("bracket = (422, 423)"));
}

#[test]
fn critical_n_r_sweep_is_monotone() {
    let dir = tempfile::tempdir().unwrap();
    let out = becstab(
        &[
            "critical-n",
            "--scenario",
            "li7-hulet",
            "--r-sweep",
            "1:5:5",
        ],
        dir.path(),
    );
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    let n_values: Vec<u64> = text
        .lines()
        .filter(|l| l.starts_with(char::is_numeric))
        .map(|l| l.split_whitespace().last().unwrap().parse().unwrap())
        .collect();
    assert_eq!(n_values.len(), 5);
    assert!(
        n_values.windows(2).all(|p| p[1] < p[0]),
        "table not monotone: {n_values:?}"
    );
}

#[test]
fn calibrate_li7_and_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = becstab(
        &["calibrate", "--scenario", "li7-hulet", "--json", "cal.json"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("cal.json")).unwrap())
            .unwrap();
    let v = json["v_trap"].as_f64().unwrap();
    assert!((1e8..=1e10).contains(&v));
    let a_achieved = json["a_achieved_angstrom"].as_f64().unwrap();
    assert!(((a_achieved - (-14.5)) / 14.5).abs() <= 1e-8);
    assert!(json["residual"].as_f64().unwrap() <= 1e-10);

    // Positive target: unreachable branch, exit 2.
    let out = becstab(
        &[
            "calibrate",
            "--interaction",
            "step",
            "--a-angstrom",
            "+5",
            "--r-bohr",
            "2",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unreachable"));
}

#[test]
fn outputs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "scan",
        "--scenario",
        "li7-hulet",
        "--n",
        "500",
        "--wmin",
        "1e-2",
        "--wmax",
        "1e10",
        "--points-per-decade",
        "50",
        "--out",
        "a.csv",
        "--json",
        "a.json",
    ];
    let first = becstab(&args, dir.path());
    let csv_a = std::fs::read(dir.path().join("a.csv")).unwrap();
    let json_a = std::fs::read(dir.path().join("a.json")).unwrap();
    let second = becstab(&args, dir.path());
    let csv_b = std::fs::read(dir.path().join("a.csv")).unwrap();
    let json_b = std::fs::read(dir.path().join("a.json")).unwrap();
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(csv_a, csv_b);
    assert_eq!(json_a, json_b);
}

#[test]
fn scenario_file_matches_flags() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = r#"{
  "name": "li7-file",
  "frequency_hz": 145.0,
  "mass_amu": 7.016,
  "n": 800,
  "variant": "corrected",
  "interaction": {"style": "scattering-length", "a_angstrom": -14.5, "r_bohr": 2.0}
}"#;
    std::fs::write(dir.path().join("scenario.json"), scenario).unwrap();
    let from_file = becstab(
        &["scan", "--scenario", "scenario.json", "--out", "file.csv"],
        dir.path(),
    );
    assert_eq!(from_file.status.code(), Some(0));
    let from_flags = becstab(
        &[
            "scan",
            "--interaction",
            "step",
            "--a-angstrom",
            "-14.5",
            "--r-bohr",
            "2",
            "--omega-hz",
            "145",
            "--mass-amu",
            "7.016",
            "--n",
            "800",
            "--out",
            "flags.csv",
        ],
        dir.path(),
    );
    assert_eq!(from_flags.status.code(), Some(0));
    let a = std::fs::read(dir.path().join("file.csv")).unwrap();
    let b = std::fs::read(dir.path().join("flags.csv")).unwrap();
    assert_eq!(a, b);
}

#[test]
fn scenario_with_unknown_keys_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = r#"{
  "name": "bad",
  "frequency_hz": 145.0,
  "mass_amu": 7.016,
  "n": 10,
  "variant": "corrected",
  "interaction": {"style": "delta", "b": -1.0},
  "typo_field": true
}"#;
    std::fs::write(dir.path().join("bad.json"), scenario).unwrap();
    let out = becstab(&["scan", "--scenario", "bad.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn paper_variant_flag_changes_prefactor() {
    let dir = tempfile::tempdir().unwrap();
    // N=1 with the uncorrected prefactor: the Gaussian bound collapses.
    let out = becstab(
        &[
            "minimize",
            "--n",
            "1",
            "--interaction",
            "delta",
            "--b",
            "-1",
            "--variant",
            "paper",
            "--bound",
            "gaussian",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(4));
    // Corrected: a single particle is the exact oscillator ground state.
    let out = becstab(
        &[
            "minimize",
            "--n",
            "1",
            "--interaction",
            "delta",
            "--b",
            "-1",
            "--variant",
            "corrected",
            "--bound",
            "gaussian",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("1.5000000000000000e0"));
}
