//! End-to-end tests of the `opbound` binary: exit-code contract,
//! deterministic reports and output schemas.

use std::path::Path;
use std::process::{Command, Output};

fn opbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_opbound"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn json_report(dir: &Path) -> serde_json::Value {
    let text = std::fs::read_to_string(dir.join("report.json")).expect("report written");
    serde_json::from_str(&text).expect("valid JSON")
}

#[test]
fn spectrum_bernstein3_eigenvalues_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = opbound(&[
        "spectrum",
        "--operator",
        "bernstein:n=3",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);

    let rep = json_report(dir.path());
    let eig = rep["spectrum"]["eigenvalues"].as_array().unwrap();
    let expect = [1.0, 1.0, 2.0 / 3.0, 2.0 / 9.0];
    assert_eq!(eig.len(), 4);
    for (row, e) in eig.iter().zip(expect) {
        assert!((row["real"].as_f64().unwrap() - e).abs() < 1e-9);
        assert!(row["imag"].as_f64().unwrap().abs() < 1e-9);
    }
    assert!((rep["spectrum"]["gamma"].as_f64().unwrap() - 2.0 / 3.0).abs() < 1e-9);
    assert_eq!(rep["spectrum"]["unit_multiplicity"], 2);
    assert_eq!(rep["spectrum"]["spectral_location_ok"], true);

    let csv = std::fs::read_to_string(dir.path().join("spectrum.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), "index,real,imag,modulus");
    assert_eq!(lines.count(), 4);
}

#[test]
fn spectrum_schoenberg_pattern_report() {
    let out = opbound(&["spectrum", "--operator", "schoenberg:k=2,knots=uniform:4"]);
    assert_eq!(exit_code(&out), 0);
    let rep: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rep["eigen_pattern"]["holds"], true);
    assert_eq!(rep["eigen_pattern"]["two_unit_eigenvalues"], true);
}

#[test]
fn unknown_operator_is_usage_error_without_output() {
    let dir = tempfile::tempdir().unwrap();
    let out = opbound(&[
        "spectrum",
        "--operator",
        "fourier:n=3",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(!dir.path().join("report.json").exists());
    assert!(!dir.path().join("spectrum.csv").exists());
}

#[test]
fn verify_bernstein_corollary_holds() {
    let dir = tempfile::tempdir().unwrap();
    let out = opbound(&[
        "verify",
        "--ineq",
        "bernstein-cor",
        "--n",
        "4,8",
        "--corpus",
        "rough",
        "--grid",
        "1025",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let rep = json_report(dir.path());
    assert_eq!(rep["summary"]["violations"], 0);
    assert_eq!(rep["certificates"].as_array().unwrap().len(), 6);
}

#[test]
fn verify_seminorm_lemma_schoenberg_certificates() {
    let out = opbound(&[
        "verify",
        "--ineq",
        "seminorm-lemma",
        "--operator",
        "schoenberg:k=3,knots=uniform:8",
        "--r",
        "2",
        "--range-norm",
        "numeric",
        "--corpus",
        "polynomials",
        "--grid",
        "1025",
    ]);
    assert_eq!(exit_code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let rep: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let certs = rep["certificates"].as_array().unwrap();
    assert_eq!(certs.len(), 7);
    for c in certs {
        // Schema fields of the certificate contract.
        for key in [
            "inequality_id",
            "operator",
            "function",
            "r",
            "p",
            "t_or_delta",
            "lhs",
            "rhs",
            "margin",
            "holds",
            "intermediates",
        ] {
            assert!(c.get(key).is_some(), "missing {key}");
        }
        for key in ["omega", "seminorm_Tf", "err_norm", "gamma", "N", "N_provenance"] {
            assert!(c["intermediates"].get(key).is_some(), "missing {key}");
        }
        assert_eq!(c["holds"], true);
    }
}

#[test]
fn verify_empty_corpus_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.txt");
    std::fs::write(&empty, "").unwrap();
    let out = opbound(&[
        "verify",
        "--ineq",
        "bernstein-cor",
        "--n",
        "4",
        "--corpus",
        &format!("custom:{}", empty.display()),
    ]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn verify_reports_are_deterministic() {
    let run = || -> String {
        let dir = tempfile::tempdir().unwrap();
        let out = opbound(&[
            "verify",
            "--ineq",
            "kantorovich-cor",
            "--n",
            "4,6",
            "--corpus",
            "rough",
            "--grid",
            "513",
            "--out",
            dir.path().to_str().unwrap(),
        ]);
        assert_eq!(exit_code(&out), 0);
        std::fs::read_to_string(dir.path().join("report.json")).unwrap()
    };
    let first = run();
    let second = run();
    // Byte-identical apart from the --out path echoed in the config line.
    let strip = |s: &str| -> String {
        s.lines()
            .filter(|l| !l.trim_start().starts_with("\"config\""))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&first), strip(&second));
}

#[test]
fn tpcheck_oscillatory_and_matrix_file() {
    let out = opbound(&[
        "tpcheck",
        "--operator",
        "integral-schoenberg:k=2,knots=uniform:4",
    ]);
    assert_eq!(exit_code(&out), 0);
    let rep: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rep["tp"]["oscillatory"], true);
    assert_eq!(rep["tp"]["eigenvalues_distinct_positive_real"], true);

    // Random knots with a floored min gauge stay oscillatory.
    let out = opbound(&[
        "tpcheck",
        "--operator",
        "integral-schoenberg:k=2,knots=random:4:7:0.05",
    ]);
    assert_eq!(exit_code(&out), 0);
    let rep: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rep["tp"]["oscillatory"], true);

    // Hand-made non-TP matrix from a file: reported, not an error.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.txt");
    std::fs::write(&path, "0 1\n1 0\n").unwrap();
    let out = opbound(&["tpcheck", "--matrix-file", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let rep: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rep["tp"]["oscillatory"], false);
}

#[test]
fn iterates_fitted_rate_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let out = opbound(&[
        "iterates",
        "--operator",
        "bernstein:n=5",
        "--m-max",
        "60",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let rep = json_report(dir.path());
    let rate = rep["decay"]["fitted_rate"].as_f64().unwrap();
    assert!((rate - 0.8).abs() <= 0.05 * 0.8, "rate {rate}");

    let csv = std::fs::read_to_string(dir.path().join("decay.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), "m,rho_m,gamma_pow_m,gamma_pow_m_minus_1");
    assert_eq!(lines.count(), 60);

    let out = opbound(&["iterates", "--operator", "bernstein:n=5", "--m-max", "1"]);
    assert_eq!(exit_code(&out), 2);
}
