use harmonic_codes::gf2::{catalog, d_code, render_generator_matrix, LENGTH24_FIXTURES};
use harmonic_codes_cli::schema::*;
use serde::de::DeserializeOwned;
use serde::Serialize;
use std::process::{Command, Output};

fn harmcodes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_harmcodes"))
        .args(args)
        .env_remove("HARMCODES_FIXTURES")
        .output()
        .expect("spawn harmcodes")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

/// Runs with `--format json`, parses into T and checks T serializes back to the same value.
fn json<T: DeserializeOwned + Serialize>(args: &[&str]) -> (T, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = harmcodes(&all);
    let value: serde_json::Value = serde_json::from_slice(&o.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: {e}\n{}\n{}", stdout(&o), String::from_utf8_lossy(&o.stderr)));
    let parsed: T = serde_json::from_value(value.clone()).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    assert_eq!(serde_json::to_value(&parsed).unwrap(), value, "{args:?}");
    (parsed, code(&o))
}

#[test]
fn code_info_e8() {
    let o = harmcodes(&["code", "info", "--catalog", "e8"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "n=8 k=4 type=II minwt=4\nW = x^8 + 14x^4y^4 + y^8\n");
    let (info, status): (CodeInfo, _) = json(&["code", "info", "--catalog", "e8"]);
    assert_eq!(status, 0);
    assert_eq!(info.summary.distribution.counts, vec![1, 0, 0, 0, 14, 0, 0, 0, 1]);
    assert_eq!(info.summary.min_weight, Some(4));
}

#[test]
fn design_check_g24() {
    let o = harmcodes(&["design", "check", "--catalog", "g24", "--weight", "12", "--t", "5"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("lambda=48"), "{}", stdout(&o));
    let (d, _): (DesignCheckOut, _) = json(&["design", "check", "--catalog", "g24", "--weight", "12", "--t", "5"]);
    assert_eq!((d.lambda, d.blocks, d.harmonic, d.agree), (Some(48), 2576, true, true));
    let (d, status): (DesignCheckOut, _) = json(&["design", "check", "--catalog", "g24", "--weight", "8", "--t", "6"]);
    assert_eq!((d.lambda, d.harmonic, d.agree, status), (None, false, true, 1));
}

#[test]
fn config_verify_48_and_72() {
    let o = harmcodes(&["config", "verify", "--n", "48"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("numerator: 11s^3 - 396s^2 + 4906s - 20736"));
    assert!(out.contains("no integer roots"));
    let (v, status): (ConfigVerifyOut, _) = json(&["config", "verify", "--n", "72"]);
    assert_eq!(status, 0);
    assert_eq!(v.numerator, "39s^4 - 2600s^3 + 67410s^2 - 800440s + 3650496");
    assert_eq!(v.a_delta, "249849");
    assert_eq!(v.checks.iter().map(|c| c.s).collect::<Vec<_>>(), (20..=56).step_by(4).collect::<Vec<_>>());
    assert!(v.checks.iter().all(|c| c.matches) && v.integer_roots.is_empty());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["code", "info", "--catalog", "nope"][..],
        &["code", "info"],
        &["code", "info", "--catalog", "e8", "--file", "x.txt"],
        &["frobnicate"],
        &["config", "verify", "--n", "56"],
        &["config", "verify", "--n", "48", "--s", "40"],
        &["theta", "--catalog", "e7", "--decompose"],
        &["hwe", "zonal", "--catalog", "e8", "--cbar", "1111", "--degree", "2"],
        &["code", "info", "--file", "/nonexistent/code.txt"],
    ] {
        assert_eq!(code(&harmcodes(args)), 2, "{args:?}");
    }
}

#[test]
fn falsified_claims_exit_1() {
    let (g, status): (GeneratedOut, _) = json(&["config", "generated", "--catalog", "sd24-e8+d16"]);
    assert_eq!((g.code_dimension - g.span_dimension, status), (1, 1));
    assert_eq!(code(&harmcodes(&["gleason", "decompose", "--poly", "x^8 + y^8"])), 1);
    let d8 = d_code(4).unwrap();
    let glued = d8.direct_sum(&catalog("e8").unwrap()).unwrap().direct_sum(&d8).unwrap();
    let file = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(file.path(), render_generator_matrix(&glued)).unwrap();
    let (c, status): (CoverOut, _) = json(&["tetrad", "cover", "--file", file.path().to_str().unwrap()]);
    assert!(!c.counting);
    assert_eq!(status, 1);
    // Not Type II, so classification is refused rather than falsified.
    assert_eq!(code(&harmcodes(&["tetrad", "classify", "--file", file.path().to_str().unwrap()])), 2);
}

#[test]
fn file_input_and_fixture_override() {
    let dir = tempfile::tempdir().unwrap();
    // The [7,4] Hamming code; its dual is the simplex code.
    std::fs::write(dir.path().join("ham7.txt"), "7 4\n1101000\n0110100\n0011010\n0001101\n").unwrap();
    let path = dir.path().join("ham7.txt");
    let o = harmcodes(&["code", "info", "--file", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("n=7 k=4 type=not-self-dual minwt=3\n"));
    assert_eq!(code(&harmcodes(&["code", "info", "--catalog", "ham7"])), 2);
    let o = Command::new(env!("CARGO_BIN_EXE_harmcodes"))
        .args(["macwilliams", "--catalog", "ham7", "--format", "json"])
        .env("HARMCODES_FIXTURES", dir.path())
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    let m: MacWilliamsOut = serde_json::from_slice(&o.stdout).unwrap();
    assert!(m.holds && m.diff.is_empty());
    assert_eq!(m.dual_enumerator.coefficients, ["1", "0", "0", "0", "7", "0", "0", "0"]);
    let o = harmcodes(&["--fixtures", dir.path().to_str().unwrap(), "code", "dual", "--catalog", "ham7"]);
    assert_eq!(stdout(&o).lines().next(), Some("7 3"));
}

#[test]
fn length24_fixture_suite() {
    for name in LENGTH24_FIXTURES {
        let (t, status): (TetradOut, _) = json(&["tetrad", "classify", "--catalog", name]);
        assert_eq!(status, 0, "{name}");
        let expected = name.strip_prefix("sd24-").unwrap_or("∅");
        assert_eq!(t.label, expected);
        assert!(t.in_koch_list);
        let etas: Vec<&String> = t.components.iter().map(|c| &c.tetrad_number).collect();
        assert!(etas.windows(2).all(|w| w[0] == w[1]), "{name}: {etas:?}");
        let (c, status): (CoverOut, _) = json(&["tetrad", "cover", "--catalog", name]);
        assert!(c.counting && c.harmonic && status == 0, "{name}");
        let (_, status): (MacWilliamsOut, _) = json(&["macwilliams", "--catalog", name]);
        assert_eq!(status, 0);
        let (g, status): (GleasonDecomposeOut, _) = json(&["gleason", "decompose", "--catalog", name]);
        assert!(matches!(g, GleasonDecomposeOut::TypeII { .. }) && status == 0);
    }
}

#[test]
fn harmonic_enumerator_commands() {
    let support = "0,1,2,3,4,5,6,7";
    let (z, status): (ZonalOut, _) = json(&["hwe", "zonal", "--catalog", "g24", "--support", support, "--degree", "6"]);
    assert_eq!(status, 0);
    assert!(!z.vanishes);
    let (z4, _): (ZonalOut, _) = json(&["hwe", "zonal", "--catalog", "g24", "--support", support, "--degree", "4"]);
    assert!(z4.vanishes);
    let (b, status): (BachocOut, _) = json(&["hwe", "bachoc", "--catalog", "g24", "--support", support, "--degree", "6"]);
    assert_eq!((b.psi_index, b.coefficients, status), (2, vec!["-26112".to_string()], 0));
    let (h, status): (HweCheckOut, _) = json(&["hwe", "check", "--catalog", "e8", "--cbar", "11000000", "--degree", "2"]);
    assert!(h.holds && h.diff.is_empty() && status == 0);
    let (h, _): (HweCheckOut, _) = json(&["hwe", "check", "--catalog", "e7", "--cbar", "1110000", "--degree", "3"]);
    assert!(h.holds);
}

#[test]
fn design_report_and_theta() {
    let (r, status): (DesignReportOut, _) = json(&["design", "report", "--catalog", "g24"]);
    assert_eq!((r.sigma, r.extremal, status), (5, true, 0));
    assert!(r.shells.iter().all(|s| s.verified_t >= 5));
    let (t, status): (ThetaOut, _) = json(&["theta", "--code", "e8", "--order", "3"]);
    assert_eq!(status, 0);
    assert_eq!(t.coefficients.unwrap(), ["1", "240", "2160", "6720"]);
    let (t, _): (ThetaOut, _) = json(&["theta", "--catalog", "g24", "--order", "3", "--decompose"]);
    assert_eq!(t.e4_delta.unwrap(), ["1", "-672"]);
    let file = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(file.path(), "2 1\n11\n").unwrap();
    let (t, _): (ThetaOut, _) = json(&["theta", "--file", file.path().to_str().unwrap(), "--order", "1"]);
    assert!(t.coefficients.is_none());
    // The weight-2 word gives a q^{1/2} term.
    assert_eq!(t.quarter_coefficients.len(), 5);
    assert_ne!(t.quarter_coefficients[2], "0");
}

#[test]
fn gleason_and_dual_records() {
    let (b, status): (GleasonBasisOut, _) = json(&["gleason", "basis"]);
    assert!(b.identities_hold && status == 0);
    assert_eq!(b.phi, "x^8 + 14x^4y^4 + y^8");
    let (d, _): (GleasonDecomposeOut, _) = json(&["gleason", "decompose", "--poly", "x^2 + y^2"]);
    assert_eq!(
        d,
        GleasonDecomposeOut::TypeI { terms: vec![TypeITermOut { a: 1, b: 0, coefficient: "1".into() }] }
    );
    let (rec, _): (DualOut, _) = json(&["code", "dual", "--catalog", "rm25"]);
    assert_eq!((rec.length, rec.dimension), (32, 16));
    let o = harmcodes(&["--threads", "1", "code", "info", "--catalog", "qr48"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("n=48 k=24 type=II minwt=12\n"));
}
