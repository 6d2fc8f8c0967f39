use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn workspace() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn cacti(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cacti")).args(args).current_dir(workspace()).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Set `CACTI_BLESS=1` to rewrite the expected files.
fn golden(name: &str, args: &[&str]) {
    let o = cacti(args);
    assert_eq!(o.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    let got = stdout(&o);
    if std::env::var_os("CACTI_BLESS").is_some() {
        std::fs::write(&path, &got).unwrap();
        return;
    }
    let want = std::fs::read_to_string(&path).unwrap();
    assert_eq!(got, want, "{name} differs from golden output");
}

#[test]
fn golden_sweedler_cobar() {
    golden("sweedler4_cobar.txt", &["cobar-cohomology", "data/sweedler4.json", "--max-ext", "4"]);
}

#[test]
fn golden_taft_over_f7() {
    golden("taft31_f7_cobar.txt", &["cobar-cohomology", "catalog:taft(3,1)", "--field", "F7", "--max-ext", "4"]);
}

#[test]
fn golden_identities() {
    golden("sweedler4_identities.txt", &["identities", "data/sweedler4.json", "--samples", "20", "--seed", "11"]);
}

#[test]
fn golden_hochschild_json() {
    golden(
        "dual_numbers_hochschild.json",
        &["hochschild-cohomology", "data/dual_numbers.json", "--max-q", "3", "--format", "json"],
    );
}

#[test]
fn golden_induced() {
    golden(
        "superline_induced.txt",
        &["induced", "data/action_h4_superline.json", "--verify", "--image", "4", "--samples", "20"],
    );
}

#[test]
fn identities_are_reproducible() {
    let args = ["identities", "catalog:taft(2,1)", "--samples", "15", "--seed", "5", "--format", "json"];
    let a = stdout(&cacti(&args));
    assert_eq!(a, stdout(&cacti(&args)));
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["config"]["seed"], 5);
    assert_eq!(v["passed"], true);
}

#[test]
fn failing_checks_exit_one() {
    for args in [
        &["check", "data/broken_coassociative.json"][..],
        &["check", "data/action_h4_broken.json"],
        &["extract", "data/broken_coassociative.json"],
        &["lift", "data/morphism_collapse_g.json", "--samples", "10"],
        &["skew-cocycle", "data/chain_incompatible.json"],
    ] {
        let o = cacti(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).ends_with("result: FAIL\n"), "{args:?}");
    }
}

#[test]
fn passing_checks_exit_zero() {
    for args in [
        &["check", "data/sweedler4.json"][..],
        &["check", "data/action_h4_superline.json"],
        &["dual", "data/sweedler4.json"],
        &["extract", "catalog:taft(2,1)"],
        &["lift", "data/morphism_rescale.json", "--samples", "10"],
        &["skew-cocycle", "data/chain_sigma.json"],
    ] {
        let o = cacti(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}{}", stdout(&o), String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn extraction_names_the_offending_word() {
    let o = cacti(&["extract", "data/broken_coassociative.json"]);
    assert!(stdout(&o).contains("d²(x) = -1 * x|u_g|x"), "{}", stdout(&o));
}

#[test]
fn bad_input_exits_two() {
    let missing = cacti(&["check", "data/no_such_file.json"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&missing.stderr).starts_with("error:"));
    assert_eq!(cacti(&["check", "catalog:sweedler4", "--field", "F6"]).status.code(), Some(2));
    assert_eq!(cacti(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn malformed_presentation_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"name": "bad", "basis": ["1", "a"], "unit": "1", "mult": {"a*a": {"b": "1"}}}"#).unwrap();
    let o = cacti(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2), "{}", stdout(&o));
}

#[test]
fn field_flag_overrides_declared_field() {
    let args = ["hochschild-cohomology", "data/dual_numbers.json", "--field", "F2", "--max-q", "3"];
    assert!(stdout(&cacti(&args)).contains("# field: F2"));
    let mut json_args = args.to_vec();
    json_args.extend(["--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&cacti(&json_args))).unwrap();
    let bettis: Vec<u64> =
        v["result"]["betti"]["entries"].as_array().unwrap().iter().map(|e| e["betti"].as_u64().unwrap()).collect();
    assert_eq!(bettis, [2, 2, 2, 2]);
}
