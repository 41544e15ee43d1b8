use std::process::{Command, Output};

fn mckay(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mckay"))
        .args(args)
        .env_remove("MCKAY_CATALOG")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_selected_entries_as_json() {
    let o = mckay(&["verify", "--entries", "T,O,I", "--format", "json", "--order", "30"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 3);
    for e in entries {
        let checks = e["checks"].as_array().unwrap();
        assert!(checks.len() >= 9);
        assert!(checks.iter().all(|c| c["pass"] == true && c["ms"] == 0));
    }
    assert_eq!(v["summary"]["checks_failed"], 0);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["verify", "--entries", "BT,C4,T", "--format", "json", "--order", "20"];
    assert_eq!(mckay(&args).stdout, mckay(&args).stdout);
}

#[test]
fn failing_check_sets_exit_status() {
    let o = mckay(&["verify", "--entries", "Delta6x3", "--order", "20"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("FAIL det_m0_table4"), "{text}");
}

#[test]
fn bad_selections_fail_before_computing() {
    for sel in ["", "Nope", "T,Nope"] {
        let o = mckay(&["verify", "--entries", sel]);
        assert_eq!(o.status.code(), Some(2), "{sel:?}");
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn catalog_directory_from_flag_and_environment() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert!(mckay(&["export-catalog", d]).status.success());
    std::fs::remove_file(dir.path().join("T.json")).unwrap();

    let o = mckay(&["--catalog", d, "verify", "--entries", "T"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(mckay(&["--catalog", d, "verify", "--entries", "O", "--order", "10"]).status.success());

    let o = Command::new(env!("CARGO_BIN_EXE_mckay"))
        .args(["verify", "--entries", "T"])
        .env("MCKAY_CATALOG", d)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn table4_prints_both_determinants() {
    let o = mckay(&["table4", "--entries", "T,I"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("(1-t)^3 D[minus 2,3,3](t)"), "{text}");
    assert!(text.contains("(1-t)^5 D[plain 2,2,3,5](t)"), "{text}");
    assert_eq!(text.lines().filter(|l| l.contains(" ok ")).count(), 4);
}

#[test]
fn group_info_and_character_table() {
    let o = mckay(&["group-info", "--entries", "BI"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("order              120"));
    assert!(text.contains("irreducible dims   [1,2,2,3,3,4,4,5,6]"));

    let o = mckay(&["chartable", "--entries", "C2"]);
    let text = stdout(&o);
    assert!(text.contains("chi0   [1, 1]"), "{text}");
    assert!(text.contains("chi1   [1, -1]"), "{text}");
}

#[test]
fn molien_series_coefficients() {
    let o = mckay(&["molien", "--entries", "T", "--order", "6"]);
    assert!(o.status.success());
    // 1/((1-t^2)(1-t^3)(1-t^4)(1-t^6)) * (1-t^12) to order 6
    assert!(stdout(&o).contains("series: 1 0 1 1 2 1 4"), "{}", stdout(&o));
}

#[test]
fn coxeter_subcommand() {
    let o = mckay(&["coxeter", "--ade", "E6"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("det(1 - t tau)   = 1 + t - t^3 + t^5 + t^6"), "{}", stdout(&o));

    let o = mckay(&["coxeter", "--variant", "plus", "--alphas", "2,3,7", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["delta"], v["closed_form"]);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 12);

    assert!(!mckay(&["coxeter"]).status.success());
    assert!(!mckay(&["coxeter", "--variant", "plus", "--alphas", "0"]).status.success());
}
