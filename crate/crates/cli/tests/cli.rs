use std::process::{Command, Output};

use jetseries::models::VerificationReport;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jetseries")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn expand_theta_three() {
    let o = run(&["expand", "theta:3", "--maxdeg2", "10", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let coeffs: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(coeffs, ["1", "0", "1", "2", "2", "2", "3", "4", "5", "6", "7"]);
}

#[test]
fn expand_poch_zero_is_one_row() {
    let o = run(&["expand", "poch:0", "--maxdeg2", "0"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1);
    assert!(text.trim_end().ends_with(" 1"));
}

#[test]
fn expand_unknown_formula_fails() {
    let o = run(&["expand", "nonsense:1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn trivial_truncation_passes() {
    let o = run(&["verify", "--model", "lattice:2", "--maxdeg2", "0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let reports: Vec<VerificationReport> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0].rows.len(), 1);
    assert_eq!(reports[0].rows[0].jet_dim, "1");
    assert_eq!(reports[0].rows[0].character.as_deref(), Some("1"));
}

#[test]
fn json_report_round_trips() {
    let o = run(&["verify", "--model", "n2_c1:ab", "--model", "graph:A2", "--maxdeg2", "10", "--format", "json"]);
    let text = stdout(&o);
    let reports: Vec<VerificationReport> = serde_json::from_str(&text).unwrap();
    let again = serde_json::to_string_pretty(&reports).unwrap();
    assert_eq!(again.trim_end(), text.trim_end());
    let raw: serde_json::Value = serde_json::from_str(&text).unwrap();
    for r in raw.as_array().unwrap() {
        for row in r["rows"].as_array().unwrap() {
            assert!(row["jet_dim"].is_string());
        }
    }
}

#[test]
fn n2_ab_deviates_from_registered_mismatch() {
    // The registry keeps the expected mismatch at 9/2; the computed quotient
    // agrees with the character there, so the run must exit nonzero.
    let o = run(&["verify", "--model", "n2_c1:ab", "--maxdeg2", "10", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let reports: Vec<VerificationReport> = serde_json::from_slice(&o.stdout).unwrap();
    let r = &reports[0];
    assert_eq!(r.rows[9].jet_dim, "6");
    assert_eq!(r.rows[9].character.as_deref(), Some("6"));
    assert_eq!(r.mismatch_degree2, None);
    assert!(!r.matches_expectation);
}

#[test]
fn expected_mismatch_counts_as_success() {
    let o = run(&["verify", "--model", "lattice:3", "--maxdeg2", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict MISMATCH at q^4, as expected"));
}

#[test]
fn unknown_key_is_rejected_before_work() {
    let o = run(&["verify", "--model", "graph:A2", "--model", "nope:1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn resource_cap_is_reported() {
    let o = run(&["verify", "--model", "sln:4", "--maxdeg2", "14", "--cap", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn csv_has_report_columns() {
    let o = run(&["verify", "--model", "vir:2", "--maxdeg2", "6", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "model,maxdeg2,degree2,spanning,jet_dim,character,verdict,mismatch_degree2");
    assert_eq!(lines.count(), 7);
}

#[test]
fn human_table_uses_half_exponents() {
    let o = run(&["verify", "--model", "fermion", "--maxdeg2", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("q^{3/2}"));
}

#[test]
fn list_is_sorted_and_stable() {
    let a = stdout(&run(&["list"]));
    let b = stdout(&run(&["list"]));
    assert_eq!(a, b);
    let keys: Vec<&str> = a.split("\n\n").next().unwrap().lines().map(|l| l.split_whitespace().next().unwrap()).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert!(a.lines().any(|l| l.starts_with("n2_c1:ab") && l.contains(" n2 ")));
}

#[test]
fn list_filter_keeps_graphs() {
    let text = stdout(&run(&["list", "--filter", "graph"]));
    assert!(!text.is_empty());
    assert!(text.lines().all(|l| l.starts_with("graph:")));
}

#[test]
fn registry_file_adds_models() {
    let dir = std::env::temp_dir().join(format!("jetseries-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("extra.reg");
    std::fs::write(&path, "model rr\ntopic custom\nvar x even 4\nrel x^2\ncharacter vir:2\nexpect iso\nmaxdeg2 16\n").unwrap();
    let p = path.to_str().unwrap();
    let o = run(&["verify", "--registry", p, "--model", "rr"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&run(&["list", "--registry", p, "--filter", "custom"])).starts_with("rr"));

    std::fs::write(&path, "model bad\nvar x even 2\nrel y^2\n").unwrap();
    let o = run(&["verify", "--registry", p, "--all"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_all_flags_only_the_n2_quotients() {
    let o = run(&["verify", "--all"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("39 model(s) verified, 37 as expected"));
    assert!(text.trim_end().ends_with("deviating: n2_c1:ab, n2_c1:abc"));
}
