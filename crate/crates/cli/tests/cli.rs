use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_derangements")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn table_csv_matches_golden() {
    let out = run(&["table", "--max-n", "8", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), include_str!("golden/table_8.csv"));
}

#[test]
fn verify_all_json_matches_golden() {
    let out = run(&["verify", "--all", "--format", "json", "--deterministic"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), include_str!("golden/verify_all.json"));
}

#[test]
fn verify_single_case() {
    let out = run(&["verify", "--id", "PZ1", "--n", "5", "--j", "3", "--format", "json", "--deterministic"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["cases"][0]["rhs"], "-x1*x2*x3*y4*y5");
    assert_eq!(v["cases"][0]["pass"], true);
    assert_eq!(v["all_pass"], true);
}

#[test]
fn stats_of_worked_example() {
    let out = run(&["stats", "4153627"]);
    let text = stdout(&out);
    assert!(text.contains("RLMi: {2,6,7}\n"));
    assert!(text.contains("EXCi: {1,3,5}\n"));
    assert!(text.contains("FIX: {7}\n"));
}

#[test]
fn signed_stats() {
    let out = run(&["stats", "--format", "csv", "--", "-6,2,4,-3,1,5,8,-7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("neg,3\n"));
    assert!(text.contains("nsum,16\n"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify"][..],
        &["verify", "--id", "NOPE"],
        &["frobnicate"],
        &["table", "--max-n", "x"],
        &["series", "--expr", "nothing"],
        &["jfraction", "--preset", "nope"],
        &["stats", "1123"],
        &["enumerate", "--family", "Dnj", "--n", "4"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn failed_check_exits_one() {
    let out = run(&["bijections", "--n", "5", "--format", "json", "--deterministic"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["all_pass"], false);
    let failing: Vec<_> = v["cases"].as_array().unwrap().iter().filter(|c| c["pass"] == false).collect();
    assert_eq!(failing.len(), 1);
    assert!(failing[0]["id"].as_str().unwrap().starts_with("reduction U_{5,4}"), "{failing:?}");
}

#[test]
fn passing_checks_exit_zero() {
    assert_eq!(run(&["bijections", "--n", "4"]).status.code(), Some(0));
    assert_eq!(run(&["ortho", "--max-n", "4"]).status.code(), Some(0));
    assert_eq!(run(&["jfraction", "--preset", "dn1", "--order", "6"]).status.code(), Some(0));
}

#[test]
fn deterministic_output_is_repeatable() {
    for args in [
        &["verify", "--id", "BPLUS", "--format", "json", "--deterministic"][..],
        &["enumerate", "--family", "Bn_mixed", "--n", "3", "--format", "csv", "--deterministic"],
        &["series", "--expr", "laguerre-egf", "--order", "4", "--deterministic"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
    let timed = stdout(&run(&["verify", "--id", "KZ03", "--format", "json"]));
    assert!(timed.contains("\"wall_time_ms\""));
}

#[test]
fn json_reports_are_well_formed() {
    for args in [
        &["ortho", "--max-n", "3", "--format", "json"][..],
        &["jfraction", "--order", "4", "--format", "json"],
        &["table", "--max-n", "5", "--format", "json"],
        &["stats", "3142", "--format", "json"],
        &["enumerate", "--family", "Unj", "--n", "5", "--j", "3", "--weight", "cyc-rlmv-excv", "--format", "json"],
    ] {
        let v: serde_json::Value = serde_json::from_slice(&run(args).stdout).unwrap();
        for key in ["command", "params", "cases", "all_pass"] {
            assert!(v.get(key).is_some(), "{args:?} lacks {key}");
        }
    }
}

#[test]
fn enumerate_total_matches_member_weights() {
    let out = run(&["enumerate", "--family", "Dn", "--n", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["data"]["count"], 9);
    assert_eq!(v["data"]["members"].as_array().unwrap().len(), 9);
    let sum = run(&["enumerate", "--family", "Dn", "--n", "4", "--sum-only"]);
    assert!(stdout(&sum).contains("count: 9\n"));
}
