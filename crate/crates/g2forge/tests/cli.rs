//! End-to-end checks of the command-line interface: exit codes, output
//! shapes, and the JSON report contract.

use std::process::Command;

fn g2forge() -> Command {
    Command::new(env!("CARGO_BIN_EXE_g2forge"))
}

#[test]
fn verify_filtered_passes_with_exit_zero() {
    let out = g2forge()
        .args(["verify", "--filter", "h8.*"])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("PASS  h8.brackets"));
    assert!(stdout.contains("h8.charpoly"));
    assert!(!stdout.contains("split."));
}

#[test]
fn verify_writes_a_json_report() {
    let dir = std::env::temp_dir().join("g2forge-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = g2forge()
        .args([
            "verify",
            "--filter",
            "subalgebras.*",
            "--json",
            path.to_str().unwrap(),
            "--seed",
            "7",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: g2forge::report::Report =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report.seed, 7);
    assert!(report.all_passed());
    // ids are unique and sorted
    let ids: Vec<&String> = report.checks.iter().map(|c| &c.id).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    // round trip
    let json = serde_json::to_string_pretty(&report).unwrap();
    let parsed: g2forge::report::Report = serde_json::from_str(&json).unwrap();
    assert_eq!(report, parsed);

    // determinism: a second run with the same seed gives the same outcomes
    let path2 = dir.join("report2.json");
    let out = g2forge()
        .args([
            "verify",
            "--filter",
            "subalgebras.*",
            "--json",
            path2.to_str().unwrap(),
            "--seed",
            "7",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report2: g2forge::report::Report =
        serde_json::from_str(&std::fs::read_to_string(&path2).unwrap()).unwrap();
    let outcomes = |r: &g2forge::report::Report| -> Vec<(String, g2forge::report::Status)> {
        r.checks.iter().map(|c| (c.id.clone(), c.status)).collect()
    };
    assert_eq!(outcomes(&report), outcomes(&report2));
}

#[test]
fn decompose_prints_the_module_list() {
    let out = g2forge().args(["decompose", "h8", "g2"]).output().unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("V(10)"));
    assert!(stdout.contains("V(2)"));
    assert!(stdout.contains("dim z(e)=2"));
    assert!(stdout.contains("dim z(h)=2"));

    let out = g2forge().args(["decompose", "h8", "o0"]).output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("V(6)"));

    let out = g2forge().args(["decompose", "h3", "g2"]).output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("4V(1)"));
    assert!(stdout.contains("3V(0)"));
    assert!(stdout.contains("dim z(e)=8"));
}

#[test]
fn index_prints_rationals_and_rejects_bad_labels() {
    let out = g2forge().args(["index", "h8"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "28");

    let out = g2forge().args(["index", "h3"]).output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "1");

    // h1 is six-dimensional: exit code 2 with an explanatory error
    let out = g2forge().args(["index", "h1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("three-dimensional"));

    // unknown labels are rejected the same way
    let out = g2forge().args(["decompose", "h9", "g2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
