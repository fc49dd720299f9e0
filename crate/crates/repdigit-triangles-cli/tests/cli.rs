//! End-to-end tests of the installed binary: exit codes, record formats,
//! and reproducibility of the output stream.

use serde_json::Value;
use std::process::Command;

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_repdigit-triangles"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let output = binary().args(args).output().expect("binary runs");
    (
        output.status.code().expect("exit code"),
        String::from_utf8(output.stdout).expect("stdout utf8"),
        String::from_utf8(output.stderr).expect("stderr utf8"),
    )
}

fn json_lines(stdout: &str) -> Vec<Value> {
    stdout
        .lines()
        .map(|line| serde_json::from_str(line).expect("each line parses on its own"))
        .collect()
}

/// Zeroes the elapsed-time field, the only part allowed to vary between
/// identical runs.
fn normalized(stdout: &str) -> Vec<Value> {
    json_lines(stdout)
        .into_iter()
        .map(|mut v| {
            if v.get("elapsed_ms").is_some() {
                v["elapsed_ms"] = Value::from(0u64);
            }
            v
        })
        .collect()
}

#[test]
fn check_hit_exit_zero() {
    let (code, stdout, _) = run(&["check", "--k", "2", "--b", "4", "--d", "3", "--type", "t1"]);
    assert_eq!(code, 0);
    let records = json_lines(&stdout);
    assert_eq!(records.len(), 1);
    assert_eq!(records[0]["kind"], "hit");
    assert_eq!(records[0]["leg_a"], "9");
    assert_eq!(records[0]["leg_b"], "12");
    assert_eq!(records[0]["hypotenuse"], "15");
    assert_eq!(records[0]["hypotenuse_base_b"], "33");
}

#[test]
fn check_absent_exit_one() {
    let (code, stdout, _) = run(&["check", "--k", "2", "--b", "3", "--d", "2", "--type", "t1"]);
    assert_eq!(code, 1);
    let records = json_lines(&stdout);
    assert_eq!(records[0]["kind"], "verdict");
    assert_eq!(records[0]["verdict"], "absent");
}

#[test]
fn check_constraint_violation_exit_two() {
    let (code, stdout, _) = run(&["check", "--k", "2", "--b", "4", "--d", "5", "--type", "t1"]);
    assert_eq!(code, 2);
    let records = json_lines(&stdout);
    assert_eq!(records[0]["kind"], "error");
    assert!(records[0]["message"]
        .as_str()
        .unwrap()
        .contains("2 <= digit <= base - 1"));
}

#[test]
fn malformed_flags_exit_two() {
    let (code, _, stderr) = run(&["search", "--bases", "nonsense"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("expected A..B"));
}

#[test]
fn verify_theorem_consistent_and_invalid_id() {
    let (code, stdout, _) = run(&["verify-theorem", "--id", "3", "--k-max", "32"]);
    assert_eq!(code, 0);
    let records = json_lines(&stdout);
    assert_eq!(records.len(), 1);
    assert_eq!(records[0]["kind"], "verdict");
    assert_eq!(records[0]["verdict"], "consistent");
    assert_eq!(records[0]["hit_count"], 0);
    assert_eq!(records[0]["k_max"], 32);

    let (code, stdout, _) = run(&["verify-theorem", "--id", "9"]);
    assert_eq!(code, 2);
    assert_eq!(json_lines(&stdout)[0]["kind"], "error");
}

#[test]
fn search_reports_hits_and_summary() {
    let (code, stdout, _) = run(&[
        "search", "--bases", "3..20", "--k-max", "10", "--types", "t1,t2",
    ]);
    assert_eq!(code, 0);
    let records = json_lines(&stdout);
    let summary = records.last().unwrap();
    assert_eq!(summary["kind"], "summary");
    assert_eq!(summary["bases"], "3..20");
    assert_eq!(summary["hit_count"], (records.len() - 1) as u64);

    let has = |b: u64, d: u64, ty: &str| {
        records.iter().any(|r| {
            r["kind"] == "hit" && r["b"] == b && r["d"] == d && r["type"] == ty && r["k"] == 2
        })
    };
    assert!(has(4, 3, "t1"), "theorem-2 triangle present");
    assert!(has(11, 5, "t2"), "family F1(1,2) instance present");
}

#[test]
fn search_single_spec_subset() {
    let (code, stdout, _) = run(&[
        "search", "--bases", "4..4", "--digits", "3", "--k-max", "4", "--types", "t1",
    ]);
    assert_eq!(code, 0);
    let records = json_lines(&stdout);
    assert_eq!(records.len(), 2); // exactly one hit plus the summary
    assert_eq!(records[0]["kind"], "hit");
    assert_eq!(records[0]["b"], 4);
    assert_eq!(records[0]["d"], 3);

    let (code, stdout, _) = run(&[
        "search", "--bases", "10..10", "--k-max", "6", "--types", "t2",
    ]);
    assert_eq!(code, 0);
    let records = json_lines(&stdout);
    assert_eq!(records.len(), 1, "summary only");
    assert_eq!(records[0]["hit_count"], 0);
}

/// Hit records must survive a round trip: the decimal side strings parse
/// back to numbers satisfying the Pythagorean identity.
#[test]
fn hit_records_reparse_exactly() {
    use repdigit_triangles::Natural;
    let (_, stdout, _) = run(&["search", "--bases", "3..30", "--k-max", "8"]);
    let mut checked = 0;
    for record in json_lines(&stdout) {
        if record["kind"] != "hit" {
            continue;
        }
        let side = |key: &str| -> Natural {
            record[key].as_str().unwrap().parse().expect("decimal side")
        };
        let (a, b, c) = (side("leg_a"), side("leg_b"), side("hypotenuse"));
        assert_eq!(&a * &a + &b * &b, &c * &c);
        checked += 1;
    }
    assert!(checked > 0);
}

#[test]
fn identical_runs_are_byte_identical_except_elapsed() {
    let args = ["search", "--bases", "3..25", "--k-max", "8"];
    let (_, first, _) = run(&args);
    let (_, second, _) = run(&args);
    assert_eq!(normalized(&first), normalized(&second));
}

#[test]
fn thread_count_does_not_change_output() {
    let base: Vec<&str> = vec!["search", "--bases", "3..40", "--k-max", "8"];
    let (_, one, _) = run(&[base.as_slice(), &["--threads", "1"]].concat());
    let (_, four, _) = run(&[base.as_slice(), &["--threads", "4"]].concat());
    assert_eq!(normalized(&one), normalized(&four));

    let output = binary()
        .args(&base)
        .env("REPDIGIT_THREADS", "2")
        .output()
        .expect("binary runs");
    assert_eq!(
        normalized(&one),
        normalized(&String::from_utf8(output.stdout).unwrap())
    );
}

#[test]
fn family_and_corollary_records() {
    let (code, stdout, _) = run(&["family", "--name", "F1", "--l", "1", "--q", "2"]);
    assert_eq!(code, 0);
    let records = json_lines(&stdout);
    assert_eq!(records[0]["kind"], "family_instance");
    assert_eq!(records[0]["family"], "F1");
    assert_eq!(records[0]["b"], 11);
    assert_eq!(records[0]["leg_a"], "25");
    assert_eq!(records[0]["leg_b"], "60");
    assert_eq!(records[0]["hypotenuse"], "65");

    let (code, stdout, _) = run(&["family", "--name", "U", "--grid", "4"]);
    assert_eq!(code, 0);
    assert_eq!(json_lines(&stdout).len(), 3); // t = 2, 3, 4

    let (code, stdout, _) = run(&["family", "--name", "F2", "--l", "1", "--q", "1"]);
    assert_eq!(code, 2);
    assert!(json_lines(&stdout)[0]["message"]
        .as_str()
        .unwrap()
        .contains("l^2 >= 2*q^2 + 2"));

    let (code, stdout, _) = run(&["corollary", "--d", "5", "--type", "t2"]);
    assert_eq!(code, 0);
    let records = json_lines(&stdout);
    assert_eq!(records[0]["b"], 11);
    assert_eq!(records[0]["family"], "F1");

    let (code, stdout, _) = run(&["corollary", "--d", "4", "--type", "t2"]);
    assert_eq!(code, 2);
    assert!(json_lines(&stdout)[0]["message"]
        .as_str()
        .unwrap()
        .contains("admits no two-digit"));
}

#[test]
fn csv_format_emits_header_and_rows() {
    let (code, stdout, _) = run(&[
        "check", "--k", "3", "--b", "10", "--d", "6", "--type", "t1", "--format", "csv",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("kind,k,b,d,type,leg_a"));
    let header_cols = lines[0].split(',').count();
    assert_eq!(lines[1].split(',').count(), header_cols);
    assert!(lines[1].starts_with("hit,3,10,6,t1,216,630,666"));
}

/// Field order is fixed: the JSON keys of a hit record always appear in
/// the same sequence.
#[test]
fn json_key_order_is_stable() {
    let (_, stdout, _) = run(&["check", "--k", "2", "--b", "11", "--d", "5", "--type", "t2"]);
    let line = stdout.lines().next().unwrap();
    let key_positions: Vec<usize> = ["\"kind\"", "\"k\"", "\"b\"", "\"d\"", "\"type\"", "\"leg_a\""]
        .iter()
        .map(|key| line.find(key).expect("key present"))
        .collect();
    let mut sorted = key_positions.clone();
    sorted.sort_unstable();
    assert_eq!(key_positions, sorted);
}
