//! End-to-end tests driving the compiled binary: exit codes, piping, and
//! report formats.

use std::io::Write;
use std::process::{Command, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_homtwist"))
}

fn run(args: &[&str], stdin: Option<&str>) -> (i32, String, String) {
    let mut cmd = bin();
    cmd.args(args)
        .stdin(if stdin.is_some() {
            Stdio::piped()
        } else {
            Stdio::null()
        })
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("binary spawns");
    if let Some(input) = stdin {
        child
            .stdin
            .as_mut()
            .unwrap()
            .write_all(input.as_bytes())
            .unwrap();
    }
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn example(args: &[&str]) -> String {
    let (code, stdout, stderr) = run(args, None);
    assert_eq!(code, 0, "example failed: {stderr}");
    stdout
}

#[test]
fn twisted_sl2_verifies_as_hom_lie() {
    let doc = example(&["example", "sl2", "--lambda", "2"]);
    let (code, stdout, _) = run(&["verify", "--group", "a3"], Some(&doc));
    assert_eq!(code, 0);
    assert!(stdout.contains("g-hom-associativity"));
    assert!(stdout.contains("PASS"));
}

#[test]
fn classical_sl2_fails_hom_associativity_at_documented_triple() {
    let doc = example(&["example", "sl2", "--lambda", "1"]);
    let (code, stdout, _) = run(&["verify", "--group", "e"], Some(&doc));
    assert_eq!(code, 1);
    assert!(stdout.contains("FAIL"));
    assert!(stdout.contains("(h, h, e)"));
    assert!(stdout.contains("-4·e"));
}

#[test]
fn abelian_homology_table() {
    let doc = example(&["example", "abelian", "--n", "3"]);
    let (code, stdout, _) = run(
        &["homology", "--coefficients", "trivial"],
        Some(&doc),
    );
    assert_eq!(code, 0);
    for line in ["0        1", "1        3", "2        3", "3        1"] {
        assert!(stdout.contains(line), "missing row {line:?} in:\n{stdout}");
    }
}

#[test]
fn twist_matches_direct_emission_and_reverifies() {
    let dir = std::env::temp_dir().join("homtwist-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let untwisted = dir.join("sl3_untwisted.json");
    let twisted = dir.join("sl3_twisted.json");

    example(&[
        "example",
        "sln",
        "--n",
        "3",
        "--lambdas",
        "2,3",
        "--untwisted",
        "--out",
        untwisted.to_str().unwrap(),
    ]);
    let (code, _, _) = run(
        &[
            "twist",
            "--algebra",
            untwisted.to_str().unwrap(),
            "--out",
            twisted.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(code, 0);

    let direct = example(&["example", "sln", "--n", "3", "--lambdas", "2,3"]);
    let written = std::fs::read_to_string(&twisted).unwrap();
    assert_eq!(written.trim(), direct.trim());

    let (code, _, _) = run(
        &["verify", "--algebra", twisted.to_str().unwrap(), "--group", "a3"],
        None,
    );
    assert_eq!(code, 0);
}

#[test]
fn parse_errors_exit_2() {
    let bad = r#"{"dim":1,"basis":["1"],"structure":[{"i":0,"j":0,"k":0,"value":"1/0"}]}"#;
    let (code, _, stderr) = run(&["verify", "--group", "e"], Some(bad));
    assert_eq!(code, 2);
    assert!(stderr.contains("1/0"));

    let (code, _, _) = run(&["verify", "--group", "zz"], Some("{}"));
    assert_eq!(code, 2);

    let (code, _, _) = run(&["nonsense"], None);
    assert_eq!(code, 2);
}

#[test]
fn non_multiplicative_twist_fails_with_exit_1() {
    // classical sl2 with a uniform doubling map is not multiplicative
    let doc = r#"{
        "dim": 2, "basis": ["a", "b"],
        "structure": [{"i":0,"j":1,"k":0,"value":"1"}],
        "alpha": [["2","0"],["0","2"]]
    }"#;
    let (code, _, stderr) = run(&["twist"], Some(doc));
    assert_eq!(code, 1);
    assert!(stderr.contains("not multiplicative"));
}

#[test]
fn hybe_command_with_braids_and_dump() {
    let dir = std::env::temp_dir().join("homtwist-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let dump = dir.join("operators.txt");

    let doc = example(&["example", "heisenberg", "--l1", "2", "--l2", "3"]);
    let (code, stdout, _) = run(
        &[
            "hybe",
            "--strands",
            "3",
            "--dump",
            dump.to_str().unwrap(),
        ],
        Some(&doc),
    );
    assert_eq!(code, 0);
    assert!(stdout.contains("hom-yang-baxter"));
    assert!(stdout.contains("braid-relations"));

    let dumped = std::fs::read_to_string(&dump).unwrap();
    assert!(dumped.contains("# B_alpha"));
    assert!(dumped.contains("# B_2"));
    assert!(dumped.contains("16 16"));
    assert!(dumped.contains("64 64"));
}

#[test]
fn json_reports_are_machine_readable() {
    let doc = example(&["example", "sl2", "--lambda", "2"]);
    let (code, stdout, _) = run(&["verify", "--group", "a3", "--json"], Some(&doc));
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["command"], "verify --group a3");
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["pass"] == true));
    assert!(checks.iter().all(|c| c.get("counterexample").is_none()));

    // counterexample present exactly when a check fails
    let doc = example(&["example", "sl2", "--lambda", "1"]);
    let (code, stdout, _) = run(&["verify", "--group", "e", "--json"], Some(&doc));
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let fail = &v["checks"][0];
    assert_eq!(fail["pass"], false);
    assert!(fail["counterexample"].as_str().unwrap().contains("h"));
}

#[test]
fn witt_window_report() {
    let (code, stdout, _) = run(
        &["example", "witt", "--lambda", "1", "--max", "4"],
        None,
    );
    assert_eq!(code, 0);
    assert!(stdout.contains("hom-jacobi-window"));
    assert!(stdout.contains("alpha-multiplicativity-window"));
}

#[test]
fn remaining_family_emitters() {
    let doc = example(&["example", "cyclic", "--order", "4", "--endo-power", "2"]);
    let (code, _, _) = run(&["verify", "--group", "e"], Some(&doc));
    assert_eq!(code, 0);

    let doc = example(&["example", "truncated-poly", "--degree", "3", "--p", "0,1,1"]);
    let (code, _, _) = run(&["verify", "--group", "e"], Some(&doc));
    assert_eq!(code, 0);

    let doc = example(&["example", "matrix", "--n", "2"]);
    let (code, _, _) = run(&["verify", "--group", "e"], Some(&doc));
    assert_eq!(code, 0);

    // a group file read from disk
    let dir = std::env::temp_dir().join("homtwist-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let table = dir.join("klein.json");
    std::fs::write(
        &table,
        r#"{"table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]],
           "endo": [0,0,2,2]}"#,
    )
    .unwrap();
    let doc = example(&["example", "group", "--table", table.to_str().unwrap()]);
    let (code, _, _) = run(&["verify", "--group", "e"], Some(&doc));
    assert_eq!(code, 0);
}

#[test]
fn alpha_override_file() {
    let dir = std::env::temp_dir().join("homtwist-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let alpha = dir.join("identity3.json");
    std::fs::write(&alpha, r#"[["1","0","0"],["0","1","0"],["0","0","1"]]"#).unwrap();

    // classical sl2 document (λ=1) with an explicit identity alpha file
    let doc = example(&["example", "sl2", "--lambda", "1"]);
    let (code, _, _) = run(
        &[
            "verify",
            "--alpha",
            alpha.to_str().unwrap(),
            "--group",
            "a3",
        ],
        Some(&doc),
    );
    assert_eq!(code, 0);
}
