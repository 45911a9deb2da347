use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sylowscope"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_lines(args: &[&str]) -> Vec<Value> {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).expect("each line is one JSON object"))
        .collect()
}

#[test]
fn classify_exception_group() {
    let lines = json_lines(&["classify", "--group", "PSL(3,4)", "--prime", "3"]);
    assert_eq!(lines.len(), 1);
    let rec = &lines[0];
    assert_eq!(rec["version"], "sylowscope/1");
    assert_eq!(rec["command"], "classify");
    assert_eq!(rec["result"]["kind"], "abelian");
    assert_eq!(rec["result"]["structure"], "C3^2");
    assert_eq!(rec["result"]["rule"], "exc-psl3");
}

#[test]
fn classify_nonabelian_and_coprime() {
    let v = &json_lines(&["classify", "--group", "E8(2)", "--prime", "3"])[0]["result"];
    assert_eq!(v["kind"], "nonabelian");
    assert_eq!(v["structure"], Value::Null);
    let v = &json_lines(&["classify", "--group", "M11", "--prime", "7"])[0]["result"];
    assert_eq!(v["kind"], "trivial");
    assert_eq!(v["valuation"], 0);
}

#[test]
fn classify_cyclic_lift() {
    let v = &json_lines(&["classify", "--group", "PSL(4,7)", "--prime", "5"])[0]["result"];
    assert_eq!(v["structure"], "C25");
    assert_eq!(v["valuation"], 2);
}

#[test]
fn text_output() {
    let out = run(&["classify", "--group", "A(10)", "--prime", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("C5^2"));
}

#[test]
fn order_and_factorisation() {
    let v = &json_lines(&["order", "--group", "M11", "--factored"])[0]["result"];
    assert_eq!(v["order"], "7920");
    assert_eq!(v["factored"], "2^4·3^2·5·11");
    let v = &json_lines(&["order", "--group", "2B2(8)"])[0]["result"];
    assert_eq!(v["order"], "29120");
    let out = run(&["order", "--group", "E8(2)", "--check"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn enumerate_c5_squared() {
    let lines = json_lines(&["enumerate", "--prime", "5", "--structure", "C5^2"]);
    let results: Vec<&Value> = lines.iter().map(|l| &l["result"]).collect();
    assert!(results
        .iter()
        .any(|r| r["scope"] == "alternating" && r["n_from"] == 10 && r["n_to"] == 14));
    assert!(results.iter().any(|r| r["group"] == "J2"));
    assert!(results.iter().any(|r| r["family"] == "PSL(3,q)"));
    let scopes: Vec<&str> = results
        .iter()
        .map(|r| r["scope"].as_str().unwrap())
        .collect();
    let mut sorted = scopes.clone();
    sorted.sort_by_key(|s| {
        ["alternating", "lie", "defining", "sporadic"]
            .iter()
            .position(|x| x == s)
    });
    assert_eq!(scopes, sorted);
}

#[test]
fn enumerate_concrete_groups_have_target() {
    let lines = json_lines(&[
        "enumerate",
        "--prime",
        "7",
        "--structure",
        "C7^2",
        "--scope",
        "lie",
        "--concrete",
        "300",
    ]);
    let groups: Vec<String> = lines
        .iter()
        .filter_map(|l| l["result"]["group"].as_str().map(str::to_string))
        .collect();
    assert!(!groups.is_empty());
    for g in groups.iter().take(40) {
        let v = &json_lines(&["classify", "--group", g, "--prime", "7"])[0]["result"];
        assert_eq!(v["structure"], "C7^2", "{g}");
    }
}

#[test]
fn json_output_is_deterministic() {
    let args = ["--json", "enumerate", "--prime", "3", "--structure", "C3^2"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn congruences_for_psl4() {
    let v = &json_lines(&[
        "congruences",
        "--group",
        "PSL(4,q)",
        "--prime",
        "5",
        "--order",
        "2",
    ])[0]["result"];
    assert_eq!(v["residues"]["modulus"], 25);
    assert_eq!(v["residues"]["residues"], serde_json::json!([4, 9, 14, 19]));
    assert_eq!(v["structure"], "C5^2");
    assert_eq!(v["abelian"], true);
}

#[test]
fn walter_list() {
    let v = &json_lines(&["walter", "--group", "PSL(2,11)"])[0]["result"];
    assert_eq!(v["structure"], "C2^2");
    assert_eq!(v["rule"], "walter");
    let v = &json_lines(&["walter", "--group", "PSL(3,4)"])[0]["result"];
    assert_eq!(v["kind"], "nonabelian");
}

#[test]
fn sporadic_grid_has_every_group() {
    let out = run(&["sporadic"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for name in ["M11", "J1", "Co1", "Fi24'", "B", "M"] {
        assert!(
            text.lines()
                .any(|l| l.split_whitespace().next() == Some(name)),
            "{name}"
        );
    }
}

#[test]
fn verify_passes() {
    let out = run(&["--quiet", "verify"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn invalid_input_exits_two() {
    for args in [
        &["classify", "--group", "A(4)", "--prime", "3"][..],
        &["classify", "--group", "PSL(2,2)", "--prime", "3"],
        &["classify", "--group", "M11", "--prime", "9"],
        &["enumerate", "--prime", "5", "--structure", "C7^2"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn malformed_input_exits_three() {
    for args in [
        &["classify", "--group", "PSL(2", "--prime", "3"][..],
        &["enumerate", "--prime", "5", "--structure", "Cx"],
        &["frobnicate"],
        &["classify", "--group", "M11"],
    ] {
        assert_eq!(run(args).status.code(), Some(3), "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
