use std::process::{Command, Output};

fn bottfano(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bottfano"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn quiet_verdicts() {
    assert_eq!(code(&bottfano(&["iso", "B(2;1,1)", "B(2;0,1)", "--c1", "--quiet"])), 3);
    assert_eq!(code(&bottfano(&["iso", "B(2;1,1)", "B(2;-1,0)", "--c1", "--quiet"])), 0);
    assert_eq!(code(&bottfano(&["fano", "B(1;2)", "--quiet"])), 3);
    assert_eq!(code(&bottfano(&["fano", "B(1;1)", "--quiet"])), 0);
    // no exact rule for B(2;1) against B(1;1,0) and no witness, so unknown
    assert_eq!(code(&bottfano(&["iso", "B(2;1)", "B(1;1,0)", "--quiet"])), 4);
    let out = bottfano(&["iso", "B(2;1,1)", "B(2;0,1)", "--quiet"]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
}

#[test]
fn enumerate_formats() {
    let out = bottfano(&["enumerate", "--dim", "2", "--format", "plain"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "B(1;0)\nB(1;1)\n");

    let json: serde_json::Value =
        serde_json::from_slice(&bottfano(&["enumerate", "--dim", "4", "--format", "json"]).stdout).unwrap();
    assert_eq!(json["count"], 9);
    assert_eq!(json["entries"].as_array().unwrap().len(), 9);

    let csv = stdout(&bottfano(&["enumerate", "--dim", "4", "--format", "csv"]));
    assert_eq!(csv.lines().count(), 10);
    assert_eq!(csv.lines().next().unwrap(), "n1,n2,exponents,is_product,c1");

    // every plain line parses back as a spec
    for line in stdout(&bottfano(&["enumerate", "--dim", "5"])).lines() {
        assert_eq!(code(&bottfano(&["fano", line, "--quiet"])), 0, "{line}");
    }
}

#[test]
fn fano_report() {
    let out = stdout(&bottfano(&["fano", "B(2;1,1)"]));
    assert!(out.contains("R1: lambda(2,1) = (0,1,1); degree 1"), "{out}");
    assert!(out.ends_with("fano: yes\n"));
    let json = r#"{"fiber_dims":[3,2,2],"coeffs":[{"i":2,"j":1,"vec":[-1,-1]},{"i":3,"j":1,"vec":[1,2]},{"i":3,"j":2,"vec":[1,0]}]}"#;
    let out = stdout(&bottfano(&["fano", json]));
    assert!(out.contains("degrees: [1, 2, 3]"), "{out}");
    let relation = stdout(&bottfano(&["relations", json, "--j", "2"]));
    assert_eq!(relation.lines().count(), 1);
    assert!(relation.starts_with("R2:"));
}

#[test]
fn spec_from_file() {
    let dir = std::env::temp_dir().join(format!("bottfano-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("tower.json");
    std::fs::write(&path, r#"{"fiber_dims":[2,2],"coeffs":[{"i":2,"j":1,"vec":[1,1]}]}"#).unwrap();
    let out = bottfano(&["iso", path.to_str().unwrap(), "B(2;0,1)", "--json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["answer"], "yes");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn cohomology_output() {
    let out = stdout(&bottfano(&["coh", "B(2;1,1)", "--c1"]));
    assert_eq!(out, "c1 = x1 + 3*x2\n");
    let out = stdout(&bottfano(&["coh", "B(2;1,1)", "--reduce", "x2^3"]));
    assert_eq!(out, "2*x1*x2^2 - x1^2*x2\n");
    let out = stdout(&bottfano(&["coh", "B(2;0,1)", "--degree", "2"]));
    assert_eq!(out, "H^2 basis (2): x1, x2\n");
    assert_eq!(stdout(&bottfano(&["chern", "B(1;0)"])), "1 + 2*x1 + 2*x2 + 4*x1*x2\n");
}

#[test]
fn iso_json_shape() {
    let out = bottfano(&["iso", "B(2;1,1)", "B(2;0,1)", "--c1", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["answer"], "no");
    assert!(v["witness"].is_null());
    assert_eq!(v["certificate"], "e2: 1 != 0");

    let out = bottfano(&["iso", "B(2;1,1)", "B(2;0,1)", "--json", "--bound", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["answer"], "yes");
    assert_eq!(v["witness"].as_array().unwrap().len(), 2);
}

#[test]
fn rigidity_sweep() {
    let out = bottfano(&["verify-rigidity", "--max-dim", "4"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("d=4: 45 pairs, 45 agreements, 0 counterexamples"), "{text}");
    assert!(text.ends_with("rigidity: confirmed\n"));
    // deterministic without --timing
    assert_eq!(text, stdout(&bottfano(&["verify-rigidity", "--max-dim", "4"])));

    let json: serde_json::Value = serde_json::from_slice(
        &bottfano(&["verify-rigidity", "--max-dim", "3", "--bound-policy", "fixed:3", "--json"]).stdout,
    )
    .unwrap();
    assert_eq!(json.as_array().unwrap().len(), 2);
    assert_eq!(json[1]["oracle_bound_used"], 3);
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let out = bottfano(&["fano", "B(2;1,,1)"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 1, column 7"), "{err}");
    assert_eq!(code(&bottfano(&["iso", "B(2;1,1)"])), 2);
    assert_eq!(code(&bottfano(&["enumerate", "--dim", "4", "--format", "xml"])), 2);
    assert_eq!(code(&bottfano(&["verify-rigidity", "--max-dim", "3", "--bound-policy", "manual"])), 2);
    assert_eq!(code(&bottfano(&["iso", "B(1;2)", "B(1;0)", "--c1"])), 2);
    assert_eq!(code(&bottfano(&["coh", "B(1;1)", "--reduce", "x3"])), 2);
    assert_eq!(code(&bottfano(&["bogus"])), 2);
}
