use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["contalg"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = contalg_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn analyze_z6() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z6.json");
    let (code, text, _) = run(&["analyze", "Z6", "--json", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(text.contains("zd degree: 2"), "{text}");
    let json: serde_json::Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(json["zdDegree"], 2);
    assert_eq!(json["primal"], false);
    assert_eq!(json["gammaDiameter"], 2);
    assert_eq!(json["predictedExtensionDiameter"], 2);
    assert_eq!(json["limits"]["degrees"], serde_json::json!([1, 2]));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "diam", "Z2xZ2", "--degrees", "1,2"]).0, 0);
    assert_eq!(run(&["monoid-demo", "torsion", "--ring", "Z3", "--order", "2"]).0, 1);
    assert_eq!(run(&["verify", "zpow", "Z6"]).0, 3);
    assert_eq!(run(&["analyze", "Z2[y]/(2y^2+1)"]).0, 2);
    assert_eq!(run(&["analyze", "Z6 x"]).0, 2);
    assert_eq!(run(&["verify", "nosuch", "Z6"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["dm", "Z4", "2*X^1 + 2", "q"]).0, 2);
    assert_eq!(run(&["analyze", "Z5000"]).0, 3);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn syntax_errors_report_position() {
    let (code, _, err) = run(&["analyze", "Z2[y"]);
    assert_eq!(code, 2);
    assert!(err.contains("byte 4") && err.contains("']'"), "{err}");
}

#[test]
fn torsion_demo_embeds_zero_product() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("demo.json");
    let (code, text, _) = run(&["monoid-demo", "torsion", "--ring", "Z3", "--order", "2", "--json", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(text.contains("zero_product"));
    let json: serde_json::Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(json["witnesses"][0]["check"], "zero_product");
    assert_eq!(json["witnesses"][0]["elements"], serde_json::json!(["X^1 + 2", "X^1 + 1"]));
}

#[test]
fn dot_export() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.dot");
    let (code, _, _) = run(&["graph", "Z2xZ4", "--dot", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("graph G {\n"));
    assert!(dot.trim_end().ends_with('}'));
    assert!(dot.contains("\"(0,1)\" -- \"(1,0)\";"), "{dot}");
    // Vertex lines precede edge lines and each appears once.
    let vertices: Vec<&str> = dot.lines().filter(|l| l.ends_with("\";")).filter(|l| !l.contains("--")).collect();
    assert_eq!(vertices.len(), 5);

    let (code, _, _) = run(&["graph", "Z4", "--poly", "--degree", "1", "--dot", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(std::fs::read_to_string(&path).unwrap().contains("\"2\" -- \"2*X\";"));
}

#[test]
fn dm_command() {
    let (code, text, _) = run(&["dm", "Z2[u,v]@3", "(u)*X + (v)", "(u)*X + (v)"]);
    assert_eq!(code, 0);
    assert!(text.contains("uv"), "{text}");
}

#[test]
fn cap_env_and_flag() {
    let bin = env!("CARGO_BIN_EXE_contalg");
    let status = |env: Option<&str>, args: &[&str]| {
        let mut cmd = Command::new(bin);
        cmd.args(args).env_remove("CONTALG_CAP");
        if let Some(v) = env {
            cmd.env("CONTALG_CAP", v);
        }
        cmd.output().unwrap().status.code().unwrap()
    };
    assert_eq!(status(None, &["analyze", "Z64"]), 0);
    assert_eq!(status(Some("16"), &["analyze", "Z64"]), 3);
    assert_eq!(status(Some("16"), &["analyze", "Z64", "--cap", "64"]), 0);
    assert_eq!(status(None, &["analyze", "Z64", "--cap", "8"]), 3);
}

#[test]
fn reports_are_stable() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    run(&["verify", "dm", "Z8", "--seed", "7", "--json", a.to_str().unwrap()]);
    run(&["verify", "dm", "Z8", "--seed", "7", "--json", b.to_str().unwrap()]);
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
}
