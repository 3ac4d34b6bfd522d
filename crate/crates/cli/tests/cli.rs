use std::io::Write as _;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["iwk".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = iwk_cli::run(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn adm_json_has_three_elements() {
    let (code, out, _) = run(&["--datum", "preset:GL2", "adm", "--mu", "1,0", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
}

#[test]
fn presets_listed() {
    let (code, out, _) = run(&["presets"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "GL2"));
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, err) = run(&["--datum", "preset:GL2", "adm", "--mu", "1"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("USAGE"), "{err}");
    assert_eq!(run(&["--datum", "preset:GL2", "adm", "--mu", "1,0", "--bogus"]).0, 2);
    assert_eq!(run(&["adm", "--mu", "1,0"]).0, 2);
    assert_eq!(run(&["--datum", "preset:GL2", "bgmu", "--mu", "1,0", "--format", "dot"]).0, 2);
    assert_eq!(run(&["--datum", "preset:GL2", "--level", "K=9", "adm-k", "--mu", "1,0"]).0, 2);
    assert_eq!(run(&["--datum", "preset:GL2", "components", "--mu", "1,0", "--b", "7"]).0, 2);
}

#[test]
fn computation_errors_exit_one() {
    let (code, _, err) = run(&["--datum", "preset:GL2", "adm", "--mu", "0,1"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("NOT_DOMINANT"), "{err}");
    let (code, _, err) = run(&["--datum", "preset:Nope", "tau", "--mu", "1"]);
    assert_eq!((code, err.starts_with("DATUM_ERROR")), (1, true), "{err}");
    let (code, _, err) = run(&["--datum", "preset:SL2", "--level", "K=0,1", "adm-k", "--mu", "1"]);
    assert_eq!((code, err.starts_with("K_INFINITE")), (1, true), "{err}");
    let (code, _, err) = run(&["oracle", "--suite", "nope"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn strata_dot_marks_basic() {
    let (code, out, _) = run(&["--datum", "preset:GL2", "strata", "--mu", "1,0", "--format", "dot"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph"));
    assert_eq!(out.matches("style=filled").count(), 1);
    assert_eq!(out.matches("rank=same").count(), 2);
}

#[test]
fn datum_files_and_preset_dir() {
    let dir = std::env::temp_dir().join(format!("iwk-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let spec = iwk_core::root_datum::preset("GL2").unwrap();
    let mut spec = spec;
    spec.name = "MyGL2".into();
    let path = dir.join("MyGL2.json");
    std::fs::File::create(&path).unwrap().write_all(serde_json::to_string(&spec).unwrap().as_bytes()).unwrap();
    let p = path.to_str().unwrap();
    let (code, out, _) = run(&["--datum", p, "adm", "--mu", "1,0", "--format", "json"]);
    assert_eq!(code, 0);
    let (_, builtin, _) = run(&["--datum", "preset:GL2", "adm", "--mu", "1,0", "--format", "json"]);
    assert_eq!(out, builtin);
    std::env::set_var(iwk_cli::input::PRESET_DIR_VAR, &dir);
    assert_eq!(run(&["--datum", "preset:MyGL2", "tau", "--mu", "1,0"]).0, 0);
    assert!(run(&["presets"]).1.lines().any(|l| l == "MyGL2"));
    std::env::remove_var(iwk_cli::input::PRESET_DIR_VAR);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn element_input_forms() {
    let (_, a, _) = run(&["--datum", "preset:GL2", "newton", "--x", "1,0:0", "--format", "json"]);
    let (_, b, _) = run(&["--datum", "preset:GL2", "newton", "--x", r#"{"trans":[1,0],"fin_word":[0]}"#, "--format", "json"]);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["newton_dominant"], serde_json::json!(["1/2", "1/2"]));
    assert_eq!(v["straight"], true);
}

#[test]
fn torsion_coordinates_after_semicolon() {
    let (code, _, err) = run(&["--datum", "preset:PGL2", "adm", "--mu", "1;0"]);
    assert_eq!(code, 2, "{err}");
}
