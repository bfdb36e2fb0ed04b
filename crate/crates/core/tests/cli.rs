use steinberg_lab::cli::run_with;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("steinberg-lab").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn roots_constants_table() {
    let (code, out, _) = run(&["roots", "--type", "A", "--rank", "2", "--constants"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows.len(), 6);
    assert!(rows.contains(&"e1-e2\te2-e3\te1-e3\t+1"), "{out}");
}

#[test]
fn unsupported_system_is_a_usage_error() {
    let (code, _, err) = run(&["roots", "--type", "A", "--rank", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("error"));
    assert_eq!(run(&["no-such-command"]).0, 2);
}

#[test]
fn tame_symbol() {
    let (code, out, _) = run(&["k2m", "tame", "--symbol", "2,3", "--prime", "3"]);
    assert_eq!((code, out.trim()), (0, "2"));
    let (code, out, _) =
        run(&["k2m", "tame", "--batch", r#"[{"symbol": "2,3", "prime": 5}, {"symbol": "2,3", "prime": 3}]"#]);
    assert_eq!(code, 0);
    assert!(out.contains('1') && out.contains('2'), "{out}");
}

#[test]
fn normalize() {
    let (code, out, _) = run(&["k2m", "normalize", "--symbol", "3,-2; -2,3"]);
    assert_eq!((code, out.trim()), (0, "[]"));
}

#[test]
fn words() {
    let w = r#"[{"root": "e2-e3", "arg": "7"}, {"root": "e1-e2", "arg": "3"}]"#;
    let (code, out, _) = run(&["word", "reduce", "--word", w, "--ring", "int", "--phi", "A2"]);
    assert_eq!(code, 0);
    assert!(out.contains(r#"{"arg":"-21","root":[1,0,-1],"sign":1}"#), "{out}");
    let (code, _, _) = run(&["eval", "--word", w, "--ring", "int", "--phi", "A2", "--rep", "defining"]);
    assert_eq!(code, 0);
    let (code, _, _) = run(&["eval", "--word", w, "--ring", "int", "--phi", "A2", "--check-identity"]);
    assert_eq!(code, 1);
    let (code, out, _) = run(&["word", "symbol", "--ring", "Fp:7", "--phi", "A2", "--u", "3", "--v", "2"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn simplicial() {
    assert_eq!(run(&["simplicial", "check", "--nmax", "2", "--ring", "Z"]).0, 0);
    let w = r#"[{"root": "e1-e2", "arg": "t1^2 - t1"}]"#;
    let (code, out, err) = run(&["simplicial", "lift", "--word", w, "--ring", "Z[t1]", "--phi", "A2"]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains(r#""passed":true"#), "{out}");
    assert!(out.contains(r#"[[[1,1],"-1"]]"#), "{out}");
}

#[test]
fn patching() {
    let (code, out, _) = run(&["patch", "verify", "--relations", "--samples", "10"]);
    assert_eq!(code, 0, "{out}");
    let (code, out, err) = run(&["patch", "demo", "--word", "[]"]);
    assert_eq!(code, 0, "{out}{err}");
    let (code, out, _) = run(&["milnor-square", "--a", "2", "--x", "3", "--g", "3 + t/2"]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""round_trip":true"#), "{out}");
    assert_eq!(run(&["milnor-square", "--a", "2", "--x", "3", "--g", "5 + t"]).0, 2);
}

#[test]
fn selftest_quick() {
    let (code, out, _) = run(&["selftest", "--quick"]);
    assert_eq!(code, 0, "{out}");
}
