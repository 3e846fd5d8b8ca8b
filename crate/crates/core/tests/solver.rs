//! The solver driver, against scripted stand-ins and, when installed,
//! clingo.

use causal_lp::fuzz::corpus;
use causal_lp::*;

fn sh(script: &str) -> Vec<String> {
    vec!["sh".into(), "-c".into(), format!("cat > /dev/null; {script}")]
}

fn switches() -> (Program, Vec<GroundAtom>) {
    let doc = parse_theory(include_str!("../../../theories/switches.ct")).unwrap();
    let t = normalize(&doc.theory()).unwrap();
    (simplify(&translate(&t, &TranslateOptions::default()).unwrap()), doc.facts)
}

#[test]
fn reads_the_switch_answer() {
    let (p, facts) = switches();
    let text = emit_asp(&p, &facts, &EmitOptions::default()).unwrap();
    let cmd = sh("printf 'Answer: 1\\n-on1(hisswitch) on1(myswitch) -dark toggle(hisswitch) \
                  on0(hisswitch) on0(myswitch) u(hisswitch) u(myswitch)\\nSATISFIABLE\\n'");
    let got = run_solver(&text, &cmd, &p, &facts).unwrap();
    let expected = stable_models(&ground_program(&p).unwrap(), &facts, &Limits::default()).unwrap();
    assert_eq!(got, expected);
}

#[test]
fn reads_smodels_listing_in_canonical_order() {
    let doc = parse_theory(include_str!("../../../theories/choice.ct")).unwrap();
    let p = doc.program();
    let listing = "Answer: 1\\nStable Model: p(b) p(a) u(d) u(c) u(b) u(a)\\n\
                   Answer: 2\\nStable Model: p(b) p(a) q(d) u(d) u(c) u(b) u(a)\\n\
                   Answer: 3\\nStable Model: p(b) p(a) q(c) u(d) u(c) u(b) u(a)\\n\
                   Answer: 4\\nStable Model: p(b) p(a) q(d) q(c) u(d) u(c) u(b) u(a)\\nTrue\\n";
    let got = run_solver("", &sh(&format!("printf '{listing}'")), &p, &doc.facts).unwrap();
    let expected = stable_models(&ground_program(&p).unwrap(), &doc.facts, &Limits::default()).unwrap();
    assert_eq!(got.len(), 4);
    assert_eq!(got, expected);
}

#[test]
fn unsatisfiable_and_failures() {
    let doc = parse_theory("universe a. explainable p/0. false <= true.").unwrap();
    let t = normalize(&doc.theory()).unwrap();
    let p = translate(&t, &TranslateOptions::default()).unwrap();
    let none = run_solver("", &sh("echo UNSATISFIABLE; exit 20"), &p, &[]).unwrap();
    assert!(none.is_empty());

    let unsafe_rule = sh("echo 'error: unsafe variables in:' >&2; exit 65");
    assert!(matches!(run_solver("", &unsafe_rule, &p, &[]), Err(Error::Solver(_))));
    assert!(matches!(run_solver("", &sh("exit 1"), &p, &[]), Err(Error::Solver(_))));
    assert!(run_solver("", &["/nonexistent/solver".to_string()], &p, &[]).is_err());
    assert!(run_solver("", &[], &p, &[]).is_err());
    let stranger = sh("printf 'Answer: 1\\nzzz\\n'");
    assert!(matches!(run_solver("", &stranger, &p, &[]), Err(Error::UnknownAtom(_))));
}

fn clingo() -> Option<Vec<String>> {
    let ok = std::process::Command::new("clingo")
        .arg("--version")
        .output()
        .map(|o| o.status.success())
        .unwrap_or(false);
    ok.then(|| vec!["clingo".to_string(), "0".to_string()])
}

#[test]
fn clingo_agrees_with_the_enumerator() {
    let Some(cmd) = clingo() else {
        eprintln!("clingo not found; skipping");
        return;
    };
    let lim = Limits::default();
    let (p, facts) = switches();
    let text = emit_asp(&p, &facts, &EmitOptions::default()).unwrap();
    let expected = stable_models(&ground_program(&p).unwrap(), &facts, &lim).unwrap();
    assert_eq!(run_solver(&text, &cmd, &p, &facts).unwrap(), expected);

    for t in corpus(5, 200) {
        let p = translate(&t, &TranslateOptions::default()).unwrap();
        let text = emit_asp(&p, &[], &EmitOptions::default()).unwrap();
        let expected = stable_models(&p, &[], &lim).unwrap();
        assert_eq!(run_solver(&text, &cmd, &p, &[]).unwrap(), expected, "{text}");
    }
}
