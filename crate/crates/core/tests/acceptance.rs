//! End-to-end acceptance checks, one line per criterion.
//!
//! Runs under `cargo test` without the libtest harness so that the report
//! is always printed. Exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use causal_lp::fuzz::{corpus, random_definite_theory, random_positive_program, rng};
use causal_lp::semantics::classical_models;
use causal_lp::*;

const EX: &str = include_str!("../../../theories/ex.ct");
const DEFINITION: &str = include_str!("../../../theories/definition.ct");
const CHOICE: &str = include_str!("../../../theories/choice.ct");
const SWITCHES: &str = include_str!("../../../theories/switches.ct");
const BADSWITCH: &str = include_str!("../../../theories/badswitch.ct");
const GOLDEN_CHOICE: &str = include_str!("golden/choice.lp");
const GOLDEN_SIMPLIFIED: &str = include_str!("golden/switches_simplified.lp");

const FUZZ_SEED: u64 = 20_091;
const FUZZ_CASES: usize = 1000;
const DEFINITE_CASES: usize = 500;
const POSITIVE_CASES: usize = 200;

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn load(text: &str) -> std::result::Result<(CausalTheory, Vec<GroundAtom>), String> {
    let doc = parse_theory(text).map_err(err)?;
    Ok((normalize(&doc.theory()).map_err(err)?, doc.facts))
}

fn stable_of(p: &Program, facts: &[GroundAtom]) -> Result<ModelSet> {
    stable_models(&ground_program(p)?, facts, &Limits::default())
}

fn tokens(m: &Interpretation, hats: &HatMap) -> BTreeSet<String> {
    m.render(hats).split_whitespace().map(str::to_string).collect()
}

/// Name, check and time limit.
type Criterion = (&'static str, fn() -> Check, Duration);

fn criterion1() -> Check {
    let (t, facts) = load(EX)?;
    let p = translate(&t, &TranslateOptions::default()).map_err(err)?;
    let lines: Vec<String> = p.rules.iter().map(|r| r.to_string()).collect();
    let expected = [
        "~~~q -> p",
        "~~p -> q_hat",
        "~(p & p_hat)",
        "~(~p & ~p_hat)",
        "~(q & q_hat)",
        "~(~q & ~q_hat)",
    ];
    ensure(lines == expected, || format!("translation {lines:?}"))?;
    let stable = stable_of(&p, &facts).map_err(err)?;
    ensure(stable.render(&p.hats) == "p -q\n", || format!("stable {:?}", stable.render(&p.hats)))?;
    let causal = causal_models(&t, &facts, &Limits::default()).map_err(err)?;
    ensure(causal.render(&p.hats) == "p\n", || format!("causal {:?}", causal.render(&p.hats)))?;
    Ok("two-rule translation, stable {p, -q}, causal {p}".into())
}

fn criterion2() -> Check {
    let (t, facts) = load(DEFINITION)?;
    let causal = causal_models(&ground_theory(&t).map_err(err)?, &facts, &Limits::default()).map_err(err)?;
    ensure(causal.render(&HatMap::default()) == "p(a)\n", || format!("causal {causal:?}"))?;

    // the explicit definition of p, grounded and solved classically
    let def = parse_formula("forall X: p(X) <-> X = a", &t.signature).map_err(err)?;
    let ground = ground_formula(&def, &t.signature, &Default::default()).map_err(err)?;
    let classical = classical_models(&[ground], &t.signature, &facts, &Limits::default()).map_err(err)?;
    ensure(classical == causal, || "causal models differ from the definition".into())?;

    let p = translate(&t, &TranslateOptions::default()).map_err(err)?;
    let stable = stable_of(&p, &facts).map_err(err)?;
    ensure(stable.len() == 1, || format!("{} stable models", stable.len()))?;
    let hats: BTreeSet<String> = stable.models[0]
        .true_atoms()
        .filter(|a| p.hats.is_hat(&a.predicate))
        .map(|a| a.args.join(","))
        .collect();
    ensure(hats == BTreeSet::from(["b".into(), "c".into()]), || format!("p_hat on {hats:?}"))?;
    Ok("one causal model p = {a}; p_hat = {b, c}".into())
}

fn criterion3() -> Check {
    let doc = parse_theory(CHOICE).map_err(err)?;
    let stable = stable_of(&doc.program(), &doc.facts).map_err(err)?;
    let extents: BTreeSet<Vec<String>> = stable
        .iter()
        .map(|m| {
            m.true_atoms()
                .filter(|a| a.predicate == "q")
                .map(|a| a.args[0].clone())
                .collect()
        })
        .collect();
    let expected: BTreeSet<Vec<String>> = [vec![], vec!["c"], vec!["d"], vec!["c", "d"]]
        .into_iter()
        .map(|v| v.into_iter().map(str::to_string).collect())
        .collect();
    ensure(stable.len() == 4 && extents == expected, || format!("q extents {extents:?}"))?;
    Ok("4 stable models, q in {}, {c}, {d}, {c,d}".into())
}

fn explainable_tokens(m: &Interpretation, t: &CausalTheory, hats: &HatMap) -> BTreeSet<String> {
    let keep = |p: &str| t.signature.is_explainable(p) || hats.is_hat(p);
    tokens(&m.project(keep), hats)
}

fn criterion4() -> Check {
    let expected_model: BTreeSet<String> = ["-on1(hisswitch)", "on1(myswitch)", "-dark"]
        .into_iter()
        .map(str::to_string)
        .collect();
    let (t, facts) = load(SWITCHES)?;
    let report = check_soundness(&t, &facts, &Limits::default()).map_err(err)?;
    ensure(report.passed(), || report.to_string())?;
    ensure(report.stable.len() == 1 && report.causal.len() == 1, || report.to_string())?;
    let got = explainable_tokens(&report.stable.models[0], &t, &report.hats);
    ensure(got == expected_model, || format!("model {got:?}"))?;

    // with the stuck switch in the language, its own inertia adds one atom
    let (t, facts) = load(BADSWITCH)?;
    let report = check_soundness(&t, &facts, &Limits::default()).map_err(err)?;
    ensure(report.passed() && report.stable.len() == 1, || report.to_string())?;
    let got = explainable_tokens(&report.stable.models[0], &t, &report.hats);
    let mut expected = expected_model.clone();
    expected.insert("-on1(badswitch)".into());
    ensure(got == expected, || format!("badswitch model {got:?}"))?;
    Ok("-on1(hisswitch) on1(myswitch) -dark; causal side agrees".into())
}

fn criterion5() -> Check {
    let legacy = EmitOptions {
        legacy: true,
        ..EmitOptions::default()
    };
    let doc = parse_theory(CHOICE).map_err(err)?;
    let choice = emit_asp(&doc.program(), &doc.facts, &legacy).map_err(err)?;
    ensure(choice == GOLDEN_CHOICE, || format!("choice:\n{choice}"))?;

    let (t, facts) = load(SWITCHES)?;
    let p = simplify(&translate(&t, &TranslateOptions::default()).map_err(err)?);
    let switches = emit_asp(&p, &facts, &legacy).map_err(err)?;
    let coherence = [":- on1(X), -on1(X).", ":- dark, -dark."];
    for c in coherence {
        ensure(switches.lines().any(|l| l == c), || format!("missing coherence constraint {c}"))?;
    }
    let stripped: String = switches
        .lines()
        .filter(|l| !coherence.contains(l))
        .map(|l| format!("{l}\n"))
        .collect();
    ensure(stripped == GOLDEN_SIMPLIFIED, || format!("simplified:\n{stripped}"))?;
    Ok("choice and simplified switch programs byte-identical (coherence constraints kept, 2 lines)".into())
}

fn criterion6() -> Check {
    let mut models = 0;
    for (i, t) in corpus(FUZZ_SEED, FUZZ_CASES).iter().enumerate() {
        let r = check_soundness(t, &[], &Limits::default()).map_err(err)?;
        ensure(r.passed(), || format!("case {i}: {r}"))?;
        models += r.causal.len();
    }
    Ok(format!("{FUZZ_CASES} theories PASS ({models} models in total)"))
}

fn same_stable(t: &CausalTheory, a: &TranslateOptions, b: &TranslateOptions) -> Result<bool> {
    let pa = translate(t, a)?;
    let pb = translate(t, b)?;
    Ok(stable_of(&pa, &[])?.same_models(&stable_of(&pb, &[])?))
}

fn criterion7() -> Check {
    let base = TranslateOptions::default();
    let kinds = [
        (RuleKind::C, TranslateOptions { c_via_d: true, ..base }),
        (RuleKind::L, TranslateOptions { l_via_d: true, ..base }),
        (RuleKind::S, TranslateOptions { s_via_d: true, ..base }),
    ];
    let mut counts = Vec::new();
    for (kind, opts) in kinds {
        let mut n = 0;
        for (i, t) in corpus(FUZZ_SEED, FUZZ_CASES).iter().enumerate() {
            if !t.rules.iter().any(|r| r.kind == kind) {
                continue;
            }
            n += 1;
            ensure(same_stable(t, &base, &opts).map_err(err)?, || {
                format!("{kind:?} translation check fails on case {i}")
            })?;
        }
        counts.push(format!("{kind:?}: {n}"));
    }
    Ok(format!("no mismatches ({})", counts.join(", ")))
}

fn criterion8() -> Check {
    let mut r = rng(FUZZ_SEED + 1);
    for i in 0..DEFINITE_CASES {
        let t = random_definite_theory(&mut r);
        let c = completion_models(&t, &[], &Limits::default()).map_err(err)?;
        let m = causal_models(&t, &[], &Limits::default()).map_err(err)?;
        ensure(c == m, || format!("case {i}: completion {} vs causal {}", c.len(), m.len()))?;
    }
    Ok(format!("{DEFINITE_CASES} definite theories agree"))
}

fn criterion9() -> Check {
    let mut r = rng(FUZZ_SEED + 2);
    for i in 0..POSITIVE_CASES {
        let p = random_positive_program(&mut r);
        let s = stable_models(&p, &[], &Limits::default()).map_err(err)?;
        let m = minimal_models(&p, &[], &Limits::default()).map_err(err)?;
        ensure(s == m, || format!("case {i}: {p}"))?;
    }
    Ok(format!("{POSITIVE_CASES} negation-free programs agree"))
}

fn criterion10() -> Check {
    for (i, t) in corpus(FUZZ_SEED, FUZZ_CASES).iter().enumerate() {
        let p = translate(t, &TranslateOptions::default()).map_err(err)?;
        let a = stable_of(&p, &[]).map_err(err)?;
        let b = stable_of(&simplify(&p), &[]).map_err(err)?;
        ensure(a == b, || format!("case {i}"))?;
    }
    Ok(format!("{FUZZ_CASES} programs keep their stable models"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("two-rule theory end to end", criterion1, Duration::from_secs(1)),
        ("definition over {a,b,c}", criterion2, Duration::from_secs(1)),
        ("choice program", criterion3, Duration::from_secs(1)),
        ("switches", criterion4, Duration::from_secs(5)),
        ("golden lparse output", criterion5, Duration::MAX),
        ("soundness fuzz", criterion6, Duration::from_secs(120)),
        ("per-kind translations", criterion7, Duration::MAX),
        ("completion oracle", criterion8, Duration::from_secs(60)),
        ("minimal models", criterion9, Duration::MAX),
        ("simplifier safety", criterion10, Duration::MAX),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let outcome = match result {
            Ok(detail) if elapsed <= *limit => format!("PASS {detail}"),
            Ok(detail) => format!("FAIL too slow ({limit:?}): {detail}"),
            Err(e) => format!("FAIL {e}"),
        };
        if outcome.starts_with("FAIL") {
            failed += 1;
        }
        println!("criterion {:>2} [{name}] {outcome} ({:.2?})", i + 1, elapsed);
    }
    if failed > 0 {
        eprintln!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}
