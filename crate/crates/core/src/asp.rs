//! Answer set programming text output and an external solver driver.
//!
//! A program rule `∀x(B → H)` is lowered into rules of the solver
//! language: conjunctions in the head split the rule, disjunctions in the
//! body split it too, negated head parts move into the body under double
//! negation, and a head `A ∨ ¬A` becomes the choice rule `{A}`. Formulas
//! under negation are put in classical disjunctive normal form and written
//! with `not` and `not not`. Rules with quantifiers or equality inside are
//! grounded first.
//!
//! Hat atoms `p̂(t)` are written `-p(t)`.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::io::Write as _;
use std::process::{Command, Stdio};

use indexmap::IndexMap;

use crate::ast::{Atom, Formula, GroundAtom, HatMap, Origin, Program, ProgramRule, Signature};
use crate::error::{Error, Result};
use crate::grounder::{bindings, ground_formula};
use crate::semantics::{AtomTable, ModelSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Naf {
    Pos,
    Not,
    NotNot,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BodyLit {
    pub naf: Naf,
    pub atom: Atom,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AspHead {
    /// Empty for a constraint.
    Disjunction(Vec<Atom>),
    Choice(Atom),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AspRule {
    pub head: AspHead,
    pub body: Vec<BodyLit>,
    /// Variables occurring in the rule, in order of the source universals.
    pub variables: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmitOptions {
    /// `#domain` declarations and pooled facts, as accepted by lparse.
    pub legacy: bool,
    /// Ground rules outside the emittable fragment instead of failing.
    pub ground_fallback: bool,
}

impl Default for EmitOptions {
    fn default() -> Self {
        EmitOptions {
            legacy: false,
            ground_fallback: true,
        }
    }
}

type Dnf = Vec<Vec<BodyLit>>;

fn not_emittable(f: &Formula) -> Error {
    Error::NotEmittable(f.to_string())
}

fn product(a: Dnf, b: Dnf) -> Dnf {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in &a {
        for y in &b {
            let mut c = x.clone();
            for l in y {
                if !c.contains(l) {
                    c.push(l.clone());
                }
            }
            out.push(c);
        }
    }
    out
}

/// Classical DNF of `f` (or of `¬f` when `positive` is false); an atom that
/// ends up positive becomes `pos`, a negated one `Naf::Not`.
fn classical(f: &Formula, positive: bool, pos: Naf) -> Result<Dnf> {
    let lit = |naf, a: &Atom| vec![vec![BodyLit { naf, atom: a.clone() }]];
    Ok(match (f, positive) {
        (Formula::Top, true) | (Formula::Bottom, false) => vec![vec![]],
        (Formula::Top, false) | (Formula::Bottom, true) => vec![],
        (Formula::Atom(a), true) => lit(pos, a),
        (Formula::Atom(a), false) => lit(Naf::Not, a),
        (Formula::Not(g), _) => classical(g, !positive, pos)?,
        (Formula::And(l, r), true) | (Formula::Or(l, r), false) => {
            product(classical(l, positive, pos)?, classical(r, positive, pos)?)
        }
        (Formula::Or(l, r), true) | (Formula::And(l, r), false) => {
            let mut d = classical(l, positive, pos)?;
            d.extend(classical(r, positive, pos)?);
            d
        }
        (Formula::Implies(l, r), _) => {
            classical(&l.as_ref().clone().not().or(r.as_ref().clone()), positive, pos)?
        }
        (Formula::Iff(l, r), _) => {
            let (l, r) = (l.as_ref().clone(), r.as_ref().clone());
            let both = l.clone().and(r.clone()).or(l.not().and(r.not()));
            classical(&both, positive, pos)?
        }
        (Formula::Equal(..) | Formula::Forall(..) | Formula::Exists(..), _) => {
            return Err(not_emittable(f))
        }
    })
}

/// DNF of a rule body outside negation.
fn body_dnf(f: &Formula) -> Result<Dnf> {
    Ok(match f {
        Formula::Top => vec![vec![]],
        Formula::Bottom => vec![],
        Formula::Atom(a) => vec![vec![BodyLit {
            naf: Naf::Pos,
            atom: a.clone(),
        }]],
        Formula::And(l, r) => product(body_dnf(l)?, body_dnf(r)?),
        Formula::Or(l, r) => {
            let mut d = body_dnf(l)?;
            d.extend(body_dnf(r)?);
            d
        }
        Formula::Not(g) => classical(g, false, Naf::NotNot)?,
        Formula::Implies(..) | Formula::Iff(..) => {
            return Err(Error::MalformedRule(format!("nested implication in `{f}`")))
        }
        Formula::Equal(..) | Formula::Forall(..) | Formula::Exists(..) => {
            return Err(not_emittable(f))
        }
    })
}

/// The head as a conjunction of clauses; each clause is a list of atoms
/// and negated formulas.
fn head_clauses(f: &Formula) -> Result<Vec<Vec<Formula>>> {
    Ok(match f {
        Formula::Top => vec![],
        Formula::Bottom => vec![vec![]],
        Formula::Atom(_) | Formula::Not(_) => vec![vec![f.clone()]],
        Formula::And(l, r) => {
            let mut c = head_clauses(l)?;
            c.extend(head_clauses(r)?);
            c
        }
        Formula::Or(l, r) => {
            let (ls, rs) = (head_clauses(l)?, head_clauses(r)?);
            let mut out = Vec::new();
            for a in &ls {
                for b in &rs {
                    out.push(a.iter().chain(b).cloned().collect());
                }
            }
            out
        }
        Formula::Implies(..) | Formula::Iff(..) => {
            return Err(Error::MalformedRule(format!("implication in head `{f}`")))
        }
        Formula::Equal(..) | Formula::Forall(..) | Formula::Exists(..) => {
            return Err(not_emittable(f))
        }
    })
}

fn rule_variables(universals: &[String], head: &AspHead, body: &[BodyLit]) -> Vec<String> {
    let mut seen = HashSet::new();
    let atoms = match head {
        AspHead::Disjunction(hs) => hs.iter().collect::<Vec<_>>(),
        AspHead::Choice(a) => vec![a],
    };
    for a in atoms.into_iter().chain(body.iter().map(|l| &l.atom)) {
        for t in &a.args {
            if let crate::ast::Term::Var(v) = t {
                seen.insert(v.clone());
            }
        }
    }
    universals.iter().filter(|v| seen.contains(*v)).cloned().collect()
}

/// Lowers one program rule; fails with [`Error::NotEmittable`] when the
/// rule contains quantifiers or equality.
pub fn lower(rule: &ProgramRule) -> Result<Vec<AspRule>> {
    let mut out = Vec::new();
    for clause in head_clauses(&rule.head)? {
        let mut positives: Vec<Atom> = Vec::new();
        let mut negated: Vec<Formula> = Vec::new();
        for d in clause {
            match d {
                Formula::Atom(a) => {
                    if !positives.contains(&a) {
                        positives.push(a)
                    }
                }
                Formula::Not(g) => negated.push(*g),
                _ => unreachable!("head clauses hold atoms and negations"),
            }
        }
        let choice = match (positives.as_slice(), negated.as_slice()) {
            ([a], [Formula::Atom(b)]) if a == b => Some(a.clone()),
            _ => None,
        };
        let (head, body) = match choice {
            Some(a) => (AspHead::Choice(a), rule.body.clone()),
            None => {
                let extra = negated.into_iter().map(Formula::double_neg);
                let body = Formula::conjunction(std::iter::once(rule.body.clone()).chain(extra));
                (AspHead::Disjunction(positives), body)
            }
        };
        let body = strip_top(body);
        let dnf = match &head {
            AspHead::Disjunction(h) if h.is_empty() => classical(&body, true, Naf::Pos)?,
            _ => body_dnf(&body)?,
        };
        for conj in dnf {
            let variables = rule_variables(&rule.universals, &head, &conj);
            out.push(AspRule {
                head: head.clone(),
                body: conj,
                variables,
            });
        }
    }
    Ok(out)
}

fn strip_top(f: Formula) -> Formula {
    match f {
        Formula::And(l, r) if *l == Formula::Top => strip_top(*r),
        Formula::And(l, r) if *r == Formula::Top => strip_top(*l),
        other => other,
    }
}

/// Lowers a rule, grounding it first when it is outside the fragment.
pub fn lower_or_ground(rule: &ProgramRule, sig: &Signature, opts: &EmitOptions) -> Result<Vec<AspRule>> {
    match lower(rule) {
        Err(Error::NotEmittable(_)) if opts.ground_fallback => {
            let universe: Vec<String> = sig.universe().map(str::to_string).collect();
            let mut out = Vec::new();
            for b in bindings(&rule.universals, &universe) {
                let ground = ProgramRule::new(
                    ground_formula(&rule.body, sig, &b)?,
                    ground_formula(&rule.head, sig, &b)?,
                );
                out.extend(lower(&ground)?);
            }
            Ok(out)
        }
        other => other,
    }
}

impl AspRule {
    /// The rule read back as a program rule with the same stable models.
    pub fn to_program_rule(&self) -> ProgramRule {
        let lit = |l: &BodyLit| {
            let a = Formula::Atom(l.atom.clone());
            match l.naf {
                Naf::Pos => a,
                Naf::Not => a.not(),
                Naf::NotNot => a.double_neg(),
            }
        };
        let head = match &self.head {
            AspHead::Choice(a) => Formula::Atom(a.clone()).or(Formula::Atom(a.clone()).not()),
            AspHead::Disjunction(hs) => Formula::disjunction(hs.iter().cloned().map(Formula::Atom)),
        };
        let mut r = ProgramRule::new(Formula::conjunction(self.body.iter().map(lit)), head);
        r.universals = self.variables.clone();
        r
    }

    /// `domain` is the domain predicate to guard each variable with, if any.
    pub fn render(&self, hats: &HatMap, domain: Option<&str>) -> String {
        let atom = |a: &Atom| render_atom(a, hats);
        let head = match &self.head {
            AspHead::Choice(a) => format!("{{{}}}", atom(a)),
            AspHead::Disjunction(hs) => hs.iter().map(atom).collect::<Vec<_>>().join(" | "),
        };
        let mut body: Vec<String> = Vec::new();
        if let Some(u) = domain {
            body.extend(self.variables.iter().map(|v| format!("{u}({v})")));
        }
        body.extend(self.body.iter().map(|l| match l.naf {
            Naf::Pos => atom(&l.atom),
            Naf::Not => format!("not {}", atom(&l.atom)),
            Naf::NotNot => format!("not not {}", atom(&l.atom)),
        }));
        match (head.is_empty(), body.is_empty()) {
            (true, true) => ":- #true.".to_string(),
            (false, true) => format!("{head}."),
            (_, false) => format!("{head}{}:- {}.", if head.is_empty() { "" } else { " " }, body.join(", ")),
        }
    }
}

fn render_atom(a: &Atom, hats: &HatMap) -> String {
    match hats.base_of(&a.predicate) {
        Some(base) => format!("-{}", Atom::new(base, a.args.clone())),
        None => a.to_string(),
    }
}

/// `u`, or `u_`, `u__`, ... if taken.
pub fn domain_predicate(sig: &Signature) -> String {
    let mut name = "u".to_string();
    while sig.arity(&name).is_some() {
        name.push('_');
    }
    name
}

fn pooled(pred: &str, args: &[&str]) -> String {
    format!("{pred}({}).", args.join(";"))
}

/// The program with the domain predicate, its rules and the extensional
/// facts.
///
/// Programs translated from causal theories are laid out in blocks, one per
/// group of rules defining new explainable predicates, each closed by the
/// completeness constraints of those predicates. Other programs are written
/// without blank lines.
pub fn emit_asp(p: &Program, facts: &[GroundAtom], opts: &EmitOptions) -> Result<String> {
    let u = domain_predicate(&p.signature);
    let universe: Vec<&str> = p.signature.universe().collect();

    let mut lowered = Vec::with_capacity(p.rules.len());
    for r in &p.rules {
        lowered.push((r.origin.clone(), lower_or_ground(r, &p.signature, opts)?));
    }

    let mut header = Vec::new();
    if opts.legacy {
        header.push(pooled(&u, &universe));
        let mut vars: Vec<&String> = Vec::new();
        for v in lowered.iter().flat_map(|(_, rs)| rs.iter().flat_map(|r| &r.variables)) {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        header.extend(vars.iter().map(|v| format!("#domain {u}({v}).")));
    } else {
        header.extend(universe.iter().map(|c| format!("{u}({c}).")));
    }

    let guard = (!opts.legacy).then_some(u.as_str());
    let sectioned = p.rules.iter().any(|r| r.origin != Origin::Input);
    let mut sections: Vec<Vec<String>> = Vec::new();
    let mut introduced: IndexMap<String, usize> = IndexMap::new();
    for (origin, rules) in &lowered {
        let lines = rules.iter().map(|r| r.render(&p.hats, guard));
        let target = match origin {
            Origin::Rule { defines, .. } => {
                if sections.is_empty() || defines.iter().any(|d| !introduced.contains_key(d)) {
                    sections.push(Vec::new());
                }
                let idx = sections.len() - 1;
                for d in defines {
                    introduced.entry(d.clone()).or_insert(idx);
                }
                idx
            }
            Origin::Completeness(pred) => match introduced.get(pred) {
                Some(&idx) => idx,
                None => {
                    sections.push(Vec::new());
                    introduced.insert(pred.clone(), sections.len() - 1);
                    sections.len() - 1
                }
            },
            Origin::Input => {
                if sections.is_empty() {
                    sections.push(Vec::new());
                }
                sections.len() - 1
            }
        };
        sections[target].extend(lines);
    }

    let mut fact_lines = Vec::new();
    if opts.legacy {
        let mut groups: IndexMap<&str, Vec<&GroundAtom>> = IndexMap::new();
        for f in facts {
            groups.entry(&f.predicate).or_default().push(f);
        }
        for (pred, atoms) in groups {
            if atoms.iter().all(|a| a.args.len() == 1) {
                let args: Vec<&str> = atoms.iter().map(|a| a.args[0].as_str()).collect();
                fact_lines.push(pooled(pred, &args));
            } else {
                fact_lines.extend(atoms.iter().map(|a| format!("{a}.")));
            }
        }
    } else {
        fact_lines.extend(facts.iter().map(|f| format!("{f}.")));
    }

    let mut blocks = vec![header];
    if sectioned {
        blocks.extend(sections);
        blocks.push(fact_lines);
    } else {
        let mut body: Vec<String> = sections.into_iter().flatten().collect();
        body.extend(fact_lines);
        blocks[0].extend(body);
    }
    let mut out = String::new();
    for (i, block) in blocks.iter().filter(|b| !b.is_empty()).enumerate() {
        if i > 0 {
            out.push('\n');
        }
        for line in block {
            let _ = writeln!(out, "{line}");
        }
    }
    Ok(out)
}

/// Parses one solver answer line; `-p(t)` is read as the hat atom of `p`.
/// Atoms of the domain predicate `skip` are dropped.
pub fn parse_answer(line: &str, hats: &HatMap, skip: &str) -> Result<Vec<GroundAtom>> {
    let mut out = Vec::new();
    for tok in line.split_whitespace() {
        let (neg, rest) = match tok.strip_prefix('-') {
            Some(r) => (true, r),
            None => (false, tok),
        };
        let (name, args) = match rest.find('(') {
            Some(i) => {
                let inner = rest[i + 1..]
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Solver(format!("cannot parse atom `{tok}`")))?;
                (&rest[..i], inner.split(',').map(str::to_string).collect())
            }
            None => (rest, Vec::new()),
        };
        if name.is_empty() {
            return Err(Error::Solver(format!("cannot parse atom `{tok}`")));
        }
        if !neg && name == skip {
            continue;
        }
        let pred = if neg {
            hats.hat(name)
                .ok_or_else(|| Error::Solver(format!("`{tok}` is not a strongly negated explainable atom")))?
        } else {
            name
        };
        out.push(GroundAtom::new(pred, args));
    }
    Ok(out)
}

/// Answer lines of clingo (`Answer: n` followed by the model) and smodels
/// (`Stable Model: ...`) output.
pub fn answer_lines(output: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut lines = output.lines();
    while let Some(line) = lines.next() {
        if line.starts_with("Answer:") {
            let next = lines.next().unwrap_or("");
            out.push(next.strip_prefix("Stable Model:").unwrap_or(next).trim());
        } else if let Some(rest) = line.strip_prefix("Stable Model:") {
            out.push(rest.trim());
        }
    }
    out
}

/// Runs `command` (program and arguments) on `asp_text` and reads its
/// answer sets as interpretations over the atoms of `p`.
pub fn run_solver(asp_text: &str, command: &[String], p: &Program, facts: &[GroundAtom]) -> Result<ModelSet> {
    let (prog, args) = command
        .split_first()
        .ok_or_else(|| Error::Solver("empty solver command".into()))?;
    let mut child = Command::new(prog)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .map_err(|e| Error::Solver(format!("cannot start `{prog}`: {e}")))?;
    {
        let mut stdin = child.stdin.take().expect("stdin is piped");
        // a solver may exit before reading everything; its output decides
        let _ = stdin.write_all(asp_text.as_bytes());
    }
    let out = child.wait_with_output()?;
    let stdout = String::from_utf8_lossy(&out.stdout);
    let stderr = String::from_utf8_lossy(&out.stderr);
    if stdout.contains("unsafe") || stderr.contains("unsafe") {
        return Err(Error::Solver(format!("safety error: {}", stderr.trim())));
    }
    let answers = answer_lines(&stdout);
    let unsat = stdout.contains("UNSATISFIABLE") || stdout.contains("False");
    if answers.is_empty() && !unsat {
        let status = out.status;
        return Err(Error::Solver(format!(
            "no answer sets in output ({status}): {}",
            stderr.trim()
        )));
    }

    let table = AtomTable::new(&p.signature, facts)?;
    let skip = domain_predicate(&p.signature);
    let mut models = Vec::new();
    for line in answers {
        let atoms = parse_answer(line, &p.hats, &skip)?;
        for a in &atoms {
            if table.slot(a).is_none() {
                return Err(Error::UnknownAtom(a.to_string()));
            }
        }
        let i = table
            .atoms()
            .map(|(a, _)| (a.clone(), atoms.contains(a)))
            .collect();
        if !models.contains(&i) {
            models.push(i);
        }
    }
    let all = ModelSet {
        models,
        projection: None,
    };
    let mut sorted = all.project(|_| true, "");
    sorted.projection = None;
    Ok(sorted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normalizer::normalize;
    use crate::parser::parse_theory;
    use crate::translator::{simplify, translate, TranslateOptions};

    fn lines(rs: &[AspRule], hats: &HatMap) -> Vec<String> {
        rs.iter().map(|r| r.render(hats, None)).collect()
    }

    fn rule(text: &str) -> ProgramRule {
        let doc = parse_theory(&format!("universe a. intensional p/0, q/0, r/0. rule {text}")).unwrap();
        doc.program_rules[0].clone()
    }

    #[test]
    fn rules_in_the_fragment() {
        let h = HatMap::default();
        assert_eq!(lines(&lower(&rule("p & ~q -> r.")).unwrap(), &h), ["r :- p, not q."]);
        assert_eq!(lines(&lower(&rule("~~p -> r.")).unwrap(), &h), ["r :- not not p."]);
        assert_eq!(lines(&lower(&rule("~~~p -> r.")).unwrap(), &h), ["r :- not p."]);
        assert_eq!(lines(&lower(&rule("p.")).unwrap(), &h), ["p."]);
        assert_eq!(lines(&lower(&rule("~~true -> p.")).unwrap(), &h), ["p."]);
    }

    #[test]
    fn splitting_and_moving() {
        let h = HatMap::default();
        assert_eq!(lines(&lower(&rule("p | q -> r & p.")).unwrap(), &h), [
            "r :- p.", "r :- q.", "p :- p.", "p :- q."
        ]);
        assert_eq!(lines(&lower(&rule("r -> p | ~q.")).unwrap(), &h), ["p :- r, not not q."]);
        assert_eq!(lines(&lower(&rule("r -> p | ~p.")).unwrap(), &h), ["{p} :- r."]);
        assert_eq!(lines(&lower(&rule("r -> p | q.")).unwrap(), &h), ["p | q :- r."]);
        assert_eq!(lines(&lower(&rule("r -> p & q | r.")).unwrap(), &h), ["p | r :- r.", "q | r :- r."]);
        assert!(lower(&rule("p -> true.")).unwrap().is_empty());
        assert!(lower(&rule("false -> p.")).unwrap().is_empty());
    }

    #[test]
    fn constraints_are_classical() {
        let h = HatMap::default();
        assert_eq!(lines(&lower(&rule("~(p & q).")).unwrap(), &h), [":- p, q."]);
        assert_eq!(lines(&lower(&rule("~(~p & ~q).")).unwrap(), &h), [":- not p, not q."]);
        assert_eq!(lines(&lower(&rule("~true.")).unwrap(), &h), [":- #true."]);
        assert_eq!(lines(&lower(&rule("p -> false.")).unwrap(), &h), [":- p."]);
        assert_eq!(lines(&lower(&rule("~~p -> ~q.")).unwrap(), &h), [":- p, q."]);
    }

    #[test]
    fn quantified_rules_need_grounding() {
        let doc = parse_theory("universe a, b. intensional p/1, q/0. rule (exists X: p(X)) -> q.").unwrap();
        let r = &doc.program_rules[0];
        assert!(matches!(lower(r), Err(Error::NotEmittable(_))));
        let g = lower_or_ground(r, &doc.signature, &EmitOptions::default()).unwrap();
        assert_eq!(lines(&g, &HatMap::default()), ["q :- p(a).", "q :- p(b)."]);
        let strict = EmitOptions {
            ground_fallback: false,
            ..EmitOptions::default()
        };
        assert!(lower_or_ground(r, &doc.signature, &strict).is_err());
    }

    #[test]
    fn modern_domain_guards() {
        let doc = parse_theory(
            "universe a, b, c, d. extensional p/1. intensional q/1. fact p(a), p(b).
             rule forall X: ~p(X) -> q(X) | ~q(X).",
        )
        .unwrap();
        let text = emit_asp(&doc.program(), &doc.facts, &EmitOptions::default()).unwrap();
        assert_eq!(
            text,
            "u(a).\nu(b).\nu(c).\nu(d).\n{q(X)} :- u(X), not p(X).\np(a).\np(b).\n"
        );
    }

    #[test]
    fn empty_program_is_domain_only() {
        let doc = parse_theory("universe a, b. intensional q/0.").unwrap();
        let text = emit_asp(&doc.program(), &[], &EmitOptions::default()).unwrap();
        assert_eq!(text, "u(a).\nu(b).\n");
        let legacy = EmitOptions {
            legacy: true,
            ..EmitOptions::default()
        };
        assert_eq!(emit_asp(&doc.program(), &[], &legacy).unwrap(), "u(a;b).\n");
    }

    #[test]
    fn domain_name_avoids_collisions() {
        let doc = parse_theory("universe a. intensional u/1, u_/0.").unwrap();
        assert_eq!(domain_predicate(&doc.signature), "u__");
    }

    #[test]
    fn hats_are_strong_negation() {
        let t = normalize(
            &parse_theory("universe a. explainable p/0, q/0. p <= ~q. ~q <= p.")
                .unwrap()
                .theory(),
        )
        .unwrap();
        let p = simplify(&translate(&t, &TranslateOptions::default()).unwrap());
        let text = emit_asp(&p, &[], &EmitOptions::default()).unwrap();
        assert_eq!(
            text,
            "u(a).\n\np :- not q.\n:- p, -p.\n:- not p, not -p.\n\n-q :- not -p.\n:- q, -q.\n:- not q, not -q.\n"
        );
    }

    #[test]
    fn answer_parsing() {
        let mut sig = Signature::new();
        sig.add_constant("a");
        sig.add_explainable("on1", 1).unwrap();
        sig.add_explainable("dark", 0).unwrap();
        let hats = HatMap::for_signature(&sig);
        let atoms = parse_answer("-on1(hisswitch) on1(myswitch) -dark u(a)", &hats, "u").unwrap();
        let shown: Vec<String> = atoms.iter().map(|a| a.to_string()).collect();
        assert_eq!(shown, ["on1_hat(hisswitch)", "on1(myswitch)", "dark_hat"]);
        assert!(parse_answer("-zzz", &hats, "u").is_err());
        assert!(parse_answer("p(a", &hats, "u").is_err());
    }

    #[test]
    fn answer_line_formats() {
        let clingo = "clingo version 5\nReading from stdin\nSolving...\nAnswer: 1\np q\nAnswer: 2\n\nSATISFIABLE\n";
        assert_eq!(answer_lines(clingo), ["p q", ""]);
        let smodels = "smodels version 2.34. Reading...done\nAnswer: 1\nStable Model: p(b) q(c) \nTrue\n";
        assert_eq!(answer_lines(smodels), ["p(b) q(c)"]);
    }
}
