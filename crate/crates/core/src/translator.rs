//! From classified causal theories to logic programs.
//!
//! Each explainable predicate `p` gets a fresh predicate `p̂` (see
//! [`HatMap`]) standing for its negation. Rules are translated one by one
//! according to their kind and the completeness constraints tie `p̂` to
//! `¬p`. The result is definition-faithful; [`simplify`] is a separate,
//! opt-in pass.

use crate::ast::{
    Atom, CausalRule, CausalTheory, Formula, HatMap, Origin, Program, ProgramRule, RuleKind,
    Signature, Term,
};
use crate::error::{Error, Result};
use crate::normalizer::{head_shape, HeadShape, Literal, LiteralAtom};

/// Which rule kinds are routed through `tr_d` instead of their dedicated
/// translation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TranslateOptions {
    pub c_via_d: bool,
    pub l_via_d: bool,
    pub s_via_d: bool,
}

impl TranslateOptions {
    /// Every rule goes through `tr_d`.
    pub fn all_via_d() -> Self {
        TranslateOptions {
            c_via_d: true,
            l_via_d: true,
            s_via_d: true,
        }
    }
}

fn explainable_atom(l: &Literal) -> Result<&Atom> {
    match &l.atom {
        LiteralAtom::Atom(a) => Ok(a),
        LiteralAtom::Equal(..) => Err(Error::Unclassifiable {
            head: l.to_formula().to_string(),
            reason: "equality is never explainable".into(),
        }),
    }
}

fn hat(h: &HatMap, a: &Atom) -> Result<Formula> {
    h.hat_atom(a)
        .map(Formula::Atom)
        .ok_or_else(|| Error::Unclassifiable {
            head: a.to_string(),
            reason: format!("`{}` is not explainable", a.predicate),
        })
}

/// `tr_c[⊥ ⇐ G] = ũ¬G`
pub fn tr_c(r: &CausalRule) -> ProgramRule {
    ProgramRule::fact(r.body.clone().not())
}

/// `tr_l[p(t) ⇐ G] = ũ(¬¬G → p(t))`, `tr_l[¬p(t) ⇐ G] = ũ(¬¬G → p̂(t))`
pub fn tr_l(r: &CausalRule, h: &HatMap) -> Result<ProgramRule> {
    let lit = match head_shape(&r.head)? {
        HeadShape::Literal(l) => l,
        _ => return Err(Error::Unclassified),
    };
    let atom = explainable_atom(&lit)?;
    let head = if lit.positive {
        Formula::Atom(atom.clone())
    } else {
        hat(h, atom)?
    };
    Ok(ProgramRule::new(r.body.clone().double_neg(), head))
}

/// The four rules for a synonymity rule `L1 ↔ L2 ⇐ G`.
pub fn tr_s(r: &CausalRule, h: &HatMap) -> Result<Vec<ProgramRule>> {
    let (l1, l2) = match head_shape(&r.head)? {
        HeadShape::Iff(a, b) => (a, b),
        _ => return Err(Error::Unclassified),
    };
    let (a1, a2) = (explainable_atom(&l1)?, explainable_atom(&l2)?);
    let (p1, p2) = (Formula::Atom(a1.clone()), Formula::Atom(a2.clone()));
    let (h1, h2) = (hat(h, a1)?, hat(h, a2)?);
    let g = r.body.clone().double_neg();
    let imp = |from: &Formula, to: &Formula| ProgramRule::new(g.clone().and(from.clone()), to.clone());
    Ok(if l1.positive == l2.positive {
        vec![imp(&p1, &p2), imp(&p2, &p1), imp(&h1, &h2), imp(&h2, &h1)]
    } else {
        vec![imp(&h1, &p2), imp(&p2, &h1), imp(&p1, &h2), imp(&h2, &p1)]
    })
}

/// `tr_d` of a disjunction of literals (`⊥` and single literals included).
pub fn tr_d(r: &CausalRule, h: &HatMap) -> Result<ProgramRule> {
    let lits = match head_shape(&r.head)? {
        HeadShape::Bottom => Vec::new(),
        HeadShape::Literal(l) => vec![l],
        HeadShape::Disjunction(ls) => ls,
        _ => return Err(Error::Unclassified),
    };
    let mut antecedent = vec![r.body.clone().double_neg()];
    let mut consequent = Vec::new();
    for l in &lits {
        let a = explainable_atom(l)?;
        let (p, ph) = (Formula::Atom(a.clone()), hat(h, a)?);
        if l.positive {
            antecedent.push(ph.clone().or(ph.not()));
            consequent.push(p);
        } else {
            antecedent.push(p.clone().or(p.not()));
            consequent.push(ph);
        }
    }
    Ok(ProgramRule::new(
        Formula::conjunction(antecedent),
        Formula::disjunction(consequent),
    ))
}

/// `tr_d` of the two D-rules `L1 ∨ L̄2 ⇐ G` and `L̄1 ∨ L2 ⇐ G` equivalent to
/// the synonymity rule `L1 ↔ L2 ⇐ G`.
pub fn translate_s_as_d(r: &CausalRule, h: &HatMap) -> Result<Vec<ProgramRule>> {
    let (l1, l2) = match head_shape(&r.head)? {
        HeadShape::Iff(a, b) => (a, b),
        _ => return Err(Error::Unclassified),
    };
    let d = |a: &Literal, b: &Literal| {
        CausalRule::new(a.to_formula().or(b.to_formula()), r.body.clone()).with_kind(RuleKind::D)
    };
    Ok(vec![
        tr_d(&d(&l1, &l2.complement()), h)?,
        tr_d(&d(&l1.complement(), &l2), h)?,
    ])
}

/// Variables `X` (arity 1) or `X1..Xk`.
fn fresh_vars(arity: usize) -> Vec<Term> {
    match arity {
        1 => vec![Term::var("X")],
        k => (1..=k).map(|i| Term::var(format!("X{i}"))).collect(),
    }
}

/// `∀x¬(p(x) ∧ p̂(x))` and `∀x¬(¬p(x) ∧ ¬p̂(x))` for each explainable `p`.
pub fn completeness_constraints(sig: &Signature, h: &HatMap) -> Vec<ProgramRule> {
    let mut out = Vec::new();
    for (p, ph) in h.iter() {
        let arity = sig.arity(p).unwrap_or(0);
        let args = fresh_vars(arity);
        let a = Formula::atom(p, args.clone());
        let ah = Formula::atom(ph, args);
        let origin = Origin::Completeness(p.to_string());
        out.push(ProgramRule::fact(a.clone().and(ah.clone()).not()).with_origin(origin.clone()));
        out.push(ProgramRule::fact(a.not().and(ah.not()).not()).with_origin(origin));
    }
    out
}

fn head_predicates(r: &CausalRule, sig: &Signature) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    r.head.for_each_atom(&mut |a| {
        if sig.is_explainable(&a.predicate) && !out.contains(&a.predicate) {
            out.push(a.predicate.clone());
        }
    });
    out
}

/// `tr[C, L, S, D]`: per-rule translations in rule order, then the
/// completeness constraints. Intensional predicates are the explainable
/// ones and their hats.
pub fn translate(t: &CausalTheory, opts: &TranslateOptions) -> Result<Program> {
    let hats = HatMap::for_signature(&t.signature);
    let mut sig = t.signature.clone();
    for (p, ph) in hats.iter() {
        sig.declare_predicate(ph, t.signature.arity(p).unwrap_or(0))?;
    }
    let mut rules = Vec::new();
    for (index, r) in t.rules.iter().enumerate() {
        let translated = match r.kind {
            RuleKind::Unclassified => return Err(Error::Unclassified),
            RuleKind::C if !opts.c_via_d => vec![tr_c(r)],
            RuleKind::L if !opts.l_via_d => vec![tr_l(r, &hats)?],
            RuleKind::S if opts.s_via_d => translate_s_as_d(r, &hats)?,
            RuleKind::S => tr_s(r, &hats)?,
            RuleKind::C | RuleKind::L | RuleKind::D => vec![tr_d(r, &hats)?],
        };
        let origin = Origin::Rule {
            index,
            defines: head_predicates(r, &t.signature),
        };
        rules.extend(translated.into_iter().map(|pr| pr.with_origin(origin.clone())));
    }
    rules.extend(completeness_constraints(&t.signature, &hats));
    let intensional = t
        .signature
        .explainable()
        .map(str::to_string)
        .chain(hats.iter().map(|(_, h)| h.to_string()))
        .collect();
    Ok(Program {
        signature: sig,
        rules,
        intensional,
        hats,
    })
}

/// Replaces every atom in rule heads by its hat and every hat by its base.
/// The result is deliberately wrong; it exists to exercise the failure path
/// of the soundness check.
#[doc(hidden)]
pub fn swap_hat_heads(p: &Program) -> Program {
    let swap = |a: &Atom| {
        let pred = match (p.hats.hat(&a.predicate), p.hats.base_of(&a.predicate)) {
            (Some(h), _) => h,
            (_, Some(b)) => b,
            _ => &a.predicate,
        };
        Formula::atom(pred, a.args.clone())
    };
    let rules = p
        .rules
        .iter()
        .map(|r| ProgramRule {
            head: r.head.map_atoms(&mut |a| swap(a)),
            ..r.clone()
        })
        .collect();
    Program {
        rules,
        ..p.clone()
    }
}

struct Simplifier<'a> {
    program: &'a Program,
    /// Explainable predicates whose completeness constraints are present.
    constrained: Vec<String>,
}

impl Simplifier<'_> {
    fn non_intensional(&self, f: &Formula) -> bool {
        !f.mentions_predicate(|p| self.program.is_intensional(p))
    }

    fn simp(&self, f: &Formula) -> Formula {
        let mut cur = f.clone();
        loop {
            let next = self.step(&cur);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    fn step(&self, f: &Formula) -> Formula {
        // ¬¬¬F ⇒ ¬F, before the inner double negation is touched
        if let Formula::Not(a) = f {
            if let Formula::Not(b) = a.as_ref() {
                if let Formula::Not(c) = b.as_ref() {
                    return self.step(&c.as_ref().clone().not());
                }
            }
        }
        let f = match f {
            Formula::Not(g) => self.step(g).not(),
            Formula::And(l, r) => self.step(l).and(self.step(r)),
            Formula::Or(l, r) => self.step(l).or(self.step(r)),
            Formula::Implies(l, r) => self.step(l).implies(self.step(r)),
            Formula::Iff(l, r) => self.step(l).iff(self.step(r)),
            Formula::Forall(v, g) => Formula::forall(v.clone(), self.step(g)),
            Formula::Exists(v, g) => Formula::exists(v.clone(), self.step(g)),
            other => other.clone(),
        };
        self.local(f)
    }

    fn local(&self, f: Formula) -> Formula {
        match f {
            Formula::And(l, r) if *l == Formula::Top => *r,
            Formula::And(l, r) if *r == Formula::Top => *l,
            Formula::Not(ref a) => match a.as_ref() {
                Formula::Not(inner) => self.double_negation(inner),
                _ => f,
            },
            other => other,
        }
    }

    fn double_negation(&self, inner: &Formula) -> Formula {
        match inner {
            Formula::Not(_) => inner.clone(),
            g if self.non_intensional(g) => g.clone(),
            Formula::And(l, r) => l.as_ref().clone().double_neg().and(r.as_ref().clone().double_neg()),
            Formula::Atom(a) if self.constrained.contains(&a.predicate) => {
                let hat = self.program.hats.hat_atom(a).expect("constrained predicates have hats");
                Formula::Atom(hat).not()
            }
            g => g.clone().double_neg(),
        }
    }
}

/// Rewrites that keep the set of stable models:
///
/// * `¬¬¬F ⇒ ¬F`
/// * `¬¬F ⇒ F` when `F` has no intensional predicate
/// * `¬¬(F ∧ G) ⇒ ¬¬F ∧ ¬¬G`
/// * `¬¬p(t) ⇒ ¬p̂(t)` when both completeness constraints for `p` are rules
///   of the program
/// * `⊤ ∧ F ⇒ F`, `F ∧ ⊤ ⇒ F`, and a `⊤` body is dropped.
pub fn simplify(p: &Program) -> Program {
    let cc = completeness_constraints(&p.signature, &p.hats);
    let constrained = p
        .hats
        .iter()
        .map(|(b, _)| b)
        .filter(|b| {
            cc.iter()
                .filter(|r| r.origin == Origin::Completeness(b.to_string()))
                .all(|r| p.rules.contains(r))
        })
        .map(str::to_string)
        .collect();
    let s = Simplifier {
        program: p,
        constrained,
    };
    let rules = p
        .rules
        .iter()
        .map(|r| {
            let body = s.simp(&r.body);
            let head = s.simp(&r.head);
            let mut out = ProgramRule::new(body, head).with_origin(r.origin.clone());
            // keep quantified variables that vanished from the formula
            if out.universals != r.universals
                && out.universals.iter().all(|v| r.universals.contains(v))
            {
                out.universals = r
                    .universals
                    .iter()
                    .filter(|v| out.universals.contains(v))
                    .cloned()
                    .collect();
            }
            out
        })
        .collect();
    Program {
        rules,
        ..p.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normalizer::normalize;
    use crate::parser::parse_theory;

    fn theory(text: &str) -> CausalTheory {
        normalize(&parse_theory(text).unwrap().theory()).unwrap()
    }

    fn lines(p: &Program) -> Vec<String> {
        p.rules.iter().map(|r| r.to_string()).collect()
    }

    const EX: &str = "universe a. explainable p/0, q/0. p <= ~q. ~q <= p.";

    #[test]
    fn ex_translates_to_six_rules() {
        let p = translate(&theory(EX), &TranslateOptions::default()).unwrap();
        assert_eq!(
            lines(&p),
            [
                "~~~q -> p",
                "~~p -> q_hat",
                "~(p & p_hat)",
                "~(~p & ~p_hat)",
                "~(q & q_hat)",
                "~(~q & ~q_hat)",
            ]
        );
        assert_eq!(p.intensional, ["p", "q", "p_hat", "q_hat"]);
    }

    #[test]
    fn ex_simplifies() {
        let p = simplify(&translate(&theory(EX), &TranslateOptions::default()).unwrap());
        assert_eq!(&lines(&p)[..2], ["~q -> p", "~p_hat -> q_hat"]);
    }

    #[test]
    fn example_two_pre_and_post_simplification() {
        let t = theory("universe a. explainable p/1. p(a) <= true. ~p(X) <= ~p(X).");
        let p = translate(&t, &TranslateOptions::default()).unwrap();
        assert_eq!(
            lines(&p),
            [
                "~~true -> p(a)",
                "forall X: ~~~p(X) -> p_hat(X)",
                "forall X: ~(p(X) & p_hat(X))",
                "forall X: ~(~p(X) & ~p_hat(X))",
            ]
        );
        let s = simplify(&p);
        assert_eq!(
            lines(&s),
            [
                "p(a)",
                "forall X: ~p(X) -> p_hat(X)",
                "forall X: ~(p(X) & p_hat(X))",
                "forall X: ~(~p(X) & ~p_hat(X))",
            ]
        );
    }

    const TOGGLE: &str = "universe myswitch, hisswitch.
        explainable on1/1. extensional on0/1, toggle/1.
        on1(X) <= toggle(X) & ~on0(X).
        ~on1(X) <= toggle(X) & on0(X).
        on1(X) <= on0(X) & on1(X).
        ~on1(X) <= ~on0(X) & ~on1(X).";

    #[test]
    fn toggle_translation_and_simplification() {
        let p = translate(&theory(TOGGLE), &TranslateOptions::default()).unwrap();
        assert_eq!(
            lines(&p),
            [
                "forall X: ~~(toggle(X) & ~on0(X)) -> on1(X)",
                "forall X: ~~(toggle(X) & on0(X)) -> on1_hat(X)",
                "forall X: ~~(on0(X) & on1(X)) -> on1(X)",
                "forall X: ~~(~on0(X) & ~on1(X)) -> on1_hat(X)",
                "forall X: ~(on1(X) & on1_hat(X))",
                "forall X: ~(~on1(X) & ~on1_hat(X))",
            ]
        );
        assert_eq!(
            lines(&simplify(&p)),
            [
                "forall X: toggle(X) & ~on0(X) -> on1(X)",
                "forall X: toggle(X) & on0(X) -> on1_hat(X)",
                "forall X: on0(X) & ~on1_hat(X) -> on1(X)",
                "forall X: ~on0(X) & ~on1(X) -> on1_hat(X)",
                "forall X: ~(on1(X) & on1_hat(X))",
                "forall X: ~(~on1(X) & ~on1_hat(X))",
            ]
        );
    }

    #[test]
    fn constraint_translations() {
        let t = theory(
            "universe badswitch. extensional toggle/1. explainable p/1. false <= toggle(badswitch).",
        );
        assert_eq!(tr_c(&t.rules[0]).to_string(), "~toggle(badswitch)");
        let t = theory("universe a. explainable p/1. false <= p(X).");
        assert_eq!(tr_c(&t.rules[0]).to_string(), "forall X: ~p(X)");
        let t = theory("universe a. explainable p/1. false <= true.");
        assert_eq!(tr_c(&t.rules[0]).to_string(), "~true");
    }

    #[test]
    fn literal_translations() {
        let t = theory(TOGGLE);
        let h = HatMap::for_signature(&t.signature);
        assert_eq!(
            tr_l(&t.rules[1], &h).unwrap().to_string(),
            "forall X: ~~(toggle(X) & on0(X)) -> on1_hat(X)"
        );
    }

    #[test]
    fn synonymity_translations() {
        let dark = theory(
            "universe myswitch. explainable dark/0, on1/1. dark <-> ~on1(myswitch) <= true.",
        );
        let h = HatMap::for_signature(&dark.signature);
        let out: Vec<_> = tr_s(&dark.rules[0], &h).unwrap().iter().map(|r| r.to_string()).collect();
        assert_eq!(
            out,
            [
                "~~true & dark_hat -> on1(myswitch)",
                "~~true & on1(myswitch) -> dark_hat",
                "~~true & dark -> on1_hat(myswitch)",
                "~~true & on1_hat(myswitch) -> dark",
            ]
        );

        let pos = theory("universe a. explainable p/0, q/0. p <-> q <= r.");
        let neg = theory("universe a. explainable p/0, q/0. ~p <-> ~q <= r.");
        let h = HatMap::for_signature(&pos.signature);
        let a = tr_s(&pos.rules[0], &h).unwrap();
        assert_eq!(a, tr_s(&neg.rules[0], &h).unwrap());
        let out: Vec<_> = a.iter().map(|r| r.to_string()).collect();
        assert_eq!(
            out,
            [
                "~~r & p -> q",
                "~~r & q -> p",
                "~~r & p_hat -> q_hat",
                "~~r & q_hat -> p_hat"
            ]
        );
    }

    #[test]
    fn disjunctive_translation() {
        let t = theory("universe a. explainable p/0, q/0, r/0. p | ~q | ~r <= s.");
        let h = HatMap::for_signature(&t.signature);
        assert_eq!(
            tr_d(&t.rules[0], &h).unwrap().to_string(),
            "~~s & (p_hat | ~p_hat) & (q | ~q) & (r | ~r) -> p | q_hat | r_hat"
        );
        let t = theory(EX);
        let h = HatMap::for_signature(&t.signature);
        assert_eq!(
            tr_d(&t.rules[0], &h).unwrap().to_string(),
            "~~~q & (p_hat | ~p_hat) -> p"
        );
        let empty = CausalRule::new(Formula::Bottom, Formula::prop("g")).with_kind(RuleKind::C);
        assert_eq!(tr_d(&empty, &h).unwrap().to_string(), "~~g -> false");
    }

    #[test]
    fn synonymity_as_disjunctions() {
        let t = theory("universe a. explainable p/0, q/0. p <-> q <= g.");
        let h = HatMap::for_signature(&t.signature);
        let out: Vec<_> = translate_s_as_d(&t.rules[0], &h)
            .unwrap()
            .iter()
            .map(|r| r.to_string())
            .collect();
        assert_eq!(
            out,
            [
                "~~g & (p_hat | ~p_hat) & (q | ~q) -> p | q_hat",
                "~~g & (p | ~p) & (q_hat | ~q_hat) -> p_hat | q",
            ]
        );
    }

    #[test]
    fn completeness_constraints_per_predicate() {
        let t = theory(TOGGLE);
        let h = HatMap::for_signature(&t.signature);
        let cc: Vec<_> = completeness_constraints(&t.signature, &h)
            .iter()
            .map(|r| r.to_string())
            .collect();
        assert_eq!(
            cc,
            ["forall X: ~(on1(X) & on1_hat(X))", "forall X: ~(~on1(X) & ~on1_hat(X))"]
        );
        let none = theory("universe a. p <= true.");
        assert!(completeness_constraints(&none.signature, &HatMap::for_signature(&none.signature)).is_empty());
    }

    #[test]
    fn unclassified_rules_are_rejected() {
        let raw = parse_theory(EX).unwrap().theory();
        assert!(matches!(
            translate(&raw, &TranslateOptions::default()),
            Err(Error::Unclassified)
        ));
    }

    #[test]
    fn extensional_predicates_are_not_intensional() {
        let p = translate(&theory(TOGGLE), &TranslateOptions::default()).unwrap();
        assert!(!p.is_intensional("on0"));
        assert!(!p.is_intensional("toggle"));
        assert!(p.is_intensional("on1_hat"));
    }
}
