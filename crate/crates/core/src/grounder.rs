//! Instantiation over the finite universe.
//!
//! Quantifiers unfold into conjunctions and disjunctions over the universe
//! (in universe order), rule variables are replaced by every tuple of
//! constants, and equality between constants is decided syntactically.
//! No relevance filtering is done.

use indexmap::IndexMap;

use crate::ast::{Atom, CausalRule, CausalTheory, Formula, Program, ProgramRule, Signature, Term};
use crate::error::{Error, Result};

/// Variable-to-constant assignment.
pub type Binding = IndexMap<String, String>;

fn universe(sig: &Signature) -> Result<Vec<String>> {
    let u: Vec<String> = sig.universe().map(str::to_string).collect();
    if u.is_empty() {
        return Err(Error::EmptyUniverse);
    }
    Ok(u)
}

fn ground_term(t: &Term, binding: &Binding) -> Result<String> {
    match t {
        Term::Const(c) => Ok(c.clone()),
        Term::Var(v) => binding
            .get(v)
            .cloned()
            .ok_or_else(|| Error::UnboundVariable(v.clone())),
    }
}

fn go(f: &Formula, u: &[String], binding: &mut Binding) -> Result<Formula> {
    Ok(match f {
        Formula::Top | Formula::Bottom => f.clone(),
        Formula::Atom(a) => {
            let args = a
                .args
                .iter()
                .map(|t| ground_term(t, binding).map(Term::Const))
                .collect::<Result<_>>()?;
            Formula::Atom(Atom::new(a.predicate.clone(), args))
        }
        Formula::Equal(l, r) => {
            if ground_term(l, binding)? == ground_term(r, binding)? {
                Formula::Top
            } else {
                Formula::Bottom
            }
        }
        Formula::Not(g) => go(g, u, binding)?.not(),
        Formula::And(l, r) => go(l, u, binding)?.and(go(r, u, binding)?),
        Formula::Or(l, r) => go(l, u, binding)?.or(go(r, u, binding)?),
        Formula::Implies(l, r) => go(l, u, binding)?.implies(go(r, u, binding)?),
        Formula::Iff(l, r) => go(l, u, binding)?.iff(go(r, u, binding)?),
        Formula::Forall(v, g) | Formula::Exists(v, g) => {
            let shadowed = binding.get(v).cloned();
            let mut parts = Vec::with_capacity(u.len());
            for c in u {
                binding.insert(v.clone(), c.clone());
                parts.push(go(g, u, binding)?);
            }
            match shadowed {
                Some(old) => binding.insert(v.clone(), old),
                None => binding.shift_remove(v),
            };
            if matches!(f, Formula::Forall(..)) {
                Formula::conjunction(parts)
            } else {
                Formula::disjunction(parts)
            }
        }
    })
}

/// Replaces bound variables by constants, unfolds quantifiers and decides
/// equalities.
pub fn ground_formula(f: &Formula, sig: &Signature, binding: &Binding) -> Result<Formula> {
    let u = universe(sig)?;
    go(f, &u, &mut binding.clone())
}

/// Every assignment of universe constants to `vars`, the last variable
/// varying fastest.
pub fn bindings(vars: &[String], universe: &[String]) -> Vec<Binding> {
    let mut out = vec![Binding::new()];
    for v in vars {
        out = out
            .into_iter()
            .flat_map(|b| {
                universe.iter().map(move |c| {
                    let mut b = b.clone();
                    b.insert(v.clone(), c.clone());
                    b
                })
            })
            .collect();
    }
    out
}

/// One ground rule per rule and binding of its free variables. Rule kinds
/// are kept.
pub fn ground_theory(t: &CausalTheory) -> Result<CausalTheory> {
    let u = universe(&t.signature)?;
    let mut rules = Vec::new();
    for r in &t.rules {
        for mut b in bindings(&r.free_variables(), &u) {
            let head = go(&r.head, &u, &mut b)?;
            let body = go(&r.body, &u, &mut b)?;
            rules.push(CausalRule::new(head, body).with_kind(r.kind));
        }
    }
    Ok(CausalTheory::new(t.signature.clone(), rules))
}

/// One ground rule per rule and binding of its universals.
pub fn ground_program(p: &Program) -> Result<Program> {
    let u = universe(&p.signature)?;
    let mut rules = Vec::new();
    for r in &p.rules {
        for mut b in bindings(&r.universals, &u) {
            let body = go(&r.body, &u, &mut b)?;
            let head = go(&r.head, &u, &mut b)?;
            rules.push(ProgramRule::new(body, head).with_origin(r.origin.clone()));
        }
    }
    Ok(Program {
        rules,
        ..p.clone()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normalizer::normalize;
    use crate::parser::{parse_formula, parse_theory};
    use crate::translator::{translate, TranslateOptions};

    fn sig(consts: &[&str]) -> Signature {
        let mut s = Signature::new();
        for c in consts {
            s.add_constant(*c);
        }
        s.declare_predicate("p", 1).unwrap();
        s
    }

    #[test]
    fn definition_by_equality() {
        let s = sig(&["a", "b"]);
        let f = Formula::forall(
            "X",
            Formula::atom("p", vec![Term::var("X")]).iff(Formula::Equal(Term::var("X"), Term::constant("a"))),
        );
        let g = ground_formula(&f, &s, &Binding::new()).unwrap();
        assert_eq!(g.to_string(), "(p(a) <-> true) & (p(b) <-> false)");
    }

    #[test]
    fn existential_over_singleton() {
        let s = sig(&["a"]);
        let f = parse_formula("exists X: p(X)", &s).unwrap();
        assert_eq!(ground_formula(&f, &s, &Binding::new()).unwrap().to_string(), "p(a)");
    }

    #[test]
    fn ground_formula_is_identity_on_ground_input() {
        let s = sig(&["a", "b"]);
        let f = parse_formula("p(a) & ~p(b) | true", &s).unwrap();
        assert_eq!(ground_formula(&f, &s, &Binding::new()).unwrap(), f);
    }

    #[test]
    fn unbound_and_empty_universe() {
        let s = sig(&["a"]);
        let f = Formula::atom("p", vec![Term::var("Y")]);
        assert!(matches!(
            ground_formula(&f, &s, &Binding::new()),
            Err(Error::UnboundVariable(v)) if v == "Y"
        ));
        assert!(matches!(
            ground_formula(&Formula::Top, &sig(&[]), &Binding::new()),
            Err(Error::EmptyUniverse)
        ));
    }

    #[test]
    fn inner_quantifier_shadows_binding() {
        let s = sig(&["a", "b"]);
        let f = Formula::atom("p", vec![Term::var("X")])
            .and(Formula::exists("X", Formula::atom("p", vec![Term::var("X")])));
        let b: Binding = [("X".to_string(), "a".to_string())].into_iter().collect();
        assert_eq!(
            ground_formula(&f, &s, &b).unwrap().to_string(),
            "p(a) & (p(a) | p(b))"
        );
    }

    #[test]
    fn example_two_grounds_to_three_rules() {
        let t = normalize(
            &parse_theory("universe a, b. explainable p/1. p(a) <= true. ~p(X) <= ~p(X).")
                .unwrap()
                .theory(),
        )
        .unwrap();
        let g = ground_theory(&t).unwrap();
        let rules: Vec<_> = g.rules.iter().map(|r| r.to_string()).collect();
        assert_eq!(rules, ["p(a) <= true", "~p(a) <= ~p(a)", "~p(b) <= ~p(b)"]);
        assert!(g.rules.iter().all(|r| r.head.is_ground() && r.body.is_ground()));
    }

    const TOGGLE: &str = "universe myswitch, hisswitch.
        explainable on1/1. extensional on0/1, toggle/1.
        on1(X) <= toggle(X) & ~on0(X).
        ~on1(X) <= toggle(X) & on0(X).
        on1(X) <= on0(X) & on1(X).
        ~on1(X) <= ~on0(X) & ~on1(X).";

    #[test]
    fn toggle_counts() {
        let t = normalize(&parse_theory(TOGGLE).unwrap().theory()).unwrap();
        assert_eq!(ground_theory(&t).unwrap().rules.len(), 8);
        let p = translate(&t, &TranslateOptions::default()).unwrap();
        let gp = ground_program(&p).unwrap();
        assert_eq!(gp.rules.len(), 12);
        assert!(gp.is_ground());
        assert_eq!(gp.rules[0].to_string(), "~~(toggle(myswitch) & ~on0(myswitch)) -> on1(myswitch)");
        assert_eq!(gp.rules[1].to_string(), "~~(toggle(hisswitch) & ~on0(hisswitch)) -> on1(hisswitch)");
    }

    #[test]
    fn propositional_input_is_unchanged() {
        let t = normalize(
            &parse_theory("universe a. explainable p/0, q/0. p <= ~q. ~q <= p.")
                .unwrap()
                .theory(),
        )
        .unwrap();
        assert_eq!(ground_theory(&t).unwrap(), t);
        let p = translate(&t, &TranslateOptions::default()).unwrap();
        assert_eq!(ground_program(&p).unwrap(), p);
    }

    #[test]
    fn binding_order_is_lexicographic_in_universe_order() {
        let u = ["a".to_string(), "b".to_string()];
        let bs = bindings(&["X".into(), "Y".into()], &u);
        let flat: Vec<_> = bs
            .iter()
            .map(|b| format!("{}{}", b["X"], b["Y"]))
            .collect();
        assert_eq!(flat, ["aa", "ab", "ba", "bb"]);
        assert_eq!(bindings(&[], &u).len(), 1);
    }
}
