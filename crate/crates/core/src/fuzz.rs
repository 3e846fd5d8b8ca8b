//! Seeded random theories and programs for the property suites.
//!
//! Everything is propositional (arity 0) over a one-constant universe, so
//! grounding is the identity and the enumerators stay fast.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ast::{CausalRule, CausalTheory, Formula, HatMap, Program, ProgramRule, RuleKind, Signature};

const NAMES: [&str; 6] = ["p", "q", "r", "s", "t", "v"];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn signature(atoms: &[&str], explainable: &[&str]) -> Signature {
    let mut sig = Signature::new();
    sig.add_constant("a");
    for a in atoms {
        if explainable.contains(a) {
            sig.add_explainable(a, 0).expect("fresh name");
        } else {
            sig.declare_predicate(a, 0).expect("fresh name");
        }
    }
    sig
}

/// A formula over `atoms` built from `⊤, ⊥, ¬, ∧, ∨` with nesting at most
/// `depth`.
pub fn random_formula(rng: &mut impl Rng, atoms: &[&str], depth: u32) -> Formula {
    let leaf = |rng: &mut dyn rand::RngCore| match rng.random_range(0..10) {
        0 => Formula::Top,
        1 => Formula::Bottom,
        _ => Formula::prop(*atoms.choose(rng).expect("atoms")),
    };
    if depth == 0 {
        return leaf(rng);
    }
    match rng.random_range(0..4) {
        0 => leaf(rng),
        1 => random_formula(rng, atoms, depth - 1).not(),
        2 => random_formula(rng, atoms, depth - 1).and(random_formula(rng, atoms, depth - 1)),
        _ => random_formula(rng, atoms, depth - 1).or(random_formula(rng, atoms, depth - 1)),
    }
}

fn literal(rng: &mut impl Rng, atoms: &[&str]) -> Formula {
    let a = Formula::prop(*atoms.choose(rng).expect("atoms"));
    if rng.random_bool(0.5) {
        a
    } else {
        a.not()
    }
}

fn pick_atoms<'a>(rng: &mut impl Rng, max: usize) -> (Vec<&'a str>, Vec<&'a str>) {
    let n = rng.random_range(1..=max);
    let atoms: Vec<&str> = NAMES[..n].to_vec();
    let mut explainable: Vec<&str> = atoms.iter().copied().filter(|_| rng.random_bool(0.7)).collect();
    if explainable.is_empty() {
        explainable.push(atoms[rng.random_range(0..n)]);
    }
    (atoms, explainable)
}

fn head_for(rng: &mut impl Rng, kind: RuleKind, explainable: &[&str]) -> Formula {
    match kind {
        RuleKind::C => Formula::Bottom,
        RuleKind::L => literal(rng, explainable),
        RuleKind::S => literal(rng, explainable).iff(literal(rng, explainable)),
        _ => {
            let k = rng.random_range(2..=3);
            Formula::disjunction((0..k).map(|_| literal(rng, explainable)))
        }
    }
}

/// A classified ground theory with at most 4 atoms and 6 rules of kinds
/// C, L, S and D.
pub fn random_theory(rng: &mut impl Rng) -> CausalTheory {
    let (atoms, explainable) = pick_atoms(rng, 4);
    let n = rng.random_range(1..=6);
    let kinds = [RuleKind::C, RuleKind::L, RuleKind::S, RuleKind::D];
    let rules = (0..n)
        .map(|_| {
            let kind = *kinds.choose(rng).expect("kinds");
            let head = head_for(rng, kind, &explainable);
            CausalRule::new(head, random_formula(rng, &atoms, 3)).with_kind(kind)
        })
        .collect();
    CausalTheory::new(signature(&atoms, &explainable), rules)
}

/// `n` theories from one seed.
pub fn corpus(seed: u64, n: usize) -> Vec<CausalTheory> {
    let mut r = rng(seed);
    (0..n).map(|_| random_theory(&mut r)).collect()
}

/// A classified ground theory with heads `⊥`, `A` or `¬A` only, over at most
/// 5 atoms.
pub fn random_definite_theory(rng: &mut impl Rng) -> CausalTheory {
    let (atoms, explainable) = pick_atoms(rng, 5);
    let n = rng.random_range(1..=6);
    let rules = (0..n)
        .map(|_| {
            let kind = if rng.random_range(0..5) == 0 { RuleKind::C } else { RuleKind::L };
            let head = head_for(rng, kind, &explainable);
            CausalRule::new(head, random_formula(rng, &atoms, 3)).with_kind(kind)
        })
        .collect();
    CausalTheory::new(signature(&atoms, &explainable), rules)
}

/// An unclassified theory whose heads may mention non-explainable atoms,
/// for the normalizer.
pub fn random_raw_theory(rng: &mut impl Rng) -> CausalTheory {
    let (atoms, explainable) = pick_atoms(rng, 4);
    let n = rng.random_range(1..=5);
    let rules = (0..n)
        .map(|_| {
            let head = match rng.random_range(0..4) {
                0 => Formula::Bottom,
                1 => literal(rng, &atoms),
                2 => literal(rng, &atoms).iff(literal(rng, &atoms)),
                _ => Formula::disjunction((0..rng.random_range(2..=3)).map(|_| literal(rng, &atoms))),
            };
            CausalRule::new(head, random_formula(rng, &atoms, 2))
        })
        .collect();
    CausalTheory::new(signature(&atoms, &explainable), rules)
}

fn positive_formula(rng: &mut impl Rng, atoms: &[&str], depth: u32) -> Formula {
    if depth == 0 || rng.random_range(0..3) == 0 {
        return match rng.random_range(0..8) {
            0 => Formula::Top,
            _ => Formula::prop(*atoms.choose(rng).expect("atoms")),
        };
    }
    let (l, r) = (
        positive_formula(rng, atoms, depth - 1),
        positive_formula(rng, atoms, depth - 1),
    );
    if rng.random_bool(0.5) {
        l.and(r)
    } else {
        l.or(r)
    }
}

/// A ground program without negation; some atoms may be non-intensional.
pub fn random_positive_program(rng: &mut impl Rng) -> Program {
    let n = rng.random_range(1..=5);
    let atoms: Vec<&str> = NAMES[..n].to_vec();
    let mut intensional: Vec<String> = atoms
        .iter()
        .filter(|_| rng.random_bool(0.8))
        .map(|a| a.to_string())
        .collect();
    if intensional.is_empty() {
        intensional.push(atoms[0].to_string());
    }
    let rules = (0..rng.random_range(1..=6))
        .map(|_| {
            let body = positive_formula(rng, &atoms, 2);
            let head = match rng.random_range(0..6) {
                0 => Formula::Bottom,
                _ => positive_formula(rng, &atoms, 1),
            };
            ProgramRule::new(body, head)
        })
        .collect();
    Program {
        signature: signature(&atoms, &[]),
        rules,
        intensional,
        hats: HatMap::default(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normalizer::classify;

    #[test]
    fn generated_kinds_match_the_classifier() {
        let mut r = rng(3);
        for _ in 0..200 {
            let t = random_theory(&mut r);
            assert!(t.rules.len() <= 6);
            assert!(t.signature.predicates().count() <= 4);
            for rule in &t.rules {
                assert_eq!(classify(rule, &t.signature).unwrap(), rule.kind, "{rule}");
            }
        }
    }

    #[test]
    fn corpus_is_reproducible() {
        assert_eq!(corpus(7, 20), corpus(7, 20));
        assert_ne!(corpus(7, 20), corpus(8, 20));
    }

    #[test]
    fn positive_programs_have_no_negation() {
        let mut r = rng(1);
        for _ in 0..100 {
            let p = random_positive_program(&mut r);
            for rule in &p.rules {
                let f = rule.to_formula();
                assert!(!f.any_node(&|g| matches!(g, Formula::Not(_))), "{f}");
            }
        }
    }
}
