//! Brings causal rules into one of the four translatable shapes.
//!
//! Bodies lose their implications, heads over non-explainable symbols are
//! pushed into the body, and every surviving rule gets a [`RuleKind`].

use crate::ast::{Atom, CausalRule, CausalTheory, Formula, RuleKind, Signature};
use crate::error::{Error, Result};

/// An atom or equality, possibly negated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Literal {
    pub positive: bool,
    pub atom: LiteralAtom,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LiteralAtom {
    Atom(Atom),
    Equal(crate::ast::Term, crate::ast::Term),
}

impl Literal {
    pub fn from_formula(f: &Formula) -> Option<Literal> {
        let (positive, inner) = match f {
            Formula::Not(g) => (false, g.as_ref()),
            other => (true, other),
        };
        let atom = match inner {
            Formula::Atom(a) => LiteralAtom::Atom(a.clone()),
            Formula::Equal(l, r) => LiteralAtom::Equal(l.clone(), r.clone()),
            _ => return None,
        };
        Some(Literal { positive, atom })
    }

    /// `L̄`
    pub fn complement(&self) -> Literal {
        Literal {
            positive: !self.positive,
            atom: self.atom.clone(),
        }
    }

    pub fn to_formula(&self) -> Formula {
        let a = match &self.atom {
            LiteralAtom::Atom(a) => Formula::Atom(a.clone()),
            LiteralAtom::Equal(l, r) => Formula::Equal(l.clone(), r.clone()),
        };
        if self.positive {
            a
        } else {
            a.not()
        }
    }

    pub fn is_explainable(&self, sig: &Signature) -> bool {
        match &self.atom {
            LiteralAtom::Atom(a) => sig.is_explainable(&a.predicate),
            LiteralAtom::Equal(..) => false,
        }
    }

    pub fn predicate(&self) -> Option<&str> {
        match &self.atom {
            LiteralAtom::Atom(a) => Some(&a.predicate),
            LiteralAtom::Equal(..) => None,
        }
    }
}

/// Syntactic shape of a head, ignoring explainability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HeadShape {
    Top,
    Bottom,
    Literal(Literal),
    Iff(Literal, Literal),
    /// Two or more literals.
    Disjunction(Vec<Literal>),
}

pub fn head_shape(head: &Formula) -> Result<HeadShape> {
    let fail = |reason: &str| Error::Unclassifiable {
        head: head.to_string(),
        reason: reason.to_string(),
    };
    match head {
        Formula::Top => Ok(HeadShape::Top),
        Formula::Bottom => Ok(HeadShape::Bottom),
        Formula::Iff(l, r) => match (Literal::from_formula(l), Literal::from_formula(r)) {
            (Some(l), Some(r)) => Ok(HeadShape::Iff(l, r)),
            _ => Err(fail("both sides of `<->` must be literals")),
        },
        Formula::Or(..) => {
            let mut lits = Vec::new();
            flatten_or(head, &mut lits).ok_or_else(|| fail("disjuncts must be literals"))?;
            Ok(HeadShape::Disjunction(lits))
        }
        other => match Literal::from_formula(other) {
            Some(l) => Ok(HeadShape::Literal(l)),
            None if other.contains_quantifier() => Err(fail("quantified heads are not supported")),
            None => Err(fail("head must be false, a literal, L1 <-> L2, or a disjunction of literals")),
        },
    }
}

fn flatten_or(f: &Formula, out: &mut Vec<Literal>) -> Option<()> {
    match f {
        Formula::Or(l, r) => {
            flatten_or(l, out)?;
            flatten_or(r, out)
        }
        Formula::Bottom => Some(()),
        other => {
            out.push(Literal::from_formula(other)?);
            Some(())
        }
    }
}

fn elim(f: &Formula) -> Formula {
    match f {
        Formula::Implies(l, r) => elim(l).not().or(elim(r)),
        Formula::Top | Formula::Bottom | Formula::Atom(_) | Formula::Equal(..) => f.clone(),
        Formula::Not(g) => elim(g).not(),
        Formula::And(l, r) => elim(l).and(elim(r)),
        Formula::Or(l, r) => elim(l).or(elim(r)),
        Formula::Iff(l, r) => {
            let (l, r) = (elim(l), elim(r));
            (l.clone().not().or(r.clone())).and(r.not().or(l))
        }
        Formula::Forall(v, g) => Formula::forall(v.clone(), elim(g)),
        Formula::Exists(v, g) => Formula::exists(v.clone(), elim(g)),
    }
}

/// Rewrites `F → G` as `¬F ∨ G` throughout the body. The head is untouched.
pub fn eliminate_body_implications(r: &CausalRule) -> CausalRule {
    CausalRule {
        head: r.head.clone(),
        body: elim(&r.body),
        kind: r.kind,
    }
}

/// Decides the kind of a rule whose head literals are all explainable.
pub fn classify(r: &CausalRule, sig: &Signature) -> Result<RuleKind> {
    let fail = |reason: String| Error::Unclassifiable {
        head: r.head.to_string(),
        reason,
    };
    if r.body.contains_implication() {
        return Err(fail("body still contains an implication".into()));
    }
    let check = |l: &Literal| {
        if l.is_explainable(sig) {
            Ok(())
        } else {
            Err(fail(format!(
                "literal `{}` does not use an explainable predicate",
                l.to_formula()
            )))
        }
    };
    match head_shape(&r.head)? {
        HeadShape::Bottom => Ok(RuleKind::C),
        HeadShape::Top => Err(fail("a `true` head is vacuous".into())),
        HeadShape::Literal(l) => check(&l).map(|_| RuleKind::L),
        HeadShape::Iff(a, b) => {
            check(&a)?;
            check(&b)?;
            Ok(RuleKind::S)
        }
        HeadShape::Disjunction(ls) => {
            ls.iter().try_for_each(check)?;
            Ok(match ls.len() {
                0 => RuleKind::C,
                1 => RuleKind::L,
                _ => RuleKind::D,
            })
        }
    }
}

fn rule_from_literals(lits: &[Literal], body: Formula) -> CausalRule {
    let head = Formula::disjunction(lits.iter().map(Literal::to_formula));
    CausalRule::new(head, body)
}

/// Replaces a rule whose head literals mention non-explainable symbols by
/// equivalent rules over explainable heads only. Non-explainable literals
/// are removed leftmost first.
pub fn rewrite_nonexplainable_heads(r: &CausalRule, sig: &Signature) -> Result<Vec<CausalRule>> {
    let body = r.body.clone();
    match head_shape(&r.head)? {
        HeadShape::Top | HeadShape::Bottom => Ok(vec![CausalRule::new(r.head.clone(), body)]),
        HeadShape::Literal(l) => {
            if l.is_explainable(sig) {
                Ok(vec![CausalRule::new(r.head.clone(), body)])
            } else {
                Ok(vec![CausalRule::new(
                    Formula::Bottom,
                    body.and(l.complement().to_formula()),
                )])
            }
        }
        HeadShape::Iff(l1, l2) => {
            let (fixed, other) = if !l1.is_explainable(sig) {
                (l1, l2)
            } else if !l2.is_explainable(sig) {
                (l2, l1)
            } else {
                return Ok(vec![CausalRule::new(r.head.clone(), body)]);
            };
            let pos = CausalRule::new(other.to_formula(), body.clone().and(fixed.to_formula()));
            let neg = CausalRule::new(
                other.complement().to_formula(),
                body.and(fixed.complement().to_formula()),
            );
            let mut out = rewrite_nonexplainable_heads(&pos, sig)?;
            out.extend(rewrite_nonexplainable_heads(&neg, sig)?);
            Ok(out)
        }
        HeadShape::Disjunction(mut lits) => {
            let mut body = body;
            while let Some(i) = lits.iter().position(|l| !l.is_explainable(sig)) {
                let l = lits.remove(i);
                body = body.and(l.complement().to_formula());
            }
            Ok(vec![rule_from_literals(&lits, body)])
        }
    }
}

/// Full normalization: implication-free bodies, `⊤` heads dropped,
/// non-explainable heads rewritten, every rule classified.
pub fn normalize(t: &CausalTheory) -> Result<CausalTheory> {
    let mut rules = Vec::new();
    for r in &t.rules {
        let r = eliminate_body_implications(r);
        if r.head == Formula::Top {
            continue;
        }
        for r in rewrite_nonexplainable_heads(&r, &t.signature)? {
            let kind = classify(&r, &t.signature)?;
            rules.push(r.with_kind(kind));
        }
    }
    Ok(CausalTheory::new(t.signature.clone(), rules))
}

/// Applies only the classification step; rules must already be in shape.
pub fn classify_all(t: &CausalTheory) -> Result<CausalTheory> {
    let rules = t
        .rules
        .iter()
        .map(|r| Ok(r.clone().with_kind(classify(r, &t.signature)?)))
        .collect::<Result<_>>()?;
    Ok(CausalTheory::new(t.signature.clone(), rules))
}
