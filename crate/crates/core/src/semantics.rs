//! Brute-force model enumeration.
//!
//! Nothing here is clever: every candidate interpretation is visited and
//! the defining second-order conditions are checked by a second loop over
//! assignments. That keeps the oracles easy to trust, at the price of a
//! hard limit on the number of atoms ([`Limits`]).
//!
//! Atoms are laid out in canonical order: predicates in declaration order,
//! argument tuples in universe order. Extensional atoms are fixed by the
//! facts (closed world); every other atom is free. A free atom set is a
//! `u64` whose most significant used bit is the first free atom, so
//! counting upwards visits interpretations in canonical order.

use std::borrow::Cow;
use std::fmt;

use indexmap::{IndexMap, IndexSet};

use crate::ast::{
    Atom, CausalTheory, Formula, GroundAtom, HatMap, Interpretation, Program, ProgramRule,
    Signature, Term,
};
use crate::error::{Error, Result};
use crate::grounder::{ground_program, ground_theory};
use crate::normalizer::{head_shape, HeadShape, LiteralAtom};
use crate::translator::{translate, TranslateOptions};

/// Largest number of free atoms enumerated without an override.
pub const DEFAULT_MAX_ATOMS: usize = 24;
/// Hard ceiling: interpretations are `u64` masks.
pub const HARD_MAX_ATOMS: usize = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_atoms: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_atoms: DEFAULT_MAX_ATOMS,
        }
    }
}

impl Limits {
    /// Lifts the desk-scale limit up to the representation ceiling.
    pub fn allow_large() -> Self {
        Limits {
            max_atoms: HARD_MAX_ATOMS,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    Fixed(bool),
    Free(u64),
}

/// The ground atoms of a signature in canonical order.
#[derive(Debug, Clone)]
pub struct AtomTable {
    slots: IndexMap<GroundAtom, Slot>,
    free: Vec<GroundAtom>,
}

fn tuples(universe: &[String], arity: usize) -> Vec<Vec<String>> {
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|t| {
                universe.iter().map(move |c| {
                    let mut t = t.clone();
                    t.push(c.clone());
                    t
                })
            })
            .collect();
    }
    out
}

impl AtomTable {
    /// Extensional atoms are true iff listed in `facts`.
    pub fn new(sig: &Signature, facts: &[GroundAtom]) -> Result<Self> {
        let universe: Vec<String> = sig.universe().map(str::to_string).collect();
        let mut all = Vec::new();
        for (p, arity) in sig.predicates() {
            for args in tuples(&universe, arity) {
                all.push(GroundAtom::new(p, args));
            }
        }
        let facts: IndexSet<&GroundAtom> = facts.iter().collect();
        for f in &facts {
            if !sig.is_extensional(&f.predicate) {
                return Err(Error::Signature(format!("fact {f} is not extensional")));
            }
            if !all.contains(f) {
                return Err(Error::UnknownAtom(f.to_string()));
            }
        }
        let free: Vec<GroundAtom> = all
            .iter()
            .filter(|a| !sig.is_extensional(&a.predicate))
            .cloned()
            .collect();
        let n = free.len();
        let mut k = 0;
        let slots = all
            .into_iter()
            .map(|a| {
                let slot = if sig.is_extensional(&a.predicate) {
                    Slot::Fixed(facts.contains(&a))
                } else {
                    k += 1;
                    Slot::Free(if n - k < 64 { 1u64 << (n - k) } else { 0 })
                };
                (a, slot)
            })
            .collect();
        Ok(AtomTable { slots, free })
    }

    pub fn atoms(&self) -> impl Iterator<Item = (&GroundAtom, Slot)> {
        self.slots.iter().map(|(a, s)| (a, *s))
    }

    pub fn free_atoms(&self) -> &[GroundAtom] {
        &self.free
    }

    pub fn slot(&self, a: &GroundAtom) -> Option<Slot> {
        self.slots.get(a).copied()
    }

    fn check(&self, limits: &Limits) -> Result<()> {
        let atoms = self.free.len();
        let limit = limits.max_atoms.min(HARD_MAX_ATOMS);
        if atoms > limit {
            return Err(Error::Guardrail { atoms, limit });
        }
        Ok(())
    }

    fn candidates(&self) -> std::ops::Range<u64> {
        0..(1u64 << self.free.len())
    }

    /// Free atoms whose predicate satisfies `pred`.
    fn mask_where(&self, pred: impl Fn(&str) -> bool) -> u64 {
        self.slots
            .iter()
            .filter_map(|(a, s)| match s {
                Slot::Free(b) if pred(&a.predicate) => Some(*b),
                _ => None,
            })
            .fold(0, |m, b| m | b)
    }

    fn interpretation(&self, mask: u64) -> Interpretation {
        self.slots
            .iter()
            .map(|(a, s)| {
                let v = match s {
                    Slot::Fixed(v) => *v,
                    Slot::Free(b) => mask & b != 0,
                };
                (a.clone(), v)
            })
            .collect()
    }

    /// Shadow atoms (`p'`) read from the second mask, all others from the
    /// first.
    fn compile(&self, f: &Formula) -> Result<Node> {
        Ok(match f {
            Formula::Top => Node::Const(true),
            Formula::Bottom => Node::Const(false),
            Formula::Atom(a) => {
                let (base, second) = match a.predicate.strip_suffix('\'') {
                    Some(b) => (b, true),
                    None => (a.predicate.as_str(), false),
                };
                let g = Atom::new(base, a.args.clone())
                    .to_ground()
                    .ok_or_else(|| Error::NotGround(f.to_string()))?;
                match self.slot(&g) {
                    None => return Err(Error::UnknownAtom(g.to_string())),
                    Some(Slot::Fixed(v)) => Node::Const(v),
                    Some(Slot::Free(bit)) => Node::Atom { bit, second },
                }
            }
            Formula::Equal(Term::Const(l), Term::Const(r)) => Node::Const(l == r),
            Formula::Equal(..) | Formula::Forall(..) | Formula::Exists(..) => {
                return Err(Error::NotGround(f.to_string()))
            }
            Formula::Not(g) => Node::Not(Box::new(self.compile(g)?)),
            Formula::And(l, r) => Node::And(Box::new(self.compile(l)?), Box::new(self.compile(r)?)),
            Formula::Or(l, r) => Node::Or(Box::new(self.compile(l)?), Box::new(self.compile(r)?)),
            Formula::Implies(l, r) => {
                Node::Implies(Box::new(self.compile(l)?), Box::new(self.compile(r)?))
            }
            Formula::Iff(l, r) => Node::Iff(Box::new(self.compile(l)?), Box::new(self.compile(r)?)),
        })
    }
}

enum Node {
    Const(bool),
    Atom { bit: u64, second: bool },
    Not(Box<Node>),
    And(Box<Node>, Box<Node>),
    Or(Box<Node>, Box<Node>),
    Implies(Box<Node>, Box<Node>),
    Iff(Box<Node>, Box<Node>),
}

impl Node {
    fn eval(&self, i: u64, s: u64) -> bool {
        match self {
            Node::Const(v) => *v,
            Node::Atom { bit, second } => (if *second { s } else { i }) & bit != 0,
            Node::Not(g) => !g.eval(i, s),
            Node::And(l, r) => l.eval(i, s) && r.eval(i, s),
            Node::Or(l, r) => l.eval(i, s) || r.eval(i, s),
            Node::Implies(l, r) => !l.eval(i, s) || r.eval(i, s),
            Node::Iff(l, r) => l.eval(i, s) == r.eval(i, s),
        }
    }
}

/// Subsets of `m` other than `m` itself, largest first.
fn proper_submasks(m: u64) -> impl Iterator<Item = u64> {
    let mut next = if m == 0 { None } else { Some((m - 1) & m) };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & m) };
        Some(cur)
    })
}

/// Interpretations in canonical order, duplicate-free.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ModelSet {
    pub models: Vec<Interpretation>,
    /// Set when some predicates were projected out.
    pub projection: Option<String>,
}

impl ModelSet {
    fn from_sorted(models: Vec<Interpretation>) -> Self {
        ModelSet {
            models,
            projection: None,
        }
    }

    pub fn len(&self) -> usize {
        self.models.len()
    }

    pub fn is_empty(&self) -> bool {
        self.models.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Interpretation> {
        self.models.iter()
    }

    pub fn contains(&self, i: &Interpretation) -> bool {
        self.models.contains(i)
    }

    /// Same models, ignoring order.
    pub fn same_models(&self, other: &ModelSet) -> bool {
        self.len() == other.len() && self.iter().all(|m| other.contains(m))
    }

    /// Keeps the atoms whose predicate satisfies `keep`; merges models that
    /// become equal.
    pub fn project(&self, keep: impl Fn(&str) -> bool, note: impl Into<String>) -> ModelSet {
        let mut models: Vec<Interpretation> = Vec::new();
        for m in &self.models {
            let p = m.project(&keep);
            if !models.contains(&p) {
                models.push(p);
            }
        }
        models.sort_by_key(|m| m.atoms().map(|(_, v)| v).collect::<Vec<_>>());
        ModelSet {
            models,
            projection: Some(note.into()),
        }
    }

    /// One line per model; hat atoms written as `-p(..)`.
    pub fn render(&self, hats: &HatMap) -> String {
        self.models
            .iter()
            .map(|m| m.render(hats) + "\n")
            .collect()
    }
}

/// Classical truth of a ground formula.
pub fn eval(f: &Formula, i: &Interpretation) -> Result<bool> {
    Ok(match f {
        Formula::Top => true,
        Formula::Bottom => false,
        Formula::Atom(a) => {
            let g = a.to_ground().ok_or_else(|| Error::NotGround(f.to_string()))?;
            i.get(&g).ok_or_else(|| Error::UnknownAtom(g.to_string()))?
        }
        Formula::Equal(Term::Const(l), Term::Const(r)) => l == r,
        Formula::Equal(..) | Formula::Forall(..) | Formula::Exists(..) => {
            return Err(Error::NotGround(f.to_string()))
        }
        Formula::Not(g) => !eval(g, i)?,
        Formula::And(l, r) => eval(l, i)? && eval(r, i)?,
        Formula::Or(l, r) => eval(l, i)? || eval(r, i)?,
        Formula::Implies(l, r) => !eval(l, i)? || eval(r, i)?,
        Formula::Iff(l, r) => eval(l, i)? == eval(r, i)?,
    })
}

fn ensure_ground_theory(t: &CausalTheory) -> Result<()> {
    match t.rules.iter().find(|r| !r.head.is_ground() || !r.body.is_ground()) {
        Some(r) => Err(Error::NotGround(r.to_string())),
        None => Ok(()),
    }
}

/// `t` itself when already ground, its instantiation otherwise.
fn grounded_theory(t: &CausalTheory) -> Result<Cow<'_, CausalTheory>> {
    if ensure_ground_theory(t).is_ok() {
        Ok(Cow::Borrowed(t))
    } else {
        Ok(Cow::Owned(ground_theory(t)?))
    }
}

fn grounded_program(p: &Program) -> Result<Cow<'_, Program>> {
    if p.rules.iter().all(|r| r.is_ground()) {
        Ok(Cow::Borrowed(p))
    } else {
        Ok(Cow::Owned(ground_program(p)?))
    }
}

/// `T†(v, I)`: every rule whose body holds in `i` has its head true when
/// explainable atoms are read from `heads` and the others from `i`.
pub fn theory_dagger(t: &CausalTheory, heads: &Interpretation, i: &Interpretation) -> Result<bool> {
    ensure_ground_theory(t)?;
    let table = AtomTable::new(&t.signature, &[])?;
    for (a, _) in table.atoms() {
        if t.signature.is_explainable(&a.predicate) && heads.get(a).is_none() {
            return Err(Error::UnknownAtom(a.to_string()));
        }
    }
    for r in &t.rules {
        if !eval(&r.body, i)? {
            continue;
        }
        let head = r.head.map_atoms(&mut |a| {
            if t.signature.is_explainable(&a.predicate) {
                match a.to_ground().and_then(|g| heads.get(&g)) {
                    Some(true) => Formula::Top,
                    _ => Formula::Bottom,
                }
            } else {
                Formula::Atom(a.clone())
            }
        });
        if !eval(&head, i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn shadow(a: &Atom) -> Formula {
    Formula::atom(format!("{}'", a.predicate), a.args.clone())
}

/// Renames each occurrence of an intensional predicate `p` that is not
/// inside any negation to its shadow `p'`.
pub fn f_diamond(f: &Formula, intensional: &[String]) -> Formula {
    fn go(f: &Formula, intensional: &[String]) -> Formula {
        match f {
            Formula::Atom(a) if intensional.contains(&a.predicate) => shadow(a),
            Formula::Not(_) | Formula::Top | Formula::Bottom | Formula::Atom(_) | Formula::Equal(..) => {
                f.clone()
            }
            Formula::And(l, r) => go(l, intensional).and(go(r, intensional)),
            Formula::Or(l, r) => go(l, intensional).or(go(r, intensional)),
            Formula::Implies(l, r) => go(l, intensional).implies(go(r, intensional)),
            Formula::Iff(l, r) => go(l, intensional).iff(go(r, intensional)),
            Formula::Forall(v, g) => Formula::forall(v.clone(), go(g, intensional)),
            Formula::Exists(v, g) => Formula::exists(v.clone(), go(g, intensional)),
        }
    }
    go(f, intensional)
}

/// Causal models: `I` such that, for every assignment `v` to the
/// explainable atoms, `T†(v, I)` holds exactly when `v` agrees with `I`.
/// Non-ground theories are instantiated first.
pub fn causal_models(t: &CausalTheory, facts: &[GroundAtom], limits: &Limits) -> Result<ModelSet> {
    let t = &*grounded_theory(t)?;
    let table = AtomTable::new(&t.signature, facts)?;
    table.check(limits)?;
    let explainable = table.mask_where(|p| t.signature.is_explainable(p));
    let sig = &t.signature;
    let mut rules = Vec::with_capacity(t.rules.len());
    for r in &t.rules {
        let head = r.head.map_atoms(&mut |a| {
            if sig.is_explainable(&a.predicate) {
                shadow(a)
            } else {
                Formula::Atom(a.clone())
            }
        });
        rules.push((table.compile(&r.body)?, table.compile(&head)?));
    }
    let mut models = Vec::new();
    let mut active = Vec::new();
    for i in table.candidates() {
        active.clear();
        active.extend(rules.iter().filter(|(b, _)| b.eval(i, 0)).map(|(_, h)| h));
        let dagger = |v: u64| active.iter().all(|h| h.eval(i, v));
        let own = i & explainable;
        if !dagger(own) {
            continue;
        }
        if proper_submasks(explainable)
            .chain(std::iter::once(explainable))
            .all(|v| v == own || !dagger(v))
        {
            models.push(table.interpretation(i));
        }
    }
    Ok(ModelSet::from_sorted(models))
}

fn ensure_ground_program(p: &Program) -> Result<()> {
    for r in &p.rules {
        r.validate()?;
        if !r.is_ground() {
            return Err(Error::NotGround(r.to_string()));
        }
    }
    Ok(())
}

/// Stable models: `I ⊨ P` and no `u` strictly below `I` on the intensional
/// atoms satisfies `P◇(u)`.
pub fn stable_models(p: &Program, facts: &[GroundAtom], limits: &Limits) -> Result<ModelSet> {
    let p = &*grounded_program(p)?;
    ensure_ground_program(p)?;
    let table = AtomTable::new(&p.signature, facts)?;
    table.check(limits)?;
    let intensional = table.mask_where(|q| p.is_intensional(q));
    let mut classical = Vec::with_capacity(p.rules.len());
    let mut diamond = Vec::with_capacity(p.rules.len());
    for r in &p.rules {
        let f = r.to_formula();
        classical.push(table.compile(&f)?);
        diamond.push(table.compile(&f_diamond(&f, &p.intensional))?);
    }
    let mut models = Vec::new();
    for i in table.candidates() {
        if !classical.iter().all(|n| n.eval(i, 0)) {
            continue;
        }
        if !proper_submasks(i & intensional).any(|u| diamond.iter().all(|n| n.eval(i, u))) {
            models.push(table.interpretation(i));
        }
    }
    Ok(ModelSet::from_sorted(models))
}

/// Classical models of a set of ground sentences.
pub fn classical_models(
    formulas: &[Formula],
    sig: &Signature,
    facts: &[GroundAtom],
    limits: &Limits,
) -> Result<ModelSet> {
    let table = AtomTable::new(sig, facts)?;
    table.check(limits)?;
    let nodes = formulas
        .iter()
        .map(|f| table.compile(f))
        .collect::<Result<Vec<_>>>()?;
    Ok(ModelSet::from_sorted(
        table
            .candidates()
            .filter(|&i| nodes.iter().all(|n| n.eval(i, 0)))
            .map(|i| table.interpretation(i))
            .collect(),
    ))
}

/// Models of `p` whose intensional part is minimal among the models that
/// agree with it elsewhere.
pub fn minimal_models(p: &Program, facts: &[GroundAtom], limits: &Limits) -> Result<ModelSet> {
    let p = &*grounded_program(p)?;
    ensure_ground_program(p)?;
    let table = AtomTable::new(&p.signature, facts)?;
    table.check(limits)?;
    let intensional = table.mask_where(|q| p.is_intensional(q));
    let nodes = p
        .rules
        .iter()
        .map(|r| table.compile(&r.to_formula()))
        .collect::<Result<Vec<_>>>()?;
    let models: Vec<u64> = table
        .candidates()
        .filter(|&i| nodes.iter().all(|n| n.eval(i, 0)))
        .collect();
    let below = |m: u64, n: u64| {
        m & !intensional == n & !intensional && m & intensional != n & intensional && m & n == m
    };
    Ok(ModelSet::from_sorted(
        models
            .iter()
            .filter(|&&m| !models.iter().any(|&n| below(n, m)))
            .map(|&m| table.interpretation(m))
            .collect(),
    ))
}

/// For a definite theory, after grounding: `A ↔ ⋁ bodies of A-rules` and
/// `¬A ↔ ⋁ bodies of ¬A-rules` for each explainable atom `A`, and `¬G`
/// for each constraint `⊥ ⇐ G`.
pub fn literal_completion(t: &CausalTheory) -> Result<Formula> {
    let t = &*grounded_theory(t)?;
    let mut pos: IndexMap<GroundAtom, Vec<Formula>> = IndexMap::new();
    let mut neg: IndexMap<GroundAtom, Vec<Formula>> = IndexMap::new();
    let mut constraints = Vec::new();
    for r in &t.rules {
        match head_shape(&r.head)? {
            HeadShape::Bottom => constraints.push(r.body.clone().not()),
            HeadShape::Literal(l) => match &l.atom {
                LiteralAtom::Atom(a) if t.signature.is_explainable(&a.predicate) => {
                    let g = a.to_ground().ok_or_else(|| Error::NotGround(a.to_string()))?;
                    let side = if l.positive { &mut pos } else { &mut neg };
                    side.entry(g).or_default().push(r.body.clone());
                }
                _ => return Err(Error::NotDefinite(r.to_string())),
            },
            _ => return Err(Error::NotDefinite(r.to_string())),
        }
    }
    let table = AtomTable::new(&t.signature, &[])?;
    let mut parts = Vec::new();
    for (a, _) in table.atoms() {
        if !t.signature.is_explainable(&a.predicate) {
            continue;
        }
        let atom = Formula::Atom(a.to_atom());
        let bodies = |m: &IndexMap<GroundAtom, Vec<Formula>>| {
            Formula::disjunction(m.get(a).cloned().unwrap_or_default())
        };
        parts.push(atom.clone().iff(bodies(&pos)));
        parts.push(atom.not().iff(bodies(&neg)));
    }
    parts.extend(constraints);
    Ok(Formula::conjunction(parts))
}

/// Classical models of the literal completion of a definite theory.
pub fn completion_models(t: &CausalTheory, facts: &[GroundAtom], limits: &Limits) -> Result<ModelSet> {
    classical_models(&[literal_completion(t)?], &t.signature, facts, limits)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Discrepancy {
    /// A stable model where `p̂` is not the negation of `p` somewhere.
    HatMismatch(Interpretation),
    /// A stable model whose projection is not a causal model.
    StableNotCausal(Interpretation),
    /// A causal model with no matching stable model.
    CausalNotStable(Interpretation),
}

#[derive(Debug, Clone)]
pub struct SoundnessReport {
    pub causal: ModelSet,
    pub stable: ModelSet,
    pub hats: HatMap,
    pub discrepancies: Vec<Discrepancy>,
}

impl SoundnessReport {
    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

impl fmt::Display for SoundnessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            let n = self.causal.len();
            return write!(f, "PASS ({n} model{})", if n == 1 { "" } else { "s" });
        }
        writeln!(
            f,
            "FAIL ({} causal, {} stable)",
            self.causal.len(),
            self.stable.len()
        )?;
        for d in &self.discrepancies {
            let (what, i) = match d {
                Discrepancy::HatMismatch(i) => ("hat atoms disagree with negation", i),
                Discrepancy::StableNotCausal(i) => ("stable model is not causal", i),
                Discrepancy::CausalNotStable(i) => ("causal model is not stable", i),
            };
            writeln!(f, "  {what}: {{{}}}", i.render(&self.hats))?;
        }
        Ok(())
    }
}

/// Compares the causal models of `t` with the stable models of `program`,
/// which should be a translation of `t`.
pub fn check_soundness_with(
    t: &CausalTheory,
    program: &Program,
    facts: &[GroundAtom],
    limits: &Limits,
) -> Result<SoundnessReport> {
    let causal = causal_models(&ground_theory(t)?, facts, limits)?;
    let stable = stable_models(&ground_program(program)?, facts, limits)?;
    let hats = program.hats.clone();
    let mut discrepancies = Vec::new();
    let mut projected = Vec::new();
    for m in stable.iter() {
        let coherent = m.atoms().all(|(a, v)| match hats.base_of(&a.predicate) {
            Some(base) => m.get(&GroundAtom::new(base, a.args.clone())) == Some(!v),
            None => true,
        });
        if !coherent {
            discrepancies.push(Discrepancy::HatMismatch(m.clone()));
        }
        let p = m.project(|q| !hats.is_hat(q));
        if !causal.contains(&p) {
            discrepancies.push(Discrepancy::StableNotCausal(m.clone()));
        }
        projected.push(p);
    }
    for c in causal.iter() {
        if !projected.contains(c) {
            discrepancies.push(Discrepancy::CausalNotStable(c.clone()));
        }
    }
    Ok(SoundnessReport {
        causal,
        stable,
        hats,
        discrepancies,
    })
}

/// [`check_soundness_with`] on the default translation of `t`.
pub fn check_soundness(t: &CausalTheory, facts: &[GroundAtom], limits: &Limits) -> Result<SoundnessReport> {
    check_soundness_with(t, &translate(t, &TranslateOptions::default())?, facts, limits)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimulationReport {
    /// An extensional atom occurs positively in a rule head.
    ConditionViolated(String),
    Equal(ModelSet),
    Different { fixed: ModelSet, simulated: ModelSet },
}

fn positive_head_occurrence(f: &Formula, sig: &Signature) -> Option<Atom> {
    match f {
        Formula::Atom(a) if sig.is_extensional(&a.predicate) => Some(a.clone()),
        Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) | Formula::Iff(l, r) => {
            positive_head_occurrence(l, sig).or_else(|| positive_head_occurrence(r, sig))
        }
        Formula::Forall(_, g) | Formula::Exists(_, g) => positive_head_occurrence(g, sig),
        _ => None,
    }
}

/// Stable models with extensional atoms fixed by `facts`, against stable
/// models of the program plus the facts with every predicate intensional.
pub fn check_extensional_simulation(
    p: &Program,
    facts: &[GroundAtom],
    limits: &Limits,
) -> Result<SimulationReport> {
    for r in &p.rules {
        if let Some(a) = positive_head_occurrence(&r.head, &p.signature) {
            return Ok(SimulationReport::ConditionViolated(format!(
                "extensional atom {a} occurs outside negation in the head of `{r}`"
            )));
        }
    }
    let ground = ground_program(p)?;
    let fixed = stable_models(&ground, facts, limits)?;
    let mut sig = p.signature.clone();
    sig.clear_extensional();
    let mut rules = ground.rules.clone();
    rules.extend(facts.iter().map(|f| ProgramRule::fact(Formula::Atom(f.to_atom()))));
    let all = Program {
        intensional: sig.predicates().map(|(q, _)| q.to_string()).collect(),
        signature: sig,
        rules,
        hats: p.hats.clone(),
    };
    let simulated = stable_models(&all, &[], limits)?;
    Ok(if fixed.same_models(&simulated) {
        SimulationReport::Equal(fixed)
    } else {
        SimulationReport::Different { fixed, simulated }
    })
}
