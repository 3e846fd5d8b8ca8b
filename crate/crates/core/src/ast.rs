//! Symbols, formulas, causal theories, logic programs and interpretations.
//!
//! Everything here is an immutable value: transformations build new trees
//! rather than mutating existing ones.

use std::fmt;

use indexmap::{IndexMap, IndexSet};

use crate::error::{Error, Result};

/// A term is a variable (uppercase initial) or an object constant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(String),
    Const(String),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Self {
        Term::Var(name.into())
    }

    pub fn constant(name: impl Into<String>) -> Self {
        Term::Const(name.into())
    }

    pub fn is_var(&self) -> bool {
        matches!(self, Term::Var(_))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) | Term::Const(v) => f.write_str(v),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Atom {
    pub predicate: String,
    pub args: Vec<Term>,
}

impl Atom {
    pub fn new(predicate: impl Into<String>, args: Vec<Term>) -> Self {
        Atom {
            predicate: predicate.into(),
            args,
        }
    }

    pub fn prop(predicate: impl Into<String>) -> Self {
        Atom::new(predicate, Vec::new())
    }

    /// Converts a variable-free atom into a [`GroundAtom`].
    pub fn to_ground(&self) -> Option<GroundAtom> {
        let args = self
            .args
            .iter()
            .map(|t| match t {
                Term::Const(c) => Some(c.clone()),
                Term::Var(_) => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(GroundAtom::new(self.predicate.clone(), args))
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.predicate)?;
        if !self.args.is_empty() {
            f.write_str("(")?;
            for (i, a) in self.args.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{a}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// First-order formula.
///
/// `Iff` only comes out of the parser as the top connective of a
/// synonymity-rule head, but it is a general node so that derived
/// formulas (completions, definitions) can use it too.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Top,
    Bottom,
    Atom(Atom),
    Equal(Term, Term),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Forall(String, Box<Formula>),
    Exists(String, Box<Formula>),
}

impl Formula {
    pub fn atom(predicate: impl Into<String>, args: Vec<Term>) -> Self {
        Formula::Atom(Atom::new(predicate, args))
    }

    pub fn prop(predicate: impl Into<String>) -> Self {
        Formula::Atom(Atom::prop(predicate))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        Formula::Not(Box::new(self))
    }

    pub fn and(self, rhs: Formula) -> Self {
        Formula::And(Box::new(self), Box::new(rhs))
    }

    pub fn or(self, rhs: Formula) -> Self {
        Formula::Or(Box::new(self), Box::new(rhs))
    }

    pub fn implies(self, rhs: Formula) -> Self {
        Formula::Implies(Box::new(self), Box::new(rhs))
    }

    pub fn iff(self, rhs: Formula) -> Self {
        Formula::Iff(Box::new(self), Box::new(rhs))
    }

    pub fn forall(var: impl Into<String>, body: Formula) -> Self {
        Formula::Forall(var.into(), Box::new(body))
    }

    pub fn exists(var: impl Into<String>, body: Formula) -> Self {
        Formula::Exists(var.into(), Box::new(body))
    }

    /// `¬¬self`
    pub fn double_neg(self) -> Self {
        self.not().not()
    }

    /// Left-nested conjunction; the empty conjunction is `⊤`.
    pub fn conjunction(items: impl IntoIterator<Item = Formula>) -> Self {
        items
            .into_iter()
            .reduce(Formula::and)
            .unwrap_or(Formula::Top)
    }

    /// Left-nested disjunction; the empty disjunction is `⊥`.
    pub fn disjunction(items: impl IntoIterator<Item = Formula>) -> Self {
        items
            .into_iter()
            .reduce(Formula::or)
            .unwrap_or(Formula::Bottom)
    }

    /// Variables with a free occurrence, in order of first occurrence.
    pub fn free_variables(&self) -> Vec<String> {
        let mut out = IndexSet::new();
        let mut bound = Vec::new();
        self.collect_free(&mut bound, &mut out);
        out.into_iter().collect()
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut IndexSet<String>) {
        let mut term = |t: &Term, bound: &Vec<String>| {
            if let Term::Var(v) = t {
                if !bound.contains(v) {
                    out.insert(v.clone());
                }
            }
        };
        match self {
            Formula::Top | Formula::Bottom => {}
            Formula::Atom(a) => a.args.iter().for_each(|t| term(t, bound)),
            Formula::Equal(l, r) => {
                term(l, bound);
                term(r, bound);
            }
            Formula::Not(g) => g.collect_free(bound, out),
            Formula::And(l, r)
            | Formula::Or(l, r)
            | Formula::Implies(l, r)
            | Formula::Iff(l, r) => {
                l.collect_free(bound, out);
                r.collect_free(bound, out);
            }
            Formula::Forall(v, g) | Formula::Exists(v, g) => {
                bound.push(v.clone());
                g.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    /// Renames every atom whose predicate is a key of `mapping`.
    ///
    /// Renaming is unrestricted: occurrences under negation are renamed
    /// too. Fails when a source and a target predicate are both declared
    /// in `sig` with different arities.
    pub fn substitute_head_predicates(
        &self,
        mapping: &IndexMap<String, String>,
        sig: &Signature,
    ) -> Result<Formula> {
        for (from, to) in mapping {
            if let (Some(a), Some(b)) = (sig.arity(from), sig.arity(to)) {
                if a != b {
                    return Err(Error::ArityMismatch {
                        name: to.clone(),
                        declared: b,
                        used: a,
                    });
                }
            }
        }
        Ok(self.map_atoms(&mut |a| match mapping.get(&a.predicate) {
            Some(to) => Formula::Atom(Atom::new(to.clone(), a.args.clone())),
            None => Formula::Atom(a.clone()),
        }))
    }

    /// Rebuilds the formula with every atom replaced by `f(atom)`.
    pub fn map_atoms(&self, f: &mut impl FnMut(&Atom) -> Formula) -> Formula {
        match self {
            Formula::Atom(a) => f(a),
            Formula::Top | Formula::Bottom | Formula::Equal(..) => self.clone(),
            Formula::Not(g) => g.map_atoms(f).not(),
            Formula::And(l, r) => {
                let l = l.map_atoms(f);
                l.and(r.map_atoms(f))
            }
            Formula::Or(l, r) => {
                let l = l.map_atoms(f);
                l.or(r.map_atoms(f))
            }
            Formula::Implies(l, r) => {
                let l = l.map_atoms(f);
                l.implies(r.map_atoms(f))
            }
            Formula::Iff(l, r) => {
                let l = l.map_atoms(f);
                l.iff(r.map_atoms(f))
            }
            Formula::Forall(v, g) => Formula::forall(v.clone(), g.map_atoms(f)),
            Formula::Exists(v, g) => Formula::exists(v.clone(), g.map_atoms(f)),
        }
    }

    /// Visits every atom occurrence.
    pub fn for_each_atom(&self, f: &mut impl FnMut(&Atom)) {
        match self {
            Formula::Atom(a) => f(a),
            Formula::Top | Formula::Bottom | Formula::Equal(..) => {}
            Formula::Not(g) | Formula::Forall(_, g) | Formula::Exists(_, g) => {
                g.for_each_atom(f)
            }
            Formula::And(l, r)
            | Formula::Or(l, r)
            | Formula::Implies(l, r)
            | Formula::Iff(l, r) => {
                l.for_each_atom(f);
                r.for_each_atom(f);
            }
        }
    }

    pub fn mentions_predicate(&self, pred: impl Fn(&str) -> bool) -> bool {
        let mut found = false;
        self.for_each_atom(&mut |a| found |= pred(&a.predicate));
        found
    }

    pub fn contains_implication(&self) -> bool {
        self.any_node(&|f| matches!(f, Formula::Implies(..) | Formula::Iff(..)))
    }

    pub fn contains_quantifier(&self) -> bool {
        self.any_node(&|f| matches!(f, Formula::Forall(..) | Formula::Exists(..)))
    }

    /// No variables, quantifiers or equality atoms.
    pub fn is_ground(&self) -> bool {
        !self.any_node(&|f| match f {
            Formula::Forall(..) | Formula::Exists(..) | Formula::Equal(..) => true,
            Formula::Atom(a) => a.args.iter().any(Term::is_var),
            _ => false,
        })
    }

    pub fn any_node(&self, pred: &impl Fn(&Formula) -> bool) -> bool {
        if pred(self) {
            return true;
        }
        match self {
            Formula::Top | Formula::Bottom | Formula::Atom(_) | Formula::Equal(..) => false,
            Formula::Not(g) | Formula::Forall(_, g) | Formula::Exists(_, g) => g.any_node(pred),
            Formula::And(l, r)
            | Formula::Or(l, r)
            | Formula::Implies(l, r)
            | Formula::Iff(l, r) => l.any_node(pred) || r.any_node(pred),
        }
    }

    /// Writes the formula with the fewest parentheses that still parse back
    /// to the same tree. `ctx` is the binding strength demanded by the parent.
    fn write_prec(&self, f: &mut fmt::Formatter<'_>, ctx: u8) -> fmt::Result {
        let parens = match self {
            Formula::Forall(..) | Formula::Exists(..) | Formula::Iff(..) => ctx > 0,
            Formula::Implies(..) => ctx > 1,
            Formula::Or(..) => ctx > 2,
            Formula::And(..) => ctx > 3,
            _ => false,
        };
        if parens {
            f.write_str("(")?;
        }
        match self {
            Formula::Top => f.write_str("true")?,
            Formula::Bottom => f.write_str("false")?,
            Formula::Atom(a) => write!(f, "{a}")?,
            Formula::Equal(l, r) => write!(f, "{l} = {r}")?,
            Formula::Not(g) => {
                f.write_str("~")?;
                g.write_prec(f, 4)?;
            }
            Formula::And(l, r) => {
                l.write_prec(f, 3)?;
                f.write_str(" & ")?;
                r.write_prec(f, 4)?;
            }
            Formula::Or(l, r) => {
                l.write_prec(f, 2)?;
                f.write_str(" | ")?;
                r.write_prec(f, 3)?;
            }
            Formula::Implies(l, r) => {
                l.write_prec(f, 2)?;
                f.write_str(" -> ")?;
                r.write_prec(f, 1)?;
            }
            Formula::Iff(l, r) => {
                l.write_prec(f, 1)?;
                f.write_str(" <-> ")?;
                r.write_prec(f, 1)?;
            }
            Formula::Forall(..) | Formula::Exists(..) => {
                let (kw, vars, body) = self.quantifier_prefix();
                write!(f, "{kw} {}: ", vars.join(", "))?;
                body.write_prec(f, 1)?;
            }
        }
        if parens {
            f.write_str(")")?;
        }
        Ok(())
    }

    /// Collapses a run of same-kind quantifiers: `forall X, Y: body`.
    fn quantifier_prefix(&self) -> (&'static str, Vec<&str>, &Formula) {
        let mut vars = Vec::new();
        let mut cur = self;
        let universal = matches!(self, Formula::Forall(..));
        loop {
            match cur {
                Formula::Forall(v, g) if universal => {
                    vars.push(v.as_str());
                    cur = g;
                }
                Formula::Exists(v, g) if !universal => {
                    vars.push(v.as_str());
                    cur = g;
                }
                _ => break,
            }
        }
        (if universal { "forall" } else { "exists" }, vars, cur)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_prec(f, 0)
    }
}

/// Predicate and object constant declarations.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Signature {
    object_constants: IndexSet<String>,
    universe: IndexSet<String>,
    predicates: IndexMap<String, usize>,
    explainable: IndexSet<String>,
    extensional: IndexSet<String>,
}

impl Signature {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds an object constant and makes it part of the grounding universe.
    pub fn add_constant(&mut self, name: impl Into<String>) {
        let name = name.into();
        self.object_constants.insert(name.clone());
        self.universe.insert(name);
    }

    /// Declares `name/arity`, or checks the arity if already declared.
    pub fn declare_predicate(&mut self, name: &str, arity: usize) -> Result<()> {
        if name == "=" {
            return Err(Error::Signature(
                "equality is builtin and cannot be declared".into(),
            ));
        }
        match self.predicates.get(name) {
            Some(&declared) if declared != arity => Err(Error::ArityMismatch {
                name: name.to_string(),
                declared,
                used: arity,
            }),
            Some(_) => Ok(()),
            None => {
                self.predicates.insert(name.to_string(), arity);
                Ok(())
            }
        }
    }

    pub fn add_explainable(&mut self, name: &str, arity: usize) -> Result<()> {
        self.declare_predicate(name, arity)?;
        if self.extensional.contains(name) {
            return Err(Error::Signature(format!(
                "`{name}` cannot be both explainable and extensional"
            )));
        }
        self.explainable.insert(name.to_string());
        Ok(())
    }

    pub fn add_extensional(&mut self, name: &str, arity: usize) -> Result<()> {
        self.declare_predicate(name, arity)?;
        if self.explainable.contains(name) {
            return Err(Error::Signature(format!(
                "`{name}` cannot be both explainable and extensional"
            )));
        }
        self.extensional.insert(name.to_string());
        Ok(())
    }

    /// Forgets the extensional markings (every predicate becomes free).
    pub fn clear_extensional(&mut self) {
        self.extensional.clear();
    }

    pub fn arity(&self, name: &str) -> Option<usize> {
        self.predicates.get(name).copied()
    }

    pub fn predicates(&self) -> impl Iterator<Item = (&str, usize)> {
        self.predicates.iter().map(|(n, a)| (n.as_str(), *a))
    }

    pub fn object_constants(&self) -> impl Iterator<Item = &str> {
        self.object_constants.iter().map(String::as_str)
    }

    pub fn universe(&self) -> impl ExactSizeIterator<Item = &str> {
        self.universe.iter().map(String::as_str)
    }

    pub fn explainable(&self) -> impl ExactSizeIterator<Item = &str> {
        self.explainable.iter().map(String::as_str)
    }

    pub fn extensional(&self) -> impl ExactSizeIterator<Item = &str> {
        self.extensional.iter().map(String::as_str)
    }

    pub fn is_explainable(&self, name: &str) -> bool {
        self.explainable.contains(name)
    }

    pub fn is_extensional(&self, name: &str) -> bool {
        self.extensional.contains(name)
    }

    pub fn validate(&self) -> Result<()> {
        if self.universe.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if let Some(c) = self
            .universe
            .iter()
            .find(|c| !self.object_constants.contains(*c))
        {
            return Err(Error::Signature(format!(
                "universe member `{c}` is not an object constant"
            )));
        }
        for p in self.explainable.iter().chain(&self.extensional) {
            if !self.predicates.contains_key(p) {
                return Err(Error::UndeclaredPredicate(p.clone()));
            }
        }
        if let Some(p) = self.explainable.intersection(&self.extensional).next() {
            return Err(Error::Signature(format!(
                "`{p}` cannot be both explainable and extensional"
            )));
        }
        Ok(())
    }

    /// Checks every atom of `f` against the declared arities.
    pub fn check_formula(&self, f: &Formula) -> Result<()> {
        let mut err = None;
        f.for_each_atom(&mut |a| {
            if err.is_some() {
                return;
            }
            match self.arity(&a.predicate) {
                None => err = Some(Error::UndeclaredPredicate(a.predicate.clone())),
                Some(n) if n != a.args.len() => {
                    err = Some(Error::ArityMismatch {
                        name: a.predicate.clone(),
                        declared: n,
                        used: a.args.len(),
                    })
                }
                Some(_) => {}
            }
        });
        err.map_or(Ok(()), Err)
    }
}

/// The rule kinds of the translation, in order of increasing head complexity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleKind {
    /// Head `⊥`.
    C,
    /// Head is a literal.
    L,
    /// Head is `L1 ↔ L2`.
    S,
    /// Head is a disjunction of literals.
    D,
    Unclassified,
}

/// `head ⇐ body`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CausalRule {
    pub head: Formula,
    pub body: Formula,
    pub kind: RuleKind,
}

impl CausalRule {
    pub fn new(head: Formula, body: Formula) -> Self {
        CausalRule {
            head,
            body,
            kind: RuleKind::Unclassified,
        }
    }

    pub fn with_kind(mut self, kind: RuleKind) -> Self {
        self.kind = kind;
        self
    }

    /// Free variables of head, then body.
    pub fn free_variables(&self) -> Vec<String> {
        let mut vars: IndexSet<String> = self.head.free_variables().into_iter().collect();
        vars.extend(self.body.free_variables());
        vars.into_iter().collect()
    }
}

impl fmt::Display for CausalRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.head.write_prec(f, 0)?;
        f.write_str(" <= ")?;
        self.body.write_prec(f, 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CausalTheory {
    pub signature: Signature,
    pub rules: Vec<CausalRule>,
}

impl CausalTheory {
    pub fn new(signature: Signature, rules: Vec<CausalRule>) -> Self {
        CausalTheory { signature, rules }
    }

    /// Every atom of every rule uses a declared predicate with its arity.
    pub fn check(&self) -> Result<()> {
        self.signature.validate()?;
        for r in &self.rules {
            self.signature.check_formula(&r.head)?;
            self.signature.check_formula(&r.body)?;
        }
        Ok(())
    }
}

/// Where a program rule came from; used for output layout only.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum Origin {
    /// Written directly in the input.
    #[default]
    Input,
    /// Translation of the causal rule at `index`, whose head mentions the
    /// explainable predicates `defines`.
    Rule { index: usize, defines: Vec<String> },
    /// Completeness constraint for an explainable predicate.
    Completeness(String),
}

/// `∀ universals (body → head)`; a rule with body `⊤` stands for its head.
#[derive(Debug, Clone, Eq)]
pub struct ProgramRule {
    pub universals: Vec<String>,
    pub body: Formula,
    pub head: Formula,
    pub origin: Origin,
}

impl PartialEq for ProgramRule {
    fn eq(&self, other: &Self) -> bool {
        self.universals == other.universals && self.body == other.body && self.head == other.head
    }
}

impl ProgramRule {
    /// Universally closes `body → head` over its free variables, in order
    /// of first occurrence (body first).
    pub fn new(body: Formula, head: Formula) -> Self {
        let mut vars: IndexSet<String> = body.free_variables().into_iter().collect();
        vars.extend(head.free_variables());
        ProgramRule {
            universals: vars.into_iter().collect(),
            body,
            head,
            origin: Origin::Input,
        }
    }

    /// A sentence without implication, read as `⊤ → formula`.
    pub fn fact(head: Formula) -> Self {
        ProgramRule::new(Formula::Top, head)
    }

    pub fn with_origin(mut self, origin: Origin) -> Self {
        self.origin = origin;
        self
    }

    /// Rules may not contain implications besides the top-level one.
    pub fn validate(&self) -> Result<()> {
        if self.body.contains_implication() || self.head.contains_implication() {
            return Err(Error::MalformedRule(format!("nested implication in `{self}`")));
        }
        Ok(())
    }

    /// The rule as a single sentence.
    pub fn to_formula(&self) -> Formula {
        let inner = match self.body {
            Formula::Top => self.head.clone(),
            _ => self.body.clone().implies(self.head.clone()),
        };
        self.universals
            .iter()
            .rev()
            .fold(inner, |f, v| Formula::forall(v.clone(), f))
    }

    pub fn is_ground(&self) -> bool {
        self.universals.is_empty() && self.body.is_ground() && self.head.is_ground()
    }
}

impl fmt::Display for ProgramRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.universals.is_empty() {
            write!(f, "forall {}: ", self.universals.join(", "))?;
        }
        if self.body == Formula::Top {
            self.head.write_prec(f, 1)
        } else {
            self.body.write_prec(f, 2)?;
            f.write_str(" -> ")?;
            self.head.write_prec(f, 1)
        }
    }
}

/// Fresh predicates standing for the negations of explainable ones.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HatMap {
    map: IndexMap<String, String>,
}

impl HatMap {
    /// Chooses `p_hat` for every explainable `p`, extended with underscores
    /// until it is fresh with respect to the declared predicates.
    pub fn for_signature(sig: &Signature) -> Self {
        let mut taken: IndexSet<String> = sig.predicates().map(|(p, _)| p.to_string()).collect();
        let mut map = IndexMap::new();
        for p in sig.explainable() {
            let mut name = format!("{p}_hat");
            while taken.contains(&name) {
                name.push('_');
            }
            taken.insert(name.clone());
            map.insert(p.to_string(), name);
        }
        HatMap { map }
    }

    pub fn hat(&self, pred: &str) -> Option<&str> {
        self.map.get(pred).map(String::as_str)
    }

    pub fn base_of(&self, hat: &str) -> Option<&str> {
        self.map
            .iter()
            .find(|(_, h)| h.as_str() == hat)
            .map(|(b, _)| b.as_str())
    }

    pub fn is_hat(&self, pred: &str) -> bool {
        self.base_of(pred).is_some()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.map.iter().map(|(b, h)| (b.as_str(), h.as_str()))
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// `p(t)` ↦ `p̂(t)`
    pub fn hat_atom(&self, atom: &Atom) -> Option<Atom> {
        self.hat(&atom.predicate)
            .map(|h| Atom::new(h, atom.args.clone()))
    }
}

/// A conjunction of program rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Program {
    /// Declared predicates, including hat predicates.
    pub signature: Signature,
    pub rules: Vec<ProgramRule>,
    pub intensional: Vec<String>,
    pub hats: HatMap,
}

impl Program {
    pub fn is_intensional(&self, pred: &str) -> bool {
        self.intensional.iter().any(|p| p == pred)
    }

    pub fn is_ground(&self) -> bool {
        self.rules.iter().all(ProgramRule::is_ground)
    }

    pub fn validate(&self) -> Result<()> {
        self.signature.validate()?;
        for r in &self.rules {
            r.validate()?;
            self.signature.check_formula(&r.body)?;
            self.signature.check_formula(&r.head)?;
        }
        Ok(())
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rules {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// A predicate applied to object constants.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundAtom {
    pub predicate: String,
    pub args: Vec<String>,
}

impl GroundAtom {
    pub fn new(predicate: impl Into<String>, args: Vec<String>) -> Self {
        GroundAtom {
            predicate: predicate.into(),
            args,
        }
    }

    pub fn prop(predicate: impl Into<String>) -> Self {
        GroundAtom::new(predicate, Vec::new())
    }

    pub fn to_atom(&self) -> Atom {
        Atom::new(
            self.predicate.clone(),
            self.args.iter().cloned().map(Term::Const).collect(),
        )
    }
}

impl fmt::Display for GroundAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.predicate)?;
        if !self.args.is_empty() {
            write!(f, "({})", self.args.join(","))?;
        }
        Ok(())
    }
}

/// A Herbrand interpretation: truth values for ground atoms, in canonical
/// atom order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Interpretation {
    truth: IndexMap<GroundAtom, bool>,
}

impl Interpretation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, atom: GroundAtom, value: bool) {
        self.truth.insert(atom, value);
    }

    pub fn get(&self, atom: &GroundAtom) -> Option<bool> {
        self.truth.get(atom).copied()
    }

    pub fn atoms(&self) -> impl Iterator<Item = (&GroundAtom, bool)> {
        self.truth.iter().map(|(a, v)| (a, *v))
    }

    pub fn true_atoms(&self) -> impl Iterator<Item = &GroundAtom> {
        self.truth.iter().filter(|(_, v)| **v).map(|(a, _)| a)
    }

    pub fn len(&self) -> usize {
        self.truth.len()
    }

    pub fn is_empty(&self) -> bool {
        self.truth.is_empty()
    }

    /// Keeps the atoms whose predicate satisfies `keep`.
    pub fn project(&self, keep: impl Fn(&str) -> bool) -> Interpretation {
        Interpretation {
            truth: self
                .truth
                .iter()
                .filter(|(a, _)| keep(&a.predicate))
                .map(|(a, v)| (a.clone(), *v))
                .collect(),
        }
    }

    /// True atoms separated by spaces, hat atoms written as `-p(..)`.
    pub fn render(&self, hats: &HatMap) -> String {
        self.true_atoms()
            .map(|a| match hats.base_of(&a.predicate) {
                Some(base) => format!("-{}", GroundAtom::new(base, a.args.clone())),
                None => a.to_string(),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl FromIterator<(GroundAtom, bool)> for Interpretation {
    fn from_iter<I: IntoIterator<Item = (GroundAtom, bool)>>(iter: I) -> Self {
        Interpretation {
            truth: iter.into_iter().collect(),
        }
    }
}
