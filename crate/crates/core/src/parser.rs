//! Reader for `.ct` theory documents.
//!
//! ```text
//! % comment to end of line
//! universe a, b.
//! explainable p/1, q/0.
//! extensional r/1.
//! fact r(a), r(b).
//! p(X) <= r(X) & ~q.
//! p(X) <-> ~q <= true.
//! ```
//!
//! Program documents use `intensional` declarations and `rule` statements
//! instead of causal rules:
//!
//! ```text
//! intensional q/1.
//! rule forall X: ~p(X) -> q(X) | ~q(X).
//! ```

use indexmap::IndexSet;

use crate::ast::{
    Atom, CausalRule, CausalTheory, Formula, GroundAtom, HatMap, Program, ProgramRule, Signature,
    Term,
};
use crate::error::{Error, Result, Span};

/// Everything read from one `.ct` file.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TheoryDocument {
    pub signature: Signature,
    pub rules: Vec<CausalRule>,
    /// Ground atoms over extensional predicates; all other extensional
    /// atoms are false.
    pub facts: Vec<GroundAtom>,
    /// `rule` statements of a program document.
    pub program_rules: Vec<ProgramRule>,
    pub intensional: Vec<String>,
}

impl TheoryDocument {
    pub fn theory(&self) -> CausalTheory {
        CausalTheory::new(self.signature.clone(), self.rules.clone())
    }

    /// True when the document states a logic program rather than a
    /// causal theory.
    pub fn is_program(&self) -> bool {
        !self.program_rules.is_empty() || !self.intensional.is_empty()
    }

    pub fn program(&self) -> Program {
        Program {
            signature: self.signature.clone(),
            rules: self.program_rules.clone(),
            intensional: self.intensional.clone(),
            hats: HatMap::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(String),
    LParen,
    RParen,
    Comma,
    Dot,
    Slash,
    Colon,
    Not,
    And,
    Or,
    Arrow,
    DArrow,
    CausedBy,
    Eq,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) | Tok::Int(s) => format!("`{s}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Not => "`~`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::DArrow => "`<->`".into(),
            Tok::CausedBy => "`<=`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

const KEYWORDS: &[&str] = &[
    "universe",
    "explainable",
    "extensional",
    "intensional",
    "fact",
    "rule",
    "true",
    "false",
    "not",
    "forall",
    "exists",
];

fn lex(text: &str) -> Result<Vec<(Tok, Span)>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let span = Span { line, column: col };
        let advance = |n: usize, i: &mut usize, col: &mut usize| {
            *i += n;
            *col += n;
        };
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            advance(1, &mut i, &mut col);
            continue;
        }
        if c == '%' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            col += i - start;
            let tok = if word == "not" { Tok::Not } else { Tok::Ident(word) };
            out.push((tok, span));
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            col += i - start;
            out.push((Tok::Int(chars[start..i].iter().collect()), span));
            continue;
        }
        let rest: String = chars[i..chars.len().min(i + 3)].iter().collect();
        let (tok, n) = if rest.starts_with("<->") {
            (Tok::DArrow, 3)
        } else if rest.starts_with("<=") {
            (Tok::CausedBy, 2)
        } else if rest.starts_with("->") {
            (Tok::Arrow, 2)
        } else {
            let t = match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ',' => Tok::Comma,
                '.' => Tok::Dot,
                '/' => Tok::Slash,
                ':' => Tok::Colon,
                '~' => Tok::Not,
                '&' => Tok::And,
                '|' => Tok::Or,
                '=' => Tok::Eq,
                _ => return Err(Error::parse(span, format!("unexpected character `{c}`"))),
            };
            (t, 1)
        };
        advance(n, &mut i, &mut col);
        out.push((tok, span));
    }
    out.push((Tok::Eof, Span { line, column: col }));
    Ok(out)
}

fn is_variable(name: &str) -> bool {
    name.starts_with(|c: char| c.is_uppercase())
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
    sig: Signature,
    /// Implicit declaration of predicates and constants on first use.
    declare: bool,
    /// `<->` as an ordinary connective with the lowest precedence.
    general_iff: bool,
}

impl Parser {
    fn new(text: &str, sig: Signature, declare: bool) -> Result<Self> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
            sig,
            declare,
            general_iff: !declare,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn at_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
    }

    fn expect(&mut self, tok: Tok) -> Result<Span> {
        let (t, span) = self.bump();
        if t == tok {
            Ok(span)
        } else {
            Err(Error::parse(
                span,
                format!("expected {}, found {}", tok.describe(), t.describe()),
            ))
        }
    }

    fn unexpected<T>(&self, what: &str) -> Result<T> {
        Err(Error::parse(
            self.span(),
            format!("expected {what}, found {}", self.peek().describe()),
        ))
    }

    fn ident(&mut self) -> Result<(String, Span)> {
        match self.bump() {
            (Tok::Ident(s), span) if !KEYWORDS.contains(&s.as_str()) => Ok((s, span)),
            (t, span) => Err(Error::parse(
                span,
                format!("expected identifier, found {}", t.describe()),
            )),
        }
    }

    fn at_spanned<T>(span: Span, r: Result<T>) -> Result<T> {
        r.map_err(|e| match e {
            Error::Parse { .. } => e,
            other => Error::parse(span, other.to_string()),
        })
    }

    // formula := impl ('<->' impl)?   (only at the top of a rule head)
    fn formula_top(&mut self, allow_iff: bool) -> Result<Formula> {
        let lhs = self.implication()?;
        if *self.peek() == Tok::DArrow {
            if !allow_iff && !self.general_iff {
                return Err(Error::parse(
                    self.span(),
                    "`<->` is only allowed as the top connective of a rule head",
                ));
            }
            self.bump();
            let rhs = self.implication()?;
            if *self.peek() == Tok::DArrow {
                return Err(Error::parse(self.span(), "`<->` cannot be chained"));
            }
            return Ok(lhs.iff(rhs));
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Formula> {
        let lhs = self.disjunction()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.implication()?;
            return Ok(lhs.implies(rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula> {
        let mut f = self.conjunction()?;
        while *self.peek() == Tok::Or {
            self.bump();
            f = f.or(self.conjunction()?);
        }
        Ok(f)
    }

    fn conjunction(&mut self) -> Result<Formula> {
        let mut f = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            f = f.and(self.unary()?);
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula> {
        if *self.peek() == Tok::Not {
            self.bump();
            return Ok(self.unary()?.not());
        }
        if self.at_keyword("forall") || self.at_keyword("exists") {
            let universal = self.at_keyword("forall");
            self.bump();
            let mut vars = Vec::new();
            loop {
                let (v, span) = self.ident()?;
                if !is_variable(&v) {
                    return Err(Error::parse(
                        span,
                        format!("quantified variable `{v}` must start with an uppercase letter"),
                    ));
                }
                vars.push(v);
                if *self.peek() == Tok::Comma {
                    self.bump();
                } else {
                    break;
                }
            }
            self.expect(Tok::Colon)?;
            let body = if self.general_iff {
                self.formula_top(true)?
            } else {
                self.implication()?
            };
            return Ok(vars.into_iter().rev().fold(body, |f, v| {
                if universal {
                    Formula::forall(v, f)
                } else {
                    Formula::exists(v, f)
                }
            }));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Formula> {
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let f = self.formula_top(false)?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            Tok::Ident(s) if s == "true" => {
                self.bump();
                Ok(Formula::Top)
            }
            Tok::Ident(s) if s == "false" => {
                self.bump();
                Ok(Formula::Bottom)
            }
            Tok::Ident(_) | Tok::Int(_) => {
                let start = self.span();
                let first = self.term_or_atom()?;
                if *self.peek() == Tok::Eq {
                    self.bump();
                    let lhs = match first {
                        Either::Term(t) => t,
                        Either::Atom(a) if a.args.is_empty() => {
                            self.constant_term(a.predicate, start)?
                        }
                        Either::Atom(_) => {
                            return Err(Error::parse(start, "left side of `=` must be a term"))
                        }
                    };
                    let rspan = self.span();
                    let rhs = match self.term_or_atom()? {
                        Either::Term(t) => t,
                        Either::Atom(a) if a.args.is_empty() => {
                            self.constant_term(a.predicate, rspan)?
                        }
                        Either::Atom(_) => {
                            return Err(Error::parse(rspan, "right side of `=` must be a term"))
                        }
                    };
                    return Ok(Formula::Equal(lhs, rhs));
                }
                match first {
                    Either::Atom(a) => {
                        let r = if self.declare {
                            self.sig.declare_predicate(&a.predicate, a.args.len())
                        } else {
                            self.sig.check_formula(&Formula::Atom(a.clone()))
                        };
                        Self::at_spanned(start, r)?;
                        Ok(Formula::Atom(a))
                    }
                    Either::Term(Term::Var(v)) => Err(Error::parse(
                        start,
                        format!("variable `{v}` used as a formula"),
                    )),
                    Either::Term(Term::Const(c)) => Err(Error::parse(
                        start,
                        format!("`{c}` is not a formula"),
                    )),
                }
            }
            _ => self.unexpected("a formula"),
        }
    }

    fn constant_term(&mut self, name: String, span: Span) -> Result<Term> {
        if self.sig.arity(&name).is_some() && self.declare {
            return Err(Error::parse(
                span,
                format!("`{name}` is a predicate, not an object constant"),
            ));
        }
        if self.declare {
            self.sig.add_constant(name.clone());
        }
        Ok(Term::Const(name))
    }

    /// An uppercase identifier is a variable term; a lowercase one is an
    /// atom, possibly with arguments (a bare one may turn out to be a
    /// constant on the left of `=`).
    fn term_or_atom(&mut self) -> Result<Either> {
        let (tok, span) = self.bump();
        let name = match tok {
            Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()) => s,
            Tok::Int(s) => return Ok(Either::Term(self.constant_term(s, span)?)),
            t => {
                return Err(Error::parse(
                    span,
                    format!("expected identifier, found {}", t.describe()),
                ))
            }
        };
        if is_variable(&name) {
            return Ok(Either::Term(Term::Var(name)));
        }
        if *self.peek() != Tok::LParen {
            return Ok(Either::Atom(Atom::prop(name)));
        }
        self.bump();
        let mut args = Vec::new();
        loop {
            args.push(self.term()?);
            match self.bump() {
                (Tok::Comma, _) => continue,
                (Tok::RParen, _) => break,
                (t, s) => {
                    return Err(Error::parse(
                        s,
                        format!("expected `,` or `)`, found {}", t.describe()),
                    ))
                }
            }
        }
        Ok(Either::Atom(Atom::new(name, args)))
    }

    fn term(&mut self) -> Result<Term> {
        let span = self.span();
        match self.term_or_atom()? {
            Either::Term(t) => Ok(t),
            Either::Atom(a) if a.args.is_empty() => self.constant_term(a.predicate, span),
            Either::Atom(_) => Err(Error::parse(
                span,
                "function symbols of nonzero arity are not supported",
            )),
        }
    }

    fn pred_spec(&mut self) -> Result<(String, usize, Span)> {
        let (name, span) = self.ident()?;
        if is_variable(&name) {
            return Err(Error::parse(
                span,
                format!("predicate `{name}` must start with a lowercase letter"),
            ));
        }
        self.expect(Tok::Slash)?;
        match self.bump() {
            (Tok::Int(n), s) => n
                .parse()
                .map(|n| (name, n, span))
                .map_err(|_| Error::parse(s, "arity out of range")),
            (t, s) => Err(Error::parse(s, format!("expected arity, found {}", t.describe()))),
        }
    }

    fn list<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<T>> {
        let mut out = vec![item(self)?];
        while *self.peek() == Tok::Comma {
            self.bump();
            out.push(item(self)?);
        }
        self.expect(Tok::Dot)?;
        Ok(out)
    }

    fn document(mut self) -> Result<TheoryDocument> {
        let mut rules = Vec::new();
        let mut facts: Vec<(GroundAtom, Span)> = Vec::new();
        let mut program_rules = Vec::new();
        let mut intensional = IndexSet::new();
        let mut first_rule: Option<Span> = None;
        let mut first_program: Option<Span> = None;

        while *self.peek() != Tok::Eof {
            let start = self.span();
            if self.at_keyword("universe") {
                self.bump();
                for (c, span) in self.list(|p| p.ident())? {
                    if is_variable(&c) {
                        return Err(Error::parse(
                            span,
                            format!("object constant `{c}` must start with a lowercase letter"),
                        ));
                    }
                    self.sig.add_constant(c);
                }
            } else if self.at_keyword("explainable") || self.at_keyword("extensional") {
                let explainable = self.at_keyword("explainable");
                self.bump();
                for (name, arity, span) in self.list(|p| p.pred_spec())? {
                    let r = if explainable {
                        self.sig.add_explainable(&name, arity)
                    } else {
                        self.sig.add_extensional(&name, arity)
                    };
                    Self::at_spanned(span, r)?;
                }
            } else if self.at_keyword("intensional") {
                self.bump();
                first_program.get_or_insert(start);
                for (name, arity, span) in self.list(|p| p.pred_spec())? {
                    Self::at_spanned(span, self.sig.declare_predicate(&name, arity))?;
                    intensional.insert(name);
                }
            } else if self.at_keyword("fact") {
                self.bump();
                let atoms = self.list(|p| {
                    let span = p.span();
                    match p.primary()? {
                        Formula::Atom(a) => match a.to_ground() {
                            Some(g) => Ok((g, span)),
                            None => Err(Error::parse(span, "facts must be ground")),
                        },
                        _ => Err(Error::parse(span, "a fact must be an atom")),
                    }
                })?;
                facts.extend(atoms);
            } else if self.at_keyword("rule") {
                self.bump();
                first_program.get_or_insert(start);
                let f = self.implication()?;
                self.expect(Tok::Dot)?;
                program_rules.push(Self::at_spanned(start, program_rule(f))?);
            } else {
                first_rule.get_or_insert(start);
                let head = self.formula_top(true)?;
                if head.contains_quantifier() {
                    return Err(Error::parse(
                        start,
                        "quantifiers in rule heads are not supported",
                    ));
                }
                if head.contains_implication() && !matches!(head, Formula::Iff(..)) {
                    return Err(Error::parse(start, "implication in a rule head"));
                }
                self.expect(Tok::CausedBy)?;
                let body = self.formula_top(false)?;
                self.expect(Tok::Dot)?;
                rules.push(CausalRule::new(head, body));
            }
        }

        if let (Some(_), Some(span)) = (first_rule, first_program) {
            return Err(Error::parse(
                span,
                "a document holds either causal rules or program rules, not both",
            ));
        }
        for (fact, span) in &facts {
            if !self.sig.is_extensional(&fact.predicate) {
                return Err(Error::parse(
                    *span,
                    format!(
                        "fact `{fact}` uses `{}`, which is not declared extensional",
                        fact.predicate
                    ),
                ));
            }
        }
        for p in &intensional {
            if self.sig.is_extensional(p) || self.sig.is_explainable(p) {
                return Err(Error::parse(
                    first_program.unwrap_or(Span { line: 1, column: 1 }),
                    format!("`{p}` cannot be intensional and explainable or extensional"),
                ));
            }
        }
        let end = self.span();
        Self::at_spanned(end, self.sig.validate())?;

        Ok(TheoryDocument {
            signature: self.sig,
            rules,
            facts: facts.into_iter().map(|(f, _)| f).collect(),
            program_rules,
            intensional: intensional.into_iter().collect(),
        })
    }
}

enum Either {
    Term(Term),
    Atom(Atom),
}

fn program_rule(f: Formula) -> Result<ProgramRule> {
    let mut universals = Vec::new();
    let mut cur = f;
    while let Formula::Forall(v, g) = cur {
        universals.push(v);
        cur = *g;
    }
    let rule = match cur {
        Formula::Implies(b, h) => ProgramRule::new(*b, *h),
        other => ProgramRule::fact(other),
    };
    rule.validate()?;
    let mut all: IndexSet<String> = universals.into_iter().collect();
    all.extend(rule.universals.iter().cloned());
    Ok(ProgramRule {
        universals: all.into_iter().collect(),
        ..rule
    })
}

/// Parses a `.ct` document.
pub fn parse_theory(text: &str) -> Result<TheoryDocument> {
    Parser::new(text, Signature::new(), true)?.document()
}

/// Parses a single formula against an existing signature. Predicates must
/// be declared with matching arity. Here `<->` may occur anywhere; it binds
/// weakest, and a quantifier extends as far right as possible.
pub fn parse_formula(text: &str, sig: &Signature) -> Result<Formula> {
    let mut p = Parser::new(text, sig.clone(), false)?;
    let f = p.formula_top(true)?;
    if *p.peek() != Tok::Eof {
        return p.unexpected("end of formula");
    }
    Ok(f)
}
