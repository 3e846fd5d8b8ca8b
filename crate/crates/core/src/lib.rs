//! Nonmonotonic causal theories compiled into logic programs under the
//! stable model semantics, with brute-force oracles for both sides.
//!
//! The pipeline is
//!
//! 1. [`parse_theory`] reads a `.ct` document,
//! 2. [`normalize`] removes body implications, rewrites heads that mention
//!    non-explainable atoms and classifies every rule,
//! 3. [`translate`] produces a [`Program`] over the explainable predicates
//!    and their hats, optionally followed by [`simplify`],
//! 4. [`ground_program`] and [`emit_asp`] turn it into solver input.
//!
//! The [`semantics`] module enumerates causal models and stable models
//! directly from the definitions, so every step can be checked.
//!
//! ```
//! use causal_lp::*;
//!
//! let doc = parse_theory("universe a. explainable p/0, q/0. p <= ~q. ~q <= p.")?;
//! let theory = normalize(&doc.theory())?;
//! let report = check_soundness(&theory, &doc.facts, &Limits::default())?;
//! assert_eq!(report.to_string(), "PASS (1 model)");
//! # Ok::<(), causal_lp::Error>(())
//! ```

pub mod asp;
pub mod ast;
pub mod error;
pub mod fuzz;
pub mod grounder;
pub mod normalizer;
pub mod parser;
pub mod semantics;
pub mod translator;

pub use asp::{emit_asp, run_solver, EmitOptions};
pub use ast::{
    Atom, CausalRule, CausalTheory, Formula, GroundAtom, HatMap, Interpretation, Origin, Program,
    ProgramRule, RuleKind, Signature, Term,
};
pub use error::{Error, Result, Span};
pub use grounder::{ground_formula, ground_program, ground_theory};
pub use normalizer::{classify, normalize};
pub use parser::{parse_formula, parse_theory, TheoryDocument};
pub use semantics::{
    causal_models, check_extensional_simulation, check_soundness, completion_models,
    literal_completion, minimal_models, stable_models, Limits, ModelSet, SimulationReport,
    SoundnessReport,
};
pub use translator::{simplify, translate, TranslateOptions};
