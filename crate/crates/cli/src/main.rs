use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use causal_lp::asp::{emit_asp, run_solver, EmitOptions};
use causal_lp::fuzz::corpus;
use causal_lp::semantics::{check_soundness_with, completion_models};
use causal_lp::translator::swap_hat_heads;
use causal_lp::*;
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Compile nonmonotonic causal theories into logic programs and check the
/// result by enumeration.
#[derive(Parser)]
#[command(name = "causal-lp", version)]
struct Cli {
    /// File of `key = value` lines supplying defaults for the flags below.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the logic program for a theory.
    Translate(TranslateArgs),
    /// Enumerate models.
    Models(ModelsArgs),
    /// Compare causal models with stable models of the translation.
    Verify(VerifyArgs),
    /// Print solver input.
    Emit(EmitArgs),
    /// Run an external answer set solver on the emitted program.
    Solve(SolveArgs),
}

#[derive(Args)]
struct Pipeline {
    /// Apply the stable-model-preserving simplifications.
    #[arg(long)]
    simplify: bool,
    /// Translate L- and S-rules through the disjunctive translation.
    #[arg(long)]
    force_trd: bool,
    /// Deliberately break the translation (exercises the failure path).
    #[arg(long, hide = true)]
    corrupt_translation: bool,
}

#[derive(Args)]
struct TranslateArgs {
    file: PathBuf,
    #[command(flatten)]
    pipeline: Pipeline,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// With `--format asp`: `#domain` declarations and pooled facts.
    #[arg(long)]
    legacy_lparse: bool,
}

#[derive(Args)]
struct ModelsArgs {
    file: PathBuf,
    #[command(flatten)]
    pipeline: Pipeline,
    #[arg(long, value_enum)]
    semantics: Option<Semantics>,
    /// Drop the hat atoms from stable models.
    #[arg(long)]
    project: bool,
    /// Lift the limit on the number of atoms to enumerate.
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(required_unless_present = "fuzz")]
    file: Option<PathBuf>,
    #[command(flatten)]
    pipeline: Pipeline,
    /// Check this many random ground theories instead of a file.
    #[arg(long, value_name = "N")]
    fuzz: Option<usize>,
    #[arg(long, value_name = "S")]
    seed: Option<u64>,
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args)]
struct EmitArgs {
    file: PathBuf,
    #[command(flatten)]
    pipeline: Pipeline,
    #[arg(long)]
    legacy_lparse: bool,
}

#[derive(Args)]
struct SolveArgs {
    file: PathBuf,
    #[command(flatten)]
    pipeline: Pipeline,
    /// Solver command line; the program is written to its standard input.
    #[arg(long, value_name = "CMD")]
    solver: Option<String>,
    #[arg(long)]
    project: bool,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Formula,
    Asp,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Semantics {
    Causal,
    Stable,
    Completion,
}

const CONFIG_KEYS: [&str; 12] = [
    "simplify",
    "force-trd",
    "format",
    "legacy-lparse",
    "semantics",
    "project",
    "allow-large",
    "fuzz",
    "seed",
    "solver",
    "corrupt-translation",
    "max-atoms",
];

enum Failure {
    Usage(String),
    Lib(Error),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<String, Failure>;

/// Flag defaults from a config file; the command line wins.
#[derive(Default)]
struct Config(HashMap<String, String>);

impl Config {
    fn load(path: &Path) -> Result<Self, Failure> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        let mut map = HashMap::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Failure::Usage(format!("{}:{}: expected key = value", path.display(), n + 1)))?;
            let (k, v) = (k.trim().replace('_', "-"), v.trim().to_string());
            if !CONFIG_KEYS.contains(&k.as_str()) {
                return Err(Failure::Usage(format!("{}:{}: unknown key `{k}`", path.display(), n + 1)));
            }
            map.insert(k, v);
        }
        Ok(Config(map))
    }

    fn flag(&self, key: &str, given: bool) -> Result<bool, Failure> {
        if given {
            return Ok(true);
        }
        match self.0.get(key).map(String::as_str) {
            None | Some("false") => Ok(false),
            Some("true") => Ok(true),
            Some(other) => Err(Failure::Usage(format!("{key}: expected true or false, got `{other}`"))),
        }
    }

    fn value<T: std::str::FromStr>(&self, key: &str, given: Option<T>) -> Result<Option<T>, Failure> {
        if given.is_some() {
            return Ok(given);
        }
        self.0
            .get(key)
            .map(|v| v.parse().map_err(|_| Failure::Usage(format!("{key}: invalid value `{v}`"))))
            .transpose()
    }

    fn choice<T: ValueEnum>(&self, key: &str, given: Option<T>) -> Result<Option<T>, Failure> {
        if given.is_some() {
            return Ok(given);
        }
        self.0
            .get(key)
            .map(|v| T::from_str(v, true).map_err(|_| Failure::Usage(format!("{key}: invalid value `{v}`"))))
            .transpose()
    }

    fn limits(&self, allow_large: bool) -> Result<Limits, Failure> {
        if self.flag("allow-large", allow_large)? {
            return Ok(Limits::allow_large());
        }
        Ok(match self.value::<usize>("max-atoms", None)? {
            Some(max_atoms) => Limits { max_atoms },
            None => Limits::default(),
        })
    }
}

struct Loaded {
    doc: TheoryDocument,
    theory: Option<CausalTheory>,
}

fn load(path: &Path) -> Result<Loaded, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let doc = parse_theory(&text).map_err(|e| Failure::Usage(format!("{}:{e}", path.display())))?;
    let theory = if doc.is_program() {
        None
    } else {
        Some(normalize(&doc.theory())?)
    };
    Ok(Loaded { doc, theory })
}

fn program_of(loaded: &Loaded, pipeline: &Pipeline, cfg: &Config) -> Result<Program, Failure> {
    let Some(t) = &loaded.theory else {
        return Ok(loaded.doc.program());
    };
    let opts = if cfg.flag("force-trd", pipeline.force_trd)? {
        TranslateOptions {
            l_via_d: true,
            s_via_d: true,
            ..TranslateOptions::default()
        }
    } else {
        TranslateOptions::default()
    };
    let mut p = translate(t, &opts)?;
    if cfg.flag("corrupt-translation", pipeline.corrupt_translation)? {
        p = swap_hat_heads(&p);
    }
    if cfg.flag("simplify", pipeline.simplify)? {
        p = simplify(&p);
    }
    Ok(p)
}

fn count(n: usize) -> String {
    format!("{n} model{}\n", if n == 1 { "" } else { "s" })
}

fn listing(models: &ModelSet, hats: &HatMap) -> String {
    models.render(hats) + &count(models.len())
}

fn translate_cmd(a: &TranslateArgs, cfg: &Config) -> Outcome {
    let loaded = load(&a.file)?;
    let p = program_of(&loaded, &a.pipeline, cfg)?;
    match cfg.choice("format", a.format)?.unwrap_or(Format::Formula) {
        Format::Formula => Ok(p.to_string()),
        Format::Asp => emit(&p, &loaded.doc.facts, cfg.flag("legacy-lparse", a.legacy_lparse)?),
    }
}

fn emit(p: &Program, facts: &[GroundAtom], legacy: bool) -> Outcome {
    let opts = EmitOptions {
        legacy,
        ..EmitOptions::default()
    };
    Ok(emit_asp(p, facts, &opts)?)
}

fn models_cmd(a: &ModelsArgs, cfg: &Config) -> Outcome {
    let loaded = load(&a.file)?;
    let limits = cfg.limits(a.allow_large)?;
    let facts = &loaded.doc.facts;
    let semantics = cfg.choice("semantics", a.semantics)?;
    let default = if loaded.theory.is_some() { Semantics::Causal } else { Semantics::Stable };
    match (semantics.unwrap_or(default), &loaded.theory) {
        (Semantics::Stable, _) => {
            let p = program_of(&loaded, &a.pipeline, cfg)?;
            let mut m = stable_models(&ground_program(&p)?, facts, &limits)?;
            if cfg.flag("project", a.project)? {
                m = m.project(|q| !p.hats.is_hat(q), "hat atoms");
            }
            Ok(listing(&m, &p.hats))
        }
        (Semantics::Causal, Some(t)) => {
            let m = causal_models(&ground_theory(t)?, facts, &limits)?;
            Ok(listing(&m, &HatMap::default()))
        }
        (Semantics::Completion, Some(t)) => {
            let m = completion_models(&ground_theory(t)?, facts, &limits)?;
            Ok(listing(&m, &HatMap::default()))
        }
        (_, None) => Err(Failure::Usage(
            "causal and completion semantics need a causal theory, not a program".into(),
        )),
    }
}

fn verify_cmd(a: &VerifyArgs, cfg: &Config) -> Outcome {
    let limits = cfg.limits(a.allow_large)?;
    if let Some(n) = cfg.value("fuzz", a.fuzz)? {
        let seed = cfg.value("seed", a.seed)?.unwrap_or(0);
        for (i, t) in corpus(seed, n).iter().enumerate() {
            let loaded = Loaded {
                doc: TheoryDocument::default(),
                theory: Some(t.clone()),
            };
            let p = program_of(&loaded, &a.pipeline, cfg)?;
            let report = check_soundness_with(t, &p, &[], &limits)?;
            if !report.passed() {
                let mut out = format!("theory {i} of seed {seed}:\n");
                for r in &t.rules {
                    let _ = writeln!(out, "  {r}");
                }
                return Err(Failure::Verify(out + &report.to_string()));
            }
        }
        return Ok(format!("PASS ({n} theories, seed {seed})\n"));
    }
    let path = a.file.as_ref().expect("clap requires a file without --fuzz");
    let loaded = load(path)?;
    let Some(t) = &loaded.theory else {
        return Err(Failure::Usage("verify needs a causal theory, not a program".into()));
    };
    let p = program_of(&loaded, &a.pipeline, cfg)?;
    let report = check_soundness_with(t, &p, &loaded.doc.facts, &limits)?;
    if report.passed() {
        Ok(format!("{report}\n"))
    } else {
        Err(Failure::Verify(report.to_string()))
    }
}

fn emit_cmd(a: &EmitArgs, cfg: &Config) -> Outcome {
    let loaded = load(&a.file)?;
    let p = program_of(&loaded, &a.pipeline, cfg)?;
    emit(&p, &loaded.doc.facts, cfg.flag("legacy-lparse", a.legacy_lparse)?)
}

fn solve_cmd(a: &SolveArgs, cfg: &Config) -> Outcome {
    let loaded = load(&a.file)?;
    let p = program_of(&loaded, &a.pipeline, cfg)?;
    let solver = cfg.value("solver", a.solver.clone())?.unwrap_or_else(|| "clingo 0".into());
    let command: Vec<String> = solver.split_whitespace().map(str::to_string).collect();
    let text = emit_asp(&p, &loaded.doc.facts, &EmitOptions::default())?;
    let mut m = run_solver(&text, &command, &p, &loaded.doc.facts)?;
    if cfg.flag("project", a.project)? {
        m = m.project(|q| !p.hats.is_hat(q), "hat atoms");
    }
    Ok(listing(&m, &p.hats))
}

fn run(cli: &Cli) -> Outcome {
    let cfg = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    match &cli.command {
        Command::Translate(a) => translate_cmd(a, &cfg),
        Command::Models(a) => models_cmd(a, &cfg),
        Command::Verify(a) => verify_cmd(a, &cfg),
        Command::Emit(a) => emit_cmd(a, &cfg),
        Command::Solve(a) => solve_cmd(a, &cfg),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verify(report)) => {
            println!("{}", report.trim_end());
            ExitCode::from(2)
        }
        Err(Failure::Lib(e @ Error::Guardrail { .. })) => {
            eprintln!("error: {e} (use --allow-large to override)");
            ExitCode::from(3)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
