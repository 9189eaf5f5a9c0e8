//! The `ginforge` command line.

pub mod parse;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ginforge::checks::{self, CheckReport, Outcome, StatementId, Summary};
use ginforge::distraction::DistractionMatrix;
use ginforge::gin::gin;
use ginforge::groebner::{PolyIdeal, SaturationMode};
use ginforge::monomial::{
    closure, ek_betti, hilbert, irreducible_decomposition, ClosureMode, MonomialIdeal,
};
use ginforge::points::points_from_ideal;
use ginforge::polyring::{OrderingSpec, Polynomial, PowerProduct};
use serde::Serialize;
use serde_json::{json, Value};

use parse::{ordering_label, parse_ideal, parse_ideal_file, parse_ordering, parse_polynomial, VarNames};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "ginforge", version, about = "Distractions, stable ideals and generic initial ideals over Q")]
pub struct Cli {
    #[command(flatten)]
    pub session: SessionArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct SessionArgs {
    /// Number of variables.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Comma-separated variable names; sets `n` when given.
    #[arg(long, global = true)]
    pub vars: Option<String>,
    /// Term ordering: drl, lex or matrix:[[..],..].
    #[arg(long, global = true, default_value = "drl")]
    pub ord: String,
    #[arg(long, global = true, env = "GINFORGE_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 3)]
    pub trials: usize,
    /// Degree bound for Hilbert functions.
    #[arg(long, global = true, default_value_t = 8)]
    pub bound: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct IdealArgs {
    /// Comma-separated generators.
    #[arg(long, conflicts_with = "ideal_file")]
    pub ideal: Option<String>,
    /// File with one generator per line.
    #[arg(long)]
    pub ideal_file: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Identical,
    Classic,
    Generic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Stable,
    Strong,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generic initial ideal by seeded random coordinate changes.
    Gin(IdealArgs),
    /// Initial ideal.
    In(IdealArgs),
    /// Reduced Groebner basis.
    Gb(IdealArgs),
    /// Distraction of a monomial ideal.
    Distract {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long, value_enum, default_value_t = Kind::Classic)]
        kind: Kind,
        /// Tail index of the matrix; defaults to one more than the largest exponent.
        #[arg(long = "N")]
        big_n: Option<usize>,
    },
    /// Stable or strongly stable closure of monomials.
    Closure {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long, value_enum, default_value_t = Mode::Strong)]
        mode: Mode,
    },
    /// Hilbert function up to --bound.
    Hilbert(IdealArgs),
    /// Graded Betti numbers of a stable monomial ideal.
    Betti(IdealArgs),
    /// Irreducible decomposition of a monomial ideal.
    Decompose(IdealArgs),
    /// Saturation by the maximal ideal, or by --by.
    Saturate {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long)]
        by: Option<String>,
    },
    /// Intersection of two ideals.
    Intersect {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long, conflicts_with = "with_file")]
        with: Option<String>,
        #[arg(long)]
        with_file: Option<PathBuf>,
    },
    /// Projective points cut out by a distracted zero-dimensional ideal.
    Points {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long, value_enum, default_value_t = Kind::Classic)]
        kind: Kind,
        #[arg(long = "N")]
        big_n: Option<usize>,
        /// Write the points to this file, one per line.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Run theorem checks.
    Verify {
        /// main | gindl | hyperplane | sumprinc | counterexample | gcd | radical | points | all
        statement: String,
        #[arg(long, default_value_t = 10)]
        instances: usize,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Math(ginforge::Error),
}

impl From<ginforge::Error> for CliError {
    fn from(e: ginforge::Error) -> Self {
        CliError::Math(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Math(ginforge::Error::AmbiguousGin { .. }) => EXIT_INCONCLUSIVE,
            _ => EXIT_USAGE,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Math(e) => write!(f, "{e}"),
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Output of one invocation: text for stdout and the exit status.
#[derive(Debug)]
pub struct Output {
    pub stdout: String,
    pub status: u8,
}

#[derive(Serialize)]
struct Ring<'a> {
    n: usize,
    vars: &'a [String],
}

#[derive(Serialize)]
struct Envelope<'a> {
    ring: Ring<'a>,
    ordering: String,
    result: Value,
    seeds: Vec<u64>,
}

struct Session {
    vars: VarNames,
    ord: OrderingSpec,
    args: SessionArgs,
}

impl Session {
    fn new(args: &SessionArgs) -> Result<Self, CliError> {
        let vars = match (&args.vars, args.n) {
            (Some(v), n) => {
                let names: Vec<String> = v.split(',').map(|s| s.trim().to_string()).collect();
                if n.is_some_and(|n| n != names.len()) {
                    return Err(usage("--n disagrees with the number of --vars"));
                }
                VarNames::new(names).map_err(usage)?
            }
            (None, Some(n)) => VarNames::default_for(n),
            (None, None) => return Err(usage("the ring needs --n or --vars")),
        };
        if vars.is_empty() {
            return Err(usage("the ring needs at least one variable"));
        }
        let ord = parse_ordering(&args.ord, vars.len()).map_err(usage)?;
        Ok(Session {
            vars,
            ord,
            args: args.clone(),
        })
    }

    fn n(&self) -> usize {
        self.vars.len()
    }

    fn read_gens(&self, text: &Option<String>, file: &Option<PathBuf>, what: &str) -> Result<Vec<Polynomial>, CliError> {
        match (text, file) {
            (Some(t), _) => parse_ideal(t, &self.vars).map_err(|e| usage(format!("{what}: {e}"))),
            (None, Some(p)) => {
                let body = std::fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))?;
                parse_ideal_file(&body, &self.vars).map_err(|e| usage(format!("{}: {e}", p.display())))
            }
            (None, None) => Err(usage(format!("{what} is required"))),
        }
    }

    fn ideal(&self, a: &IdealArgs) -> Result<PolyIdeal, CliError> {
        let gens = self.read_gens(&a.ideal, &a.ideal_file, "--ideal")?;
        Ok(PolyIdeal::new(self.n(), gens))
    }

    fn monomial_ideal(&self, a: &IdealArgs) -> Result<MonomialIdeal, CliError> {
        let gens = self.read_gens(&a.ideal, &a.ideal_file, "--ideal")?;
        let mut terms = Vec::new();
        for g in gens {
            if g.len() != 1 {
                return Err(usage(format!("`{}` is not a monomial", self.poly(&g))));
            }
            terms.push(g.terms().next().unwrap().0.clone());
        }
        Ok(MonomialIdeal::new(self.n(), terms))
    }

    fn poly(&self, f: &Polynomial) -> String {
        f.display_with(self.vars.names(), &self.ord)
    }

    fn monomials(&self, ideal: &MonomialIdeal) -> Vec<String> {
        ideal
            .sorted_gens(&self.ord)
            .iter()
            .map(|t| t.display_with(self.vars.names()))
            .collect()
    }

    /// Generators sorted descending by leading term.
    fn polys(&self, gens: &[Polynomial]) -> Vec<String> {
        let mut keyed: Vec<(Option<PowerProduct>, String)> = gens
            .iter()
            .map(|g| (g.leading_power_product(&self.ord), self.poly(g)))
            .collect();
        keyed.sort_by(|a, b| match (&a.0, &b.0) {
            (Some(x), Some(y)) => self.ord.compare(y, x).then_with(|| a.1.cmp(&b.1)),
            _ => b.0.is_some().cmp(&a.0.is_some()).then_with(|| a.1.cmp(&b.1)),
        });
        keyed.into_iter().map(|(_, s)| s).collect()
    }

    fn emit(&self, vars: &[String], result: Value, seeds: Vec<u64>, table: String) -> Output {
        let stdout = match self.args.format {
            Format::Json => {
                let env = Envelope {
                    ring: Ring { n: vars.len(), vars },
                    ordering: ordering_label(&self.ord),
                    result,
                    seeds,
                };
                serde_json::to_string(&env).expect("envelope serializes") + "\n"
            }
            Format::Table => table,
        };
        Output { stdout, status: EXIT_PASS }
    }
}

fn lines(items: &[String]) -> String {
    items.iter().fold(String::new(), |mut s, l| {
        s.push_str(l);
        s.push('\n');
        s
    })
}

fn default_tail(ideal: &MonomialIdeal) -> usize {
    let e = ideal
        .gens()
        .iter()
        .flat_map(|t| t.exponents().iter().copied())
        .max()
        .unwrap_or(0);
    usize::from(e) + 1
}

fn matrix(kind: Kind, n: usize, big_n: usize, seed: u64) -> Result<DistractionMatrix, CliError> {
    Ok(match kind {
        Kind::Identical => DistractionMatrix::identical(n, big_n)?,
        Kind::Classic => DistractionMatrix::classic(n, big_n)?,
        Kind::Generic => DistractionMatrix::generic(n, big_n, seed)?,
    })
}

fn kind_label(kind: Kind) -> &'static str {
    match kind {
        Kind::Identical => "identical",
        Kind::Classic => "classic",
        Kind::Generic => "generic",
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from<I, T>(args: I) -> (Output, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            return if e.use_stderr() {
                (Output { stdout: String::new(), status }, text)
            } else {
                (Output { stdout: text, status }, String::new())
            };
        }
    };
    match execute(&cli) {
        Ok(out) => (out, String::new()),
        Err(e) => (
            Output {
                stdout: String::new(),
                status: e.exit_code(),
            },
            format!("error: {e}\n"),
        ),
    }
}

/// Entry point for the binary.
pub fn main_with_args() -> ExitCode {
    let (out, err) = run_from(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{err}");
    ExitCode::from(out.status)
}

pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    if let Command::Verify { statement, instances } = &cli.command {
        return verify(statement, *instances, &cli.session);
    }
    let s = Session::new(&cli.session)?;
    let names = s.vars.names().to_vec();
    let seed = s.args.seed;
    match &cli.command {
        Command::Gin(a) => {
            let i = s.ideal(a)?;
            if s.args.trials < 2 {
                return Err(usage("--trials must be at least 2"));
            }
            let r = gin(&i, &s.ord, s.args.trials, seed)?;
            let gens = s.monomials(&r.ideal);
            let mut table = lines(&gens);
            let _ = writeln!(table, "# agreed: {}", r.agreed);
            if let Some(w) = &r.warning {
                let _ = writeln!(table, "# warning: {w}");
            }
            let mut result = json!({"gens": gens, "agreed": r.agreed, "trials_used": r.trials_used});
            if let Some(w) = &r.warning {
                result["warning"] = json!(w);
            }
            Ok(s.emit(&names, result, r.seeds, table))
        }
        Command::In(a) => {
            let gens = s.monomials(&s.ideal(a)?.initial_ideal(&s.ord));
            Ok(s.emit(&names, json!({"gens": gens}), vec![], lines(&gens)))
        }
        Command::Gb(a) => {
            let gb = s.ideal(a)?.reduced_gb(&s.ord);
            let gens = s.polys(&gb);
            Ok(s.emit(&names, json!({"gens": gens}), vec![], lines(&gens)))
        }
        Command::Distract { ideal, kind, big_n } => {
            let i = s.monomial_ideal(ideal)?;
            let big_n = big_n.unwrap_or_else(|| default_tail(&i));
            let l = matrix(*kind, s.n(), big_n, seed)?;
            let d = l.distract_ideal(&i);
            let gens = s.polys(d.gens());
            let seeds = if *kind == Kind::Generic { vec![seed] } else { vec![] };
            let result = json!({"gens": gens, "kind": kind_label(*kind), "N": big_n});
            Ok(s.emit(&names, result, seeds, lines(&gens)))
        }
        Command::Closure { ideal, mode } => {
            let i = s.monomial_ideal(ideal)?;
            let m = match mode {
                Mode::Stable => ClosureMode::Stable,
                Mode::Strong => ClosureMode::StronglyStable,
            };
            let gens = s.monomials(&closure(s.n(), i.gens(), m));
            Ok(s.emit(&names, json!({"gens": gens}), vec![], lines(&gens)))
        }
        Command::Hilbert(a) => {
            let init = s.ideal(a)?.initial_ideal(&s.ord);
            let h = hilbert(&init, s.args.bound);
            let table = h.values.iter().enumerate().map(|(d, v)| format!("{d} {v}")).collect::<Vec<_>>();
            Ok(s.emit(&names, json!({"values": h.values, "bound": h.d_max}), vec![], lines(&table)))
        }
        Command::Betti(a) => {
            let b = ek_betti(&s.monomial_ideal(a)?)?;
            let rows: Vec<Value> = b
                .entries
                .iter()
                .map(|(&(i, j), &v)| json!({"i": i, "j": j, "beta": v}))
                .collect();
            let table = b.entries.iter().map(|(&(i, j), v)| format!("{i} {j} {v}")).collect::<Vec<_>>();
            Ok(s.emit(&names, json!({"betti": rows}), vec![], lines(&table)))
        }
        Command::Decompose(a) => {
            let comps: Vec<Vec<String>> = irreducible_decomposition(&s.monomial_ideal(a)?)
                .iter()
                .map(|c| s.monomials(c))
                .collect();
            let table = comps.iter().map(|c| format!("({})", c.join(", "))).collect::<Vec<_>>();
            Ok(s.emit(&names, json!({"components": comps}), vec![], lines(&table)))
        }
        Command::Saturate { ideal, by } => {
            let i = s.ideal(ideal)?;
            let mode = match by {
                Some(text) => SaturationMode::ByPoly(
                    parse_polynomial(text, &s.vars).map_err(|e| usage(format!("--by: {e}")))?,
                ),
                None => SaturationMode::ByMaximal,
            };
            let gens = s.polys(&i.saturate(&mode).reduced_gb(&s.ord));
            Ok(s.emit(&names, json!({"gens": gens}), vec![], lines(&gens)))
        }
        Command::Intersect { ideal, with, with_file } => {
            let i = s.ideal(ideal)?;
            let j = PolyIdeal::new(s.n(), s.read_gens(with, with_file, "--with")?);
            let gens = s.polys(&i.intersect(&j).reduced_gb(&s.ord));
            Ok(s.emit(&names, json!({"gens": gens}), vec![], lines(&gens)))
        }
        Command::Points { ideal, kind, big_n, export } => {
            let i = s.monomial_ideal(ideal)?;
            let big_n = big_n.unwrap_or_else(|| default_tail(&i));
            let l = matrix(*kind, s.n() + 1, big_n, seed)?;
            let set = points_from_ideal(&i, &l)?;
            let rows: Vec<String> = set.points.iter().map(|p| p.to_export_line()).collect();
            let text = lines(&rows);
            if let Some(path) = export {
                std::fs::write(path, &text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            }
            let mut ext_names = names.clone();
            ext_names.push(format!("x{}", names.len() + 1));
            let seeds = if *kind == Kind::Generic { vec![seed] } else { vec![] };
            let result = json!({"count": set.points.len(), "points": set.points});
            Ok(s.emit(&ext_names, result, seeds, text))
        }
        Command::Verify { .. } => unreachable!(),
    }
}

fn verify(statement: &str, instances: usize, args: &SessionArgs) -> Result<Output, CliError> {
    let id: StatementId = statement.parse().map_err(usage)?;
    let reports = checks::run(id, instances, args.seed);
    let summary = Summary::of(&reports);
    let overall = summary.overall();
    let mut stdout = String::new();
    match args.format {
        Format::Json => {
            for r in &reports {
                stdout.push_str(&r.to_json_line());
                stdout.push('\n');
            }
            let line = json!({"summary": summary, "overall": overall, "seed": args.seed});
            stdout.push_str(&line.to_string());
            stdout.push('\n');
        }
        Format::Table => {
            for r in &reports {
                let _ = writeln!(stdout, "{:<12} {:<14} {}", outcome_label(r), r.statement_id, r.instance);
            }
            let _ = writeln!(
                stdout,
                "pass {} fail {} inconclusive {} skipped {}: {}",
                summary.pass,
                summary.fail,
                summary.inconclusive,
                summary.skipped,
                label(overall)
            );
        }
    }
    let status = match overall {
        Outcome::Pass | Outcome::Skipped => EXIT_PASS,
        Outcome::Fail => EXIT_FAIL,
        Outcome::Inconclusive => EXIT_INCONCLUSIVE,
    };
    Ok(Output { stdout, status })
}

fn label(o: Outcome) -> &'static str {
    match o {
        Outcome::Pass => "PASS",
        Outcome::Skipped => "SKIPPED",
        Outcome::Inconclusive => "INCONCLUSIVE",
        Outcome::Fail => "FAIL",
    }
}

fn outcome_label(r: &CheckReport) -> &'static str {
    label(r.outcome)
}
