//! Subcommand definitions and dispatch for the `bkrel` binary.

use std::io::{self, Write};
use std::path::{Path, PathBuf};

use bkrel_core::lattice::{validate_lattice, FiniteLattice, Lattice, LatticeError};
use bkrel_core::morphism::{
    amphimorphism, greatest_solution, least_solution, Direction, MorphismError, PartialSquare,
    Unknown,
};
use bkrel_core::relation::{io as relio, RelationError};
use bkrel_core::search::{
    check_bootstrap, check_pseudo_assoc, check_solver_maximality, AssocLaw, SearchError,
    SearchOutcome, SearchSpace, DEFAULT_BUDGET,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::eval::{EvalError, Value, Workspace};
use crate::expr::{parse, ParseError};

#[derive(Debug, Parser)]
#[command(
    name = "bkrel",
    version,
    about = "Fuzzy relational calculus: BK-products, morphism checks and solvers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression such as `F' o R o G <= S`.
    Eval {
        #[arg(long, default_value = "godel")]
        lattice: String,
        /// Bind a relation file: `NAME=FILE` (CSV, or JSON for `.json`).
        #[arg(long = "rel", value_name = "NAME=FILE", value_parser = parse_binding)]
        rels: Vec<(String, PathBuf)>,
        /// Print JSON instead of CSV / `true` / `false`.
        #[arg(long)]
        json: bool,
        expr: String,
    },
    /// Check forward, backward or both-ways compatibility of a square.
    Check {
        #[arg(value_enum)]
        mode: CheckMode,
        #[command(flatten)]
        square: SquareFiles,
    },
    /// Print the greatest solution for one member of a square.
    Solve {
        #[arg(value_enum)]
        unknown: UnknownArg,
        #[arg(long, value_enum, default_value = "forward")]
        direction: DirectionArg,
        /// Print the least solution instead (R backward, S forward).
        #[arg(long)]
        lower: bool,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        square: SquareFiles,
    },
    /// Lattice utilities.
    Lattice {
        #[command(subcommand)]
        action: LatticeAction,
    },
    /// Exhaustive or budgeted search for counterexamples.
    Search {
        #[arg(value_enum)]
        property: PropertyArg,
        #[arg(long, default_value = "godel")]
        lattice: String,
        /// Number of grid points in [0, 1]; defaults to {0, 1/2, 1} or the whole finite carrier.
        #[arg(long)]
        grid: Option<usize>,
        /// Domain sizes |A|,|B|,|C|,|D|.
        #[arg(long, value_parser = parse_sizes, default_value = "2,2,2,2")]
        sizes: [usize; 4],
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// The solved member, for `maximality`.
        #[arg(long, value_enum)]
        which: Option<UnknownArg>,
        #[arg(long, value_enum, default_value = "forward")]
        direction: DirectionArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum LatticeAction {
    /// Check every residuated-lattice identity; exits 1 with a witness on failure.
    Validate {
        /// A built-in name (godel, lukasiewicz, product, nilmin, boolean) or a lattice JSON file.
        target: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct SquareFiles {
    #[arg(long, default_value = "godel")]
    pub lattice: String,
    /// R: A -> B
    #[arg(long = "R", alias = "r", value_name = "FILE")]
    pub r: Option<PathBuf>,
    /// S: C -> D
    #[arg(long = "S", alias = "s", value_name = "FILE")]
    pub s: Option<PathBuf>,
    /// F: A -> C
    #[arg(long = "F", alias = "f", value_name = "FILE")]
    pub f: Option<PathBuf>,
    /// G: B -> D
    #[arg(long = "G", alias = "g", value_name = "FILE")]
    pub g: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckMode {
    Forward,
    Backward,
    Bothways,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum UnknownArg {
    #[value(name = "R", alias = "r")]
    R,
    #[value(name = "S", alias = "s")]
    S,
    #[value(name = "F", alias = "f")]
    F,
    #[value(name = "G", alias = "g")]
    G,
}

impl From<UnknownArg> for Unknown {
    fn from(u: UnknownArg) -> Self {
        match u {
            UnknownArg::R => Unknown::R,
            UnknownArg::S => Unknown::S,
            UnknownArg::F => Unknown::F,
            UnknownArg::G => Unknown::G,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    Forward,
    Backward,
}

impl From<DirectionArg> for Direction {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::Forward => Direction::Forward,
            DirectionArg::Backward => Direction::Backward,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PropertyArg {
    Bootstrap,
    Assoc1,
    Assoc2,
    Assoc3,
    Maximality,
}

fn parse_binding(s: &str) -> Result<(String, PathBuf), String> {
    let (name, file) = s
        .split_once('=')
        .ok_or_else(|| format!("expected NAME=FILE, got `{s}`"))?;
    if name.is_empty() || file.is_empty() {
        return Err(format!("expected NAME=FILE, got `{s}`"));
    }
    Ok((name.to_string(), PathBuf::from(file)))
}

fn parse_sizes(s: &str) -> Result<[usize; 4], String> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|e| format!("bad size `{p}`: {e}"))
        })
        .collect::<Result<_, _>>()?;
    parts
        .try_into()
        .map_err(|p: Vec<usize>| format!("expected four sizes, got {}", p.len()))
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Relation(#[from] RelationError),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Whether the command's claim held; maps to exit codes 0 and 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Holds,
    Fails,
}

impl Status {
    fn from_bool(b: bool) -> Self {
        if b {
            Status::Holds
        } else {
            Status::Fails
        }
    }

    pub fn code(self) -> u8 {
        match self {
            Status::Holds => 0,
            Status::Fails => 1,
        }
    }
}

/// Exit code for errors: usage, parse, I/O and data problems.
pub const ERROR_CODE: u8 = 2;

pub fn run(cli: Cli, out: &mut impl Write) -> Result<Status, CliError> {
    match cli.command {
        Command::Eval {
            lattice,
            rels,
            json,
            expr,
        } => eval(&lattice, &rels, json, &expr, out),
        Command::Check { mode, square } => check(mode, &square, out),
        Command::Solve {
            unknown,
            direction,
            lower,
            json,
            square,
        } => solve(unknown.into(), direction.into(), lower, json, &square, out),
        Command::Lattice {
            action: LatticeAction::Validate { target, json },
        } => validate(&target, json, out),
        Command::Search {
            property,
            lattice,
            grid,
            sizes,
            budget,
            which,
            direction,
        } => {
            let lattice = Lattice::from_spec(&lattice)?;
            let space = match grid {
                Some(n) => SearchSpace::with_grid(lattice, sizes, n)?,
                None => SearchSpace::default_for(lattice, sizes)?,
            }
            .with_budget(budget)?;
            let outcome = search(property, which, direction.into(), &space)?;
            writeln!(out, "{}", to_json(&outcome))?;
            Ok(Status::from_bool(!outcome.is_counterexample()))
        }
    }
}

fn to_json(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize infallibly")
}

fn eval(
    lattice: &str,
    rels: &[(String, PathBuf)],
    json: bool,
    text: &str,
    out: &mut impl Write,
) -> Result<Status, CliError> {
    let expr = parse(text)?;
    let mut workspace = Workspace::new(Lattice::from_spec(lattice)?);
    for (name, path) in rels {
        workspace.load(name, path)?;
    }
    match workspace.evaluate(&expr)? {
        Value::Bool(b) => {
            writeln!(out, "{b}")?;
            Ok(Status::from_bool(b))
        }
        Value::Relation(r) if json => {
            writeln!(out, "{}", to_json(&r))?;
            Ok(Status::Holds)
        }
        Value::Relation(r) => {
            write!(out, "{}", relio::to_csv_string(&r))?;
            Ok(Status::Holds)
        }
    }
}

fn load_square(files: &SquareFiles) -> Result<PartialSquare, CliError> {
    let lattice = Lattice::from_spec(&files.lattice)?;
    let mut square = PartialSquare::default();
    for (which, path) in [
        (Unknown::R, &files.r),
        (Unknown::S, &files.s),
        (Unknown::F, &files.f),
        (Unknown::G, &files.g),
    ] {
        if let Some(path) = path {
            square.set(
                which,
                relio::load(path, &lattice)?.with_name(which.to_string()),
            );
        }
    }
    square.check_wiring()?;
    Ok(square)
}

fn check(mode: CheckMode, files: &SquareFiles, out: &mut impl Write) -> Result<Status, CliError> {
    let square = load_square(files)?.into_square()?;
    let report = amphimorphism(&square);
    writeln!(out, "{}", to_json(&report))?;
    Ok(Status::from_bool(match mode {
        CheckMode::Forward => report.forward,
        CheckMode::Backward => report.backward,
        CheckMode::Bothways => report.bothways,
    }))
}

fn solve(
    unknown: Unknown,
    direction: Direction,
    lower: bool,
    json: bool,
    files: &SquareFiles,
    out: &mut impl Write,
) -> Result<Status, CliError> {
    let square = load_square(files)?;
    if square.get(unknown).is_some() {
        return Err(CliError::Usage(format!(
            "--{unknown} is the unknown; pass only the other three relations"
        )));
    }
    let solution = if lower {
        least_solution(unknown, direction, &square)
    } else {
        greatest_solution(unknown, direction, &square)
    };
    let solution = solution
        .map_err(|e| match e {
            MorphismError::NoGreatestSolution { .. } => CliError::Usage(e.to_string()),
            other => other.into(),
        })?
        .with_name(unknown.to_string());
    if json {
        writeln!(out, "{}", to_json(&solution))?;
    } else {
        write!(out, "{}", relio::to_csv_string(&solution))?;
    }
    Ok(Status::Holds)
}

/// Resolves a built-in lattice name, `table:<path>`, or a bare path to a
/// lattice file. Tables are loaded without validation so that broken ones
/// can be reported rather than rejected.
fn lattice_target(target: &str) -> Result<Lattice, CliError> {
    let path = target
        .strip_prefix("table:")
        .or_else(|| Path::new(target).is_file().then_some(target));
    match path {
        Some(path) => Ok(Lattice::from_table_unchecked(FiniteLattice::from_path(
            path,
        )?)),
        None => Ok(Lattice::from_spec(target)?),
    }
}

fn validate(target: &str, json: bool, out: &mut impl Write) -> Result<Status, CliError> {
    let lattice = lattice_target(target)?;
    let report = validate_lattice(&lattice);
    if json {
        writeln!(out, "{}", to_json(&report))?;
    } else {
        writeln!(out, "{report}")?;
    }
    Ok(Status::from_bool(report.passed()))
}

fn search(
    property: PropertyArg,
    which: Option<UnknownArg>,
    direction: Direction,
    space: &SearchSpace,
) -> Result<SearchOutcome, CliError> {
    let law = |n| AssocLaw::from_number(n).expect("laws 1-3 exist");
    Ok(match property {
        PropertyArg::Bootstrap => check_bootstrap(space)?,
        PropertyArg::Assoc1 => check_pseudo_assoc(space, law(1))?,
        PropertyArg::Assoc2 => check_pseudo_assoc(space, law(2))?,
        PropertyArg::Assoc3 => check_pseudo_assoc(space, law(3))?,
        PropertyArg::Maximality => {
            let which =
                which.ok_or_else(|| CliError::Usage("maximality needs --which R|S|F|G".into()))?;
            check_solver_maximality(space, which.into(), direction).map_err(|e| match e {
                SearchError::Morphism(m @ MorphismError::NoGreatestSolution { .. }) => {
                    CliError::Usage(m.to_string())
                }
                other => other.into(),
            })?
        }
    })
}
