mod report;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use homlie::constructions::{self, LinearMap};
use homlie::document::{self, parse_algebra};
use homlie::fixtures::{self, Fixture};
use homlie::series::{compute_series, SeriesKind};
use homlie::{Error, HomLieAlgebra};

use report::Report;

/// Exact computations with finite-dimensional multiplicative Hom-Lie algebras.
///
/// Exit codes: 0 success or positive verdict, 1 parse or usage error,
/// 2 negative verdict, 3 refused because a precondition does not hold.
#[derive(Parser)]
#[command(name = "homlie", version)]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Maximum number of bracket steps when computing a series
    /// (default: dim + 1).
    #[arg(long, global = true, value_name = "K")]
    max_steps: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify skew-symmetry, the Hom-Jacobi identity and multiplicativity.
    Check { file: PathBuf },
    /// Print the derived or lower central series.
    Series { kind: KindArg, file: PathBuf },
    /// Decide solvability or nilpotency and report the class.
    Class {
        property: PropertyArg,
        file: PathBuf,
    },
    /// Emit the quotient by an ideal given as spanning vectors.
    Quotient {
        file: PathBuf,
        #[arg(long, value_name = "SPEC", allow_hyphen_values = true)]
        ideal: String,
    },
    /// Emit the direct sum of two algebras.
    DirectSum { first: PathBuf, second: PathBuf },
    /// Emit a subalgebra in its own canonical basis.
    Restrict {
        file: PathBuf,
        #[arg(long, value_name = "SPEC", allow_hyphen_values = true)]
        subspace: String,
    },
    /// Check whether a matrix (column j = image of the j-th basis element)
    /// defines a morphism from the first algebra to the second.
    Morphism {
        source: PathBuf,
        target: PathBuf,
        #[arg(long, value_name = "SPEC", allow_hyphen_values = true)]
        matrix: String,
    },
    /// Run or export a built-in example.
    Example {
        name: ExampleName,
        /// Dimension parameter (family-nil, abelian, random) or degree bound (poly).
        #[arg(long)]
        n: Option<usize>,
        /// Seed for the random example.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print the algebra document instead of running the checks.
        #[arg(long)]
        emit: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Derived,
    LowerCentral,
}

#[derive(Clone, Copy, ValueEnum)]
enum PropertyArg {
    Solvable,
    Nilpotent,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExampleName {
    FamilyNil,
    C2,
    Matrix,
    Poly,
    Counterexample,
    Abelian,
    Random,
}

const EXIT_OK: u8 = 0;
const EXIT_PARSE: u8 = 1;
const EXIT_NEGATIVE: u8 = 2;
const EXIT_REFUSED: u8 = 3;

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_PARSE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::DimensionMismatch { .. } => EXIT_PARSE,
            _ => EXIT_REFUSED,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

/// What a command produced: text for stdout and the exit code.
struct Outcome {
    output: String,
    code: u8,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_PARSE } else { EXIT_OK });
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            ExitCode::from(outcome.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn load(path: &Path) -> Result<HomLieAlgebra, Failure> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    }
    .map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
    parse_algebra(&text).map_err(|e| Failure::parse(format!("{}:{e}", path.display())))
}

fn spec_error(what: &str, e: homlie::ParseError) -> Failure {
    Failure::parse(format!("{what} column {}: {}", e.column, e.message))
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let json = cli.json;
    match &cli.command {
        Command::Check { file } => {
            let l = load(file)?;
            let r = report::check(&l);
            let code = if r.passed { EXIT_OK } else { EXIT_NEGATIVE };
            Ok(finish(json, &Report::Check(r), code))
        }
        Command::Series { kind, file } => {
            let l = load(file)?;
            let kind = match kind {
                KindArg::Derived => SeriesKind::Derived,
                KindArg::LowerCentral => SeriesKind::LowerCentral,
            };
            let s = compute_series(&l, kind, cli.max_steps)?;
            let code = if s.class().is_some() {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            };
            Ok(finish(json, &Report::Series(report::series(&l, s)), code))
        }
        Command::Class { property, file } => {
            let l = load(file)?;
            let kind = match property {
                PropertyArg::Solvable => SeriesKind::Derived,
                PropertyArg::Nilpotent => SeriesKind::LowerCentral,
            };
            let s = compute_series(&l, kind, cli.max_steps)?;
            let code = if s.class().is_some() {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            };
            Ok(finish(json, &Report::Class(report::class(&l, s)), code))
        }
        Command::Quotient { file, ideal } => {
            let l = load(file)?;
            let i = document::parse_subspace_spec(ideal, l.dim())
                .map_err(|e| spec_error("--ideal", e))?;
            let q = constructions::quotient(&l, &i)?;
            Ok(finish(
                json,
                &report::construction("quotient", &q.quotient),
                EXIT_OK,
            ))
        }
        Command::DirectSum { first, second } => {
            let (a, b) = (load(first)?, load(second)?);
            let s = constructions::direct_sum(&a, &b);
            Ok(finish(
                json,
                &report::construction("direct-sum", &s),
                EXIT_OK,
            ))
        }
        Command::Restrict { file, subspace } => {
            let l = load(file)?;
            let h = document::parse_subspace_spec(subspace, l.dim())
                .map_err(|e| spec_error("--subspace", e))?;
            let (sub, _) = constructions::restrict(&l, &h)?;
            Ok(finish(
                json,
                &report::construction("restrict", &sub),
                EXIT_OK,
            ))
        }
        Command::Morphism {
            source,
            target,
            matrix,
        } => {
            let (a, b) = (load(source)?, load(target)?);
            let m = document::parse_matrix_spec(matrix, b.dim(), a.dim())
                .map_err(|e| spec_error("--matrix", e))?;
            let f = LinearMap::new(a, b, m)?;
            let verdict = constructions::check_morphism(&f);
            let code = if verdict.is_morphism() {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            };
            Ok(finish(
                json,
                &Report::Morphism(report::morphism(&f, &verdict)),
                code,
            ))
        }
        Command::Example {
            name,
            n,
            seed,
            emit,
        } => {
            let (fixture, iso) = example(*name, *n, *seed)?;
            if *emit {
                return Ok(finish(
                    json,
                    &report::construction("example", &fixture.algebra),
                    EXIT_OK,
                ));
            }
            let r = report::example(&fixture, iso.as_ref(), cli.max_steps)?;
            let code = if r.matches { EXIT_OK } else { EXIT_NEGATIVE };
            Ok(finish(json, &Report::Example(Box::new(r)), code))
        }
    }
}

fn example(
    name: ExampleName,
    n: Option<usize>,
    seed: u64,
) -> Result<(Fixture, Option<LinearMap>), Failure> {
    let no_n = |label: &str| -> Result<(), Failure> {
        match n {
            Some(_) => Err(Failure::parse(format!("example {label} takes no --n"))),
            None => Ok(()),
        }
    };
    Ok(match name {
        ExampleName::FamilyNil => (fixtures::family_nil(n.unwrap_or(6))?, None),
        ExampleName::C2 => {
            no_n("c2")?;
            (fixtures::c2_fixture(), None)
        }
        ExampleName::Matrix => {
            no_n("matrix")?;
            let (f, iso) = fixtures::matrix_fixture()?;
            (f, Some(iso))
        }
        ExampleName::Poly => (fixtures::poly_fixture(n.unwrap_or(4))?, None),
        ExampleName::Counterexample => {
            no_n("counterexample")?;
            (fixtures::counterexample_2dim(), None)
        }
        ExampleName::Abelian => (fixtures::abelian(n.unwrap_or(3)), None),
        ExampleName::Random => (fixtures::zero_alpha_random(n.unwrap_or(4), seed), None),
    })
}

fn finish(json: bool, r: &Report, code: u8) -> Outcome {
    let output = if json {
        let mut s = serde_json::to_string_pretty(r).expect("reports serialize");
        s.push('\n');
        s
    } else {
        let mut s = String::new();
        let _ = write!(s, "{}", r);
        s
    };
    Outcome { output, code }
}
