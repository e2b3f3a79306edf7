//! Command-line front end. `run` does all the work and returns the exit code and
//! output streams, so the binary is a thin wrapper and tests can call it directly.

mod render;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::fox::alexander_matrix;
use crate::invariants::{
    apply_symplectic, delta_of_matrix, full_report, genus_lower_bound, invertibility_search,
    matrix_report, polynomial_report, q_experiment, q_project, reverse_orientation, InvariantError,
    QExperimentRow, ReportOptions,
};
use crate::laurent::{LaurentPoly, PolyMatrix, RingSignature, Substitution, VarNames};
use crate::opgroup::{hat_presentation, parse_presentation, OrbitPresentation};
use crate::symplectic::{presentation_lattice, symplectic_rank, SpElement};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "covgroup",
    version,
    about = "Alexander polynomials and symplectic ranks of links in thickened surfaces"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print short variable names (x, y, u, v, t) where the ring allows.
    #[arg(long, global = true)]
    pub alias: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Alexander matrix of a presentation.
    Matrix { file: PathBuf },
    /// Full invariant report for a presentation, matrix or polynomial file.
    Report {
        file: PathBuf,
        /// Require the file to be a matrix file.
        #[arg(long)]
        matrix: bool,
        #[arg(long)]
        assert_non_split: bool,
    },
    /// Print a single Δi.
    Delta {
        file: PathBuf,
        #[arg(long = "i", value_name = "N", default_value_t = 0)]
        index: usize,
    },
    /// Symplectic ranks of Δ0 and, for presentations, of the presentation.
    Rank { file: PathBuf },
    /// Lower bound on the virtual genus.
    GenusBound {
        file: PathBuf,
        #[arg(long)]
        assert_non_split: bool,
    },
    /// Ordinary presentation of the link group in the thickened surface.
    Hat { file: PathBuf },
    /// Transform Δ0 (or a polynomial) and print the canonical result.
    Transform {
        #[command(flatten)]
        source: PolySource,
        #[command(flatten)]
        op: TransformOp,
    },
    /// Search Sp(2g, Z) for a witness that Δ0(t) and Δ0(t^-1) are equivalent.
    InvertCheck {
        #[command(flatten)]
        source: PolySource,
        /// Maximal word length in the generators of Sp(2g, Z).
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
    /// Tabulate q(Δ0) over presentation or matrix files.
    QExperiment {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct PolySource {
    /// Presentation, matrix or polynomial file.
    #[arg(required_unless_present = "poly", conflicts_with = "poly")]
    pub file: Option<PathBuf>,
    /// Polynomial given inline; needs --genus.
    #[arg(long, allow_hyphen_values = true)]
    pub poly: Option<String>,
    #[arg(long, requires = "poly")]
    pub genus: Option<usize>,
    #[arg(long, requires = "poly", default_value_t = 1)]
    pub components: usize,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct TransformOp {
    /// Replace t_j by t_j^-1.
    #[arg(long, value_name = "J")]
    pub reverse: Option<usize>,
    /// Apply a symplectic matrix read from a file (`sp <genus>` then rows).
    #[arg(long, value_name = "FILE")]
    pub sp: Option<PathBuf>,
    /// Substitute units for variables, e.g. `t2=t1,x1=1`.
    #[arg(long, value_name = "MAP")]
    pub specialize: Option<String>,
    /// Send every surface variable to 1.
    #[arg(long)]
    pub q: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Violation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Violation(_) => EXIT_VIOLATION,
        }
    }
}

impl From<InvariantError> for CliError {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::Violation(m) => CliError::Violation(m),
            other => CliError::Input(other.to_string()),
        }
    }
}

fn input_err(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parsed input file.
#[derive(Debug, Clone)]
pub enum Input {
    Presentation(OrbitPresentation),
    Matrix(PolyMatrix),
    Polynomial(LaurentPoly),
}

impl Input {
    pub fn signature(&self) -> RingSignature {
        match self {
            Input::Presentation(p) => *p.signature(),
            Input::Matrix(m) => *m.signature(),
            Input::Polynomial(p) => *p.signature(),
        }
    }

    /// `Δ0` of the input (the polynomial itself for a polynomial file).
    pub fn delta0(&self) -> LaurentPoly {
        match self {
            Input::Presentation(p) => delta_of_matrix(&alexander_matrix(p), 0),
            Input::Matrix(m) => delta_of_matrix(m, 0),
            Input::Polynomial(p) => p.clone(),
        }
    }
}

fn first_token(text: &str) -> Option<&str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .and_then(|l| l.split_whitespace().next())
}

/// Detects the format from the first directive: `matrix`, `poly`, else presentation.
pub fn parse_input(text: &str) -> Result<Input, CliError> {
    match first_token(text) {
        Some("matrix") => PolyMatrix::parse_file(text)
            .map(Input::Matrix)
            .map_err(input_err),
        Some("poly") => LaurentPoly::parse_file(text)
            .map(|(_, p)| Input::Polynomial(p))
            .map_err(input_err),
        _ => parse_presentation(text)
            .map(Input::Presentation)
            .map_err(input_err),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Input, CliError> {
    parse_input(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_presentation(path: &Path) -> Result<OrbitPresentation, CliError> {
    match load(path)? {
        Input::Presentation(p) => Ok(p),
        _ => Err(CliError::Input(format!(
            "{}: expected a presentation file",
            path.display()
        ))),
    }
}

fn load_source(src: &PolySource) -> Result<Input, CliError> {
    if let Some(file) = &src.file {
        return load(file);
    }
    let text = src.poly.as_deref().unwrap_or_default();
    let genus = src
        .genus
        .ok_or_else(|| CliError::Input("--poly needs --genus".into()))?;
    let sig = RingSignature::new(genus, src.components).map_err(input_err)?;
    Ok(Input::Polynomial(
        LaurentPoly::parse(&sig, text).map_err(input_err)?,
    ))
}

/// Parses `var=expr,...`; every image must be a unit.
pub fn parse_specialization(sig: &RingSignature, map: &str) -> Result<Substitution, CliError> {
    let names = VarNames::canonical(sig);
    let mut s = Substitution::identity(sig);
    for item in map.split(',').map(str::trim).filter(|i| !i.is_empty()) {
        let (lhs, rhs) = item
            .split_once('=')
            .ok_or_else(|| CliError::Input(format!("expected var=expr in '{item}'")))?;
        let var = names
            .lookup(lhs.trim())
            .ok_or_else(|| CliError::Input(format!("unknown variable '{}'", lhs.trim())))?;
        let image = LaurentPoly::parse(sig, rhs).map_err(input_err)?;
        s.assign(var, &image).map_err(input_err)?;
    }
    Ok(s)
}

/// Runs one invocation given the full argument list (program name first).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli) {
        Ok(stdout) => Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let fmt = render::Format {
        json: cli.json,
        alias: cli.alias,
    };
    match &cli.command {
        Command::Matrix { file } => {
            let p = load_presentation(file)?;
            Ok(fmt.matrix(&alexander_matrix(&p)))
        }
        Command::Report {
            file,
            matrix,
            assert_non_split,
        } => {
            let opts = ReportOptions {
                assert_non_split: *assert_non_split,
            };
            let input = load(file)?;
            let report = match (&input, matrix) {
                (Input::Matrix(m), _) => matrix_report(m, &opts)?,
                (_, true) => {
                    return Err(CliError::Input(format!(
                        "{}: expected a matrix file",
                        file.display()
                    )))
                }
                (Input::Presentation(p), false) => full_report(p, &opts)?,
                (Input::Polynomial(p), false) => polynomial_report(p, &opts)?,
            };
            Ok(fmt.report(&report))
        }
        Command::Delta { file, index } => {
            let input = load(file)?;
            let d = match &input {
                Input::Presentation(p) => delta_of_matrix(&alexander_matrix(p), *index),
                Input::Matrix(m) => delta_of_matrix(m, *index),
                Input::Polynomial(p) if *index == 0 => p.canonicalize(),
                Input::Polynomial(_) => {
                    return Err(CliError::Input(
                        "a polynomial file only determines Δ0".into(),
                    ))
                }
            };
            Ok(fmt.delta(*index, &d))
        }
        Command::Rank { file } => {
            let input = load(file)?;
            let d0 = input.delta0();
            let rank_delta0 = genus_lower_bound(&d0, true).rank;
            let rank_p = match &input {
                Input::Presentation(p) => Some(symplectic_rank(&presentation_lattice(p))),
                _ => None,
            };
            if let Some(rp) = rank_p {
                if rank_delta0 > rp {
                    return Err(CliError::Violation(format!(
                        "rk_s(Δ0) = {rank_delta0} exceeds rk_s(P) = {rp}"
                    )));
                }
            }
            Ok(fmt.rank(rank_delta0, rank_p))
        }
        Command::GenusBound {
            file,
            assert_non_split,
        } => {
            let input = load(file)?;
            Ok(fmt.genus_bound(&genus_lower_bound(&input.delta0(), *assert_non_split)))
        }
        Command::Hat { file } => {
            let p = load_presentation(file)?;
            Ok(fmt.hat(&hat_presentation(&p)))
        }
        Command::Transform { source, op } => {
            let input = load_source(source)?;
            let p = input.delta0();
            let sig = *p.signature();
            let (label, out) = if let Some(j) = op.reverse {
                (
                    format!("reverse t{j}"),
                    reverse_orientation(&p, j).map_err(input_err)?,
                )
            } else if let Some(path) = &op.sp {
                let phi = SpElement::parse_file(&read(path)?)
                    .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
                let image = apply_symplectic(&p, &phi).map_err(input_err)?;
                (format!("symplectic {phi}"), image.canonicalize())
            } else if let Some(map) = &op.specialize {
                let s = parse_specialization(&sig, map)?;
                (
                    format!("specialize {map}"),
                    p.specialize(&s).map_err(input_err)?.canonicalize(),
                )
            } else {
                ("q".to_string(), q_project(&p).canonicalize())
            };
            Ok(fmt.transform(&label, &p, &out))
        }
        Command::InvertCheck { source, bound } => {
            let p = load_source(source)?.delta0();
            Ok(fmt.verdict(&p, &invertibility_search(&p, *bound)))
        }
        Command::QExperiment { files } => {
            let mut rows: Vec<(String, QExperimentRow)> = Vec::new();
            for f in files {
                let row = match load(f)? {
                    Input::Presentation(p) => q_experiment(&p),
                    Input::Matrix(m) => {
                        let delta0 = delta_of_matrix(&m, 0);
                        let q_delta0 = q_project(&delta0).canonicalize();
                        QExperimentRow {
                            components: m.signature().components(),
                            delta0,
                            q_delta0,
                        }
                    }
                    Input::Polynomial(_) => {
                        return Err(CliError::Input(format!(
                            "{}: q-experiment needs a presentation or matrix",
                            f.display()
                        )))
                    }
                };
                rows.push((f.display().to_string(), row));
            }
            Ok(fmt.q_table(&rows))
        }
    }
}
