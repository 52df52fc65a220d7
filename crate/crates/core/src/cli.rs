//! Command-line front end: `check`, `necessary` and `majorize`.
//!
//! [`run`] takes the argument list and returns the exit code together with
//! the text destined for stdout and stderr, so the binary stays a thin shim.
//!
//! Exit codes: `check` gives 0 for a proof, 1 for a refutation, 2 when
//! inconclusive; `necessary` and `majorize` give 0/1 for holds/fails. Any
//! input or configuration error gives 3.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::form::{parse_form, ExponentVector, Form, FormError};
use crate::majorize::{self, MajorizeError};
use crate::rational::parse_rational;
use crate::report::{self, VerdictJson};
use crate::search::{self, SearchError, SearchOptions, VerdictKind};
use crate::subst::{Permutation, SubstError, SubstitutionTemplate};

pub const EXIT_ERROR: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "ksds",
    version,
    about = "Successive difference substitution for forms on the nonnegative orthant"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide nonnegativity of a form on the nonnegative orthant
    Check(CheckArgs),
    /// Check that every negative term is majorized by a positive one under every ordering
    Necessary(NecessaryArgs),
    /// Compare two exponent vectors under a variable ordering
    Majorize(MajorizeArgs),
}

#[derive(Debug, Args)]
pub struct FormInput {
    /// The form, e.g. "x1^2 - 2*x1*x2 + x2^2"
    pub form: Option<String>,
    /// Read the form from a file instead
    #[arg(long, value_name = "PATH", conflicts_with = "form")]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub input: FormInput,
    /// Substitution matrix: `an`, `gn`, or `q=r1,r2,...`
    #[arg(long, default_value = "an")]
    pub matrix: String,
    #[arg(long, default_value_t = search::DEFAULT_MAX_DEPTH)]
    pub max_depth: usize,
    #[arg(long, env = "SDS_NODE_BUDGET", default_value_t = search::DEFAULT_NODE_BUDGET)]
    pub node_budget: u64,
    /// Also report the majorization obstruction to a positive answer
    #[arg(long)]
    pub check_necessary: bool,
    /// Expand duplicate forms separately
    #[arg(long)]
    pub no_dedup: bool,
    /// Test the input itself before the first substitution
    #[arg(long)]
    pub precheck: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct NecessaryArgs {
    #[command(flatten)]
    pub input: FormInput,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct MajorizeArgs {
    /// Exponent vector, comma separated
    pub alpha: String,
    pub beta: String,
    /// Variable ordering in one-line notation; `1,3,2` means x1 ≥ x3 ≥ x2
    #[arg(long)]
    pub sigma: Option<String>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixChoice {
    An,
    Gn,
    Custom(Vec<crate::rational::Rational>),
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Form(#[from] FormError),
    #[error("{0}")]
    Subst(#[from] SubstError),
    #[error("{0}")]
    Majorize(#[from] MajorizeError),
    #[error("{0}")]
    Search(#[from] SearchError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Config(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn ok(code: i32, stdout: String) -> Self {
        CliOutput {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(err: impl std::fmt::Display) -> Self {
        CliOutput {
            code: EXIT_ERROR,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

pub fn parse_matrix_choice(text: &str) -> Result<MatrixChoice, CliError> {
    match text.trim() {
        "an" => Ok(MatrixChoice::An),
        "gn" => Ok(MatrixChoice::Gn),
        other => {
            let list = other.strip_prefix("q=").ok_or_else(|| {
                CliError::Config(format!(
                    "unknown matrix `{other}` (expected an, gn or q=...)"
                ))
            })?;
            let q = list
                .split(',')
                .map(|s| {
                    parse_rational(s)
                        .ok_or_else(|| CliError::Config(format!("bad rational `{s}` in q-list")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(MatrixChoice::Custom(q))
        }
    }
}

pub fn template_for(choice: &MatrixChoice, n: usize) -> Result<SubstitutionTemplate, CliError> {
    match choice {
        MatrixChoice::An => Ok(SubstitutionTemplate::an(n)),
        MatrixChoice::Gn => Ok(SubstitutionTemplate::gn(n)),
        MatrixChoice::Custom(q) => {
            if q.len() != n {
                return Err(CliError::Config(format!(
                    "q-list has {} entries but the form has {} variables",
                    q.len(),
                    n
                )));
            }
            Ok(SubstitutionTemplate::new(q.clone())?)
        }
    }
}

fn read_form(input: &FormInput) -> Result<Form, CliError> {
    let text = match (&input.form, &input.file) {
        (Some(text), _) => text.clone(),
        (None, Some(path)) => std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?,
        (None, None) => {
            return Err(CliError::Config(
                "no form given (argument or --file)".into(),
            ))
        }
    };
    Ok(parse_form(text.trim(), None)?)
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>, CliError> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| CliError::Config(format!("bad {what} entry `{}`", s.trim())))
        })
        .collect()
}

pub fn parse_permutation(text: &str) -> Result<Permutation, CliError> {
    Ok(Permutation::new(parse_list(text, "permutation")?)?)
}

pub fn cmd_check(args: &CheckArgs) -> Result<CliOutput, CliError> {
    let form = read_form(&args.input)?;
    let choice = parse_matrix_choice(&args.matrix)?;
    let template = template_for(&choice, form.n())?;
    let opts = SearchOptions {
        max_depth: args.max_depth,
        check_necessary: args.check_necessary,
        dedup: !args.no_dedup,
        node_budget: args.node_budget,
        precheck_input: args.precheck,
        ..SearchOptions::default()
    };
    let verdict = search::ksds_run(&form, &template, &opts)?;
    let code = exit_code(verdict.kind);
    let stdout = if args.json {
        let mut s =
            serde_json::to_string_pretty(&VerdictJson::from(&verdict)).expect("verdict serializes");
        s.push('\n');
        s
    } else {
        report::verdict_text(&verdict)
    };
    Ok(CliOutput::ok(code, stdout))
}

pub fn exit_code(kind: VerdictKind) -> i32 {
    match kind {
        VerdictKind::Psd => 0,
        VerdictKind::NotPsd => 1,
        VerdictKind::Inconclusive => 2,
    }
}

pub fn cmd_necessary(args: &NecessaryArgs) -> Result<CliOutput, CliError> {
    let form = read_form(&args.input)?;
    let report = majorize::necessary_condition(&form)?;
    let stdout = if args.json {
        let mut s = serde_json::to_string_pretty(&report::NecessaryJson::from(&report))
            .expect("report serializes");
        s.push('\n');
        s
    } else {
        report::necessary_text(&report)
    };
    Ok(CliOutput::ok(if report.holds { 0 } else { 1 }, stdout))
}

pub fn cmd_majorize(args: &MajorizeArgs) -> Result<CliOutput, CliError> {
    let alpha: Vec<u32> = parse_list(&args.alpha, "exponent")?;
    let beta: Vec<u32> = parse_list(&args.beta, "exponent")?;
    let sigma = match &args.sigma {
        Some(s) => parse_permutation(s)?,
        None => Permutation::identity(alpha.len()),
    };
    let a = ExponentVector::new(alpha.clone());
    let b = ExponentVector::new(beta.clone());
    let holds = majorize::majorizes_under(&a, &b, &sigma)?;
    let separating = if holds {
        None
    } else {
        Some(majorize::separating_point(&a, &b, &sigma)?)
    };
    let stdout = if args.json {
        let json = report::majorize_json(&alpha, &beta, &sigma, holds, separating.as_ref());
        let mut s = serde_json::to_string_pretty(&json).expect("report serializes");
        s.push('\n');
        s
    } else {
        let mut s = format!("{holds}\n");
        if let Some(p) = &separating {
            let coords: Vec<String> = p.coords().iter().map(|c| c.to_string()).collect();
            s.push_str(&format!(
                "separating point: {} ({} = {} < {} = {})\n",
                coords.join(","),
                a.monomial_string(),
                a.eval(p.coords()),
                b.monomial_string(),
                b.eval(p.coords()),
            ));
        }
        s
    };
    Ok(CliOutput::ok(if holds { 0 } else { 1 }, stdout))
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    CliOutput::ok(0, rendered)
                }
                _ => CliOutput {
                    code: EXIT_ERROR,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    let result = match &cli.command {
        Command::Check(a) => cmd_check(a),
        Command::Necessary(a) => cmd_necessary(a),
        Command::Majorize(a) => cmd_majorize(a),
    };
    result.unwrap_or_else(CliOutput::error)
}
