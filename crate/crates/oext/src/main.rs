//! Command-line front end: deterministic table generation and the
//! self-test battery.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid input, 3 self-test
//! failure.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use oext::cells::Shape;
use oext::parabolic::ParabolicSubset;
use oext::perm::Permutation;
use oext::table::{self, OutputFormat, TableKind, TableRequest};
use oext::{selftest, Error};

#[derive(Parser)]
#[command(
    name = "oext",
    about = "First extension groups between simples and (proper) standard objects, computed over the symmetric group",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => OutputFormat::Text,
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Verma,
    ProperStandard,
    Standard,
}

#[derive(Args)]
struct OutputArgs {
    /// Write to this file instead of standard output.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List the bigrassmannian permutations of S_n.
    Base {
        #[arg(long)]
        n: usize,
        /// Include the (i, j, k) coordinates.
        #[arg(long)]
        coords: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The Bruhat-maximal bigrassmannians below a permutation.
    Bm {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        perm: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The two-sided cells of S_n as shape classes.
    Cells {
        #[arg(long)]
        n: usize,
        /// Restrict to one shape, e.g. "2,1,1".
        #[arg(long)]
        shape: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The image of a bigrassmannian in the penultimate cell, with
    /// coordinates and graded degree.
    Phi {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        perm: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Socle of the cokernel of an inclusion of Vermas (or of proper
    /// standard objects when a parabolic is given).
    Socle {
        #[arg(long)]
        n: usize,
        /// Index of the including object (requires v <= w).
        #[arg(long)]
        v: String,
        /// Index of the included object.
        #[arg(long)]
        w: String,
        #[arg(long)]
        parabolic: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// A full first-extension table.
    Ext {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        target: TargetArg,
        /// Parabolic subset for the S-subcategory targets, e.g. "1,2";
        /// the empty string is the trivial parabolic.
        #[arg(long)]
        parabolic: Option<String>,
        /// Dot-stabilizer subset: turns the verma target into a singular
        /// block.
        #[arg(long)]
        stabilizer: Option<String>,
        /// Report graded degrees in the text rendering.
        #[arg(long)]
        graded: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the invariant battery up to the given rank (3..=7).
    Selftest {
        #[arg(long, value_name = "N")]
        max_n: usize,
    },
}

enum CliError {
    Data(Error),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Data(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Data(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "cannot write output: {e}"),
        }
    }
}

fn parse_perm(s: &str, n: usize) -> Result<Permutation, Error> {
    let w: Permutation = s.parse()?;
    if w.n() != n {
        return Err(Error::RankMismatch(w.n(), n));
    }
    Ok(w)
}

fn emit(rendered: &str, out: &OutputArgs) -> Result<(), CliError> {
    match &out.out {
        Some(path) => std::fs::write(path, rendered),
        None => std::io::stdout().write_all(rendered.as_bytes()),
    }
    .map_err(CliError::Io)
}

fn run_command(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Base { n, coords, output } => {
            emit(&table::base_report(n, coords)?, &output)?;
        }
        Command::Bm { n, perm, output } => {
            let w = parse_perm(&perm, n)?;
            emit(&table::bm_report(&w)?, &output)?;
        }
        Command::Cells { n, shape, output } => {
            let filter = shape.as_deref().map(str::parse::<Shape>).transpose()?;
            emit(&table::cells_report(n, filter.as_ref())?, &output)?;
        }
        Command::Phi { n, perm, output } => {
            let b = parse_perm(&perm, n)?;
            emit(&table::phi_report(&b)?, &output)?;
        }
        Command::Socle {
            n,
            v,
            w,
            parabolic,
            output,
        } => {
            let v = parse_perm(&v, n)?;
            let w = parse_perm(&w, n)?;
            let p = parabolic
                .as_deref()
                .map(|s| ParabolicSubset::parse(s, n))
                .transpose()?;
            emit(&table::socle_report(&v, &w, p.as_ref())?, &output)?;
        }
        Command::Ext {
            n,
            target,
            parabolic,
            stabilizer,
            graded,
            format,
            output,
        } => {
            let parabolic = parabolic
                .as_deref()
                .map(|s| ParabolicSubset::parse(s, n))
                .transpose()?;
            let stabilizer = stabilizer
                .as_deref()
                .map(|s| ParabolicSubset::parse(s, n))
                .transpose()?;
            let kind = match (target, &stabilizer) {
                (TargetArg::Verma, None) => TableKind::Verma,
                (TargetArg::Verma, Some(_)) => TableKind::SingularVerma,
                (TargetArg::ProperStandard, _) => TableKind::ProperStandard,
                (TargetArg::Standard, _) => TableKind::Standard,
            };
            let request = TableRequest {
                n,
                kind,
                parabolic,
                stabilizer,
                graded,
                format: format.into(),
            };
            emit(&table::run(&request)?, &output)?;
        }
        Command::Selftest { max_n } => {
            let report = selftest::run(max_n)?;
            for item in &report.results {
                match &item.detail {
                    None => println!("ok    {}", item.name),
                    Some(detail) => println!("FAIL  {}: {detail}", item.name),
                }
            }
            let failed = report.results.iter().filter(|r| !r.passed()).count();
            println!(
                "selftest (max n = {}): {} items, {} failed",
                report.max_n,
                report.results.len(),
                failed
            );
            if !report.passed() {
                return Ok(ExitCode::from(3));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successful output, not errors.
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    // Out-of-range battery bounds are usage errors, not data errors.
    if let Command::Selftest { max_n } = &cli.command {
        if !(3..=7).contains(max_n) {
            eprintln!("error: --max-n must be between 3 and 7, got {max_n}");
            return ExitCode::from(1);
        }
    }
    match run_command(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
