use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use norden_cli::{
    parse_substitution, parse_table_list, run, Command, Format, ReportRequest, EXIT_INPUT_ERROR,
};
use norden_core::specfile::parse_spec_unvalidated;
use norden_core::{builtin_example, FrameSpec};

#[derive(Clone)]
struct TableList(Vec<norden_cli::TableName>);

/// Exact tensor calculus for almost Norden manifolds on Lie groups.
#[derive(Parser)]
#[command(name = "norden", version)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Check antisymmetry, Jacobi, J²=−I and the Norden conditions.
    Validate(Input),
    /// Class of the manifold for g and for the associated metric.
    Classify(Input),
    /// Print component tables, e.g. `tables nabla,R,ricci`.
    Tables {
        /// Comma-separated: nabla, nabla-twin, F, F-twin, theta, dtheta, Phi,
        /// R, R-twin, ricci, P, K, D, N, S, norms.
        #[arg(value_parser = |s: &str| parse_table_list(s).map(TableList))]
        names: TableList,
        #[command(flatten)]
        input: Input,
    },
    /// Run the thirteen twin-interchange checks.
    Invariance(Input),
    /// Closed Lee forms, conformal flatness and scalar-flat isotropy.
    Theorem3(Input),
}

#[derive(Args)]
struct Input {
    /// Spec file (JSON).
    #[arg(required_unless_present = "example", conflicts_with = "example")]
    file: Option<PathBuf>,
    /// Use the built-in four-parameter example instead of a file.
    #[arg(long)]
    example: bool,
    /// Parameter values, e.g. `l1=1,l2=-1/2`.
    #[arg(long, value_parser = parse_substitution)]
    subst: Option<std::collections::BTreeMap<String, norden_core::Rational>>,
    #[arg(long, default_value = "text", value_parser = |s: &str| s.parse::<Format>())]
    format: Format,
    /// Include zero components in tables.
    #[arg(long)]
    all: bool,
}

fn load(input: &Input) -> Result<FrameSpec, String> {
    match &input.file {
        None => Ok(builtin_example()),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            parse_spec_unvalidated(&text).map_err(|e| format!("{}: {e}", path.display()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, input) = match cli.command {
        Sub::Validate(i) => (Command::Validate, i),
        Sub::Classify(i) => (Command::Classify, i),
        Sub::Tables { names, input } => (Command::Tables(names.0), input),
        Sub::Invariance(i) => (Command::Invariance, i),
        Sub::Theorem3(i) => (Command::Theorem3, i),
    };
    let spec = match load(&input) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT_ERROR);
        }
    };
    let request = ReportRequest {
        command,
        substitution: input.subst.unwrap_or_default(),
        format: input.format,
        all: input.all,
    };
    let outcome = run(&request, &spec);
    if outcome.exit_code == EXIT_INPUT_ERROR && outcome.output.starts_with("error:") {
        eprint!("{}", outcome.output);
    } else {
        print!("{}", outcome.output);
    }
    ExitCode::from(outcome.exit_code)
}
