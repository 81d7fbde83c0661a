//! `reid`: exact Reidemeister-number verdicts from the command line.
//!
//! Exit status: 0 when a verdict or report was produced (including an
//! inconclusive one), 1 when an input failed validation, 2 on a usage
//! error.

mod commands;
mod input;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use reidemeister::linalg::FieldKind;

use input::{CliError, CliResult};
use report::Report;

#[derive(Parser, Debug)]
#[command(
    name = "reid",
    version,
    about = "Exact Reidemeister-number verdicts for Lie algebra and finite group automorphisms"
)]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Field to work over (Q or Qi); defaults to the field the algebra
    /// declares.
    #[arg(long, global = true, value_name = "Q|Qi")]
    field: Option<FieldKind>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate an algebra and report its structure.
    Check {
        /// Algebra file, or catalog:NAME.
        algebra: String,
        /// Parameter for catalog families such as t(n).
        #[arg(long)]
        n: Option<usize>,
    },
    /// Decide R(φ) ∈ {1, ∞} for an automorphism of a solvable algebra.
    Classify {
        /// Algebra file, or catalog:NAME.
        algebra: String,
        /// Matrix of dφ in the algebra's basis (columns are images), inline
        /// like "1 0; 3 2" or a file.
        #[arg(long, allow_hyphen_values = true)]
        aut: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Check the odd-codimension sufficient condition for topological R∞.
    Rinfty {
        /// Algebra file, or catalog:NAME.
        algebra: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Classify the torus automorphism of a unimodular integer matrix.
    Torus {
        /// Integer matrix, inline like "2 1; 1 1" or a file.
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Browse the builtin algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Count twisted conjugacy classes in a finite group by brute force.
    Finite {
        /// Builtin such as cyclic(4) or heisenberg_mod(3), or a table file.
        #[arg(long)]
        group: String,
        /// identity, inverse, inner:K, a file, or an inline line of
        /// 1-based images.
        #[arg(long, allow_hyphen_values = true)]
        aut: String,
        /// Invariant normal subgroup for the quotient inequalities: center,
        /// a file, or an inline line of 1-based elements.
        #[arg(long)]
        subgroup: Option<String>,
    },
    /// Verify the symbolic twisted-conjugacy identity in SL(2).
    Sl2Verify,
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// List the entries.
    List,
    /// Structure, odd-codimension check and sample automorphisms.
    Analyze {
        name: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Print the algebra in file format.
    Export {
        name: String,
        #[arg(long)]
        n: Option<usize>,
    },
}

/// Output of a command: a report, or raw text (only `catalog export`).
enum Output {
    Report(Box<Report>),
    Text(String),
}

fn run(cli: &Cli) -> CliResult<Output> {
    let report = match &cli.command {
        Command::Check { algebra, n } => {
            commands::check(&input::algebra_source(algebra, *n)?, cli.field)?
        }
        Command::Classify { algebra, aut, n } => {
            commands::classify(&input::algebra_source(algebra, *n)?, cli.field, aut)?
        }
        Command::Rinfty { algebra, n } => {
            commands::rinfty(&input::algebra_source(algebra, *n)?, cli.field)?
        }
        Command::Torus { matrix } => commands::torus(matrix)?,
        Command::Catalog { action } => match action {
            CatalogAction::List => commands::catalog_list()?,
            CatalogAction::Analyze { name, n } => commands::catalog_analyze(name, *n)?,
            CatalogAction::Export { name, n } => {
                return Ok(Output::Text(commands::catalog_export(name, *n)?))
            }
        },
        Command::Finite {
            group,
            aut,
            subgroup,
        } => commands::finite(group, aut, subgroup.as_deref())?,
        Command::Sl2Verify => commands::sl2_verify()?,
    };
    Ok(Output::Report(Box::new(report)))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Output::Report(r)) => {
            if cli.json {
                println!("{}", r.to_json());
            } else {
                print!("{}", r.to_human());
            }
            ExitCode::from(u8::from(r.failed))
        }
        Ok(Output::Text(text)) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({ "command": "catalog export", "algebra": text })
                );
            } else {
                print!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            if cli.json {
                let kind = match e {
                    CliError::Usage(_) => "usage",
                    CliError::Invalid(_) => "invalid input",
                };
                println!(
                    "{}",
                    serde_json::json!({ "error": e.to_string(), "kind": kind })
                );
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
