use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use equifacet::catalog::DEFAULT_MAX_DIMENSION;
use equifacet::cli_io::{self, InputError, Outcome, Settings, EXIT_INPUT};
use equifacet::geometry::DEFAULT_TOLERANCE;

/// Decide, construct, embed and catalogue equifacetal simplices.
#[derive(Parser)]
#[command(name = "equifacet", version)]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Relative tolerance for metric comparisons.
    #[arg(long, global = true, value_name = "FLOAT")]
    tol: Option<f64>,
    /// Seed for randomized length assignment.
    #[arg(long, global = true, value_name = "INT")]
    seed: Option<u64>,
    /// Largest dimension the catalogue will enumerate.
    #[arg(long, global = true, value_name = "INT", default_value_t = DEFAULT_MAX_DIMENSION)]
    max_dim: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse a colouring: uniformity, complementarity, automorphisms.
    Check {
        /// Colouring document, or `-` for stdin.
        file: PathBuf,
    },
    /// Build a colouring with a given weak type, or report why none exists.
    Construct {
        /// Comma-separated partition entries, e.g. 2,2,1.
        #[arg(long)]
        partition: String,
        /// Dimension of the simplex.
        #[arg(long)]
        n: usize,
        /// Write the witness colouring here.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Embed a colouring in Euclidean space.
    Embed {
        /// Colouring document, or `-` for stdin.
        file: PathBuf,
        /// One length per colour, in document order.
        #[arg(long, value_delimiter = ',')]
        lengths: Option<Vec<f64>>,
        /// Base length for automatic assignment.
        #[arg(long, default_value_t = 1.0)]
        base: f64,
        /// Write the coordinates document here.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Decide whether given coordinates form an equifacetal simplex.
    Verify {
        /// Coordinates document, or `-` for stdin.
        file: PathBuf,
    },
    /// List every strong type in one dimension.
    Catalog {
        #[arg(long)]
        dim: usize,
    },
}

fn read_input(path: &Path) -> Result<(String, String), InputError> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| InputError::Argument(format!("stdin: {e}")))?;
        return Ok((text, "<stdin>".into()));
    }
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| InputError::Argument(format!("{name}: {e}")))?;
    Ok((text, name))
}

fn run(cli: &Cli) -> Result<(Outcome, Option<&Path>), InputError> {
    if let Some(t) = cli.tol {
        if !(t.is_finite() && t > 0.0) {
            return Err(InputError::Argument(format!("--tol must be positive, got {t}")));
        }
    }
    let settings = Settings {
        tolerance: cli.tol.unwrap_or(DEFAULT_TOLERANCE),
        seed: cli.seed,
        max_dimension: cli.max_dim,
    };
    Ok(match &cli.command {
        Command::Check { file } => {
            let (text, name) = read_input(file)?;
            (cli_io::cmd_check(&text, &name)?, None)
        }
        Command::Construct { partition, n, output } => (cli_io::cmd_construct(partition, *n)?, output.as_deref()),
        Command::Embed {
            file,
            lengths,
            base,
            output,
        } => {
            let (text, name) = read_input(file)?;
            (
                cli_io::cmd_embed(&text, &name, lengths.as_deref(), *base, &settings)?,
                output.as_deref(),
            )
        }
        Command::Verify { file } => {
            let (text, name) = read_input(file)?;
            (cli_io::cmd_verify(&text, &name, cli.tol)?, None)
        }
        Command::Catalog { dim } => (cli_io::cmd_catalog(*dim, &settings)?, None),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (outcome, output) = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT as u8);
        }
    };
    if cli.json {
        print!("{}", outcome.report.to_json());
    } else {
        for w in &outcome.report.warnings {
            eprintln!("warning: {w}");
        }
        let mut report = outcome.report.clone();
        report.warnings.clear();
        print!("{}", report.to_text());
    }
    if let Some(doc) = &outcome.document {
        match output {
            Some(path) => {
                if let Err(e) = std::fs::write(path, doc) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(EXIT_INPUT as u8);
                }
            }
            None if !cli.json => print!("{doc}"),
            None => {}
        }
    }
    ExitCode::from(outcome.exit_code as u8)
}
