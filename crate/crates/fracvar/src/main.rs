use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fracvar::cli::{run_example, solve_from_file, ExampleId, Overrides, OutputFormat};
use fracvar::Error;

/// Discrete fractional variational problems on Z and (hZ)_a.
#[derive(Parser)]
#[command(name = "fracvar", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reproduce a worked example as CSV (tables and plot series).
    Reproduce(ReproduceArgs),
    /// Solve a variational problem described by a problem file.
    Solve(SolveArgs),
}

#[derive(Args)]
struct ReproduceArgs {
    /// One of: z1, z2, z3, hz1, hz2, hz3a, hz3b.
    #[arg(long)]
    example: String,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    h: Option<f64>,
    #[arg(long)]
    b: Option<f64>,
    #[arg(long)]
    theta: Option<f64>,
    #[arg(long)]
    gamma1: Option<f64>,
    #[arg(long)]
    gamma2: Option<f64>,
    /// Write the table here (plot series land next to it); stdout otherwise.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    /// Path to a TOML problem file.
    #[arg(long)]
    problem: PathBuf,
    /// csv or pretty.
    #[arg(long, default_value = "csv")]
    format: String,
    /// Override the solver seed.
    #[arg(long)]
    seed: Option<u64>,
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Parse { .. } | Error::Validation { .. } => 2,
        Error::NoConvergence => 3,
        _ => 1,
    }
}

fn run() -> Result<(), Error> {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    match cli.command {
        Command::Reproduce(args) => {
            let id: ExampleId = args.example.parse()?;
            let overrides = Overrides {
                alpha: args.alpha,
                beta: args.beta,
                h: args.h,
                b: args.b,
                theta: args.theta,
                gamma1: args.gamma1,
                gamma2: args.gamma2,
                out: args.out,
            };
            run_example(id, &overrides, &mut stdout)
        }
        Command::Solve(args) => {
            let format = match args.format.as_str() {
                "csv" => OutputFormat::Csv,
                "pretty" => OutputFormat::Pretty,
                other => {
                    return Err(Error::Validation {
                        path: "format".into(),
                        message: format!("expected csv or pretty, got {other}"),
                    })
                }
            };
            solve_from_file(&args.problem, format, args.seed, &mut stdout)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
