//! The `renyi` binary: argv parsing and exit-code plumbing around
//! [`renyi::cli`]. All real work happens in the library so it can be tested
//! in-process; this file only reads the input document, dispatches, prints,
//! and converts errors into the documented exit codes (0 success, 1 I/O,
//! 2 validation, 3 identity violation).

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use renyi::cli::{self, read_document, CliResult, RangeSpec, SweepMode};

#[derive(Parser)]
#[command(
    name = "renyi",
    version,
    about = "Rényi entropies, Gibbs ensembles, and the free-energy secant identity",
    after_help = "Input is a JSON document holding exactly one of \
                  \"probabilities\", \"energies\", or \"matrix\" {re, im}, plus \
                  optional \"temp0\" and \"label\". Pass a file path or '-' for stdin."
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rényi entropy of a distribution or density matrix at one order.
    Entropy {
        /// Entropy order q: a number in [0, inf], or 'inf'.
        #[arg(long)]
        q: String,
        /// Require the input to be normalized already (sum or trace 1).
        #[arg(long)]
        strict: bool,
        /// Input document path, or '-' for stdin.
        #[arg(default_value = "-")]
        input: String,
    },
    /// Check the secant identity S_q = -(F(T)-F(T0))/(T-T0) at q = T0/T.
    Relation {
        /// Entropy order q (finite, positive, not within 1e-6 of 1).
        #[arg(long)]
        q: f64,
        /// Reference temperature T0 (overrides the document's "temp0").
        #[arg(long)]
        temp0: Option<f64>,
        /// Residual tolerance; exceeding it exits with code 3.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Require the input to be normalized already.
        #[arg(long)]
        strict: bool,
        /// Input document path, or '-' for stdin.
        #[arg(default_value = "-")]
        input: String,
    },
    /// CSV sweep over entropy order (mode q) or temperature (mode T).
    Sweep {
        /// Sweep variable: 'q' or 'T'.
        #[arg(long)]
        mode: String,
        /// Inclusive grid lo:hi:count (count >= 2).
        #[arg(long)]
        range: String,
        /// Reference temperature (required to sweep energies over q, or to
        /// add secant/tangent columns in mode T).
        #[arg(long)]
        temp0: Option<f64>,
        /// Require the input to be normalized already.
        #[arg(long)]
        strict: bool,
        /// Input document path, or '-' for stdin.
        #[arg(default_value = "-")]
        input: String,
    },
    /// Realize probabilities as energy levels E_i = -T0 ln p_i.
    Embed {
        /// Reference temperature T0 (overrides the document's "temp0").
        #[arg(long)]
        temp0: Option<f64>,
        /// Require the input to be normalized already.
        #[arg(long)]
        strict: bool,
        /// Input document path, or '-' for stdin.
        #[arg(default_value = "-")]
        input: String,
    },
    /// Gibbs state of energies (distribution) or a Hamiltonian (matrix).
    Gibbs {
        /// Temperature T > 0.
        #[arg(long)]
        temp: f64,
        /// Accepted for symmetry; gibbs produces states rather than
        /// consuming them, so there is nothing extra to check.
        #[arg(long)]
        strict: bool,
        /// Input document path, or '-' for stdin.
        #[arg(default_value = "-")]
        input: String,
    },
    /// Free energy F = -T ln Z and ln Z at one temperature.
    FreeEnergy {
        /// Temperature T > 0.
        #[arg(long)]
        temp: f64,
        /// Accepted for symmetry with the other commands.
        #[arg(long)]
        strict: bool,
        /// Input document path, or '-' for stdin.
        #[arg(default_value = "-")]
        input: String,
    },
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn run(command: Command) -> CliResult<ExitCode> {
    match command {
        Command::Entropy { q, strict, input } => {
            let doc = read_document(&input)?;
            let order = cli::parse_order_flag(&q)?;
            print!("{}", cli::cmd_entropy(&doc, order, strict)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Relation {
            q,
            temp0,
            tol,
            strict,
            input,
        } => {
            let doc = read_document(&input)?;
            let outcome = cli::cmd_relation(&doc, temp0, q, tol, strict)?;
            print!("{}", outcome.text);
            if outcome.within_tolerance {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!(
                    "error: identity violated: |residual| = {:e} exceeds tolerance {:e}",
                    outcome.residual.abs(),
                    outcome.tol
                );
                Ok(ExitCode::from(3))
            }
        }
        Command::Sweep {
            mode,
            range,
            temp0,
            strict,
            input,
        } => {
            let doc = read_document(&input)?;
            let mode = SweepMode::parse(&mode)?;
            let range = RangeSpec::parse(&range)?;
            print!("{}", cli::cmd_sweep(&doc, mode, range, temp0, strict)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Embed {
            temp0,
            strict,
            input,
        } => {
            let doc = read_document(&input)?;
            print!("{}", cli::cmd_embed(&doc, temp0, strict)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Gibbs {
            temp,
            strict,
            input,
        } => {
            let doc = read_document(&input)?;
            print!("{}", cli::cmd_gibbs(&doc, temp, strict)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::FreeEnergy {
            temp,
            strict,
            input,
        } => {
            let doc = read_document(&input)?;
            print!("{}", cli::cmd_free_energy(&doc, temp, strict)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}
