use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use dopfactor::commands::{self, CliFailure, Outcome, Transform};

/// Exact reducibility analysis of second-order differential operators
/// D^2 - Q over Q(sqrt(a))(x), with banded-determinant verification tools.
#[derive(Parser)]
#[command(name = "dopfactor", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether D^2 - Q has an order-1 factor and exhibit it
    Analyze {
        /// Operator expression, e.g. "D^2 - x^2 + 1"
        operator: String,
        /// Work over Q(sqrt(A)) for this nonzero rational A
        #[arg(long = "field-sqrt", value_name = "A")]
        field_sqrt: Option<String>,
        /// Kernel-search cap for degenerate indicial relations
        #[arg(long = "max-degree", value_name = "N", default_value_t = 64)]
        max_degree: u64,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Exact determinant and inequality verification
    Nabla {
        #[command(subcommand)]
        cmd: NablaCmd,
    },
    /// Algebraic Fourier transform (x -> D, D -> -x)
    Fourier {
        operator: String,
        #[arg(long)]
        json: bool,
    },
    /// Formal adjoint
    Adjoint {
        operator: String,
        #[arg(long)]
        json: bool,
    },
    /// Change of variable x -> x + c
    Translate {
        #[arg(long = "c", value_name = "C", allow_hyphen_values = true)]
        c: String,
        operator: String,
        #[arg(long)]
        json: bool,
    },
    /// Gauge twist D -> D + R for a polynomial R
    Twist {
        #[arg(long = "r", value_name = "R", allow_hyphen_values = true)]
        r: String,
        operator: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum NablaCmd {
    /// The determinant scale factor mu(d)
    Mu {
        #[arg(long = "d")]
        d: u64,
        #[arg(long)]
        json: bool,
    },
    /// Recurrence-vs-determinant oracle, inequality chain, parity for one d
    Verify {
        #[arg(long = "d")]
        d: u64,
        #[arg(long)]
        json: bool,
    },
    /// Verify every d up to a bound
    Sweep {
        #[arg(long = "max-d")]
        max_d: u64,
        #[arg(long)]
        json: bool,
    },
    /// The three central values of the chain certificate h (odd d)
    H {
        #[arg(long = "d")]
        d: u64,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let (result, json): (Result<Outcome, CliFailure>, bool) = match cli.command {
        Command::Analyze {
            operator,
            field_sqrt,
            max_degree,
            json,
        } => (
            commands::cmd_analyze(&operator, field_sqrt.as_deref(), max_degree),
            json,
        ),
        Command::Nabla { cmd } => match cmd {
            NablaCmd::Mu { d, json } => (commands::cmd_nabla_mu(d), json),
            NablaCmd::Verify { d, json } => (commands::cmd_nabla_verify(d), json),
            NablaCmd::Sweep { max_d, json } => (commands::cmd_nabla_sweep(max_d), json),
            NablaCmd::H { d, json } => (commands::cmd_nabla_h(d), json),
        },
        Command::Fourier { operator, json } => {
            (commands::cmd_transform(Transform::Fourier, &operator), json)
        }
        Command::Adjoint { operator, json } => {
            (commands::cmd_transform(Transform::Adjoint, &operator), json)
        }
        Command::Translate { c, operator, json } => (
            commands::cmd_transform(Transform::Translate(c), &operator),
            json,
        ),
        Command::Twist { r, operator, json } => (
            commands::cmd_transform(Transform::Twist(r), &operator),
            json,
        ),
    };

    match result {
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.exit_code as u8)
        }
        Ok(mut outcome) => {
            for warning in &outcome.warnings {
                eprintln!("warning: {}", warning);
            }
            if json {
                outcome.report.timing_ms =
                    u64::try_from(started.elapsed().as_millis()).unwrap_or(u64::MAX);
                println!("{}", outcome.report.to_json());
            } else {
                println!("{}", outcome.text);
            }
            ExitCode::from(outcome.exit_code as u8)
        }
    }
}
