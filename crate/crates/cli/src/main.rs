//! `unicon`: command-line front end for the exact computations in
//! `unicon-core`. Every invocation prints one JSON report with sorted keys
//! (or a plain key/value listing with `--plain`).

mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{Map, Value};

use report::{Outcome, Report};

#[derive(Parser, Debug)]
#[command(
    name = "unicon",
    version,
    about = "Universal-construction state spaces, Schur functions and foams"
)]
struct Cli {
    /// Print a plain key/value listing instead of JSON.
    #[arg(long, global = true)]
    plain: bool,
    /// Stage timings on standard error.
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct StateSpaceArgs {
    /// Theory text form, e.g. "const beta" or "rational beta=b1 gamma=".
    #[arg(long)]
    theory: String,
    /// Number of boundary circles.
    #[arg(long)]
    k: usize,
    /// Per-block genus bound (defaults to the theory's K − 1).
    #[arg(long)]
    cap: Option<usize>,
    /// Parameter specializations, e.g. `--subst beta1=2`.
    #[arg(long, value_delimiter = ',')]
    subst: Vec<String>,
    /// auto, exact or modular.
    #[arg(long, default_value = "auto")]
    method: String,
}

#[derive(Args, Debug)]
struct HookArgs {
    #[arg(long)]
    lambda: String,
    #[arg(long = "M")]
    m: usize,
    #[arg(long = "N", default_value_t = 0)]
    n: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rank, graded rank, pivots and relation count of A(k).
    StateSpace(StateSpaceArgs),
    /// Spanning set and Gram matrix of A(k).
    Gram(StateSpaceArgs),
    /// Kernel relations of the Gram matrix of A(k).
    Relations(StateSpaceArgs),
    /// Graded rank of A(k).
    GradedRank(StateSpaceArgs),
    /// Recognize a rational generating function from a coefficient prefix.
    DetectRational {
        /// Comma-separated rationals.
        #[arg(long)]
        seq: String,
    },
    /// Schur polynomial s_λ(x1..xM).
    Schur(HookArgs),
    /// Supersymmetric Schur polynomial s_λ(x/y) by Jacobi-Trudi.
    Superschur(HookArgs),
    /// Compare the Sergeev-Pragacz formula with Jacobi-Trudi.
    SpVerify(HookArgs),
    /// Evaluate the GL(M) theta-foam with dots from μ.
    FoamTheta {
        #[arg(long = "M")]
        m: usize,
        #[arg(long)]
        mu: String,
    },
    /// Evaluate the overlapping GL(M|N) theta-foam of a hook partition.
    FoamOverlap(HookArgs),
    /// Compare the sphere-overlap foam with the Sylvester resultant.
    ResultantCheck {
        #[arg(long = "M")]
        m: usize,
        #[arg(long = "N")]
        n: usize,
    },
    /// Day's formula against the brute-force Toeplitz determinant.
    DayVerify {
        #[arg(long, default_value = "")]
        delta: String,
        #[arg(long, default_value = "")]
        rho: String,
        #[arg(long)]
        roots: String,
        #[arg(long)]
        n: usize,
    },
    /// Generating function of the deformed rank-two Frobenius extension.
    Frobenius2 {
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::StateSpace(_) => "state-space",
            Command::Gram(_) => "gram",
            Command::Relations(_) => "relations",
            Command::GradedRank(_) => "graded-rank",
            Command::DetectRational { .. } => "detect-rational",
            Command::Schur(_) => "schur",
            Command::Superschur(_) => "superschur",
            Command::SpVerify(_) => "sp-verify",
            Command::FoamTheta { .. } => "foam-theta",
            Command::FoamOverlap(_) => "foam-overlap",
            Command::ResultantCheck { .. } => "resultant-check",
            Command::DayVerify { .. } => "day-verify",
            Command::Frobenius2 { .. } => "frobenius2",
        }
    }

    fn inputs(&self) -> Map<String, Value> {
        let mut m = Map::new();
        let mut put = |k: &str, v: Value| {
            m.insert(k.to_string(), v);
        };
        match self {
            Command::StateSpace(a) | Command::Gram(a) | Command::Relations(a) | Command::GradedRank(a) => {
                put("theory", a.theory.clone().into());
                put("k", a.k.into());
                put("cap", a.cap.map_or(Value::Null, Value::from));
                put("subst", a.subst.clone().into());
                put("method", a.method.clone().into());
            }
            Command::DetectRational { seq } => put("seq", seq.clone().into()),
            Command::Schur(a) | Command::Superschur(a) | Command::SpVerify(a) | Command::FoamOverlap(a) => {
                put("lambda", a.lambda.clone().into());
                put("M", a.m.into());
                put("N", a.n.into());
            }
            Command::FoamTheta { m, mu } => {
                put("M", (*m).into());
                put("mu", mu.clone().into());
            }
            Command::ResultantCheck { m, n } => {
                put("M", (*m).into());
                put("N", (*n).into());
            }
            Command::DayVerify { delta, rho, roots, n } => {
                put("delta", delta.clone().into());
                put("rho", rho.clone().into());
                put("roots", roots.clone().into());
                put("n", (*n).into());
            }
            Command::Frobenius2 { order } => put("order", (*order).into()),
        }
        m
    }
}

fn requested_plain(args: &[String]) -> bool {
    args.iter().any(|a| a == "--plain")
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e)
            if matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) =>
        {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let report = Report::new("", Map::new(), Outcome::InvalidInput(first_line(&e)));
            emit(&report.render(requested_plain(&argv)));
            return ExitCode::from(1);
        }
    };
    let name = cli.command.name();
    let inputs = cli.command.inputs();
    let outcome = match std::panic::catch_unwind(|| commands::run(&cli.command, cli.verbose)) {
        Ok(o) => o,
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Outcome::Internal(msg)
        }
    };
    let code = outcome.exit_code();
    emit(&Report::new(name, inputs, outcome).render(cli.plain));
    ExitCode::from(code)
}

/// Writes the report; a closed pipe is not an error.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn first_line(e: &clap::Error) -> String {
    let text = e.to_string();
    let line = text.lines().next().unwrap_or_default();
    line.trim_start_matches("error: ").to_string()
}
