//! genbell: construct generalized Bell polynomials exactly, isolate their
//! real zeros with certified rational intervals, and run the zero-structure
//! verification suites.
//!
//! Exit codes: 0 success, 1 a verification case failed, 2 user or domain
//! error, 3 internal invariant violation.

mod commands;
mod envelope;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num::Signed;

use genbell_core::phi::PhiSequence;
use genbell_core::rational::{parse_rational, Rational};

use commands::{cmd_construct, cmd_laguerre, cmd_roots, cmd_verify, CmdError, VerifyArgs};
use envelope::Envelope;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Parser)]
#[command(
    name = "genbell",
    version,
    about = "Exact generalized Bell polynomials, certified zero isolation, and theorem verification"
)]
struct Cli {
    /// Output format for the report envelope.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,

    /// Write the envelope to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Isolation interval width, a positive rational like 1/1048576.
    #[arg(long, global = true, default_value = "1/1048576")]
    width: String,

    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build Be_n^phi by one or all construction routes.
    Construct {
        /// Sequence spec: "r1,r2,...[;tail=zero|const:R|affine:A]".
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        #[arg(long)]
        n: usize,
        /// definition | recurrence | rho | all
        #[arg(long, default_value = "all")]
        route: String,
    },
    /// Isolate the real zeros of Be_n^phi with certified intervals.
    Roots {
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        #[arg(long)]
        n: usize,
    },
    /// Run a verification suite.
    Verify {
        /// nonneg | monotonicity | one-negative | finite-support |
        /// zero-mult | negative-pair | shift | conjecture
        #[arg(long)]
        suite: String,
        #[arg(long, allow_hyphen_values = true)]
        phi: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        psi: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        n_lo: Option<usize>,
        #[arg(long)]
        n_hi: Option<usize>,
        /// Number of random sequences for randomized suites.
        #[arg(long)]
        trials: Option<usize>,
        /// Shift amount for the shift suite (rational).
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
        /// Comma-separated gamma coefficients for the conjecture suite.
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<String>,
        /// The integer m >= 2 for the negative-pair suite.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Multiple Laguerre polynomials through the Bell bridge.
    Laguerre {
        /// Comma-separated rational parameters alpha_1,...,alpha_q.
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        /// Comma-separated multi-index n_1,...,n_q.
        #[arg(long)]
        nvec: String,
        /// Verify the exact orthogonality conditions.
        #[arg(long, default_value_t = false)]
        check_orth: bool,
    },
}

fn parse_phi(text: &str) -> Result<PhiSequence, CmdError> {
    text.parse::<PhiSequence>()
        .map_err(|e| CmdError::User(e.to_string()))
}

fn parse_width(text: &str) -> Result<Rational, CmdError> {
    let w = parse_rational(text).map_err(|e| CmdError::User(e.to_string()))?;
    if !w.is_positive() {
        return Err(CmdError::User(format!("width must be positive, got {text}")));
    }
    Ok(w)
}

fn run(cli: &Cli) -> Result<(Envelope, i32), CmdError> {
    let width = parse_width(&cli.width)?;
    let some = |s: &str| Some(s.to_string());
    let (name, inputs, payload) = match &cli.command {
        Command::Construct { phi, n, route } => {
            let seq = parse_phi(phi)?;
            let inputs = commands::echo(&[
                ("phi", some(phi)),
                ("n", some(&n.to_string())),
                ("route", some(route)),
            ]);
            ("construct", inputs, cmd_construct(&seq, *n, route)?)
        }
        Command::Roots { phi, n } => {
            let seq = parse_phi(phi)?;
            let inputs = commands::echo(&[
                ("phi", some(phi)),
                ("n", some(&n.to_string())),
                ("width", some(&cli.width)),
            ]);
            ("roots", inputs, cmd_roots(&seq, *n, &width)?)
        }
        Command::Verify {
            suite,
            phi,
            psi,
            n,
            n_max,
            n_lo,
            n_hi,
            trials,
            s,
            gamma,
            m,
        } => {
            let args = VerifyArgs {
                suite: suite.clone(),
                phi: phi.as_deref().map(parse_phi).transpose()?,
                psi: psi.as_deref().map(parse_phi).transpose()?,
                n: *n,
                n_max: *n_max,
                n_lo: *n_lo,
                n_hi: *n_hi,
                trials: *trials,
                s: s.clone(),
                gamma: gamma.clone(),
                m: *m,
                seed: cli.seed,
                width: width.clone(),
            };
            let inputs = commands::echo(&[
                ("suite", some(suite)),
                ("phi", phi.clone()),
                ("psi", psi.clone()),
                ("n", n.map(|v| v.to_string())),
                ("n_max", n_max.map(|v| v.to_string())),
                ("n_lo", n_lo.map(|v| v.to_string())),
                ("n_hi", n_hi.map(|v| v.to_string())),
                ("trials", trials.map(|v| v.to_string())),
                ("s", s.clone()),
                ("gamma", gamma.clone()),
                ("m", m.map(|v| v.to_string())),
                ("seed", some(&cli.seed.to_string())),
                ("width", some(&cli.width)),
            ]);
            ("verify", inputs, cmd_verify(&args)?)
        }
        Command::Laguerre {
            alpha,
            nvec,
            check_orth,
        } => {
            let inputs = commands::echo(&[
                ("alpha", some(alpha)),
                ("nvec", some(nvec)),
                ("check_orth", some(&check_orth.to_string())),
            ]);
            ("laguerre", inputs, cmd_laguerre(alpha, nvec, *check_orth)?)
        }
    };
    let (results, code) = payload;
    Ok((Envelope::new(name, inputs, results), code))
}

fn emit(cli: &Cli, envelope: &Envelope) -> std::io::Result<()> {
    let text = match cli.format {
        Format::Json => envelope.to_json(),
        Format::Csv => envelope.to_csv(),
    };
    match &cli.out {
        None => std::io::stdout().write_all(text.as_bytes()),
        Some(path) => std::fs::write(path, text),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(&cli) {
        Ok((mut envelope, code)) => {
            envelope.timing_ms = started.elapsed().as_millis() as u64;
            if let Err(e) = emit(&cli, &envelope) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(code as u8)
        }
        Err(CmdError::User(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
