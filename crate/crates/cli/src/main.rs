//! `seminormed` command-line front end.
//!
//! Exit codes: 0 success, 1 negative outcome (witness found, oracle
//! mismatch, failed validation or certificate), 2 usage or parse error,
//! 3 instance failed validation.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "seminormed", version, about = "Seminormed integrals and translation-invariance certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write output here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate I_S(mu, f) for an instance file.
    Integrate(IntegrateArgs),
    /// Validate a capacity file and/or a semicopula descriptor.
    Validate(ValidateArgs),
    /// Decide whether S satisfies I(mu, f + a) = I(mu, f) + a.
    Check(CheckArgs),
    /// Build a counterexample certificate, or print null if none exists on the lattice.
    Synthesize(SynthesizeArgs),
    /// Compare the exact evaluator with the brute-force grid oracle.
    OracleCompare(OracleArgs),
    /// Re-verify a counterexample certificate.
    Verify(VerifyArgs),
}

/// A semicopula: `min`, `product`, `lukasiewicz`, `drastic`, an inline JSON
/// descriptor, or `@path` to a descriptor file.
#[derive(Args, Debug, Clone)]
struct SemicopulaArg {
    #[arg(long, short = 's', value_name = "DESCRIPTOR")]
    semicopula: String,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("which").required(true).args(["semicopula", "sugeno", "shilkret"])))]
struct IntegrateArgs {
    #[arg(long, short)]
    instance: PathBuf,
    /// Semicopula descriptor (name, JSON, or @file).
    #[arg(long, short = 's', value_name = "DESCRIPTOR")]
    semicopula: Option<String>,
    /// Shortcut for `--semicopula min`.
    #[arg(long)]
    sugeno: bool,
    /// Shortcut for `--semicopula product`.
    #[arg(long)]
    shilkret: bool,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("target").required(true).multiple(true).args(["capacity", "semicopula"])))]
struct ValidateArgs {
    /// Capacity or instance file.
    #[arg(long, short)]
    capacity: Option<PathBuf>,
    #[arg(long, short = 's', value_name = "DESCRIPTOR")]
    semicopula: Option<String>,
    #[arg(long, default_value_t = 64)]
    resolution: usize,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[command(flatten)]
    semicopula: SemicopulaArg,
    #[arg(long, default_value_t = 64)]
    resolution: usize,
    /// Random instances in the confirmation sweep; requires --seed when positive.
    #[arg(long, default_value_t = 0)]
    samples: usize,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args, Debug)]
struct SynthesizeArgs {
    #[command(flatten)]
    semicopula: SemicopulaArg,
    #[arg(long, default_value_t = 64)]
    resolution: usize,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long, short)]
    instance: PathBuf,
    #[command(flatten)]
    semicopula: SemicopulaArg,
    /// Grid step, within (0, 0.01].
    #[arg(long, default_value_t = 1e-3)]
    step: f64,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, short)]
    certificate: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Integrate(args) => commands::integrate(args),
        Command::Validate(args) => commands::validate(args),
        Command::Check(args) => commands::check(args),
        Command::Synthesize(args) => commands::synthesize(args),
        Command::OracleCompare(args) => commands::oracle_compare(args),
        Command::Verify(args) => commands::verify(args),
    };
    match outcome.and_then(|out| commands::emit(&out, cli.output.as_deref()).map(|()| out.code)) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
