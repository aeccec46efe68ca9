use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use taukit_cli::params::parse_assignment;
use taukit_cli::{compute_tau, list_suites, run_suite, CliError, SuiteConfig};

#[derive(Parser)]
#[command(name = "taukit", version, about = "Exact verification of equivariant tensor-power identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run one verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        /// Suite parameter as key=value; repeatable.
        #[arg(long = "param", value_parser = parse_assignment)]
        params: Vec<(String, String)>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Degree bound for suites that take one.
        #[arg(long)]
        bound: Option<u32>,
    },
    /// List the available suites and their parameters.
    List {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate an operation on a given class.
    Compute {
        #[command(subcommand)]
        what: ComputeCommand,
    },
}

#[derive(Subcommand)]
enum ComputeCommand {
    /// tau^l of a class in K_0(P^n), e.g. --class "h^2 - 2h + 1".
    Tau {
        #[arg(long)]
        l: usize,
        #[arg(long, allow_hyphen_values = true)]
        class: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Verify { suite, params, seed, format, bound } => {
            let report = run_suite(&SuiteConfig { suite, params, seed, bound })?;
            match format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            Ok(report.passed())
        }
        Command::List { format } => {
            let suites = list_suites();
            match format {
                Format::Text => {
                    for s in suites {
                        println!("{}\n    {}", s.name, s.statement);
                        for p in s.params {
                            println!("    --param {p}");
                        }
                    }
                }
                Format::Json => println!("{}", serde_json::to_string_pretty(&suites).expect("serializable")),
            }
            Ok(true)
        }
        Command::Compute { what: ComputeCommand::Tau { l, class, n, format } } => {
            let r = compute_tau(l, n, &class)?;
            match format {
                Format::Text => println!("tau^{}({}) on P^{} = {}", r.l, r.class, r.n, r.tau),
                Format::Json => println!("{}", serde_json::to_string_pretty(&r).expect("serializable")),
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("taukit: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
