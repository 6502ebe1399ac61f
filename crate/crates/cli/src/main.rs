mod commands;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "trigdunkl", version, about = "Exact trigonometric Dunkl operators and special exponents")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: Global,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Root system, e.g. `E8`, or a family letter together with --rank
    #[arg(long = "type", global = true)]
    pub r#type: Option<String>,
    #[arg(long, global = true)]
    pub rank: Option<usize>,
    /// Value of k as an exact fraction; symbolic when omitted
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub k: Option<String>,
    /// Value of the second coupling k'
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub kp: Option<String>,
    /// Coupling on the doubled roots (BC only)
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub k2: Option<String>,
    /// Weight as comma-separated fundamental-weight coordinates
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub mu: Option<String>,
    /// Direction as comma-separated simple-coroot coordinates
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub xi: Option<String>,
    /// JSON file holding the argument function
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write output here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Positive roots, Cartan matrix and rho_k
    Roots,
    /// Weyl orbit of --mu
    Orbit,
    /// Dunkl operators applied to e^mu (or --input)
    Dunkl,
    /// Nonsymmetric Jacobi polynomial E_k(mu)
    Jacobi,
    /// Casimir of the Dunkl operators and L_k on the orbit sum of --mu
    Invariant,
    /// Hamiltonian H_k on the orbit sum of --mu (or --input)
    Hamiltonian,
    /// Special exponents with their verdicts
    Special {
        /// prop32, relations, compat or all
        #[arg(long)]
        verify: Option<String>,
    },
    /// Run a verification suite (or `all`)
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
    /// Admissible (n, k, q) rows
    Schwarz {
        #[arg(long, default_value_t = 9)]
        max_n: u64,
    },
    /// Summary of a root system with its special exponents
    Report,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(trigdunkl_core::Error),
}

impl From<trigdunkl_core::Error> for CliError {
    fn from(e: trigdunkl_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

fn emit(cli: &Cli, body: &str) -> Result<(), String> {
    match &cli.global.out {
        Some(p) => std::fs::write(p, body).map_err(|e| format!("{}: {e}", p.display())),
        None => std::io::stdout().write_all(body.as_bytes()).map_err(|e| e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match commands::run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let body = match cli.global.format {
        Format::Json => format!("{}\n", out.json),
        Format::Text => out.text.clone(),
    };
    if let Err(e) = emit(&cli, &body) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if let Some(f) = &out.failure {
        eprintln!("verification failed: {}", f.name);
        eprintln!("{}", serde_json::to_string_pretty(f).unwrap_or_default());
    }
    ExitCode::from(status(&out))
}

/// 0 when every identity held, 1 when one failed.
fn status(out: &commands::Output) -> u8 {
    u8::from(out.failure.is_some())
}
