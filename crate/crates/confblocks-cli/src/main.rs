use clap::{Parser, Subcommand};
use confblocks_cli::commands;
use confblocks_cli::config::RunConfig;
use confblocks_cli::report::Report;
use confblocks_cli::{CliError, Options};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser, Debug)]
#[command(name = "confblocks", version, about = "Exact genus-0 conformal blocks and log-form verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// TOML configuration file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true)]
    stratum_cap: Option<usize>,
    #[arg(long, global = true)]
    monomial_ceiling: Option<u128>,
    /// Run the built-in catalog instead of the configured instance.
    #[arg(long, global = true)]
    suite: bool,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Conformal-block space of the configured instance.
    Blocks,
    /// Compare conformal blocks with the admissible log-form space.
    VerifyTheorem,
    /// Enumerate marked-partition log forms.
    Logbasis,
    /// Images of the conformal-block basis under the SV map.
    Svmap,
    /// Iterated residues of a basis form.
    Residue,
    /// Certify degree lower bounds.
    DegreeLemma,
    /// Root-system data.
    RootInfo {
        #[arg(long)]
        algebra: Option<String>,
    },
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let cfg = match &cli.config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    };
    let opts = Options::resolve(&cfg, cli.stratum_cap, cli.monomial_ceiling, cli.suite)?;
    match &cli.command {
        Command::Blocks => commands::cmd_blocks(&cfg),
        Command::VerifyTheorem => commands::cmd_verify_theorem(&cfg, &opts),
        Command::Logbasis => commands::cmd_logbasis(&cfg),
        Command::Svmap => commands::cmd_svmap(&cfg),
        Command::Residue => commands::cmd_residue(&cfg),
        Command::DegreeLemma => commands::cmd_degree_lemma(&cfg, &opts),
        Command::RootInfo { algebra } => commands::cmd_root_info(&cfg, algebra.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = report.to_json(cli.timing.then(|| start.elapsed().as_millis()));
    match &cli.out {
        Some(p) => {
            if let Err(e) = std::fs::write(p, &text) {
                eprintln!("error: {}: {e}", p.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
