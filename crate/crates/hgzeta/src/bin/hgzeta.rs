use clap::{Parser, ValueEnum};
use hgzeta::config::RunConfig;
use hgzeta::report::{run, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Hypergeometric factorization of zeta functions of monomial deformations,
/// with brute-force and character-sum verification oracles.
#[derive(Parser, Debug)]
#[command(name = "hgzeta", version)]
struct Cli {
    /// analyze | count | zeta | unitroot | verify
    subcommand: String,
    /// Path to the JSON run configuration.
    #[arg(long)]
    config: PathBuf,
    /// Override r_max from the config.
    #[arg(long)]
    r: Option<u32>,
    /// Worker-pool size for λ sweeps.
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Output directory for report.json and report.txt.
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Which rendering to print on stdout (both files are always written).
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cmd: Subcommand = match cli.subcommand.parse() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut cfg = match RunConfig::load(&cli.config) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Some(r) = cli.r {
        cfg.r_max = r;
    }
    match run(&cfg, cmd, cli.threads) {
        Ok(report) => {
            if let Err(e) = report.write_files(&cli.out) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            match cli.format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => println!("{}", report.to_text()),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
