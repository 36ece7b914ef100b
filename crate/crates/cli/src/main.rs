//! `seqspec`: batch verification of spectra described in JSON.
//!
//! Reports go to `--out` or standard output; a one-line summary goes to
//! standard error. Exit status: 0 all verdicts pass, 1 a verification failed,
//! 2 an input did not parse or validate, 3 an enumeration budget ran out.

mod commands;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use seqspec_core::limits::{install, Limits};

use commands::{CliError, Outcome};

#[derive(Parser, Debug)]
#[command(name = "seqspec", version, about = "Exact computations with sequential spectra of simplicial sets")]
struct Cli {
    /// Write the JSON report here instead of standard output; for
    /// `generate-corpus`, the directory that receives the documents
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and validate spectrum documents
    Validate {
        #[arg(long, required = true, num_args = 1..)]
        input: Vec<PathBuf>,
    },
    /// Stable homology of a spectrum
    Homology {
        #[arg(long)]
        input: PathBuf,
    },
    /// The naive smash product of two spectra along a partition function
    Smash {
        #[arg(long, num_args = 2, required = true)]
        input: Vec<PathBuf>,
        /// `floor-half`, `interleave(a,b)` or a comma-separated table
        #[arg(long, default_value = "floor-half")]
        q: String,
        /// Also write the smash spectrum document here
        #[arg(long)]
        spectrum_out: Option<PathBuf>,
    },
    /// Homology of the naive smash against the tensor product of chains
    Kunneth {
        #[arg(long, num_args = 2, required = true)]
        input: Vec<PathBuf>,
        #[arg(long, default_value = "floor-half")]
        q: String,
    },
    /// The coequalizer presentation yields an isomorphism for each input
    VerifyCoeq {
        #[arg(long, required = true, num_args = 1..)]
        input: Vec<PathBuf>,
    },
    /// Maps out of free spectra against maps into a level
    VerifyAdjunction {
        #[arg(long, required = true, num_args = 1..)]
        input: Vec<PathBuf>,
        /// Free-spectrum levels to probe (default 0, 1, 2)
        #[arg(long, num_args = 1..)]
        level: Vec<usize>,
        /// Sphere dimensions for the free spectra (default 0, 1)
        #[arg(long, num_args = 1..)]
        sphere: Vec<usize>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// The standard frame: frame predicate and recovery of each input
    VerifyFrame {
        #[arg(long, num_args = 0..)]
        input: Vec<PathBuf>,
        /// Degree of the standard frame
        #[arg(long, default_value_t = 3)]
        degree: usize,
        /// A cospectrum document to check instead of the standard frame
        #[arg(long)]
        cospectrum: Option<PathBuf>,
    },
    /// Every per-spectrum and per-pair check over a set of inputs
    CorpusRun {
        /// Spectrum documents, or directories of them
        #[arg(long, required = true, num_args = 1..)]
        input: Vec<PathBuf>,
        #[arg(long, default_value = "floor-half")]
        q: String,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Write a deterministic corpus of spectrum documents into a directory
    GenerateCorpus {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 25)]
        size: usize,
    },
}

fn run(command: Command, out: Option<&Path>) -> Result<Outcome, CliError> {
    match command {
        Command::Validate { input } => commands::validate(&input),
        Command::Homology { input } => commands::homology(&input),
        Command::Smash { input, q, spectrum_out } => commands::smash(&input[0], &input[1], &q, spectrum_out.as_deref()),
        Command::Kunneth { input, q } => commands::kunneth(&input[0], &input[1], &q),
        Command::VerifyCoeq { input } => commands::verify_coeq(&input),
        Command::VerifyAdjunction { input, level, sphere, budget } => {
            commands::verify_adjunction(&input, &level, &sphere, budget)
        }
        Command::VerifyFrame { input, degree, cospectrum } => {
            commands::verify_frame(&input, degree, cospectrum.as_deref())
        }
        Command::CorpusRun { input, q, budget } => commands::corpus_run(&input, &q, budget),
        Command::GenerateCorpus { seed, size } => {
            let dir = out.ok_or_else(|| CliError::parse("generate-corpus needs --out DIR"))?;
            commands::generate_corpus(seed, size, dir)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let corpus_dir = matches!(cli.command, Command::GenerateCorpus { .. });
    let outcome = match Limits::from_env() {
        Ok(limits) => {
            install(limits);
            run(cli.command, cli.out.as_deref())
        }
        Err(message) => Err(CliError::parse(message)),
    };
    let (report, code, summary) = match outcome {
        Ok(o) => (o.report, o.code, o.summary),
        Err(e) => (e.report(), e.code, format!("error: {}", e.message)),
    };
    let text = serde_json::to_string_pretty(&report).expect("reports serialize") + "\n";
    let report_path = if corpus_dir { None } else { cli.out.as_ref() };
    let written = match report_path {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(message) = written {
        eprintln!("{message}");
        return ExitCode::from(2);
    }
    eprintln!("{summary} ({:.2}s)", start.elapsed().as_secs_f64());
    ExitCode::from(code)
}
