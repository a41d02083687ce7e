use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use dwfkit::cli::{self, Depth, KindArg, Representation, Shots, StateFile};

/// Discrete Wigner functions, Stokes vectors and spin-flip transforms for
/// n-qubit states.
#[derive(Parser)]
#[command(name = "dwf", version)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a state file between density, stokes and dwf.
    Convert {
        /// State file, or - for stdin.
        #[arg(default_value = "-")]
        input: PathBuf,
        #[arg(long)]
        to: Representation,
        /// Net for dwf output.
        #[arg(long)]
        net: Option<u128>,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Export the sign matrix of H, T or H_tilde for one net.
    ExportHadamard {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        net: u128,
        #[arg(long, default_value = "H")]
        kind: KindArg,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Line probabilities of one striation, exact or sampled.
    Measure {
        #[arg(default_value = "-")]
        input: PathBuf,
        #[arg(long)]
        striation: usize,
        #[arg(long, default_value = "exact")]
        shots: Shots,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        net: Option<u128>,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Run the self-checks for n qubits. Exits 3 if any check fails.
    Verify {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "quick")]
        depth: Depth,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Minkowski norm, mixedness, indistinguishability and concurrence.
    Report {
        #[arg(default_value = "-")]
        input: PathBuf,
        #[arg(long)]
        net: Option<u128>,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Points, striations and lines of the phase space.
    DumpGeometry {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
}

fn emit<T: Serialize>(value: &T, out: &PathBuf) -> dwfkit::Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    if out.as_os_str() == "-" {
        std::io::stdout().lock().write_all(text.as_bytes())?;
    } else {
        std::fs::write(out, text)?;
    }
    Ok(())
}

fn run(command: Command) -> dwfkit::Result<bool> {
    match command {
        Command::Convert { input, to, net, out } => {
            let f = StateFile::read_from(&input)?;
            cli::convert(&f, to, net)?.write_to(&out)?;
        }
        Command::ExportHadamard { n, net, kind, out } => {
            emit(&cli::export_hadamard(n, net, kind)?, &out)?;
        }
        Command::Measure { input, striation, shots, seed, net, out } => {
            let f = StateFile::read_from(&input)?;
            emit(&cli::measure(&f, striation, shots, seed, net)?, &out)?;
        }
        Command::Verify { n, depth, out } => {
            let report = cli::verify(n, depth)?;
            emit(&report, &out)?;
            return Ok(report.passed);
        }
        Command::Report { input, net, out } => {
            let f = StateFile::read_from(&input)?;
            emit(&cli::report(&f, net)?, &out)?;
        }
        Command::DumpGeometry { n, out } => {
            emit(&cli::dump_geometry(n)?, &out)?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(args.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(cli::exit_code(&e) as u8)
        }
    }
}
