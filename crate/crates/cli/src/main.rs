// Copyright 2026 The iontrap Developers
// SPDX-License-Identifier: Apache-2.0

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use iontrap_cli::program::PulseProgram;
use iontrap_cli::table::{build_table, timing_summary, write_table, TableFormat, TableRequest};
use iontrap_cli::verify::{render_text, verify, EtaSource, GateKind, VerifyRequest};
use iontrap_cli::{simulate, CliError, CliResult};
use iontrap_core::solver::PhysicalRates;
use iontrap_core::CnPhase;

#[derive(Parser)]
#[command(
    name = "iontrap",
    version,
    about = "Exact gates on a single trapped ion beyond the Lamb-Dicke limit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate exact CN parameter sets for sideband order k.
    Table(TableArgs),
    /// Run a pulse program from a JSON file.
    Simulate(SimulateArgs),
    /// Build a gate from solved parameters and compare with the ideal.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Phase {
    /// Both resonant pulses at phase pi/2.
    Half,
    /// Both resonant pulses at phase 3 pi/2.
    ThreeHalves,
}

impl From<Phase> for CnPhase {
    fn from(p: Phase) -> Self {
        match p {
            Phase::Half => CnPhase::HalfPi,
            Phase::ThreeHalves => CnPhase::ThreeHalvesPi,
        }
    }
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    k: usize,
    /// Largest commensurability integer p.
    #[arg(long, default_value_t = 20)]
    max_p: u32,
    /// Largest p' and q' of the resonant durations.
    #[arg(long, default_value_t = 9)]
    bounds: u32,
    #[arg(long, value_enum, default_value_t = Phase::Half)]
    phase: Phase,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Resonant Rabi frequency Omega / 2 pi in kHz; prints a duration estimate.
    #[arg(long)]
    rabi_khz: Option<f64>,
    /// Sideband coupling eta Omega / 2 pi in kHz (defaults to eta times the resonant one).
    #[arg(long, requires = "rabi_khz")]
    sideband_rabi_khz: Option<f64>,
}

#[derive(Args)]
struct SimulateArgs {
    program: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Gate {
    H,
    Cz,
    Cn,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    gate: Gate,
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long, conflicts_with_all = ["p", "q"])]
    eta: Option<f64>,
    #[arg(long, requires = "q")]
    p: Option<u32>,
    #[arg(long, requires = "p")]
    q: Option<u32>,
    /// Search bound on p when matching --eta.
    #[arg(long, default_value_t = 20)]
    max_p: u32,
    #[arg(long, default_value_t = 0)]
    pprime: u32,
    #[arg(long, default_value_t = 0)]
    qprime: u32,
    #[arg(long, value_enum, default_value_t = Phase::Half)]
    phase: Phase,
    /// Control level for the Hadamard.
    #[arg(long, default_value_t = 0)]
    m: usize,
    /// Extra full periods for the Hadamard durations.
    #[arg(long, default_value_t = 0)]
    branch: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn output(path: &Option<PathBuf>) -> CliResult<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run_table(a: TableArgs) -> CliResult<()> {
    let format = match a.format {
        Format::Csv => TableFormat::Csv,
        Format::Json => TableFormat::Json,
        Format::Text => return Err(CliError::Input("table supports csv or json".into())),
    };
    let records = build_table(&TableRequest {
        k: a.k,
        max_p: a.max_p,
        bounds: a.bounds,
        phase: a.phase.into(),
    })?;
    let mut out = output(&a.out)?;
    write_table(&records, format, &mut out)?;
    out.flush()?;
    if let Some(khz) = a.rabi_khz {
        let rates = PhysicalRates {
            resonant_hz: khz * 1e3,
            sideband_eta_hz: a.sideband_rabi_khz.map(|f| f * 1e3),
        };
        match timing_summary(&records, &rates) {
            Some((_, _, line)) => eprintln!("{line}"),
            None => eprintln!("shortest CN: no records"),
        }
    }
    Ok(())
}

fn run_simulate(a: SimulateArgs) -> CliResult<()> {
    if !matches!(a.format, Format::Json) {
        return Err(CliError::Input("simulate supports json output only".into()));
    }
    let text = std::fs::read_to_string(&a.program)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", a.program.display())))?;
    let program = PulseProgram::from_json(&text)?;
    let report = simulate::simulate(&program)?;
    let mut out = output(&a.out)?;
    serde_json::to_writer_pretty(&mut out, &report)?;
    writeln!(out)?;
    out.flush()?;
    Ok(())
}

fn run_verify(a: VerifyArgs) -> CliResult<()> {
    let eta = match (a.eta, a.p, a.q) {
        (Some(eta), _, _) => EtaSource::Value(eta),
        (None, Some(p), Some(q)) => EtaSource::Pair { p, q },
        _ => return Err(CliError::Input("give --eta or both --p and --q".into())),
    };
    let report = verify(&VerifyRequest {
        gate: match a.gate {
            Gate::H => GateKind::H,
            Gate::Cz => GateKind::Cz,
            Gate::Cn => GateKind::Cn,
        },
        k: a.k,
        eta,
        max_p: a.max_p,
        p_prime: a.pprime,
        q_prime: a.qprime,
        phase: a.phase.into(),
        m: a.m,
        branch: a.branch,
    })?;
    let mut out = output(&a.out)?;
    match a.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, &report)?;
            writeln!(out)?;
        }
        Format::Text => out.write_all(render_text(&report).as_bytes())?,
        Format::Csv => return Err(CliError::Input("verify supports text or json".into())),
    }
    out.flush()?;
    if report.exact {
        Ok(())
    } else {
        Err(CliError::NoSolution(format!(
            "gate is not exact: distance {:.3e}",
            report.distance
        )))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table(a) => run_table(a),
        Command::Simulate(a) => run_simulate(a),
        Command::Verify(a) => run_verify(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
