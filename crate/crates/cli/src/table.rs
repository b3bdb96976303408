// Copyright 2026 The iontrap Developers
// SPDX-License-Identifier: Apache-2.0

//! `iontrap table`: enumerate exact CN parameter sets.

use std::f64::consts::PI;
use std::io::Write;

use iontrap_core::solver::{
    enumerate_solutions_with, shortest_gate, EnumerationBounds, GateTiming, PhysicalRates,
    EXACTNESS_TOL,
};
use iontrap_core::{CnPhase, SolutionRecord};
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::numfmt::sig;

pub const CSV_HEADER: [&str; 13] = [
    "k",
    "eta",
    "p",
    "q",
    "p_prime",
    "q_prime",
    "theta2_over_pi",
    "theta1_over_pi",
    "theta3_over_pi",
    "phi1_over_pi",
    "phi3_over_pi",
    "cn_error",
    "leakage",
];

/// Significant figures of every real column.
pub const SIG_DIGITS: usize = 6;

/// Refuse enumerations whose cost grows out of reach.
pub const MAX_P_LIMIT: u32 = 200;
pub const MAX_BOUNDS_LIMIT: u32 = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRequest {
    pub k: usize,
    pub max_p: u32,
    pub bounds: u32,
    pub phase: CnPhase,
}

/// One JSON row; same columns as the CSV at full precision.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TableRow {
    pub k: usize,
    pub eta: f64,
    pub p: u32,
    pub q: u32,
    pub p_prime: u32,
    pub q_prime: u32,
    pub theta2_over_pi: f64,
    pub theta1_over_pi: f64,
    pub theta3_over_pi: f64,
    pub phi1_over_pi: f64,
    pub phi3_over_pi: f64,
    pub cn_error: f64,
    pub leakage: f64,
}

impl From<&SolutionRecord> for TableRow {
    fn from(r: &SolutionRecord) -> Self {
        TableRow {
            k: r.k,
            eta: r.eta,
            p: r.p,
            q: r.q,
            p_prime: r.p_prime,
            q_prime: r.q_prime,
            theta2_over_pi: r.theta2_over_pi,
            theta1_over_pi: r.theta1_over_pi,
            theta3_over_pi: r.theta3_over_pi,
            phi1_over_pi: r.phi1 / PI,
            phi3_over_pi: r.phi3 / PI,
            cn_error: r.cn_error,
            leakage: r.leakage,
        }
    }
}

impl TableRow {
    fn csv_fields(&self) -> [String; 13] {
        [
            self.k.to_string(),
            sig(self.eta, SIG_DIGITS),
            self.p.to_string(),
            self.q.to_string(),
            self.p_prime.to_string(),
            self.q_prime.to_string(),
            sig(self.theta2_over_pi, SIG_DIGITS),
            sig(self.theta1_over_pi, SIG_DIGITS),
            sig(self.theta3_over_pi, SIG_DIGITS),
            sig(self.phi1_over_pi, SIG_DIGITS),
            sig(self.phi3_over_pi, SIG_DIGITS),
            sig(self.cn_error, SIG_DIGITS),
            sig(self.leakage, SIG_DIGITS),
        ]
    }
}

/// Validates the request and enumerates. Every returned record has been
/// re-verified on the full space.
pub fn build_table(req: &TableRequest) -> CliResult<Vec<SolutionRecord>> {
    if req.k == 0 {
        return Err(CliError::Input(
            "CZ construction requires sideband order k >= 1 (the control levels m < k must stay frozen)".into(),
        ));
    }
    if req.max_p > MAX_P_LIMIT {
        return Err(CliError::Input(format!(
            "--max-p must not exceed {MAX_P_LIMIT}"
        )));
    }
    if req.bounds > MAX_BOUNDS_LIMIT {
        return Err(CliError::Input(format!(
            "--bounds must not exceed {MAX_BOUNDS_LIMIT}"
        )));
    }
    let bounds = EnumerationBounds {
        max_p: req.max_p,
        max_pq_prime: req.bounds,
    };
    let records = enumerate_solutions_with(req.k, bounds, req.phase);
    debug_assert!(records.iter().all(|r| r.cn_error < EXACTNESS_TOL));
    Ok(records)
}

pub fn write_table<W: Write>(
    records: &[SolutionRecord],
    format: TableFormat,
    out: W,
) -> CliResult<()> {
    match format {
        TableFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(out);
            w.write_record(CSV_HEADER)?;
            for r in records {
                w.write_record(TableRow::from(r).csv_fields())?;
            }
            w.flush()?;
        }
        TableFormat::Json => {
            let rows: Vec<TableRow> = records.iter().map(TableRow::from).collect();
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, &rows)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

/// Human-readable duration estimate for the fastest emitted gate.
pub fn timing_summary(
    records: &[SolutionRecord],
    rates: &PhysicalRates,
) -> Option<(SolutionRecord, GateTiming, String)> {
    let (record, timing) = shortest_gate(records, rates)?;
    let line = format!(
        "shortest CN: eta={} p={} q={} p'={} q'={}; t1={:.4e} s, t2={:.4e} s, t3={:.4e} s, total={:.4e} s",
        sig(record.eta, SIG_DIGITS),
        record.p,
        record.q,
        record.p_prime,
        record.q_prime,
        timing.t1,
        timing.t2,
        timing.t3,
        timing.total()
    );
    Some((record, timing, line))
}
