// Copyright 2026 The iontrap Developers
// SPDX-License-Identifier: Apache-2.0

//! `iontrap simulate`: run a pulse program on its initial state.

use iontrap_core::gates::gamma_indices;
use iontrap_core::{apply, fidelity_overlap, JointState};
use serde::Serialize;

use crate::error::CliResult;
use crate::program::{entries_from_state, AmplitudeEntry, PulseProgram};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StepReport {
    /// Zero-based pulse position in the program.
    pub pulse: usize,
    pub norm: f64,
    pub guard_occupation: f64,
    /// Population outside the computational subspace after this pulse.
    pub leakage: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimulationReport {
    pub dim: usize,
    pub final_state: Vec<AmplitudeEntry>,
    pub norm: f64,
    pub guard_occupation: f64,
    pub leakage: f64,
    pub steps: Vec<StepReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fidelity: Option<f64>,
}

fn leakage(psi: &JointState) -> f64 {
    let gamma = gamma_indices();
    psi.amplitudes()
        .iter()
        .enumerate()
        .filter(|(i, _)| !gamma.contains(i))
        .map(|(_, a)| a.norm_sqr())
        .sum()
}

/// Applies the pulses one by one. Population entering the guard band stops
/// the run with a guard violation.
pub fn simulate(program: &PulseProgram) -> CliResult<SimulationReport> {
    let cfg = program.config()?;
    let pulses = program.pulse_specs()?;
    let mut psi = program.initial(&cfg)?;
    let target = program.target(&cfg)?;
    let mut steps = Vec::with_capacity(pulses.len());
    for (i, pulse) in pulses.iter().enumerate() {
        psi = apply(&pulse.unitary(&cfg)?, &psi)?;
        steps.push(StepReport {
            pulse: i,
            norm: psi.norm(),
            guard_occupation: psi.guard_occupation(),
            leakage: leakage(&psi),
        });
    }
    let fidelity = target.map(|t| fidelity_overlap(&t, &psi)).transpose()?;
    Ok(SimulationReport {
        dim: cfg.dim(),
        final_state: entries_from_state(&psi),
        norm: psi.norm(),
        guard_occupation: psi.guard_occupation(),
        leakage: leakage(&psi),
        steps,
        fidelity,
    })
}
