// Copyright 2026 The iontrap Developers
// SPDX-License-Identifier: Apache-2.0

//! The pulse-program file format.
//!
//! Angles are given in units of pi. A program looks like
//!
//! ```json
//! {
//!   "eta": 0.5, "truncation": 32, "guard": 4,
//!   "pulses": [{"type": "sideband", "k": 1, "phase_pi": 0.0, "theta_pi": 3.2}],
//!   "initial_state": [{"m": 0, "level": "e", "re": 1.0, "im": 0.0}]
//! }
//! ```
//!
//! Without `initial_state` the ion starts in `|0, g>`.

use std::f64::consts::PI;

use iontrap_core::{Complex, JointState, Level, PulseKind, PulseSpec, TrapConfig};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

/// Amplitudes must have unit norm within this tolerance.
pub const NORM_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PulseProgram {
    pub eta: f64,
    pub truncation: usize,
    pub guard: usize,
    pub pulses: Vec<ProgramPulse>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initial_state: Option<Vec<AmplitudeEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_state: Option<Vec<AmplitudeEntry>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PulseType {
    Carrier,
    Sideband,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProgramPulse {
    #[serde(rename = "type")]
    pub kind: PulseType,
    /// Sideband order; must be 0 (or omitted) for a carrier.
    #[serde(default)]
    pub k: usize,
    pub phase_pi: f64,
    pub theta_pi: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LevelName {
    #[serde(rename = "g")]
    Ground,
    #[serde(rename = "e")]
    Excited,
}

impl From<LevelName> for Level {
    fn from(l: LevelName) -> Self {
        match l {
            LevelName::Ground => Level::Ground,
            LevelName::Excited => Level::Excited,
        }
    }
}

impl From<Level> for LevelName {
    fn from(l: Level) -> Self {
        match l {
            Level::Ground => LevelName::Ground,
            Level::Excited => LevelName::Excited,
        }
    }
}

/// One amplitude `(re + i im) |m, level>`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AmplitudeEntry {
    pub m: usize,
    pub level: LevelName,
    pub re: f64,
    pub im: f64,
}

impl PulseProgram {
    pub fn from_json(text: &str) -> CliResult<Self> {
        serde_json::from_str(text)
            .map_err(|e| CliError::Input(format!("cannot parse pulse program: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("program serializes")
    }

    /// Highest sideband order among the pulses.
    pub fn max_order(&self) -> usize {
        self.pulses
            .iter()
            .filter(|p| p.kind == PulseType::Sideband)
            .map(|p| p.k)
            .max()
            .unwrap_or(0)
    }

    pub fn config(&self) -> CliResult<TrapConfig> {
        Ok(TrapConfig::with_truncation(
            self.eta,
            self.max_order(),
            self.truncation,
            self.guard,
        )?)
    }

    pub fn pulse_specs(&self) -> CliResult<Vec<PulseSpec>> {
        self.pulses
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let kind = match (p.kind, p.k) {
                    (PulseType::Carrier, 0) => PulseKind::Carrier,
                    (PulseType::Carrier, k) => {
                        return Err(CliError::Input(format!("pulse {i}: carrier with k = {k}")));
                    }
                    (PulseType::Sideband, 0) => {
                        return Err(CliError::Input(format!("pulse {i}: sideband needs k >= 1")));
                    }
                    (PulseType::Sideband, k) => PulseKind::RedSideband(k),
                };
                PulseSpec::new(kind, p.phase_pi * PI, p.theta_pi * PI)
                    .map_err(|e| CliError::Input(format!("pulse {i}: {e}")))
            })
            .collect()
    }

    /// Initial state; `|0, g>` when none is given.
    pub fn initial(&self, cfg: &TrapConfig) -> CliResult<JointState> {
        match &self.initial_state {
            Some(entries) => state_from_entries(entries, cfg),
            None => Ok(iontrap_core::basis_state(0, Level::Ground, cfg)?),
        }
    }

    pub fn target(&self, cfg: &TrapConfig) -> CliResult<Option<JointState>> {
        self.target_state
            .as_deref()
            .map(|entries| state_from_entries(entries, cfg))
            .transpose()
    }
}

/// Builds a normalized state. Entries must be distinct, inside the
/// truncation and of unit norm within [`NORM_TOL`]; the residual is divided
/// out.
pub fn state_from_entries(entries: &[AmplitudeEntry], cfg: &TrapConfig) -> CliResult<JointState> {
    let mut amps = vec![Complex::new(0.0, 0.0); cfg.dim()];
    let mut seen = vec![false; cfg.dim()];
    for e in entries {
        if e.m > cfg.truncation() {
            return Err(CliError::Input(format!(
                "amplitude at m = {} exceeds the truncation {}",
                e.m,
                cfg.truncation()
            )));
        }
        let i = iontrap_core::idx(e.m, e.level.into());
        if std::mem::replace(&mut seen[i], true) {
            return Err(CliError::Input(format!(
                "duplicate amplitude for m = {}",
                e.m
            )));
        }
        amps[i] = Complex::new(e.re, e.im);
    }
    let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    if norm.is_nan() || (norm - 1.0).abs() > NORM_TOL {
        return Err(CliError::Input(format!(
            "state norm {norm} differs from 1 by more than {NORM_TOL:e}"
        )));
    }
    for a in &mut amps {
        *a /= norm;
    }
    Ok(JointState::from_amplitudes(cfg, amps)?)
}

/// Nonzero amplitudes of `psi` as file entries.
pub fn entries_from_state(psi: &JointState) -> Vec<AmplitudeEntry> {
    psi.amplitudes()
        .iter()
        .enumerate()
        .filter(|(_, a)| a.norm_sqr() > 0.0)
        .map(|(i, a)| {
            let (m, level) = iontrap_core::split_idx(i);
            AmplitudeEntry {
                m,
                level: level.into(),
                re: a.re,
                im: a.im,
            }
        })
        .collect()
}
