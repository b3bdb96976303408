// Copyright 2026 The iontrap Developers
// SPDX-License-Identifier: Apache-2.0

//! `iontrap verify`: build a gate from its solved parameters and compare it
//! with the ideal matrix.

use std::f64::consts::PI;
use std::fmt::Write as _;

use iontrap_core::solver::{
    find_commensurate, solve_h_parameters, verify_cn, verify_cz, verify_h, HOrder,
};
use iontrap_core::{cz_duration, solve_cn_durations, solve_cz_eta, CnPhase, Matrix, TrapConfig};
use serde::Serialize;

use crate::error::{CliError, CliResult};

/// Exit status 0 requires an entrywise distance below this.
pub const DISTANCE_TOL: f64 = 1e-8;

/// A user-supplied `eta` is matched to an exact commensurate value within
/// this absolute tolerance (five published figures).
pub const ETA_SNAP_TOL: f64 = 5e-5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GateKind {
    H,
    Cz,
    Cn,
}

/// Where `eta` comes from: given directly, or fixed by integers `(p, q)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EtaSource {
    Value(f64),
    Pair { p: u32, q: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyRequest {
    pub gate: GateKind,
    pub k: usize,
    pub eta: EtaSource,
    pub max_p: u32,
    pub p_prime: u32,
    pub q_prime: u32,
    pub phase: CnPhase,
    /// Control level of the Hadamard.
    pub m: usize,
    /// Extra full periods added to the Hadamard durations.
    pub branch: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub gate: &'static str,
    pub k: usize,
    pub eta: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u32>,
    /// Pulse list as `(kind, phase / pi, theta / pi)`.
    pub pulses: Vec<(String, f64, f64)>,
    /// Restricted block as rows of `[re, im]`.
    pub matrix: Vec<Vec<[f64; 2]>>,
    pub distance: f64,
    pub leakage: f64,
    pub exact: bool,
}

fn rows(m: &Matrix) -> Vec<Vec<[f64; 2]>> {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| [m[(i, j)].re, m[(i, j)].im])
                .collect()
        })
        .collect()
}

/// `eta` and the pair behind it. CZ and CN need an exact commensurate
/// value; the Hadamard accepts any `eta`.
fn resolve_eta(req: &VerifyRequest, need_pair: bool) -> CliResult<(f64, Option<(u32, u32)>)> {
    match req.eta {
        EtaSource::Pair { p, q } => Ok((solve_cz_eta(req.k, p, q)?, Some((p, q)))),
        EtaSource::Value(eta) if !need_pair => Ok((eta, None)),
        EtaSource::Value(eta) => match find_commensurate(req.k, eta, req.max_p, ETA_SNAP_TOL) {
            Some((p, q, exact)) => Ok((exact, Some((p, q)))),
            None => Err(CliError::NoSolution(format!(
                "eta = {eta} does not satisfy the commensurability condition for any (p, q) with p <= {}",
                req.max_p
            ))),
        },
    }
}

fn describe(pulses: &[iontrap_core::PulseSpec]) -> Vec<(String, f64, f64)> {
    pulses
        .iter()
        .map(|p| {
            let kind = match p.kind() {
                iontrap_core::PulseKind::Carrier => "carrier".to_owned(),
                iontrap_core::PulseKind::RedSideband(k) => format!("sideband k={k}"),
            };
            (kind, p.phase() / PI, p.theta() / PI)
        })
        .collect()
}

pub fn verify(req: &VerifyRequest) -> CliResult<VerifyReport> {
    let need_pair = req.gate != GateKind::H;
    if need_pair && req.k == 0 {
        return Err(iontrap_core::Error::CarrierOrder.into());
    }
    let (eta, pair) = resolve_eta(req, need_pair)?;
    let cfg = TrapConfig::new(eta, req.k)?;
    let (name, check, pulses) = match req.gate {
        GateKind::H => {
            let params = solve_h_parameters(&cfg, req.m, req.branch)?;
            // report the worse of the two orders
            let a = verify_h(&cfg, req.m, &params, HOrder::ResonantFirst)?;
            let b = verify_h(&cfg, req.m, &params, HOrder::SidebandFirst)?;
            let seq = iontrap_core::solver::h_sequence(&cfg, &params, HOrder::ResonantFirst)?;
            let (block_src, other) = if a.distance >= b.distance {
                (a, b)
            } else {
                (b, a)
            };
            let (block, leak) = iontrap_core::gates::restrict_to_level(&block_src.unitary, req.m);
            let distance = block_src.distance.max(other.distance);
            let leakage = leak.max(other.leakage);
            ("h", (block, distance, leakage), describe(&seq))
        }
        GateKind::Cz => {
            let (p, _) = pair.expect("cz has a pair");
            let theta2 = cz_duration(&cfg, p)?;
            let check = verify_cz(&cfg, 0.0, theta2)?;
            let seq = [iontrap_core::PulseSpec::red_sideband(req.k, 0.0, theta2)?];
            let block = iontrap_core::restrict_to_gamma(&check.unitary, &cfg)
                .block
                .matrix()
                .clone();
            ("cz", (block, check.distance, check.leakage), describe(&seq))
        }
        GateKind::Cn => {
            let (p, _) = pair.expect("cn has a pair");
            let theta2 = cz_duration(&cfg, p)?;
            let (t1, t3) = solve_cn_durations(&cfg, req.phase, req.p_prime, req.q_prime)?;
            let check = verify_cn(&cfg, req.phase, t1, theta2, t3)?;
            let seq = iontrap_core::solver::cn_sequence(&cfg, req.phase, t1, theta2, t3)?;
            let block = iontrap_core::restrict_to_gamma(&check.unitary, &cfg)
                .block
                .matrix()
                .clone();
            ("cn", (block, check.distance, check.leakage), describe(&seq))
        }
    };
    let (block, distance, leakage) = check;
    Ok(VerifyReport {
        gate: name,
        k: req.k,
        eta,
        p: pair.map(|x| x.0),
        q: pair.map(|x| x.1),
        pulses,
        matrix: rows(&block),
        distance,
        leakage,
        exact: distance < DISTANCE_TOL,
    })
}

/// Plain-text rendering of a report.
pub fn render_text(r: &VerifyReport) -> String {
    let mut s = String::new();
    let _ = write!(s, "gate {} k={} eta={:.10}", r.gate, r.k, r.eta);
    if let (Some(p), Some(q)) = (r.p, r.q) {
        let _ = write!(s, " (p={p}, q={q})");
    }
    s.push('\n');
    for (kind, phase, theta) in &r.pulses {
        let _ = writeln!(
            s,
            "  pulse {kind:<12} phase/pi={phase:.6} theta/pi={theta:.8}"
        );
    }
    s.push_str("restricted block:\n");
    for row in &r.matrix {
        let cells: Vec<String> = row
            .iter()
            .map(|[re, im]| format!("{re:+.9}{im:+.9}i"))
            .collect();
        let _ = writeln!(s, "  {}", cells.join("  "));
    }
    let _ = writeln!(s, "distance to ideal: {:.3e}", r.distance);
    let _ = writeln!(s, "leakage:           {:.3e}", r.leakage);
    let _ = writeln!(s, "exact:             {}", r.exact);
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base(gate: GateKind, eta: EtaSource) -> VerifyRequest {
        VerifyRequest {
            gate,
            k: 1,
            eta,
            max_p: 20,
            p_prime: 4,
            q_prime: 0,
            phase: CnPhase::HalfPi,
            m: 0,
            branch: 0,
        }
    }

    #[test]
    fn snaps_published_eta() {
        let r = verify(&base(GateKind::Cz, EtaSource::Value(0.96920))).unwrap();
        assert_eq!((r.p, r.q), (Some(2), Some(2)));
        assert!(r.exact);
    }

    #[test]
    fn generic_eta_has_no_cz() {
        let err = verify(&base(GateKind::Cz, EtaSource::Value(0.5))).unwrap_err();
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn hadamard_for_generic_eta() {
        let r = verify(&base(GateKind::H, EtaSource::Value(0.3))).unwrap();
        assert!(r.exact, "distance {}", r.distance);
        assert_eq!(r.matrix.len(), 2);
    }

    #[test]
    fn cn_from_pair() {
        let r = verify(&base(GateKind::Cn, EtaSource::Pair { p: 2, q: 2 })).unwrap();
        assert!(r.distance < 1e-9);
        assert_eq!(r.pulses.len(), 3);
        assert!(render_text(&r).contains("exact:             true"));
    }
}
