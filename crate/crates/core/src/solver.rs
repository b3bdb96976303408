// Copyright 2026 The iontrap Developers
// SPDX-License-Identifier: Apache-2.0

//! Gate parameters from the matching conditions.
//!
//! * Hadamard on control level `m < k`: a resonant pulse with
//!   `cos(Omega_mm theta_r) = 1/sqrt 2` at phase `pi/2`, then a sideband pulse
//!   with `cos(Omega_{m,m+k} theta_f) = -1`.
//! * CZ: a single order-`k` sideband pulse with `cos(Omega_{0,k} t) = 1` and
//!   `cos(Omega_{1,k+1} t) = -1`. Since
//!   `Omega_{1,k+1} / Omega_{0,k} = sqrt(k+1) - eta^2 / sqrt(k+1)`, the pair
//!   of conditions fixes `eta` through integers `(p, q)`:
//!   the ratio must equal `(q - 1/2) / p`, and then `t = 2 p pi / Omega_{0,k}`.
//! * CN: resonant(`phi`, `t1`), CZ, resonant(`phi`, `t3`) with
//!   `cos(Omega_00 (t1 + t3)) = 1` and `sin(Omega_11 (t3 - t1)) = -+1`,
//!   solved in closed form by integers `(p', q')`.
//!
//! The solver works in `f64`; its outputs are reported as `Omega t / pi`.

use std::cmp::Ordering;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gates::{
    gate_distance, ideal_cn, ideal_cz, ideal_hadamard, restrict_to_gamma, restrict_to_level,
};
use crate::hilbert::{TrapConfig, UnitaryMatrix};
use crate::pulse::{compose, PulseKind, PulseSpec};
use crate::rabi::rabi_frequency;

/// Rabi frequencies below this magnitude are treated as vanishing.
pub const VANISHING_RABI: f64 = 1e-12;
/// Gate-exactness threshold used when verifying solutions.
pub const EXACTNESS_TOL: f64 = 1e-9;

/// Durations and phase of the two-pulse Hadamard.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HParameters {
    pub theta_r: f64,
    pub theta_f: f64,
    /// Phase of the resonant pulse when it is applied first.
    pub phi_r: f64,
}

/// Pulse order for the Hadamard construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HOrder {
    /// Resonant pulse at `phi_r`, then the sideband pulse.
    ResonantFirst,
    /// Sideband pulse, then the resonant pulse at `phi_r + pi`.
    SidebandFirst,
}

/// Smallest positive durations (shifted by `branch` full periods) for the
/// Hadamard on control level `m`.
///
/// `Omega_mm` can be negative for large `eta^2 m`; the rotation sense is then
/// restored by moving the resonant phase to `3 pi / 2`.
pub fn solve_h_parameters(cfg: &TrapConfig<f64>, m: usize, branch: u32) -> Result<HParameters> {
    let k = cfg.sideband_order();
    if m >= k {
        return Err(Error::ControlIndexNotFrozen { m, k });
    }
    let carrier = rabi_frequency(cfg.eta(), m, m);
    if carrier.abs() < VANISHING_RABI {
        return Err(Error::VanishingRabiFrequency("carrier"));
    }
    let sideband = rabi_frequency(cfg.eta(), m, m + k);
    if sideband.abs() < VANISHING_RABI {
        return Err(Error::VanishingRabiFrequency("sideband"));
    }
    let n = f64::from(branch);
    Ok(HParameters {
        theta_r: (FRAC_PI_4 + TAU * n) / carrier.abs(),
        theta_f: (PI + TAU * n) / sideband.abs(),
        phi_r: if carrier > 0.0 { FRAC_PI_2 } else { 1.5 * PI },
    })
}

/// Pulse list realizing the Hadamard in the given order.
pub fn h_sequence(
    cfg: &TrapConfig<f64>,
    params: &HParameters,
    order: HOrder,
) -> Result<Vec<PulseSpec<f64>>> {
    let k = cfg.sideband_order();
    let sideband = PulseSpec::red_sideband(k, 0.0, params.theta_f)?;
    Ok(match order {
        HOrder::ResonantFirst => vec![PulseSpec::carrier(params.phi_r, params.theta_r)?, sideband],
        HOrder::SidebandFirst => vec![
            sideband,
            PulseSpec::carrier(params.phi_r + PI, params.theta_r)?,
        ],
    })
}

/// Entrywise distance of the `{|m,g>, |m,e>}` block from the Hadamard, and
/// the leakage out of that block.
pub fn verify_h(
    cfg: &TrapConfig<f64>,
    m: usize,
    params: &HParameters,
    order: HOrder,
) -> Result<GateCheck> {
    let u = compose(&h_sequence(cfg, params, order)?, cfg)?;
    let (block, leakage) = restrict_to_level(&u, m);
    Ok(GateCheck {
        distance: gate_distance(&block, &ideal_hadamard()),
        leakage,
        unitary: u,
    })
}

/// `eta` from `sqrt(k+1) - eta^2 / sqrt(k+1) = (q - 1/2) / p`.
pub fn solve_cz_eta(k: usize, p: u32, q: u32) -> Result<f64> {
    if k == 0 {
        return Err(Error::CarrierOrder);
    }
    if p == 0 || q == 0 {
        return Err(Error::NoValidEta { k, p, q });
    }
    let root = ((k + 1) as f64).sqrt();
    let ratio = (f64::from(q) - 0.5) / f64::from(p);
    let eta_sq = (k + 1) as f64 - root * ratio;
    if eta_sq > 0.0 && eta_sq < 1.0 {
        Ok(eta_sq.sqrt())
    } else {
        Err(Error::NoValidEta { k, p, q })
    }
}

/// `theta_2 = 2 p pi / Omega_{0,k}`. Fails unless `cfg.eta()` makes the
/// second condition hold, `cos(Omega_{1,k+1} theta_2) = -1` within `1e-9`.
pub fn cz_duration(cfg: &TrapConfig<f64>, p: u32) -> Result<f64> {
    let k = cfg.sideband_order();
    if k == 0 {
        return Err(Error::CarrierOrder);
    }
    let theta = TAU * f64::from(p) / rabi_frequency(cfg.eta(), 0, k);
    let residual = (rabi_frequency(cfg.eta(), 1, k + 1) * theta).cos() + 1.0;
    if residual.abs() > EXACTNESS_TOL {
        return Err(Error::InvalidConfig(format!(
            "eta = {} is not commensurate for p = {p}: cos residual {residual:e}",
            cfg.eta()
        )));
    }
    Ok(theta)
}

/// Common phase of the two resonant pulses in the CN sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CnPhase {
    HalfPi,
    ThreeHalvesPi,
}

impl CnPhase {
    pub fn radians(self) -> f64 {
        match self {
            CnPhase::HalfPi => FRAC_PI_2,
            CnPhase::ThreeHalvesPi => 1.5 * PI,
        }
    }

    /// Accepts any angle congruent to `pi/2` or `3 pi/2` mod `2 pi`.
    pub fn from_radians(phi: f64) -> Option<Self> {
        let r = phi.rem_euclid(TAU);
        if (r - FRAC_PI_2).abs() < 1e-12 {
            Some(CnPhase::HalfPi)
        } else if (r - 1.5 * PI).abs() < 1e-12 {
            Some(CnPhase::ThreeHalvesPi)
        } else {
            None
        }
    }
}

/// `(theta_1, theta_3)` for the CN resonant pulses:
/// `pi ((p'+1)/Omega_00 +- (q'+1/4)/Omega_11)`, the `+` on the first pulse
/// for `pi/2` and on the third for `3 pi/2`.
pub fn solve_cn_durations(
    cfg: &TrapConfig<f64>,
    phase: CnPhase,
    p_prime: u32,
    q_prime: u32,
) -> Result<(f64, f64)> {
    let ground = rabi_frequency(cfg.eta(), 0, 0);
    let excited = rabi_frequency(cfg.eta(), 1, 1);
    if excited.abs() < VANISHING_RABI {
        return Err(Error::VanishingRabiFrequency("carrier"));
    }
    let sum = (f64::from(p_prime) + 1.0) / ground;
    let diff = (f64::from(q_prime) + 0.25) / excited;
    let (t1, t3) = match phase {
        CnPhase::HalfPi => (PI * (sum + diff), PI * (sum - diff)),
        CnPhase::ThreeHalvesPi => (PI * (sum - diff), PI * (sum + diff)),
    };
    if t1 <= 0.0 || t3 <= 0.0 {
        return Err(Error::NoPhysicalSolution { p_prime, q_prime });
    }
    Ok((t1, t3))
}

/// The three CN pulses: resonant, order-`k` sideband, resonant.
pub fn cn_sequence(
    cfg: &TrapConfig<f64>,
    phase: CnPhase,
    theta1: f64,
    theta2: f64,
    theta3: f64,
) -> Result<[PulseSpec<f64>; 3]> {
    let phi = phase.radians();
    Ok([
        PulseSpec::carrier(phi, theta1)?,
        PulseSpec::new(PulseKind::RedSideband(cfg.sideband_order()), 0.0, theta2)?,
        PulseSpec::carrier(phi, theta3)?,
    ])
}

/// Result of comparing a composed unitary with its ideal target.
#[derive(Debug, Clone)]
pub struct GateCheck {
    pub distance: f64,
    pub leakage: f64,
    pub unitary: UnitaryMatrix<f64>,
}

impl GateCheck {
    pub fn is_exact(&self, tol: f64) -> bool {
        self.distance < tol && self.leakage < tol
    }
}

/// Full-space check of the CN sequence against the ideal CN.
pub fn verify_cn(
    cfg: &TrapConfig<f64>,
    phase: CnPhase,
    theta1: f64,
    theta2: f64,
    theta3: f64,
) -> Result<GateCheck> {
    let u = compose(&cn_sequence(cfg, phase, theta1, theta2, theta3)?, cfg)?;
    let rep = restrict_to_gamma(&u, cfg);
    Ok(GateCheck {
        distance: gate_distance(rep.block.matrix(), ideal_cn().matrix()),
        leakage: rep.leakage,
        unitary: u,
    })
}

/// Full-space check of a single sideband pulse against the ideal CZ.
pub fn verify_cz(cfg: &TrapConfig<f64>, phi: f64, theta2: f64) -> Result<GateCheck> {
    let pulse = PulseSpec::red_sideband(cfg.sideband_order(), phi, theta2)?;
    let u = pulse.unitary(cfg)?;
    let rep = restrict_to_gamma(&u, cfg);
    Ok(GateCheck {
        distance: gate_distance(rep.block.matrix(), ideal_cz().matrix()),
        leakage: rep.leakage,
        unitary: u,
    })
}

/// One complete CN parameter set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolutionRecord {
    pub k: usize,
    pub eta: f64,
    pub p: u32,
    pub q: u32,
    pub p_prime: u32,
    pub q_prime: u32,
    pub theta2_over_pi: f64,
    pub theta1_over_pi: f64,
    pub theta3_over_pi: f64,
    pub phi1: f64,
    pub phi3: f64,
    /// Entrywise distance of the composed CN from the ideal one.
    pub cn_error: f64,
    /// Amplitude leaving the computational subspace.
    pub leakage: f64,
}

impl SolutionRecord {
    /// Checks the algebraic invariants, returning a description of the first
    /// violation.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        if !(self.eta > 0.0 && self.eta < 1.0) {
            return Err(format!("eta {} outside (0, 1)", self.eta));
        }
        if !(self.theta1_over_pi > 0.0 && self.theta2_over_pi > 0.0 && self.theta3_over_pi > 0.0) {
            return Err("non-positive duration".into());
        }
        let root = ((self.k + 1) as f64).sqrt();
        let lhs = (f64::from(self.q) - 0.5) / f64::from(self.p);
        let rhs = root - self.eta * self.eta / root;
        if (lhs - rhs).abs() > 1e-12 {
            return Err(format!("commensurability residual {:e}", lhs - rhs));
        }
        let ground = rabi_frequency(self.eta, 0, 0);
        let excited = rabi_frequency(self.eta, 1, 1);
        let (t1, t3) = (self.theta1_over_pi * PI, self.theta3_over_pi * PI);
        let cos_sum = (ground * (t1 + t3)).cos();
        if (cos_sum - 1.0).abs() > EXACTNESS_TOL {
            return Err(format!("cos(W00 (t1 + t3)) = {cos_sum}"));
        }
        let sin_diff = (excited * (t3 - t1)).sin();
        if (sin_diff.abs() - 1.0).abs() > EXACTNESS_TOL {
            return Err(format!("sin(W11 (t3 - t1)) = {sin_diff}"));
        }
        if ((self.phi3 - self.phi1) / TAU).fract().abs() > 1e-12 {
            return Err("resonant phases differ by a non-multiple of 2 pi".into());
        }
        Ok(())
    }
}

/// Enumeration limits: `p <= max_p`, `p', q' <= max_pq_prime`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBounds {
    pub max_p: u32,
    pub max_pq_prime: u32,
}

/// Every `(p, q, eta)` with `p <= max_p` that gives `eta` in `(0, 1)`.
pub fn commensurate_pairs(k: usize, max_p: u32) -> Vec<(u32, u32, f64)> {
    if k == 0 {
        return Vec::new();
    }
    let root = ((k + 1) as f64).sqrt();
    let mut out = Vec::new();
    for p in 1..=max_p {
        // eta^2 in (0, 1) needs (q - 1/2)/p in (k/root, root)
        let q_max = (f64::from(p) * root + 0.5).ceil() as u32;
        for q in 1..=q_max {
            if let Ok(eta) = solve_cz_eta(k, p, q) {
                out.push((p, q, eta));
            }
        }
    }
    out
}

/// Searches `p <= max_p` for a pair whose exact `eta` lies within `tol` of
/// the supplied one.
pub fn find_commensurate(k: usize, eta: f64, max_p: u32, tol: f64) -> Option<(u32, u32, f64)> {
    commensurate_pairs(k, max_p)
        .into_iter()
        .filter(|&(_, _, e)| (e - eta).abs() <= tol)
        .min_by(|a, b| {
            (a.2 - eta)
                .abs()
                .partial_cmp(&(b.2 - eta).abs())
                .unwrap_or(Ordering::Equal)
                .then(a.0.cmp(&b.0))
        })
}

/// CN solutions at phase `pi/2`, sorted by `eta` descending, then
/// `theta_2` and `theta_1` ascending.
pub fn enumerate_solutions(k: usize, max_p: u32, max_pq_prime: u32) -> Vec<SolutionRecord> {
    enumerate_solutions_with(
        k,
        EnumerationBounds {
            max_p,
            max_pq_prime,
        },
        CnPhase::HalfPi,
    )
}

/// As [`enumerate_solutions`] for either resonant phase. Every record has been
/// rebuilt on the full space and verified as an exact CN.
pub fn enumerate_solutions_with(
    k: usize,
    bounds: EnumerationBounds,
    phase: CnPhase,
) -> Vec<SolutionRecord> {
    let mut records: Vec<SolutionRecord> = commensurate_pairs(k, bounds.max_p)
        .into_par_iter()
        .flat_map_iter(|(p, q, eta)| solutions_for_pair(k, p, q, eta, bounds.max_pq_prime, phase))
        .collect();
    records.sort_by(record_order);
    records
}

fn record_order(a: &SolutionRecord, b: &SolutionRecord) -> Ordering {
    b.eta
        .total_cmp(&a.eta)
        .then(a.theta2_over_pi.total_cmp(&b.theta2_over_pi))
        .then(a.theta1_over_pi.total_cmp(&b.theta1_over_pi))
        .then((a.p, a.q, a.p_prime, a.q_prime).cmp(&(b.p, b.q, b.p_prime, b.q_prime)))
}

fn solutions_for_pair(
    k: usize,
    p: u32,
    q: u32,
    eta: f64,
    bound: u32,
    phase: CnPhase,
) -> Vec<SolutionRecord> {
    let Ok(cfg) = TrapConfig::new(eta, k) else {
        return Vec::new();
    };
    let Ok(theta2) = cz_duration(&cfg, p) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for p_prime in 0..=bound {
        for q_prime in 0..=bound {
            let Ok((t1, t3)) = solve_cn_durations(&cfg, phase, p_prime, q_prime) else {
                continue;
            };
            let Ok(check) = verify_cn(&cfg, phase, t1, theta2, t3) else {
                continue;
            };
            let record = SolutionRecord {
                k,
                eta,
                p,
                q,
                p_prime,
                q_prime,
                theta2_over_pi: theta2 / PI,
                theta1_over_pi: t1 / PI,
                theta3_over_pi: t3 / PI,
                phi1: phase.radians(),
                phi3: phase.radians(),
                cn_error: check.distance,
                leakage: check.leakage,
            };
            if check.is_exact(EXACTNESS_TOL) && record.check_invariants().is_ok() {
                out.push(record);
            }
        }
    }
    out
}

/// Physical Rabi frequencies, in Hz (`Omega / 2 pi`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalRates {
    /// Base Rabi frequency of the resonant pulses.
    pub resonant_hz: f64,
    /// `eta Omega / 2 pi` of the sideband pulse; `None` uses the resonant
    /// base frequency for it as well.
    pub sideband_eta_hz: Option<f64>,
}

/// Durations in seconds of the three CN pulses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GateTiming {
    pub t1: f64,
    pub t2: f64,
    pub t3: f64,
}

impl GateTiming {
    pub fn total(&self) -> f64 {
        self.t1 + self.t2 + self.t3
    }
}

/// Converts a record's `Omega t / pi` columns into seconds.
pub fn gate_timing(record: &SolutionRecord, rates: &PhysicalRates) -> GateTiming {
    // t = theta / Omega = (theta/pi) / (2 f)
    let resonant = |over_pi: f64| over_pi / (2.0 * rates.resonant_hz);
    let sideband_base_hz = match rates.sideband_eta_hz {
        Some(f) => f / record.eta,
        None => rates.resonant_hz,
    };
    GateTiming {
        t1: resonant(record.theta1_over_pi),
        t2: record.theta2_over_pi / (2.0 * sideband_base_hz),
        t3: resonant(record.theta3_over_pi),
    }
}

/// Record with the shortest total CN duration, with its timing.
pub fn shortest_gate(
    records: &[SolutionRecord],
    rates: &PhysicalRates,
) -> Option<(SolutionRecord, GateTiming)> {
    records
        .iter()
        .map(|r| (*r, gate_timing(r, rates)))
        .min_by(|a, b| a.1.total().total_cmp(&b.1.total()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn h_parameters_reference() {
        let cfg = TrapConfig::new(0.96920, 1).unwrap();
        let h = solve_h_parameters(&cfg, 0, 0).unwrap();
        // frozen from the closed forms 0.25/W00 and 1/W01
        assert!((h.theta_r / PI - 0.799_736_596).abs() < 1e-8);
        assert!((h.theta_f / PI - 3.300_605_018).abs() < 1e-8);
        assert_eq!(h.phi_r, FRAC_PI_2);
        assert!((h.theta_f * rabi_frequency(0.96920, 0, 1) - PI).abs() < 1e-14);
        // published digits
        assert!(rel(h.theta_r / PI, 0.799832) < 5e-4);
        assert!(rel(h.theta_f / PI, 3.301124) < 5e-4);
    }

    #[test]
    fn h_branch_adds_full_periods() {
        let cfg = TrapConfig::new(0.4, 2).unwrap();
        let h0 = solve_h_parameters(&cfg, 1, 0).unwrap();
        let h2 = solve_h_parameters(&cfg, 1, 2).unwrap();
        let w = rabi_frequency(0.4, 1, 1);
        assert!(((h2.theta_r - h0.theta_r) * w - 4.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn h_requires_frozen_level_and_nonzero_carrier() {
        let cfg = TrapConfig::new(0.5, 1).unwrap();
        assert!(matches!(
            solve_h_parameters(&cfg, 1, 0),
            Err(Error::ControlIndexNotFrozen { .. })
        ));
        // L_2(eta^2) = 0 at eta^2 = 2 - sqrt 2
        let eta = (2.0 - 2f64.sqrt()).sqrt();
        let cfg = TrapConfig::new(eta, 3).unwrap();
        let err = solve_h_parameters(&cfg, 2, 0).unwrap_err();
        assert!(err.to_string().contains("carrier frequency vanishes"));
    }

    #[test]
    fn h_negative_carrier_flips_phase() {
        let cfg = TrapConfig::new(0.85, 3).unwrap();
        assert!(rabi_frequency(0.85, 2, 2) < 0.0);
        let h = solve_h_parameters(&cfg, 2, 0).unwrap();
        assert_eq!(h.phi_r, 1.5 * PI);
        for order in [HOrder::ResonantFirst, HOrder::SidebandFirst] {
            let check = verify_h(&cfg, 2, &h, order).unwrap();
            assert!(check.is_exact(1e-9), "{order:?}: {}", check.distance);
        }
    }

    #[test]
    fn cz_eta_reference() {
        let cases = [(1, 2, 2, 0.96920), (1, 8, 10, 0.56625), (2, 4, 6, 0.78641)];
        for (k, p, q, want) in cases {
            let eta = solve_cz_eta(k, p, q).unwrap();
            assert!(rel(eta, want) < 5e-5, "({k},{p},{q}) -> {eta}");
        }
        assert!(
            (solve_cz_eta(1, 2, 2).unwrap().powi(2) - (2.0 - 2f64.sqrt() * 0.75)).abs() < 1e-15
        );
        assert!(matches!(
            solve_cz_eta(1, 1, 1),
            Err(Error::NoValidEta { .. })
        ));
        assert!(solve_cz_eta(1, 1, 2).is_err());
        assert!(matches!(solve_cz_eta(0, 2, 2), Err(Error::CarrierOrder)));
    }

    #[test]
    fn cz_duration_reference() {
        let cases = [
            (1, 2, 2, 2, 13.202),
            (1, 2, 2, 6, 39.607),
            (2, 4, 6, 4, 49.846),
            (1, 14, 20, 14, 327.14),
        ];
        for (k, p0, q0, p, want) in cases {
            let cfg = TrapConfig::new(solve_cz_eta(k, p0, q0).unwrap(), k).unwrap();
            let theta = cz_duration(&cfg, p).unwrap();
            assert!(rel(theta / PI, want) < 5e-4, "k={k} p={p}: {}", theta / PI);
        }
        let cfg = TrapConfig::new(0.5, 1).unwrap();
        assert!(cz_duration(&cfg, 2).is_err());
    }

    #[test]
    fn cn_durations_reference() {
        let cases = [
            ((1, 2, 2), (4, 0), (29.179, 2.8108)),
            ((1, 8, 10), (0, 0), (3.2117, 1.4838)),
            ((1, 2, 3), (0, 0), (2.9777, 1.5148)),
        ];
        for ((k, p, q), (pp, qp), (w1, w3)) in cases {
            let cfg = TrapConfig::new(solve_cz_eta(k, p, q).unwrap(), k).unwrap();
            let (t1, t3) = solve_cn_durations(&cfg, CnPhase::HalfPi, pp, qp).unwrap();
            assert!(
                rel(t1 / PI, w1) < 5e-4 && rel(t3 / PI, w3) < 5e-4,
                "{} {}",
                t1 / PI,
                t3 / PI
            );
        }
        let cfg = TrapConfig::new(solve_cz_eta(1, 2, 2).unwrap(), 1).unwrap();
        assert!(matches!(
            solve_cn_durations(&cfg, CnPhase::HalfPi, 0, 0),
            Err(Error::NoPhysicalSolution { .. })
        ));
    }

    #[test]
    fn cn_branch_symmetry() {
        let cfg = TrapConfig::new(solve_cz_eta(1, 8, 10).unwrap(), 1).unwrap();
        for (pp, qp) in [(0, 0), (2, 1), (3, 0)] {
            let a = solve_cn_durations(&cfg, CnPhase::HalfPi, pp, qp).unwrap();
            let b = solve_cn_durations(&cfg, CnPhase::ThreeHalvesPi, pp, qp).unwrap();
            assert_eq!(a, (b.1, b.0));
            let theta2 = cz_duration(&cfg, 8).unwrap();
            assert!(verify_cn(&cfg, CnPhase::ThreeHalvesPi, b.0, theta2, b.1)
                .unwrap()
                .is_exact(1e-9));
        }
    }

    #[test]
    fn cn_phase_from_radians() {
        assert_eq!(
            CnPhase::from_radians(FRAC_PI_2 + 4.0 * PI),
            Some(CnPhase::HalfPi)
        );
        assert_eq!(
            CnPhase::from_radians(-FRAC_PI_2),
            Some(CnPhase::ThreeHalvesPi)
        );
        assert_eq!(CnPhase::from_radians(0.3), None);
    }

    #[test]
    fn enumeration_small_bounds() {
        assert!(enumerate_solutions(1, 1, 6).is_empty());
        assert!(enumerate_solutions(0, 10, 6).is_empty());
        let recs = enumerate_solutions(1, 2, 2);
        assert!(!recs.is_empty());
        for w in recs.windows(2) {
            assert_ne!(record_order(&w[0], &w[1]), Ordering::Greater);
        }
        for r in &recs {
            r.check_invariants().unwrap();
            assert!(r.cn_error < 1e-9 && r.leakage < 1e-9);
        }
    }

    #[test]
    fn commensurate_search() {
        let (p, q, eta) = find_commensurate(1, 0.96920, 20, 5e-5).unwrap();
        assert_eq!((p, q), (2, 2));
        assert!((eta - 0.969196).abs() < 1e-6);
        assert!(find_commensurate(1, 0.5, 20, 5e-5).is_none());
    }

    #[test]
    fn timing_conversion() {
        let r = enumerate_solutions(1, 2, 4)[0];
        let rates = PhysicalRates {
            resonant_hz: 140e3,
            sideband_eta_hz: Some(30e3),
        };
        let t = gate_timing(&r, &rates);
        assert!((t.t1 - r.theta1_over_pi / 280e3).abs() < 1e-18);
        assert!((t.t2 - r.theta2_over_pi * r.eta / 60e3).abs() < 1e-15);
    }
}
