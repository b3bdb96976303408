// Copyright 2026 The iontrap Developers
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::{PI, TAU};

use iontrap_core::gates::{gate_distance, ideal_cz, restrict_to_gamma};
use iontrap_core::pulse::{carrier_unitary, sideband_unitary};
use iontrap_core::solver::{
    commensurate_pairs, cz_duration, solve_h_parameters, verify_cz, verify_h, HOrder,
};
use iontrap_core::{
    apply, basis_state, compose, idx, rabi_laguerre, rabi_sum, split_idx, Complex, JointState,
    Level, PulseSpec, RabiQuery, TrapConfig,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn level() -> impl Strategy<Value = Level> {
    prop_oneof![Just(Level::Ground), Just(Level::Excited)]
}

fn random_state(seed: u64, cfg: &TrapConfig, max_m: usize) -> JointState {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut amps = vec![Complex::new(0.0, 0.0); cfg.dim()];
    for a in amps.iter_mut().take(2 * (max_m + 1)) {
        *a = Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    }
    let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    amps.iter_mut().for_each(|a| *a /= norm);
    JointState::from_amplitudes(cfg, amps).unwrap()
}

proptest! {
    #[test]
    fn index_round_trip(m in 0usize..500, s in level()) {
        prop_assert_eq!(split_idx(idx(m, s)), (m, s));
    }

    #[test]
    fn pulses_are_unitary(eta in 0.01f64..0.99, k in 0usize..5, phi in 0.0..TAU, theta in 0.0f64..200.0) {
        let cfg = TrapConfig::new(eta, k).unwrap();
        prop_assert!(sideband_unitary(&cfg, phi, theta).unitarity_deviation() < 1e-12);
        prop_assert!(carrier_unitary(&cfg, phi, theta).unitarity_deviation() < 1e-12);
    }

    #[test]
    fn apply_preserves_norm(
        eta in 0.05f64..0.95,
        k in 1usize..4,
        phi in 0.0..TAU,
        theta in 0.0f64..50.0,
        seed in any::<u64>(),
    ) {
        let cfg = TrapConfig::new(eta, k).unwrap();
        let psi = random_state(seed, &cfg, cfg.safe_max() - k);
        let u = sideband_unitary(&cfg, phi, theta).then_after(&carrier_unitary(&cfg, phi, theta)).unwrap();
        let out = apply(&u, &psi).unwrap();
        prop_assert!((out.norm() - 1.0).abs() < 1e-12);
    }

    // The alternating sum cancels badly once eta^2 m grows well past 10, so
    // the comparison stays in the regime the gates use.
    #[test]
    fn sum_and_laguerre_agree(eta in 0.0f64..1.0, k in 0usize..8, m in 0usize..30) {
        let q = RabiQuery::new(eta, k, m).unwrap();
        let (s, l) = (rabi_sum(&q), rabi_laguerre(&q));
        prop_assert!((s - l).abs() <= 1e-11 * s.abs().max(l.abs()).max(1e-300), "{s} vs {l}");
    }

    #[test]
    fn opposite_phase_undoes_pulse(eta in 0.05f64..0.95, k in 0usize..4, phi in 0.0..TAU, theta in 0.0f64..30.0) {
        let cfg = TrapConfig::new(eta, k).unwrap();
        let kind = if k == 0 { iontrap_core::PulseKind::Carrier } else { iontrap_core::PulseKind::RedSideband(k) };
        let forward = PulseSpec::new(kind, phi, theta).unwrap();
        let back = PulseSpec::new(kind, phi + PI, theta).unwrap();
        let u = compose(&[forward, back], &cfg).unwrap();
        let id = iontrap_core::UnitaryMatrix::identity(cfg.dim());
        prop_assert!(u.matrix().max_abs_diff(id.matrix()) < 1e-12);
    }

    #[test]
    fn hadamard_exact_for_any_eta(eta in 0.05f64..0.95, k in 1usize..4, branch in 0u32..3) {
        let cfg = TrapConfig::new(eta, k).unwrap();
        let params = solve_h_parameters(&cfg, 0, branch).unwrap();
        for order in [HOrder::ResonantFirst, HOrder::SidebandFirst] {
            let check = verify_h(&cfg, 0, &params, order).unwrap();
            prop_assert!(check.is_exact(1e-9), "{order:?}: {}", check.distance);
        }
    }
}

#[test]
fn every_commensurate_pair_gives_cz() {
    for k in 1..=3 {
        for (p, _, eta) in commensurate_pairs(k, 16) {
            let cfg = TrapConfig::new(eta, k).unwrap();
            let check = verify_cz(&cfg, 0.0, cz_duration(&cfg, p).unwrap()).unwrap();
            let block = restrict_to_gamma(&check.unitary, &cfg).block;
            assert!(gate_distance(block.matrix(), ideal_cz().matrix()) < 1e-9);
        }
    }
}

#[test]
fn frozen_control_levels_survive_long_sequences() {
    let cfg = TrapConfig::new(0.42, 3).unwrap();
    let pulses: Vec<PulseSpec> = (0..40)
        .map(|i| PulseSpec::red_sideband(3, 0.1 * f64::from(i), 1.0 + f64::from(i)).unwrap())
        .collect();
    let u = compose(&pulses, &cfg).unwrap();
    for m in 0..3 {
        let out = apply(&u, &basis_state(m, Level::Ground, &cfg).unwrap()).unwrap();
        assert!((out.amplitude(m, Level::Ground) - Complex::new(1.0, 0.0)).norm() < 1e-14);
    }
}
