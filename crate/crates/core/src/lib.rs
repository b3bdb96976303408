// Copyright 2026 The iontrap Developers
// SPDX-License-Identifier: Apache-2.0

//! Simulator and parameter solver for quantum logic on a single trapped
//! two-level ion beyond the Lamb-Dicke limit.
//!
//! The control qubit is stored in the motional Fock states `|0>, |1>` and the
//! target qubit in the internal levels `|g>, |e>`. Two elementary operations
//! are available: a resonant (carrier) rotation that never changes the Fock
//! index, and a `k`-th red-sideband pulse that couples `|m + k, g>` with
//! `|m, e>`. Suitable compositions realize the Hadamard, CZ and CN gates
//! exactly; [`solver`] finds the Lamb-Dicke parameters and durations.
//!
//! The numerical modules are generic over [`Real`] (`f32` or `f64`); the
//! aliases below fix the scalar to `f64`.

pub mod error;
pub mod gates;
pub mod hilbert;
pub mod linalg;
pub mod pulse;
pub mod rabi;
pub mod reference;
pub mod scalar;
pub mod solver;

pub use error::{Error, Result};
pub use gates::{
    gate_distance, ideal_cn, ideal_cz, ideal_hadamard, phase_insensitive_distance,
    reduced_cn_phase_gate, restrict_to_gamma,
};
pub use hilbert::{apply, basis_state, fidelity_overlap, idx, split_idx, Level};
pub use pulse::{
    carrier_unitary, compose, hamiltonian_oracle_unitary, sideband_unitary, PulseKind,
};
pub use rabi::{laguerre_assoc, rabi_frequency, rabi_laguerre, rabi_oracle, rabi_sum};
pub use scalar::Real;
pub use solver::{
    cz_duration, enumerate_solutions, solve_cn_durations, solve_cz_eta, solve_h_parameters,
    CnPhase, SolutionRecord,
};

pub type TrapConfig = hilbert::TrapConfig<f64>;
pub type JointState = hilbert::JointState<f64>;
pub type UnitaryMatrix = hilbert::UnitaryMatrix<f64>;
pub type PulseSpec = pulse::PulseSpec<f64>;
pub type RabiQuery = rabi::RabiQuery<f64>;
pub type ComputationalGate = gates::ComputationalGate<f64>;
pub type RestrictionReport = gates::RestrictionReport<f64>;
pub type Matrix = linalg::CMatrix<f64>;
pub type Complex = num_complex::Complex<f64>;
