// Copyright 2026 The iontrap Developers
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Errors raised by the simulator and the parameter solver.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid trap configuration: {0}")]
    InvalidConfig(String),

    #[error("Fock index exceeds truncation: m = {m} > N = {n_max}")]
    FockIndexOutOfRange { m: usize, n_max: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("guard-band occupation {occupation:e} exceeds leak tolerance {tol:e}")]
    GuardBandLeak { occupation: f64, tol: f64 },

    #[error("matrix is not unitary: max |U^dag U - I| = {deviation:e}")]
    NotUnitary { deviation: f64 },

    #[error("state is not normalized: norm = {norm}")]
    NotNormalized { norm: f64 },

    #[error("oracle truncation too small: enlarging it changed the element by {change:e}")]
    TruncationTooSmall { change: f64 },

    #[error("{0} frequency vanishes")]
    VanishingRabiFrequency(&'static str),

    #[error("control Fock index {m} must be below the sideband order {k}")]
    ControlIndexNotFrozen { m: usize, k: usize },

    #[error("no valid Lamb-Dicke parameter for (k, p, q) = ({k}, {p}, {q})")]
    NoValidEta { k: usize, p: u32, q: u32 },

    #[error("no physical solution for (p', q') = ({p_prime}, {q_prime}): non-positive duration")]
    NoPhysicalSolution { p_prime: u32, q_prime: u32 },

    #[error("CZ construction requires sideband order k >= 1")]
    CarrierOrder,

    #[error("pulse sequence is empty")]
    EmptySequence,

    #[error("invalid pulse: {0}")]
    InvalidPulse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
