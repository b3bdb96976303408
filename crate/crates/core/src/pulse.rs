// Copyright 2026 The iontrap Developers
// SPDX-License-Identifier: Apache-2.0

//! Laser pulses as unitaries on the truncated joint space.
//!
//! A red-sideband pulse of order `k` couples only the pairs
//! `(|m + k, g>, |m, e>)`; within a pair it rotates at `Omega_{m, m+k}`:
//!
//! ```text
//! |m, e>     -> cos(W t) |m, e>     - (-i)^(k-1) e^{+i phi} sin(W t) |m+k, g>
//! |m+k, g>   -> cos(W t) |m+k, g>   +   i^(k-1)  e^{-i phi} sin(W t) |m, e>
//! ```
//!
//! and leaves `|m, g>` with `m < k` untouched. The resonant carrier is the
//! `k = 0` instance of the same rule and never changes the Fock index.
//!
//! The analytic blockwise construction is the production path;
//! [`hamiltonian_oracle_unitary`] exponentiates the rotating-wave
//! Hamiltonian built from ladder operators and exists to check it.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hilbert::{idx, split_idx, Level, TrapConfig, UnitaryMatrix};
use crate::linalg::{expm, CMatrix};
use crate::rabi::rabi_frequency;
use crate::scalar::{c, c_re, cis, i_pow, Real, C};

/// Which transition the laser addresses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PulseKind {
    /// Resonant with the atomic transition.
    Carrier,
    /// Tuned to the `k`-th red motional sideband.
    RedSideband(usize),
}

impl PulseKind {
    /// Sideband order; zero for the carrier.
    pub fn order(self) -> usize {
        match self {
            PulseKind::Carrier => 0,
            PulseKind::RedSideband(k) => k,
        }
    }
}

/// One laser pulse: transition, initial phase (radians) and dimensionless
/// duration `theta = Omega t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PulseSpec<T> {
    kind: PulseKind,
    phase: T,
    theta: T,
}

impl<T: Real> PulseSpec<T> {
    /// The phase is stored reduced to `[0, 2 pi)`.
    pub fn new(kind: PulseKind, phase: T, theta: T) -> Result<Self> {
        if !theta.is_finite() || theta < T::zero() {
            return Err(Error::InvalidPulse(format!(
                "duration must be finite and non-negative, got {theta}"
            )));
        }
        if !phase.is_finite() {
            return Err(Error::InvalidPulse(format!(
                "phase must be finite, got {phase}"
            )));
        }
        let two_pi = T::TAU();
        let mut phase = phase % two_pi;
        if phase < T::zero() {
            phase = phase + two_pi;
        }
        if phase >= two_pi {
            phase = T::zero();
        }
        Ok(Self { kind, phase, theta })
    }

    pub fn carrier(phase: T, theta: T) -> Result<Self> {
        Self::new(PulseKind::Carrier, phase, theta)
    }

    pub fn red_sideband(k: usize, phase: T, theta: T) -> Result<Self> {
        Self::new(PulseKind::RedSideband(k), phase, theta)
    }

    pub fn kind(&self) -> PulseKind {
        self.kind
    }

    pub fn phase(&self) -> T {
        self.phase
    }

    pub fn theta(&self) -> T {
        self.theta
    }

    /// Unitary of this pulse on `cfg`'s space. The pulse's own sideband order
    /// is used; it must fit inside the guard band.
    pub fn unitary(&self, cfg: &TrapConfig<T>) -> Result<UnitaryMatrix<T>> {
        let k = self.kind.order();
        if k > cfg.guard() {
            return Err(Error::InvalidPulse(format!(
                "sideband order {k} exceeds the guard band {}",
                cfg.guard()
            )));
        }
        Ok(pair_rotation(cfg, k, self.phase, self.theta))
    }
}

/// Resonant rotation: block-diagonal over `m`, each `{|m,g>, |m,e>}` block
/// being `[[cos, -i e^{i phi} sin], [-i e^{-i phi} sin, cos]]` at
/// `Omega_{m,m} theta`.
pub fn carrier_unitary<T: Real>(cfg: &TrapConfig<T>, phi: T, theta: T) -> UnitaryMatrix<T> {
    pair_rotation(cfg, 0, phi, theta)
}

/// Red-sideband pulse of order `cfg.sideband_order()`.
pub fn sideband_unitary<T: Real>(cfg: &TrapConfig<T>, phi: T, theta: T) -> UnitaryMatrix<T> {
    pair_rotation(cfg, cfg.sideband_order(), phi, theta)
}

/// Blockwise closed form for an order-`k` pulse. Excited states whose
/// partner `|m + k, g>` lies above the truncation are left fixed; they sit in
/// the guard band, where any population is flagged by `apply`.
fn pair_rotation<T: Real>(cfg: &TrapConfig<T>, k: usize, phi: T, theta: T) -> UnitaryMatrix<T> {
    let n_max = cfg.truncation();
    let mut u = CMatrix::identity(cfg.dim());
    // (-i)^(k-1) e^{i phi} and i^(k-1) e^{-i phi}
    let down = i_pow::<T>(-(k as i64 - 1)) * cis(phi);
    let up = i_pow::<T>(k as i64 - 1) * cis(-phi);
    for m in 0..=n_max.saturating_sub(k) {
        if m + k > n_max {
            break;
        }
        let angle = rabi_frequency(cfg.eta(), m, m + k) * theta;
        let (s, co) = angle.sin_cos();
        let e = idx(m, Level::Excited);
        let g = idx(m + k, Level::Ground);
        u[(e, e)] = c_re(co);
        u[(g, g)] = c_re(co);
        u[(g, e)] = -down * s;
        u[(e, g)] = up * s;
    }
    UnitaryMatrix::from_matrix_unchecked(u)
}

/// Rotating-wave Hamiltonian of an order-`k` pulse in units of the base Rabi
/// frequency, assembled from truncated ladder operators:
///
/// `H = (1/2) e^{-eta^2/2 - i phi} sigma_+ (i eta)^k
///      [sum_n (i eta)^{2n} a^dag^n a^n / (n! (n+k)!)] a^k + h.c.`
pub fn hamiltonian_matrix<T: Real>(cfg: &TrapConfig<T>, k: usize, phi: T) -> CMatrix<T> {
    let levels = cfg.truncation() + 1;
    let eta = cfg.eta();
    let x = eta * eta;
    let lower = CMatrix::from_fn(levels, levels, |i, j| {
        if j == i + 1 {
            c_re(T::from_count(j).sqrt())
        } else {
            C::zero()
        }
    });
    let raise = lower.adjoint();

    // sum_n (-x)^n a^dag^n a^n / (n! (n+k)!)
    let mut coeff = (1..=k).fold(T::one(), |acc, j| acc / T::from_count(j));
    let mut normal_power = CMatrix::identity(levels);
    let mut series = CMatrix::zeros(levels, levels);
    for n in 0..levels {
        if n > 0 {
            normal_power = raise.matmul(&normal_power).matmul(&lower);
            coeff = -coeff * x / (T::from_count(n) * T::from_count(n + k));
        }
        series.add_scaled(c_re(coeff), &normal_power);
    }
    let mut lower_k = CMatrix::identity(levels);
    for _ in 0..k {
        lower_k = lower_k.matmul(&lower);
    }
    let prefactor = i_pow::<T>(k as i64)
        * c_re(eta.powi(k as i32) * T::lit(0.5) * (-x / T::lit(2.0)).exp())
        * cis(-phi);
    let motional = series.matmul(&lower_k).scale(prefactor);

    let mut h = CMatrix::zeros(cfg.dim(), cfg.dim());
    for mp in 0..levels {
        for m in 0..levels {
            let v = motional[(mp, m)];
            if !v.is_zero() {
                // sigma_+ |g> = |e>
                h[(idx(mp, Level::Excited), idx(m, Level::Ground))] = v;
                h[(idx(m, Level::Ground), idx(mp, Level::Excited))] = v.conj();
            }
        }
    }
    h
}

/// `exp(-i H theta)` of the sideband Hamiltonian for `cfg.sideband_order()`.
pub fn hamiltonian_oracle_unitary<T: Real>(
    cfg: &TrapConfig<T>,
    phi: T,
    theta: T,
) -> UnitaryMatrix<T> {
    let h = hamiltonian_matrix(cfg, cfg.sideband_order(), phi);
    UnitaryMatrix::from_matrix_unchecked(expm(&h.scale(c(T::zero(), -theta))))
}

/// Largest entry deviation between two unitaries over the rows and columns
/// whose Fock index lies outside the guard band.
pub fn deviation_below_guard<T: Real>(
    a: &UnitaryMatrix<T>,
    b: &UnitaryMatrix<T>,
    cfg: &TrapConfig<T>,
) -> T {
    let keep: Vec<usize> = (0..cfg.dim())
        .filter(|&i| split_idx(i).0 <= cfg.safe_max())
        .collect();
    a.matrix()
        .select(&keep, &keep)
        .max_abs_diff(&b.matrix().select(&keep, &keep))
}

/// Product `U_n ... U_1` of a pulse sequence; the first pulse acts first.
pub fn compose<T: Real>(pulses: &[PulseSpec<T>], cfg: &TrapConfig<T>) -> Result<UnitaryMatrix<T>> {
    let (first, rest) = pulses.split_first().ok_or(Error::EmptySequence)?;
    rest.iter().try_fold(first.unitary(cfg)?, |acc, p| {
        p.unitary(cfg)?.then_after(&acc)
    })
}
