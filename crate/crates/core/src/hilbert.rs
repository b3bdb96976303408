// Copyright 2026 The iontrap Developers
// SPDX-License-Identifier: Apache-2.0

//! Truncated joint space: oscillator Fock states `|m>` (m = 0..=N) tensored
//! with the two atomic levels `{|g>, |e>}`.
//!
//! Basis index convention: `idx(m, s) = 2m + (0 for g, 1 for e)`.
//!
//! The top `guard` Fock levels are a sentinel band. A red-sideband pulse of
//! order `k` moves population up by `k` quanta, and the blockwise closed forms
//! are only exact while the `|m + k>` partner exists, so any occupation of the
//! guard band above `leak_tol` is reported as an error rather than silently
//! truncated.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::scalar::{c_re, Real, C};

pub const DEFAULT_TRUNCATION: usize = 32;
pub const DEFAULT_MIN_GUARD: usize = 4;
pub const DEFAULT_LEAK_TOL: f64 = 1e-10;

/// Internal level of the ion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    Ground,
    Excited,
}

impl Level {
    #[inline]
    pub fn offset(self) -> usize {
        match self {
            Level::Ground => 0,
            Level::Excited => 1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Level::Ground => 'g',
            Level::Excited => 'e',
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Joint-space index of `|m>|s>`.
#[inline]
pub fn idx(m: usize, s: Level) -> usize {
    2 * m + s.offset()
}

/// Inverse of [`idx`].
#[inline]
pub fn split_idx(i: usize) -> (usize, Level) {
    let level = if i.is_multiple_of(2) {
        Level::Ground
    } else {
        Level::Excited
    };
    (i / 2, level)
}

/// Trap and truncation parameters. The base Rabi frequency is normalized to
/// one, so every duration is the dimensionless product `Omega t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrapConfig<T> {
    eta: T,
    sideband_order: usize,
    truncation: usize,
    guard: usize,
    leak_tol: T,
}

impl<T: Real> TrapConfig<T> {
    /// Default truncation `N = 32` and guard `max(k, 4)`.
    pub fn new(eta: T, sideband_order: usize) -> Result<Self> {
        let guard = sideband_order.max(DEFAULT_MIN_GUARD);
        let truncation = DEFAULT_TRUNCATION.max(sideband_order + guard + 2);
        Self::with_truncation(eta, sideband_order, truncation, guard)
    }

    pub fn with_truncation(
        eta: T,
        sideband_order: usize,
        truncation: usize,
        guard: usize,
    ) -> Result<Self> {
        if !(eta > T::zero() && eta < T::one()) {
            return Err(Error::InvalidConfig(format!(
                "Lamb-Dicke parameter must lie in (0, 1), got {eta}"
            )));
        }
        if guard < sideband_order {
            return Err(Error::InvalidConfig(format!(
                "guard {guard} is smaller than the sideband order {sideband_order}"
            )));
        }
        if truncation < sideband_order + guard {
            return Err(Error::InvalidConfig(format!(
                "truncation {truncation} is smaller than k + guard = {}",
                sideband_order + guard
            )));
        }
        Ok(Self {
            eta,
            sideband_order,
            truncation,
            guard,
            leak_tol: T::lit(DEFAULT_LEAK_TOL),
        })
    }

    pub fn with_leak_tol(mut self, leak_tol: T) -> Self {
        self.leak_tol = leak_tol;
        self
    }

    #[inline]
    pub fn eta(&self) -> T {
        self.eta
    }

    #[inline]
    pub fn sideband_order(&self) -> usize {
        self.sideband_order
    }

    /// Highest represented Fock index `N`.
    #[inline]
    pub fn truncation(&self) -> usize {
        self.truncation
    }

    #[inline]
    pub fn guard(&self) -> usize {
        self.guard
    }

    #[inline]
    pub fn leak_tol(&self) -> T {
        self.leak_tol
    }

    /// Joint-space dimension `2(N + 1)`.
    #[inline]
    pub fn dim(&self) -> usize {
        2 * (self.truncation + 1)
    }

    /// Highest Fock index outside the guard band.
    #[inline]
    pub fn safe_max(&self) -> usize {
        self.truncation - self.guard
    }
}

/// Pure state on the truncated joint space.
#[derive(Debug, Clone, PartialEq)]
pub struct JointState<T> {
    cfg: TrapConfig<T>,
    amps: Vec<C<T>>,
}

impl<T: Real> JointState<T> {
    /// Wraps an amplitude vector, checking its length and normalization.
    pub fn from_amplitudes(cfg: &TrapConfig<T>, amps: Vec<C<T>>) -> Result<Self> {
        if amps.len() != cfg.dim() {
            return Err(Error::DimensionMismatch {
                expected: cfg.dim(),
                found: amps.len(),
            });
        }
        let state = Self { cfg: *cfg, amps };
        let norm = state.norm();
        if (norm - T::one()).abs() > T::lit(1e-12).max(T::epsilon() * T::lit(64.0)) {
            return Err(Error::NotNormalized {
                norm: norm.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(state)
    }

    pub fn config(&self) -> &TrapConfig<T> {
        &self.cfg
    }

    pub fn amplitudes(&self) -> &[C<T>] {
        &self.amps
    }

    pub fn amplitude(&self, m: usize, s: Level) -> C<T> {
        self.amps[idx(m, s)]
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn norm(&self) -> T {
        self.amps
            .iter()
            .fold(T::zero(), |acc, a| acc + a.norm_sqr())
            .sqrt()
    }

    /// Total probability on Fock levels `m > N - guard`.
    pub fn guard_occupation(&self) -> T {
        self.amps
            .iter()
            .enumerate()
            .filter(|(i, _)| split_idx(*i).0 > self.cfg.safe_max())
            .fold(T::zero(), |acc, (_, a)| acc + a.norm_sqr())
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &Self) -> Result<C<T>> {
        check_dim(self.dim(), other.dim())?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .fold(C::zero(), |acc, (a, b)| acc + a.conj() * b))
    }
}

/// `|m>|s>` as a unit vector.
pub fn basis_state<T: Real>(m: usize, s: Level, cfg: &TrapConfig<T>) -> Result<JointState<T>> {
    if m > cfg.truncation() {
        return Err(Error::FockIndexOutOfRange {
            m,
            n_max: cfg.truncation(),
        });
    }
    let mut amps = vec![C::zero(); cfg.dim()];
    amps[idx(m, s)] = c_re(T::one());
    Ok(JointState { cfg: *cfg, amps })
}

/// Dense unitary on the joint space.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryMatrix<T> {
    matrix: CMatrix<T>,
}

impl<T: Real> UnitaryMatrix<T> {
    /// Accepts `matrix` only if it is square and `max |U^dag U - I|` is
    /// within [`Real::unitarity_tol`].
    pub fn new(matrix: CMatrix<T>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch {
                expected: matrix.rows(),
                found: matrix.cols(),
            });
        }
        let deviation = matrix.unitarity_deviation();
        if deviation.is_nan() || deviation >= T::unitarity_tol() {
            return Err(Error::NotUnitary {
                deviation: deviation.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { matrix })
    }

    /// For constructors whose output is unitary by construction.
    pub(crate) fn from_matrix_unchecked(matrix: CMatrix<T>) -> Self {
        debug_assert!(matrix.is_square());
        Self { matrix }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            matrix: CMatrix::identity(dim),
        }
    }

    pub fn matrix(&self) -> &CMatrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix<T> {
        self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn adjoint(&self) -> Self {
        Self {
            matrix: self.matrix.adjoint(),
        }
    }

    /// `self * rhs`: `rhs` acts first.
    pub fn then_after(&self, rhs: &Self) -> Result<Self> {
        check_dim(self.dim(), rhs.dim())?;
        Ok(Self {
            matrix: self.matrix.matmul(&rhs.matrix),
        })
    }

    pub fn entry(&self, row: usize, col: usize) -> C<T> {
        self.matrix[(row, col)]
    }

    pub fn unitarity_deviation(&self) -> T {
        self.matrix.unitarity_deviation()
    }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// `U psi`, followed by the guard-band leak check.
pub fn apply<T: Real>(u: &UnitaryMatrix<T>, psi: &JointState<T>) -> Result<JointState<T>> {
    check_dim(psi.dim(), u.dim())?;
    let out = JointState {
        cfg: psi.cfg,
        amps: u.matrix.mul_vec(&psi.amps),
    };
    let occupation = out.guard_occupation();
    if occupation > psi.cfg.leak_tol() {
        return Err(Error::GuardBandLeak {
            occupation: occupation.to_f64().unwrap_or(f64::NAN),
            tol: psi.cfg.leak_tol().to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(out)
}

/// `|<a|b>|^2`.
pub fn fidelity_overlap<T: Real>(a: &JointState<T>, b: &JointState<T>) -> Result<T> {
    Ok(a.inner(b)?.norm_sqr().min(T::one()))
}
