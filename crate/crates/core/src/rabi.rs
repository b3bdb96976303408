// Copyright 2026 The iontrap Developers
// SPDX-License-Identifier: Apache-2.0

//! Multiquantum Rabi frequencies of the red-sideband coupling
//! `|m_lower + k, g> <-> |m_lower, e>`, in units of the base Rabi frequency.
//!
//! Three independent evaluations are provided:
//!
//! * [`rabi_sum`]: the finite alternating sum
//!   `(eta^k e^{-eta^2/2} / 2) sqrt(m!/(m-k)!) sum_n (-eta^2)^n C(m-k, n) / (k+n)!`
//!   with `m = m_lower + k`;
//! * [`rabi_laguerre`]: the associated-Laguerre closed form
//!   `(1/2) e^{-eta^2/2} eta^k sqrt(m_lower!/m!) L^k_{m_lower}(eta^2)`;
//! * [`rabi_oracle`]: a brute-force matrix element of the displacement
//!   operator `exp[i eta (a + a^dag)]` on a truncated oscillator.
//!
//! All three return the *signed* real frequency. The Laguerre factor changes
//! sign for large `eta^2 m`, and the pulse engine uses the signed value
//! directly in `cos`/`sin`. The `i^k` phase of the matrix element is carried
//! by the pulse engine, not here.

use crate::error::{Error, Result};
use crate::linalg::{expm, CMatrix};
use crate::scalar::{c, c_re, i_pow, Real};

/// Minimum head-room between the queried element and the oracle truncation.
pub const ORACLE_MARGIN: usize = 40;
/// Extra levels used for the oracle's self-consistency check.
pub const ORACLE_ENLARGEMENT: usize = 10;
/// Allowed change of the oracle element when the truncation is enlarged.
pub const ORACLE_CONVERGENCE_TOL: f64 = 1e-12;

/// One Rabi frequency: Lamb-Dicke parameter, sideband order and lower Fock
/// index of the coupled pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RabiQuery<T> {
    pub eta: T,
    pub k: usize,
    pub m_lower: usize,
}

impl<T: Real> RabiQuery<T> {
    pub fn new(eta: T, k: usize, m_lower: usize) -> Result<Self> {
        if !(eta >= T::zero() && eta.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "Lamb-Dicke parameter must be finite and non-negative, got {eta}"
            )));
        }
        Ok(Self { eta, k, m_lower })
    }

    /// Upper Fock index `m_lower + k`.
    pub fn m_upper(&self) -> usize {
        self.m_lower + self.k
    }
}

/// `Omega_{lower, upper}` (with `upper >= lower`), evaluated by [`rabi_sum`].
///
/// `rabi_frequency(eta, m, m)` is the carrier frequency of Fock level `m`.
pub fn rabi_frequency<T: Real>(eta: T, lower: usize, upper: usize) -> T {
    assert!(upper >= lower, "upper Fock index below lower one");
    rabi_sum(&RabiQuery {
        eta,
        k: upper - lower,
        m_lower: lower,
    })
}

/// Finite-sum form. Factorial ratios are built up multiplicatively so no
/// factorial is ever formed on its own.
///
/// The terms alternate, so digits are lost to cancellation once
/// `eta^2 m_lower` reaches a few tens; [`rabi_laguerre`] holds up better there.
pub fn rabi_sum<T: Real>(q: &RabiQuery<T>) -> T {
    let x = q.eta * q.eta;
    let k = q.k;
    let lower = q.m_lower;

    // sqrt(m!/(m-k)!) / k! = prod_{j=1..k} sqrt(lower + j) / j
    let mut prefactor = T::one();
    for j in 1..=k {
        prefactor = prefactor * T::from_count(lower + j).sqrt() / T::from_count(j);
    }

    // term_n = C(lower, n) (-x)^n k! / (k+n)!, term_0 = 1
    let mut term = T::one();
    let mut sum = T::one();
    for n in 0..lower {
        term = -term * x * T::from_count(lower - n)
            / (T::from_count(n + 1) * T::from_count(k + n + 1));
        sum = sum + term;
    }

    T::lit(0.5) * q.eta.powi(k as i32) * (-x / T::lit(2.0)).exp() * prefactor * sum
}

/// Closed form through the associated Laguerre polynomial.
pub fn rabi_laguerre<T: Real>(q: &RabiQuery<T>) -> T {
    let x = q.eta * q.eta;
    // sqrt(lower! / (lower + k)!)
    let mut ratio = T::one();
    for j in 1..=q.k {
        ratio = ratio / T::from_count(q.m_lower + j).sqrt();
    }
    T::lit(0.5)
        * (-x / T::lit(2.0)).exp()
        * q.eta.powi(q.k as i32)
        * ratio
        * laguerre_assoc(q.m_lower, q.k, x)
}

/// `L^alpha_n(x)` by the three-term recurrence
/// `j L_j = (2j - 1 + alpha - x) L_{j-1} - (j - 1 + alpha) L_{j-2}`.
pub fn laguerre_assoc<T: Real>(n: usize, alpha: usize, x: T) -> T {
    let a = T::from_count(alpha);
    let mut prev = T::one();
    if n == 0 {
        return prev;
    }
    let mut cur = T::one() + a - x;
    for j in 2..=n {
        let jf = T::from_count(j);
        let next = ((T::lit(2.0) * jf - T::one() + a - x) * cur - (jf - T::one() + a) * prev) / jf;
        prev = cur;
        cur = next;
    }
    cur
}

/// Brute-force Rabi frequency from a dense displacement operator on
/// `truncation + 1` oscillator levels.
///
/// Requires `truncation >= m_lower + k + 40`. The matrix is rebuilt with ten
/// more levels and the element compared; a change above `1e-12` is reported
/// as [`Error::TruncationTooSmall`].
pub fn rabi_oracle<T: Real>(q: &RabiQuery<T>, truncation: usize) -> Result<T> {
    DisplacementOracle::new(q.eta, truncation)?.rabi(q.k, q.m_lower)
}

/// Dense `exp[i eta (a + a^dag)]` at two truncations, reusable for every
/// element that fits under the first one with the required margin.
#[derive(Debug, Clone)]
pub struct DisplacementOracle<T> {
    truncation: usize,
    base: CMatrix<T>,
    enlarged: CMatrix<T>,
}

impl<T: Real> DisplacementOracle<T> {
    pub fn new(eta: T, truncation: usize) -> Result<Self> {
        RabiQuery::new(eta, 0, 0)?;
        Ok(Self {
            truncation,
            base: displacement(eta, truncation),
            enlarged: displacement(eta, truncation + ORACLE_ENLARGEMENT),
        })
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Signed `Omega_{m_lower, m_lower + k}` read off the displacement matrix.
    pub fn rabi(&self, k: usize, m_lower: usize) -> Result<T> {
        if self.truncation < m_lower + k + ORACLE_MARGIN {
            return Err(Error::InvalidConfig(format!(
                "oracle truncation {} is below m_lower + k + {ORACLE_MARGIN} = {}",
                self.truncation,
                m_lower + k + ORACLE_MARGIN
            )));
        }
        let read = |d: &CMatrix<T>| {
            // <m| D |m+k> = i^k * real
            (d[(m_lower, m_lower + k)] * i_pow::<T>(-(k as i64))).re * T::lit(0.5)
        };
        let value = read(&self.base);
        let change = (read(&self.enlarged) - value).abs();
        if change > T::lit(ORACLE_CONVERGENCE_TOL) {
            return Err(Error::TruncationTooSmall {
                change: change.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(value)
    }

    /// Imaginary residue left after removing the `i^k` phase; zero up to
    /// rounding when the phase convention is right.
    pub fn phase_residual(&self, k: usize, m_lower: usize) -> T {
        (self.base[(m_lower, m_lower + k)] * i_pow::<T>(-(k as i64)))
            .im
            .abs()
    }
}

/// Truncated position-like operator `a + a^dag` on levels `0..=truncation`.
pub fn position_operator<T: Real>(truncation: usize) -> CMatrix<T> {
    let n = truncation + 1;
    CMatrix::from_fn(n, n, |i, j| {
        if j == i + 1 {
            c_re(T::from_count(j).sqrt())
        } else if i == j + 1 {
            c_re(T::from_count(i).sqrt())
        } else {
            c_re(T::zero())
        }
    })
}

fn displacement<T: Real>(eta: T, truncation: usize) -> CMatrix<T> {
    expm(&position_operator::<T>(truncation).scale(c(T::zero(), eta)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(eta: f64, k: usize, m_lower: usize) -> RabiQuery<f64> {
        RabiQuery::new(eta, k, m_lower).unwrap()
    }

    // Frozen from the displacement oracle (truncation 60) and cross-checked
    // against the Laguerre closed form; see `oracle_freezes_match` below.
    const OMEGA_01_AT_0_96920: f64 = 0.302_974_755_962_181;
    const OMEGA_11_AT_0_96920: f64 = 0.018_959_792_607_072;
    const OMEGA_12_AT_0_56625: f64 = 0.286_405_517_927_914;
    const OMEGA_01_AT_0_17379: f64 = 0.085_592_615_436_971;

    #[test]
    fn carrier_ground_is_gaussian() {
        assert_eq!(rabi_sum(&q(0.0, 0, 0)), 0.5);
        for &eta in &[0.1f64, 0.5, 0.9692] {
            let want = 0.5 * (-eta * eta / 2.0).exp();
            assert!((rabi_sum(&q(eta, 0, 0)) - want).abs() < 1e-16);
        }
    }

    #[test]
    fn vanishes_without_recoil() {
        assert_eq!(rabi_sum(&q(0.0, 1, 0)), 0.0);
        assert_eq!(rabi_sum(&q(0.0, 3, 5)), 0.0);
    }

    #[test]
    fn reference_values() {
        assert!((rabi_sum(&q(0.96920, 1, 0)) - OMEGA_01_AT_0_96920).abs() < 1e-14);
        assert!((rabi_sum(&q(0.96920, 0, 1)) - OMEGA_11_AT_0_96920).abs() < 1e-14);
        assert!((rabi_laguerre(&q(0.96920, 0, 1)) - OMEGA_11_AT_0_96920).abs() < 1e-14);
        assert!((rabi_laguerre(&q(0.56625, 1, 1)) - OMEGA_12_AT_0_56625).abs() < 1e-14);
        // the coarser published digits
        assert!((rabi_sum(&q(0.96920, 1, 0)) - 0.302927).abs() / 0.302927 < 5e-4);
        assert!((rabi_sum(&q(0.96920, 0, 1)) - 0.018958).abs() < 2e-6);
        assert!((rabi_laguerre(&q(0.56625, 1, 1)) - 0.286401).abs() < 1e-5);
    }

    #[test]
    fn oracle_freezes_match() {
        let cases = [
            (0.96920, 1, 0, OMEGA_01_AT_0_96920),
            (0.96920, 0, 1, OMEGA_11_AT_0_96920),
            (0.56625, 1, 1, OMEGA_12_AT_0_56625),
            (0.17379, 1, 0, OMEGA_01_AT_0_17379),
        ];
        for (eta, k, m, want) in cases {
            let got = rabi_oracle(&q(eta, k, m), 60).unwrap();
            assert!((got - want).abs() < 1e-12, "({eta}, {k}, {m}): {got}");
        }
        assert!((rabi_oracle(&q(0.17379, 1, 0), 60).unwrap() - 0.0855926).abs() < 1e-7);
        let want = 0.5 * (-0.125f64).exp();
        assert!((rabi_oracle(&q(0.5, 0, 0), 60).unwrap() - want).abs() < 1e-12);
        assert!((want - 0.441248).abs() < 1e-6);
        let want = 0.5 * (-0.045f64).exp() * 0.09 / 2f64.sqrt();
        assert!((rabi_oracle(&q(0.3, 2, 0), 60).unwrap() - want).abs() < 1e-12);
        assert!((want - 0.030420).abs() < 1e-6);
    }

    #[test]
    fn closed_form_k3_ground() {
        for &eta in &[0.2f64, 0.7] {
            let want = 0.5 * (-eta * eta / 2.0).exp() * eta.powi(3) / 6f64.sqrt();
            assert!((rabi_laguerre(&q(eta, 3, 0)) - want).abs() < 1e-15);
            assert!((rabi_sum(&q(eta, 3, 0)) - want).abs() < 1e-15);
        }
    }

    #[test]
    fn laguerre_low_orders() {
        assert_eq!(laguerre_assoc(0, 3, 7.5), 1.0);
        assert!((laguerre_assoc(1, 0, 0.939349f64) - 0.060651).abs() < 1e-15);
        // L^1_2(x) = (x^2 - 6x + 6)/2
        assert!((laguerre_assoc(2, 1, 1.0f64) - 0.5).abs() < 1e-15);
        for &x in &[0.0f64, 0.3, 2.0, 5.5] {
            let want = (x * x - 6.0 * x + 6.0) / 2.0;
            assert!((laguerre_assoc(2, 1, x) - want).abs() < 1e-13);
        }
    }

    #[test]
    fn signed_frequency_crosses_zero() {
        // L_2(x) has its first zero at x = 2 - sqrt 2 (eta ~ 0.765)
        assert!(rabi_sum(&q(0.7, 0, 2)) > 0.0);
        assert!(rabi_sum(&q(0.8, 0, 2)) < 0.0);
        let o = rabi_oracle(&q(0.8, 0, 2), 42).unwrap();
        assert!((o - rabi_sum(&q(0.8, 0, 2))).abs() < 1e-12);
    }

    #[test]
    fn oracle_rejects_short_truncation() {
        assert!(rabi_oracle(&q(0.5, 1, 0), 30).is_err());
        let tiny = DisplacementOracle::new(0.95, 5).unwrap();
        assert!(matches!(tiny.rabi(0, 0), Err(Error::InvalidConfig(_))));
    }

    #[test]
    fn oracle_phase_convention() {
        let o = DisplacementOracle::new(0.6, 50).unwrap();
        for k in 0..6 {
            assert!(o.phase_residual(k, 3) < 1e-14);
        }
    }

    #[test]
    fn small_eta_scaling() {
        for k in 1..=4 {
            for m in [0usize, 3] {
                let r = rabi_sum(&q(1e-4, k, m)) / rabi_sum(&q(5e-5, k, m));
                assert!((r - 2f64.powi(k as i32)).abs() < 1e-3);
            }
        }
    }

    #[test]
    fn large_index_stays_finite() {
        let v = rabi_sum(&q(0.3, 5, 200));
        assert!(v.is_finite());
        assert!((v - rabi_laguerre(&q(0.3, 5, 200))).abs() < 1e-9);
    }

    #[test]
    fn f32_path_tracks_f64() {
        let a = rabi_sum(&RabiQuery::<f32>::new(0.5, 1, 2).unwrap()) as f64;
        let b = rabi_sum(&q(0.5, 1, 2));
        assert!((a - b).abs() < 1e-6);
    }
}
