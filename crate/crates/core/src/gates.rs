// Copyright 2026 The iontrap Developers
// SPDX-License-Identifier: Apache-2.0

//! Ideal gate matrices on the computational subspace and the tools to compare
//! full-space unitaries against them.
//!
//! The computational subspace is spanned by `|0,g>, |0,e>, |1,g>, |1,e>` in
//! that order: the motional ground and first excited states carry the
//! control qubit, the internal levels the target.

use num_traits::{One, Zero};

use crate::hilbert::{idx, Level, TrapConfig, UnitaryMatrix};
use crate::linalg::CMatrix;
use crate::scalar::{c, c_re, cis, Real, C};

/// Joint-space indices of the computational basis, in gate order.
pub fn gamma_indices() -> [usize; 4] {
    [
        idx(0, Level::Ground),
        idx(0, Level::Excited),
        idx(1, Level::Ground),
        idx(1, Level::Excited),
    ]
}

/// A 4x4 gate on the computational subspace.
#[derive(Debug, Clone, PartialEq)]
pub struct ComputationalGate<T> {
    matrix: CMatrix<T>,
}

impl<T: Real> ComputationalGate<T> {
    /// Panics unless `matrix` is 4x4.
    pub fn from_matrix(matrix: CMatrix<T>) -> Self {
        assert_eq!((matrix.rows(), matrix.cols()), (4, 4), "gate must be 4x4");
        Self { matrix }
    }

    pub fn matrix(&self) -> &CMatrix<T> {
        &self.matrix
    }

    pub fn entry(&self, row: usize, col: usize) -> C<T> {
        self.matrix[(row, col)]
    }

    pub fn apply(&self, v: &[C<T>; 4]) -> [C<T>; 4] {
        let out = self.matrix.mul_vec(v);
        [out[0], out[1], out[2], out[3]]
    }

    pub fn compose(&self, rhs: &Self) -> Self {
        Self::from_matrix(self.matrix.matmul(&rhs.matrix))
    }
}

fn permutation_like<T: Real>(entries: [(usize, usize, C<T>); 4]) -> CMatrix<T> {
    let mut m = CMatrix::zeros(4, 4);
    for (i, j, v) in entries {
        m[(i, j)] = v;
    }
    m
}

/// Target-qubit Hadamard over `(|g>, |e>)`.
pub fn ideal_hadamard<T: Real>() -> CMatrix<T> {
    let r = c_re(T::FRAC_1_SQRT_2());
    CMatrix::from_rows(&[vec![r, r], vec![r, -r]])
}

/// `diag(1, 1, 1, -1)`.
pub fn ideal_cz<T: Real>() -> ComputationalGate<T> {
    let one = C::one();
    ComputationalGate::from_matrix(permutation_like([
        (0, 0, one),
        (1, 1, one),
        (2, 2, one),
        (3, 3, -one),
    ]))
}

/// Identity on the `|0,.>` block, swap of `|1,g>` and `|1,e>`.
pub fn ideal_cn<T: Real>() -> ComputationalGate<T> {
    let one = C::one();
    ComputationalGate::from_matrix(permutation_like([
        (0, 0, one),
        (1, 1, one),
        (2, 3, one),
        (3, 2, one),
    ]))
}

/// Controlled operation produced by a single resonant pulse with
/// `cos(Omega_00 t) = 1`, `sin(Omega_11 t) = 1`: a CN up to the local phases
/// `-i e^{+-i phi}` on the `|1,.>` block.
pub fn reduced_cn_phase_gate<T: Real>(phi: T) -> ComputationalGate<T> {
    let minus_i = c(T::zero(), -T::one());
    let one = C::one();
    ComputationalGate::from_matrix(permutation_like([
        (0, 0, one),
        (1, 1, one),
        (2, 3, minus_i * cis(phi)),
        (3, 2, minus_i * cis(-phi)),
    ]))
}

/// Computational block of a full-space unitary together with the amplitude
/// that leaves the subspace.
#[derive(Debug, Clone, PartialEq)]
pub struct RestrictionReport<T> {
    pub block: ComputationalGate<T>,
    /// `max_j sqrt(sum_{i not in Gamma} |U_ij|^2)` over the four basis columns.
    pub leakage: T,
}

/// Extracts the computational block and its leakage.
///
/// # Panics
/// If `N < 1 + guard` or the dimensions do not match `cfg`.
pub fn restrict_to_gamma<T: Real>(
    u: &UnitaryMatrix<T>,
    cfg: &TrapConfig<T>,
) -> RestrictionReport<T> {
    assert!(
        cfg.truncation() > cfg.guard(),
        "truncation too small for the computational subspace"
    );
    assert_eq!(
        u.dim(),
        cfg.dim(),
        "unitary does not match the configuration"
    );
    let gamma = gamma_indices();
    let block = u.matrix().select(&gamma, &gamma);
    let leakage = gamma
        .iter()
        .map(|&j| {
            (0..u.dim())
                .filter(|i| !gamma.contains(i))
                .fold(T::zero(), |acc, i| acc + u.entry(i, j).norm_sqr())
                .sqrt()
        })
        .fold(T::zero(), T::max);
    RestrictionReport {
        block: ComputationalGate::from_matrix(block),
        leakage,
    }
}

/// The `{|m,g>, |m,e>}` block of a full-space unitary with its leakage.
pub fn restrict_to_level<T: Real>(u: &UnitaryMatrix<T>, m: usize) -> (CMatrix<T>, T) {
    let pair = [idx(m, Level::Ground), idx(m, Level::Excited)];
    let block = u.matrix().select(&pair, &pair);
    let leakage = pair
        .iter()
        .map(|&j| {
            (0..u.dim())
                .filter(|i| !pair.contains(i))
                .fold(T::zero(), |acc, i| acc + u.entry(i, j).norm_sqr())
                .sqrt()
        })
        .fold(T::zero(), T::max);
    (block, leakage)
}

/// Entrywise maximum distance. No global phase is quotiented out.
pub fn gate_distance<T: Real>(a: &CMatrix<T>, b: &CMatrix<T>) -> T {
    a.max_abs_diff(b)
}

/// `1 - |tr(a^dag b)| / d`: zero iff the gates agree up to a global phase.
pub fn phase_insensitive_distance<T: Real>(a: &CMatrix<T>, b: &CMatrix<T>) -> T {
    let d = a.rows();
    let overlap = a.adjoint().matmul(b);
    let trace = (0..d).fold(C::<T>::zero(), |acc, i| acc + overlap[(i, i)]);
    T::one() - trace.norm() / T::from_count(d)
}

/// Which closed-form entry of the three-pulse product is being checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CnEntry {
    A0000,
    A0001,
    A0100,
    A0101,
    A1010,
    A1011,
    A1110,
    A1111,
}

impl CnEntry {
    pub const ALL: [CnEntry; 8] = [
        CnEntry::A0000,
        CnEntry::A0001,
        CnEntry::A0100,
        CnEntry::A0101,
        CnEntry::A1010,
        CnEntry::A1011,
        CnEntry::A1110,
        CnEntry::A1111,
    ];

    /// Row and column in the computational block.
    pub fn position(self) -> (usize, usize) {
        match self {
            CnEntry::A0000 => (0, 0),
            CnEntry::A0001 => (0, 1),
            CnEntry::A0100 => (1, 0),
            CnEntry::A0101 => (1, 1),
            CnEntry::A1010 => (2, 2),
            CnEntry::A1011 => (2, 3),
            CnEntry::A1110 => (3, 2),
            CnEntry::A1111 => (3, 3),
        }
    }
}

/// Parameters of the resonant-CZ-resonant product: phases and the four
/// dimensionless rotation angles `Omega_{m,m} theta_j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CnAngles<T> {
    pub phi1: T,
    pub phi3: T,
    /// `Omega_00 theta_1`, `Omega_00 theta_3`.
    pub ground: (T, T),
    /// `Omega_11 theta_1`, `Omega_11 theta_3`.
    pub excited: (T, T),
}

/// Entry formulas of `r(phi3, t3) CZ r(phi1, t1)` as they are commonly
/// printed. `A1110` is printed identically to `A1011`, which cannot be right
/// for a unitary; [`cn_entry_cross_check`] reports it.
pub fn printed_cn_entry<T: Real>(entry: CnEntry, a: &CnAngles<T>) -> C<T> {
    let i = c(T::zero(), T::one());
    let (c1, s1) = (a.ground.0.cos(), a.ground.0.sin());
    let (c3, s3) = (a.ground.1.cos(), a.ground.1.sin());
    let (d1, t1) = (a.excited.0.cos(), a.excited.0.sin());
    let (d3, t3) = (a.excited.1.cos(), a.excited.1.sin());
    let e1 = cis(a.phi1);
    let e3 = cis(a.phi3);
    let rel = cis(a.phi3 - a.phi1);
    match entry {
        CnEntry::A0000 => c_re(c3 * c1) - rel * (s3 * s1),
        CnEntry::A0001 => -i * e1 * (c3 * s1) - i * e3 * (s3 * c1),
        CnEntry::A0100 => -i * e3.conj() * (s3 * c1) - i * e1.conj() * (c3 * s1),
        CnEntry::A0101 => c_re(c3 * c1) - rel.conj() * (s3 * s1),
        CnEntry::A1010 => c_re(d3 * d1) + rel * (t3 * t1),
        CnEntry::A1011 => -i * e1 * (d3 * t1) + i * e3 * (t3 * d1),
        CnEntry::A1110 => -i * e1 * (d3 * t1) + i * e3 * (t3 * d1),
        CnEntry::A1111 => c_re(-d3 * d1) - rel.conj() * (t3 * t1),
    }
}

/// One row of the entry cross-check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntryCheck<T> {
    pub entry: CnEntry,
    pub printed: C<T>,
    pub direct: C<T>,
    pub matches: bool,
}

/// Compares every printed entry formula with the direct product of the three
/// 4x4 factors. Direct composition is authoritative.
pub fn cn_entry_cross_check<T: Real>(a: &CnAngles<T>, tol: T) -> Vec<EntryCheck<T>> {
    let direct = direct_cn_product(a);
    CnEntry::ALL
        .iter()
        .map(|&entry| {
            let printed = printed_cn_entry(entry, a);
            let (r, col) = entry.position();
            let d = direct.entry(r, col);
            EntryCheck {
                entry,
                printed,
                direct: d,
                matches: (printed - d).norm() <= tol,
            }
        })
        .collect()
}

/// `r(phi3) CZ r(phi1)` built from explicit 4x4 resonant rotations.
pub fn direct_cn_product<T: Real>(a: &CnAngles<T>) -> ComputationalGate<T> {
    let rotation = |phi: T, ground: T, excited: T| {
        let mut m = CMatrix::zeros(4, 4);
        for (off, angle) in [(0usize, ground), (2, excited)] {
            let (s, co) = angle.sin_cos();
            let minus_i = c(T::zero(), -T::one());
            m[(off, off)] = c_re(co);
            m[(off + 1, off + 1)] = c_re(co);
            m[(off, off + 1)] = minus_i * cis(phi) * s;
            m[(off + 1, off)] = minus_i * cis(-phi) * s;
        }
        ComputationalGate::from_matrix(m)
    };
    let first = rotation(a.phi1, a.ground.0, a.excited.0);
    let third = rotation(a.phi3, a.ground.1, a.excited.1);
    third.compose(&ideal_cz()).compose(&first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pulse::sideband_unitary;
    use crate::rabi::rabi_frequency;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn hadamard_properties() {
        let h = ideal_hadamard::<f64>();
        assert!(h.matmul(&h).max_abs_diff(&CMatrix::identity(2)) < 1e-15);
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert_eq!(h[(0, 0)], c(r, 0.0));
        assert_eq!(h[(1, 0)], c(r, 0.0));
        let det = h[(0, 0)] * h[(1, 1)] - h[(0, 1)] * h[(1, 0)];
        assert!((det - c(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn cz_and_cn_literal_action() {
        let cz = ideal_cz::<f64>();
        let one = c(1.0, 0.0);
        let z = c(0.0, 0.0);
        assert_eq!(cz.apply(&[z, z, z, one]), [z, z, z, -one]);
        assert_eq!(cz.apply(&[z, one, z, z]), [z, one, z, z]);
        let cn = ideal_cn::<f64>();
        assert_eq!(cn.apply(&[z, z, one, z]), [z, z, z, one]);
        assert_eq!(cn.apply(&[one, z, z, z]), [one, z, z, z]);
        for g in [cz, cn] {
            assert_eq!(g.compose(&g).matrix(), &CMatrix::identity(4));
        }
    }

    #[test]
    fn reduced_phase_gate_is_not_cn() {
        let g = reduced_cn_phase_gate(FRAC_PI_2);
        assert!((g.entry(3, 2) - c(-1.0, 0.0)).norm() < 1e-15);
        for step in 0..64 {
            let phi = step as f64 * PI / 32.0;
            let g = reduced_cn_phase_gate(phi);
            assert!(g.matrix().unitarity_deviation() < 1e-15);
            let fourth = g.compose(&g).compose(&g).compose(&g);
            assert!(fourth.matrix().max_abs_diff(&CMatrix::identity(4)) < 1e-14);
            assert!(gate_distance(ideal_cn::<f64>().matrix(), g.matrix()) >= 2f64.sqrt() - 1e-12);
        }
    }

    #[test]
    fn distances() {
        let cz = ideal_cz::<f64>();
        let lit = CMatrix::from_fn(4, 4, |i, j| match (i, j) {
            (3, 3) => c(-1.0, 0.0),
            (i, j) if i == j => c(1.0, 0.0),
            _ => c(0.0, 0.0),
        });
        assert_eq!(gate_distance(cz.matrix(), &lit), 0.0);
        let phased = cz.matrix().scale(cis(0.7));
        assert!(gate_distance(cz.matrix(), &phased) > 0.5);
        assert!(phase_insensitive_distance(cz.matrix(), &phased).abs() < 1e-15);
    }

    #[test]
    fn restriction_of_identity_and_generic_sideband() {
        let cfg = TrapConfig::new(0.5, 1).unwrap();
        let rep = restrict_to_gamma(&UnitaryMatrix::identity(cfg.dim()), &cfg);
        assert_eq!(rep.block.matrix(), &CMatrix::identity(4));
        assert_eq!(rep.leakage, 0.0);

        let theta = 1.1;
        let rep = restrict_to_gamma(&sideband_unitary(&cfg, 0.0, theta), &cfg);
        let expected = (rabi_frequency(0.5f64, 1, 2) * theta).sin().abs();
        assert!((rep.leakage - expected).abs() < 1e-15);
        assert!(rep.leakage > 0.1);
    }

    #[test]
    fn printed_entries_agree_except_a1110() {
        let a = CnAngles {
            phi1: 0.4,
            phi3: 1.3,
            ground: (0.7, 2.2),
            excited: (1.9, -0.6),
        };
        let checks = cn_entry_cross_check(&a, 1e-13);
        for ch in &checks {
            let expect = ch.entry != CnEntry::A1110;
            assert_eq!(ch.matches, expect, "{:?}", ch.entry);
        }
        assert!(direct_cn_product(&a).matrix().unitarity_deviation() < 1e-14);
    }

    #[test]
    fn direct_product_reaches_cn_under_matching_conditions() {
        // cos W00 (t1 + t3) = 1, sin W11 (t3 - t1) = -1 with phi = pi/2
        let a = CnAngles {
            phi1: FRAC_PI_2,
            phi3: FRAC_PI_2,
            ground: (1.0, 2.0 * PI - 1.0),
            excited: (0.8, 0.8 - FRAC_PI_2),
        };
        let g = direct_cn_product(&a);
        assert!(gate_distance(g.matrix(), ideal_cn::<f64>().matrix()) < 1e-14);
    }
}
