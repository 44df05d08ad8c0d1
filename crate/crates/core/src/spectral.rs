//! Dense symmetric eigensolver and diagonalization of the Gram matrix through
//! the eigenvectors of the commuting operator.

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::commuting::{commutator_residual, compressed_that, CommutingPair};
use crate::diffops::Transcription;
use crate::error::{Error, Result};
use crate::gram::{gram_matrix, GramMatrix};
use crate::special_polys::PolyFamily;

/// Sweep budget of the Jacobi eigensolver.
pub const MAX_SWEEPS: usize = 50;

/// Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Returns eigenvalues in ascending order and the orthogonal matrix whose
/// columns are the matching eigenvectors. Stops once every off-diagonal entry
/// is below `1e-13 ‖A‖_F`.
pub fn eigh(a: &DMatrix<f64>) -> Result<(Vec<f64>, DMatrix<f64>)> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(Error::SizeMismatch(format!("eigh needs a square matrix, got {:?}", a.shape())));
    }
    let fro = a.norm();
    let asym = (a - a.transpose()).abs().max();
    if asym > 1e-12 * fro {
        return Err(Error::NotSymmetric(asym / fro));
    }
    let mut m = (a + a.transpose()) * 0.5;
    let mut v = DMatrix::<f64>::identity(n, n);
    let target = 1e-13 * fro;
    let mut converged = n < 2 || fro == 0.0;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (m[(q, q)] - m[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (mkp, mkq) = (m[(k, p)], m[(k, q)]);
                    m[(k, p)] = c * mkp - s * mkq;
                    m[(k, q)] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let (mpk, mqk) = (m[(p, k)], m[(q, k)]);
                    m[(p, k)] = c * mpk - s * mqk;
                    m[(q, k)] = s * mpk + c * mqk;
                }
                for k in 0..n {
                    let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
        converged = off_diagonal_max(&m) <= target;
    }
    if !converged {
        return Err(Error::SweepBudget(MAX_SWEEPS));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].total_cmp(&m[(j, j)]));
    let vals = order.iter().map(|&i| m[(i, i)]).collect();
    let vecs = DMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    Ok((vals, vecs))
}

fn off_diagonal_max(m: &DMatrix<f64>) -> f64 {
    let mut worst: f64 = 0.0;
    for r in 0..m.nrows() {
        for c in 0..m.ncols() {
            if r != c {
                worst = worst.max(m[(r, c)].abs());
            }
        }
    }
    worst
}

/// Counts `(≥ 1 - ε, strictly between, ≤ ε)`.
pub fn gap_profile(eigs: &[f64], eps: f64) -> Result<(usize, usize, usize)> {
    if !(eps > 0.0 && eps < 0.5) {
        return Err(Error::InvalidEps(eps));
    }
    let high = eigs.iter().filter(|&&v| v >= 1.0 - eps).count();
    let low = eigs.iter().filter(|&&v| v <= eps).count();
    Ok((high, eigs.len() - high - low, low))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GapCounts {
    pub near_one: usize,
    pub plunge: usize,
    pub near_zero: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectralReport {
    pub family: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(rename = "N")]
    pub n: usize,
    pub omega: f64,
    pub eps: f64,
    /// Sorted diagonal of `VᵀMV`, `V` the eigenvectors of `Ť`.
    pub eig_m: Vec<f64>,
    /// Sorted eigenvalues of `M` from a direct decomposition.
    pub eig_m_direct: Vec<f64>,
    pub eig_that: Vec<f64>,
    /// Largest off-diagonal `|VᵀMV|` over `‖M‖_F`.
    pub alignment_residual: f64,
    /// Largest difference between the two sorted spectra of `M`.
    pub spectrum_agreement: f64,
    /// Smallest gap between consecutive eigenvalues of `Ť`.
    pub min_gap_that: f64,
    /// Set when `min_gap_that < 1e-8 ‖Ť‖_F`; the alignment is then not guaranteed.
    pub degenerate: bool,
    /// Whether the alignment residual is small enough to read the spectrum of `M` off `VᵀMV`.
    pub aligned: bool,
    pub commutator_residual: f64,
    pub orthogonality: f64,
    pub gap_counts: GapCounts,
}

impl SpectralReport {
    /// True when the two spectra of `M` agree within `tol`, or the point is flagged degenerate.
    pub fn passes(&self, tol: f64) -> bool {
        self.degenerate || self.spectrum_agreement < tol
    }
}

/// Builds `M` and `Ť` for `(N, Ω)` and reports both spectra of `M`.
pub fn diagonalize_via_commuting(fam: &PolyFamily, n: usize, omega: f64) -> Result<SpectralReport> {
    diagonalize_via_commuting_with(fam, n, omega, 1e-12, 0.01, Transcription::Verified)
}

pub fn diagonalize_via_commuting_with(
    fam: &PolyFamily,
    n: usize,
    omega: f64,
    tol: f64,
    eps: f64,
    tr: Transcription,
) -> Result<SpectralReport> {
    if !(eps > 0.0 && eps < 0.5) {
        return Err(Error::InvalidEps(eps));
    }
    let m = gram_matrix(fam, n, omega, tol)?;
    let pair = CommutingPair::new(fam, n, omega, tr)?;
    spectral_report(&pair, &m, eps)
}

/// Report from an existing Gram matrix and commuting pair.
pub fn spectral_report(pair: &CommutingPair, m: &GramMatrix, eps: f64) -> Result<SpectralReport> {
    let (mc, _) = m.compress();
    let a = compressed_that(pair);
    let size = mc.nrows();
    let (eig_that, v) = eigh(&a)?;
    let rotated = v.transpose() * &mc * &v;
    let mnorm = mc.norm();
    let off = off_diagonal_max(&rotated);
    let alignment_residual = if mnorm > 0.0 { off / mnorm } else { 0.0 };
    let mut eig_m: Vec<f64> = rotated.diagonal().iter().copied().collect();
    eig_m.sort_by(f64::total_cmp);
    let (eig_m_direct, _) = eigh(&mc)?;
    let spectrum_agreement =
        eig_m.iter().zip(&eig_m_direct).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    let min_gap_that = eig_that.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
    let min_gap_that = if min_gap_that.is_finite() { min_gap_that } else { 0.0 };
    let degenerate = size > 1 && min_gap_that < 1e-8 * a.norm();
    let orthogonality = (v.transpose() * &v - DMatrix::identity(size, size)).abs().max();
    let (near_one, plunge, near_zero) = gap_profile(&eig_m_direct, eps)?;
    Ok(SpectralReport {
        family: pair.family.name(),
        alpha: pair.family.alpha(),
        n: pair.n,
        omega: pair.omega,
        eps,
        eig_m,
        eig_m_direct,
        eig_that,
        alignment_residual,
        spectrum_agreement,
        min_gap_that,
        degenerate,
        aligned: alignment_residual < 1e-6,
        commutator_residual: commutator_residual(&pair.that, m)?,
        orthogonality,
        gap_counts: GapCounts { near_one, plunge, near_zero },
    })
}

/// `‖AV - VΛ‖_max`.
pub fn eigen_residual(a: &DMatrix<f64>, vals: &[f64], vecs: &DMatrix<f64>) -> f64 {
    let lam = DMatrix::from_diagonal(&DVector::from_column_slice(vals));
    (a * vecs - vecs * lam).abs().max()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn diagonal_input() {
        let a = DMatrix::from_diagonal(&DVector::from_vec(vec![3.0, 1.0, 2.0]));
        let (vals, vecs) = eigh(&a).unwrap();
        assert_eq!(vals, vec![1.0, 2.0, 3.0]);
        assert_eq!(vecs.column(0).abs(), DVector::from_vec(vec![0.0, 1.0, 0.0]));
        assert_eq!(vecs.column(2).abs(), DVector::from_vec(vec![1.0, 0.0, 0.0]));
    }

    #[test]
    fn swap_matrix() {
        let a = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0]);
        let (vals, vecs) = eigh(&a).unwrap();
        assert_relative_eq!(vals[0], -1.0, epsilon = 1e-15);
        assert_relative_eq!(vals[1], 1.0, epsilon = 1e-15);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert_relative_eq!(vecs[(0, 0)].abs(), h, epsilon = 1e-15);
        assert_relative_eq!(vecs[(0, 0)], -vecs[(1, 0)], epsilon = 1e-15);
        assert_relative_eq!(vecs[(0, 1)], vecs[(1, 1)], epsilon = 1e-15);
    }

    #[test]
    fn rejects_bad_input() {
        let a = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 2.0, 0.0]);
        assert!(matches!(eigh(&a), Err(Error::NotSymmetric(_))));
        assert!(matches!(eigh(&DMatrix::zeros(2, 3)), Err(Error::SizeMismatch(_))));
        assert_eq!(eigh(&DMatrix::zeros(0, 0)).unwrap().0, Vec::<f64>::new());
    }

    #[test]
    fn gap_profile_examples() {
        assert_eq!(gap_profile(&[1.0; 4], 0.01).unwrap(), (4, 0, 0));
        assert_eq!(gap_profile(&[0.999, 0.5, 0.001], 0.01).unwrap(), (1, 1, 1));
        assert!(gap_profile(&[0.5], 0.5).is_err());
        assert!(gap_profile(&[0.5], 0.0).is_err());
    }

    #[test]
    fn hermite_double_path() {
        let h = PolyFamily::xhermite();
        let r = diagonalize_via_commuting(&h, 12, 0.3).unwrap();
        assert!(!r.degenerate);
        assert!(r.spectrum_agreement < 1e-8, "{}", r.spectrum_agreement);
        assert!(r.orthogonality < 1e-10);
        assert!(r.eig_m_direct.iter().all(|&v| (-1e-10..=1.0 + 1e-10).contains(&v)));
        let g = r.gap_counts;
        assert_eq!(g.near_one + g.plunge + g.near_zero, 11);
    }

    #[test]
    fn full_band_is_trivially_aligned() {
        let h = PolyFamily::xhermite();
        let big = crate::quadrature::upper_cutoff(&h, 8, 1e-14);
        let r = diagonalize_via_commuting(&h, 8, big).unwrap();
        assert!(r.alignment_residual < 1e-8);
    }

    #[test]
    fn size_one() {
        let h = PolyFamily::xhermite();
        let r = diagonalize_via_commuting(&h, 0, 0.5).unwrap();
        assert_eq!(r.eig_m.len(), 1);
        assert_eq!(r.alignment_residual, 0.0);
        assert!(!r.degenerate);
    }

    #[test]
    fn plunge_is_narrow() {
        let r = diagonalize_via_commuting(&PolyFamily::xhermite(), 20, 1.0).unwrap();
        let g = r.gap_counts;
        assert!(g.plunge <= 19 / 2, "{g:?}");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn random_symmetric(entries in proptest::collection::vec(-5.0f64..5.0, 144)) {
            let b = DMatrix::from_vec(12, 12, entries);
            let a = (&b + b.transpose()) * 0.5;
            let (vals, vecs) = eigh(&a).unwrap();
            prop_assert!(eigen_residual(&a, &vals, &vecs) < 1e-11 * a.norm());
            prop_assert!((vecs.transpose() * &vecs - DMatrix::identity(12, 12)).abs().max() < 1e-12);
            prop_assert!(vals.windows(2).all(|w| w[0] <= w[1]));
        }
    }
}
