//! Time-and-band limited Gram matrix `M_{mn} = ∫_a^Ω q_m q_n w dx`, the
//! reproducing kernel of the time-limited span and the integral operator `S`.

use nalgebra::DMatrix;
use rayon::prelude::*;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::diffops::compress_dense;
use crate::error::{Error, Result};
use crate::quadrature::{integrate_adaptive, lower_cutoff};
use crate::special_polys::{q_eval, weight, FamilyKind, PolyFamily};

/// Rejects time limits at exceptional degrees.
pub fn validate_n(fam: &PolyFamily, n: usize) -> Result<()> {
    if fam.is_exceptional(n) {
        return Err(Error::InvalidN { n, reason: "N must not be an exceptional degree of the family" });
    }
    if n > crate::special_polys::MAX_DEGREE {
        return Err(Error::DegreeCap(n));
    }
    Ok(())
}

/// Requires `Ω` strictly inside the family interval.
pub fn validate_omega(fam: &PolyFamily, omega: f64) -> Result<()> {
    if fam.contains(omega) {
        Ok(())
    } else {
        let (a, b) = fam.interval();
        Err(Error::InvalidOmega { omega, a, b })
    }
}

fn validate_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidTolerance(tol))
    }
}

/// Lower integration limit for integrals up to `omega` involving degrees ≤ `degree`.
fn lower_limit(fam: &PolyFamily, degree: usize, omega: f64, tol: f64) -> f64 {
    match fam.kind() {
        FamilyKind::XHermite => (-lower_cutoff(fam, degree, tol / 10.0)).min(omega - 1.0),
        FamilyKind::XLaguerre => 0.0,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix {
    pub family: PolyFamily,
    pub n: usize,
    pub omega: f64,
    pub tol: f64,
    /// Symmetric `(N+1) × (N+1)` matrix with zero rows/columns at exceptional degrees.
    pub entries: DMatrix<f64>,
}

pub fn gram_matrix(fam: &PolyFamily, n: usize, omega: f64, tol: f64) -> Result<GramMatrix> {
    validate_n(fam, n)?;
    validate_omega(fam, omega)?;
    validate_tol(tol)?;
    let lo = lower_limit(fam, n, omega, tol);
    let degrees = fam.regular_degrees(n);
    let pairs: Vec<(usize, usize)> = degrees
        .iter()
        .enumerate()
        .flat_map(|(i, &m)| degrees[i..].iter().map(move |&k| (m, k)))
        .collect();
    let values: Vec<f64> = pairs
        .par_iter()
        .map(|&(m, k)| {
            let f = |x: f64| {
                let w = weight(fam, x).unwrap_or(0.0);
                match (q_eval(fam, m, x), q_eval(fam, k, x)) {
                    (Ok(a), Ok(b)) => a * b * w,
                    _ => f64::NAN,
                }
            };
            integrate_adaptive(f, lo, omega, tol).map(|(v, _)| v)
        })
        .collect::<Result<_>>()?;
    let mut entries = DMatrix::zeros(n + 1, n + 1);
    for (&(m, k), v) in pairs.iter().zip(values) {
        entries[(m, k)] = v;
        entries[(k, m)] = v;
    }
    Ok(GramMatrix { family: *fam, n, omega, tol, entries })
}

impl GramMatrix {
    /// Drops exceptional rows/columns; returns the dense block and the kept indices.
    pub fn compress(&self) -> (DMatrix<f64>, Vec<usize>) {
        let removed = self.family.exceptional_set();
        let keep = (0..=self.n).filter(|i| !removed.contains(i)).collect();
        (compress_dense(&self.entries, removed), keep)
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.entries.row_iter().map(|r| r.iter().copied().collect()).collect()
    }

    pub fn to_csv(&self) -> String {
        crate::report::to_csv(&self.rows())
    }
}

impl Serialize for GramMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let alpha = self.family.alpha();
        let mut st = s.serialize_struct("GramMatrix", 6)?;
        st.serialize_field("family", self.family.name())?;
        if let Some(a) = alpha {
            st.serialize_field("alpha", &a)?;
        } else {
            st.skip_field("alpha")?;
        }
        st.serialize_field("N", &self.n)?;
        st.serialize_field("omega", &self.omega)?;
        st.serialize_field("tol", &self.tol)?;
        st.serialize_field("entries", &self.rows())?;
        st.end()
    }
}

/// `max |⟨q_m, q_n⟩ - δ_mn|` over regular `m, n ≤ n_max`, integrating over
/// the whole interval (cut where the weight tail drops below `1e-14`).
pub fn orthonormality_defect(fam: &PolyFamily, n_max: usize, tol: f64) -> Result<f64> {
    let top = crate::quadrature::upper_cutoff(fam, n_max, 1e-14);
    let (c, _) = gram_matrix(fam, n_max, top, tol)?.compress();
    let size = c.nrows();
    Ok((c - DMatrix::identity(size, size)).abs().max())
}

/// `k(x, y) = Σ_{n ∈ Z, n ≤ N} q_n(x) q_n(y)`.
pub fn kernel_eval(fam: &PolyFamily, n: usize, x: f64, y: f64) -> Result<f64> {
    fam.check_domain(x)?;
    fam.check_domain(y)?;
    let mut s = 0.0;
    for k in fam.regular_degrees(n) {
        s += q_eval(fam, k, x)? * q_eval(fam, k, y)?;
    }
    Ok(s)
}

/// `(S f)(x) = ∫_a^Ω f(y) w(y) k(x, y) dy`.
///
/// The Hermite lower limit is the cutoff for degree `max(N, 16)`, which
/// leaves room for test functions of moderate degree beyond the time limit.
pub fn apply_s<F: Fn(f64) -> f64>(fam: &PolyFamily, n: usize, omega: f64, f: F, x: f64, tol: f64) -> Result<f64> {
    validate_omega(fam, omega)?;
    validate_tol(tol)?;
    fam.check_domain(x)?;
    let lo = lower_limit(fam, n.max(16), omega, tol);
    let degrees = fam.regular_degrees(n);
    let qx: Vec<f64> = degrees.iter().map(|&k| q_eval(fam, k, x)).collect::<Result<_>>()?;
    let integrand = |y: f64| {
        let mut k = 0.0;
        for (&d, &a) in degrees.iter().zip(&qx) {
            k += a * q_eval(fam, d, y).unwrap_or(f64::NAN);
        }
        f(y) * weight(fam, y).unwrap_or(0.0) * k
    };
    integrate_adaptive(integrand, lo, omega, tol).map(|(v, _)| v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::upper_cutoff;
    use crate::spectral::eigh;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn hermite_half_line_norm() {
        let h = PolyFamily::xhermite();
        let g = gram_matrix(&h, 5, 0.0, 1e-12).unwrap();
        assert!((g.entries[(0, 0)] - 0.5).abs() < 1e-11);
        for r in [1, 2] {
            assert!(g.entries.row(r).iter().all(|&v| v == 0.0));
            assert!(g.entries.column(r).iter().all(|&v| v == 0.0));
        }
        assert_eq!(g.entries, g.entries.transpose());
        let (c, keep) = g.compress();
        assert_eq!(c.shape(), (4, 4));
        assert_eq!(keep, vec![0, 3, 4, 5]);
    }

    #[test]
    fn full_interval_gives_identity() {
        let h = PolyFamily::xhermite();
        let g = gram_matrix(&h, 10, upper_cutoff(&h, 10, 1e-14), 1e-12).unwrap();
        let (c, _) = g.compress();
        assert!((c - DMatrix::identity(9, 9)).abs().max() < 1e-9);

        let l = PolyFamily::xlaguerre(1.3).unwrap();
        let g = gram_matrix(&l, 8, upper_cutoff(&l, 8, 1e-14), 1e-12).unwrap();
        let (c, keep) = g.compress();
        assert_eq!(keep, (1..=8).collect::<Vec<_>>());
        assert!((c - DMatrix::identity(8, 8)).abs().max() < 1e-9);
        assert!(orthonormality_defect(&l, 8, 1e-12).unwrap() < 1e-9);
    }

    #[test]
    fn laguerre_row_zero() {
        let l = PolyFamily::xlaguerre(1.3).unwrap();
        let g = gram_matrix(&l, 5, 0.7, 1e-12).unwrap();
        assert_eq!(g.entries.shape(), (6, 6));
        assert!(g.entries.row(0).iter().all(|&v| v == 0.0));
        assert!(g.entries[(1, 1)] > 0.0);
    }

    #[test]
    fn invalid_inputs() {
        let h = PolyFamily::xhermite();
        assert!(matches!(gram_matrix(&h, 1, 0.0, 1e-12), Err(Error::InvalidN { .. })));
        assert!(matches!(gram_matrix(&h, 2, 0.0, 1e-12), Err(Error::InvalidN { .. })));
        assert!(matches!(gram_matrix(&h, 5, f64::INFINITY, 1e-12), Err(Error::InvalidOmega { .. })));
        let l = PolyFamily::xlaguerre(1.0).unwrap();
        assert!(matches!(gram_matrix(&l, 0, 1.0, 1e-12), Err(Error::InvalidN { .. })));
        assert!(matches!(gram_matrix(&l, 4, 0.0, 1e-12), Err(Error::InvalidOmega { .. })));
        assert!(matches!(gram_matrix(&l, 4, 1.0, -1.0), Err(Error::InvalidTolerance(_))));
    }

    #[test]
    fn kernel_examples() {
        let h = PolyFamily::xhermite();
        let c = 2.0 / std::f64::consts::PI.sqrt();
        for (x, y) in [(0.1, -2.0), (1.5, 0.3)] {
            assert_relative_eq!(kernel_eval(&h, 0, x, y).unwrap(), c, epsilon = 1e-14);
            assert_eq!(kernel_eval(&h, 2, x, y).unwrap(), kernel_eval(&h, 0, x, y).unwrap());
            assert_eq!(kernel_eval(&h, 9, x, y).unwrap(), kernel_eval(&h, 9, y, x).unwrap());
        }
        assert!(kernel_eval(&PolyFamily::xlaguerre(1.0).unwrap(), 3, -1.0, 1.0).is_err());
    }

    #[test]
    fn integral_operator() {
        let h = PolyFamily::xhermite();
        let big = upper_cutoff(&h, 16, 1e-14);
        for x in [-0.7, 0.4] {
            let q4 = |y: f64| q_eval(&h, 4, y).unwrap();
            let s = apply_s(&h, 6, big, q4, x, 1e-12).unwrap();
            assert!((s - q4(x)).abs() < 1e-8);
            let q9 = |y: f64| q_eval(&h, 9, y).unwrap();
            assert!(apply_s(&h, 6, big, q9, x, 1e-12).unwrap().abs() < 1e-8);
        }
        let omega = 0.5;
        let a = apply_s(&h, 0, omega, |_| 1.0, -1.0, 1e-12).unwrap();
        let b = apply_s(&h, 0, omega, |_| 1.0, 2.0, 1e-12).unwrap();
        let lo = -lower_cutoff(&h, 16, 1e-13);
        let (wint, _) = integrate_adaptive(|y| weight(&h, y).unwrap(), lo, omega, 1e-13).unwrap();
        assert_relative_eq!(a, 2.0 / std::f64::consts::PI.sqrt() * wint, epsilon = 1e-11);
        assert_relative_eq!(a, b, epsilon = 1e-12);
    }

    #[test]
    fn trace_matches_kernel_diagonal() {
        for (fam, n, omega) in [(PolyFamily::xhermite(), 9, 0.4), (PolyFamily::xlaguerre(0.5).unwrap(), 7, 2.0)] {
            let g = gram_matrix(&fam, n, omega, 1e-12).unwrap();
            let lo = lower_limit(&fam, n, omega, 1e-12);
            let (kint, _) = integrate_adaptive(
                |x| kernel_eval(&fam, n, x, x).unwrap() * weight(&fam, x).unwrap(),
                lo,
                omega,
                1e-12,
            )
            .unwrap();
            assert!((g.entries.trace() - kint).abs() < 2e-9);
        }
    }

    #[test]
    fn json_and_csv() {
        let l = PolyFamily::xlaguerre(1.3).unwrap();
        let g = gram_matrix(&l, 3, 0.7, 1e-12).unwrap();
        let v: serde_json::Value = serde_json::from_str(&crate::report::to_json_string(&g).unwrap()).unwrap();
        assert_eq!(v["family"], "xlaguerre");
        assert_eq!(v["N"], 3);
        assert_eq!(v["entries"].as_array().unwrap().len(), 4);
        assert_eq!(v["entries"][1][1].as_f64().unwrap(), g.entries[(1, 1)]);
        let h = gram_matrix(&PolyFamily::xhermite(), 3, 0.7, 1e-12).unwrap();
        let v: serde_json::Value = serde_json::to_value(&h).unwrap();
        assert!(v.get("alpha").is_none());
        assert_eq!(g.to_csv().lines().count(), 4);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]
        #[test]
        fn contraction_and_monotone(n in prop::sample::select(vec![0usize, 3, 6, 10, 15, 20]), o1 in -2.0f64..2.0, d in 0.0f64..1.5, lag in any::<bool>()) {
            let (fam, o1) = if lag { (PolyFamily::xlaguerre(1.3).unwrap(), o1 + 2.5) } else { (PolyFamily::xhermite(), o1) };
            let n = if lag && n == 0 { 1 } else { n };
            let g1 = gram_matrix(&fam, n, o1, 1e-12).unwrap();
            let g2 = gram_matrix(&fam, n, o1 + d, 1e-12).unwrap();
            let (c, _) = g1.compress();
            let (vals, _) = eigh(&c).unwrap();
            prop_assert!(vals.iter().all(|&v| (-1e-10..=1.0 + 1e-10).contains(&v)));
            prop_assert!(g1.entries.trace() <= g2.entries.trace() + 1e-10);
        }
    }
}
