//! The operator commuting with time-and-band limiting, in its banded form `Ť`
//! and its differential form `T = w^{-1/2} (Σ ∂^j f_j ∂^j) w^{1/2}`, together
//! with the checks tying the two to each other and to the Gram matrix.

mod differential;
mod perline;
mod tables;

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::diffops::{band_sum, compress_dense, BandedOperator, Transcription};
use crate::error::{Error, Result};
use crate::gram::{validate_n, validate_omega, GramMatrix};
use crate::jets::{Jet, JET_ORDER};
use crate::special_polys::{q_eval, q_jet, weight_sqrt_jet, FamilyKind, PolyFamily};
use crate::spectral::eigh;

pub use differential::{apply_d, f_coeff_jet};
pub use perline::{hermite_y_words, laguerre_y_words, perline_terms, y_words, Word};

/// Banded and differential representations of the commuting operator for
/// one `(family, N, Ω)`.
#[derive(Debug, Clone)]
pub struct CommutingPair {
    pub family: PolyFamily,
    pub n: usize,
    pub omega: f64,
    pub transcription: Transcription,
    pub that: BandedOperator,
}

impl CommutingPair {
    pub fn new(fam: &PolyFamily, n: usize, omega: f64, tr: Transcription) -> Result<Self> {
        let that = perline_that_with(fam, n, omega, tr)?;
        Ok(Self { family: *fam, n, omega, transcription: tr, that })
    }

    /// Half-order `d` of `T`, equal to the bandwidth `k` of `Ť`.
    pub fn d(&self) -> usize {
        self.family.half_order()
    }

    pub fn f_coeff_jet(&self, j: usize, x: f64) -> Result<Jet> {
        f_coeff_jet(&self.family, self.n, self.omega, j, x, self.transcription)
    }

    /// `(T g)(x)` for a jet `g` at `x`, exact through order `2d`.
    pub fn apply_t(&self, g: &Jet, x: f64) -> Result<f64> {
        let d = self.d();
        let ws = weight_sqrt_jet(&self.family, x, JET_ORDER)?;
        let h = ws.try_mul(g)?;
        let mut acc = 0.0;
        for j in 0..=d {
            let inner = self.f_coeff_jet(j, x)? * h.nth_derivative(j);
            acc += inner.nth_derivative(j).value();
        }
        Ok(acc / ws.value())
    }

    /// `(Ť q)_n(x) = Σ_i Ť(n, i) q_{n+i}(x)`.
    pub fn banded_action(&self, n: usize, x: f64) -> Result<f64> {
        banded_action(&self.that, &self.family, n, x)
    }

    /// Same as [`apply_t`](Self::apply_t) but through the operator words
    /// directly, a third independent evaluation of `T q_n(x)`.
    pub fn apply_words(&self, g: &Jet) -> Result<f64> {
        let mut acc = 0.0;
        for (c, w) in perline_terms(&self.family, self.n, self.omega, self.transcription) {
            acc += c * w.apply(&self.family, g)?.value();
        }
        Ok(acc)
    }
}

/// `Σ_i A(n, i) q_{n+i}(x)`.
pub fn banded_action(a: &BandedOperator, fam: &PolyFamily, n: usize, x: f64) -> Result<f64> {
    let k = a.bandwidth() as isize;
    let mut s = 0.0;
    for i in -k..=k {
        let m = n as isize + i;
        if m >= 0 {
            let e = a.entry(n, i);
            if e != 0.0 {
                s += e * q_eval(fam, m as usize, x)?;
            }
        }
    }
    Ok(s)
}

fn validate(fam: &PolyFamily, n: usize, omega: f64) -> Result<()> {
    validate_n(fam, n)?;
    validate_omega(fam, omega)
}

/// The commuting banded operator `Ť` for `(N, Ω)`.
pub fn perline_that(fam: &PolyFamily, n: usize, omega: f64) -> Result<BandedOperator> {
    perline_that_with(fam, n, omega, Transcription::Verified)
}

pub fn perline_that_with(fam: &PolyFamily, n: usize, omega: f64, tr: Transcription) -> Result<BandedOperator> {
    validate(fam, n, omega)?;
    let terms = perline_terms(fam, n, omega, tr)
        .into_iter()
        .map(|(c, w)| Ok((c, w.operator(fam, tr)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(band_sum(&terms))
}

/// Max over `n ∈ Z ∩ [0, n_max]` and `x ∈ grid` of
/// `|D_j q_n(x) - (L_j q)_n(x)| / (1 + |q_n(x)|)`.
pub fn verify_pair(fam: &PolyFamily, j: usize, n_max: usize, grid: &[f64], tr: Transcription) -> Result<f64> {
    let l = crate::diffops::builtin_l(fam, j, tr)?;
    let mut worst: f64 = 0.0;
    for n in fam.regular_degrees(n_max) {
        for &x in grid {
            let q = q_jet(fam, n, x, JET_ORDER)?;
            let lhs = apply_d(fam, j, &q)?.value();
            let rhs = banded_action(&l, fam, n, x)?;
            worst = worst.max((lhs - rhs).abs() / (1.0 + q.value().abs()));
        }
    }
    Ok(worst)
}

/// Max over `n ∈ Z ∩ [0, n_max]` and `x ∈ grid` of
/// `|T q_n(x) - (Ť q)_n(x)|` with `T` in differential form, divided by
/// `1 + |q_n(x)|`, plus `cancellation` times `Σ_i |Ť(n, i) q_{n+i}(x)|`.
///
/// A positive `cancellation` accounts for rounding in the banded sum when its
/// terms are much larger than the result: against a threshold `t`, the
/// absolute error allowed from that source is `t · cancellation · Σ|…|`.
pub fn cross_representation_residual(pair: &CommutingPair, n_max: usize, grid: &[f64], cancellation: f64) -> Result<f64> {
    let fam = &pair.family;
    let k = pair.that.bandwidth() as isize;
    let mut worst: f64 = 0.0;
    for &x in grid {
        for n in fam.regular_degrees(n_max) {
            let q = q_jet(fam, n, x, JET_ORDER)?;
            let diff = pair.apply_t(&q, x)?;
            let mut banded = 0.0;
            let mut mass = 0.0;
            for i in -k..=k {
                let m = n as isize + i;
                if m >= 0 {
                    let e = pair.that.entry(n, i);
                    if e != 0.0 {
                        let term = e * q_eval(fam, m as usize, x)?;
                        banded += term;
                        mass += term.abs();
                    }
                }
            }
            let scale = 1.0 + q.value().abs() + cancellation * mass;
            worst = worst.max((diff - banded).abs() / scale);
        }
    }
    Ok(worst)
}

/// `‖AM - MA‖_F / (‖A‖_F ‖M‖_F)` on the compressed `(N+1)`-blocks.
pub fn commutator_residual(that: &BandedOperator, m: &GramMatrix) -> Result<f64> {
    let (mc, _) = m.compress();
    let a = that.compress(m.family.exceptional_set(), m.n + 1);
    relative_commutator(&a, &mc)
}

fn relative_commutator(a: &DMatrix<f64>, m: &DMatrix<f64>) -> Result<f64> {
    if a.shape() != m.shape() {
        return Err(Error::SizeMismatch(format!("{:?} vs {:?}", a.shape(), m.shape())));
    }
    let den = a.norm() * m.norm();
    if den == 0.0 {
        return Ok(0.0);
    }
    Ok((a * m - m * a).norm() / den)
}

/// Max over `j ≤ d`, `i < j` of `|f_j^{(i)}(Ω)|`, each `f_j` scaled by its
/// maximum modulus on `[Ω - 1, Ω]` (Laguerre: `[max(Ω - 1, Ω/2), Ω]`).
pub fn check_cond1(pair: &CommutingPair) -> Result<f64> {
    let omega = pair.omega;
    let lo = match pair.family.kind() {
        FamilyKind::XHermite => omega - 1.0,
        FamilyKind::XLaguerre => (omega - 1.0).max(0.5 * omega),
    };
    let mut worst: f64 = 0.0;
    for j in 1..=pair.d() {
        let scale = (0..=100)
            .map(|k| lo + (omega - lo) * k as f64 / 100.0)
            .map(|x| pair.f_coeff_jet(j, x).map(|f| f.value().abs()))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .fold(0.0f64, f64::max);
        let at = pair.f_coeff_jet(j, omega)?;
        for i in 0..j {
            let v = at.derivative_extract(i)?.abs();
            worst = worst.max(if scale > 0.0 { v / scale } else { v });
        }
    }
    Ok(worst)
}

/// Largest entry `(i, j)` with `j ∈ N+1..=N+k`, `i ∈ j-k..=N`, relative to the
/// largest entry of the `(N+1+k)`-block.
pub fn check_cond2(that: &BandedOperator, n: usize) -> f64 {
    let k = that.bandwidth();
    let b = that.finite_block(n + 1 + k);
    let scale = b.abs().max();
    let mut worst: f64 = 0.0;
    for j in n + 1..=n + k {
        for i in j.saturating_sub(k)..=n {
            worst = worst.max(b[(i, j)].abs());
        }
    }
    if scale > 0.0 {
        worst / scale
    } else {
        worst
    }
}

/// Banded images of the candidate operator set of the family.
pub fn y_set(fam: &PolyFamily, tr: Transcription) -> Result<Vec<BandedOperator>> {
    y_words(fam).iter().map(|w| w.operator(fam, tr)).collect()
}

pub fn hermite_y_set(tr: Transcription) -> Result<Vec<BandedOperator>> {
    y_set(&PolyFamily::xhermite(), tr)
}

pub fn laguerre_y_set(alpha: f64, tr: Transcription) -> Result<Vec<BandedOperator>> {
    y_set(&PolyFamily::xlaguerre(alpha)?, tr)
}

/// Numerical rank of the operators' vectorized `block × block` sections:
/// singular values above `1e-9` times the largest.
///
/// Rows are normalized first, since the operators differ in scale by many
/// orders of magnitude and a raw rank test would measure scale, not
/// independence.
pub fn independence_rank(ops: &[BandedOperator], block: usize) -> usize {
    if ops.is_empty() || block == 0 {
        return 0;
    }
    let cols = block * block;
    let mut r = DMatrix::zeros(ops.len(), cols);
    for (i, op) in ops.iter().enumerate() {
        let b = op.finite_block(block);
        let norm = b.norm();
        if norm > 0.0 {
            for (k, v) in b.iter().enumerate() {
                r[(i, k)] = v / norm;
            }
        }
    }
    let sv = r.singular_values();
    let top = sv.max();
    if top == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > 1e-9 * top).count()
}

/// Max over samples of `|T_x k(x, y) - T_y k(x, y)| / (1 + |k(x, y)|)`,
/// with `T` applied to each `q_n` through its differential form.
pub fn kernel_symmetry_residual(pair: &CommutingPair, samples: &[(f64, f64)]) -> Result<f64> {
    let fam = &pair.family;
    let degrees = fam.regular_degrees(pair.n);
    let t_and_q = |x: f64| -> Result<Vec<(f64, f64)>> {
        degrees
            .iter()
            .map(|&n| {
                let q = q_jet(fam, n, x, JET_ORDER)?;
                Ok((pair.apply_t(&q, x)?, q.value()))
            })
            .collect()
    };
    let mut worst: f64 = 0.0;
    for &(x, y) in samples {
        let (tx, ty) = (t_and_q(x)?, t_and_q(y)?);
        let (mut lhs, mut rhs, mut k) = (0.0, 0.0, 0.0);
        for (a, b) in tx.iter().zip(&ty) {
            lhs += a.0 * b.1;
            rhs += a.1 * b.0;
            k += a.1 * b.1;
        }
        worst = worst.max((lhs - rhs).abs() / (1.0 + k.abs()));
    }
    Ok(worst)
}

/// Reproducible sample pairs inside `[lo, hi]²`.
pub fn sample_pairs(count: usize, lo: f64, hi: f64, seed: u64) -> Vec<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| (rng.random_range(lo..hi), rng.random_range(lo..hi))).collect()
}

/// Evenly spaced grid of `count` points on `[lo, hi]`.
pub fn linspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    match count {
        0 => vec![],
        1 => vec![lo],
        _ => (0..count).map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GenericSolution {
    /// Unit-norm coefficients over the basis, largest entry positive.
    pub coefficients: Vec<f64>,
    /// `‖[A, M]‖_F / (‖A‖_F ‖M‖_F)` for `A = Σ c_i A_i` with the identity part removed.
    pub residual: f64,
    /// Smallest eigenvalue of the whitened normal-equations matrix.
    pub min_eigenvalue: f64,
    /// Dimension of the search space after removing the identity and dependencies.
    pub rank: usize,
    /// Whether the combination keeps a traceless part, i.e. is not a multiple of the identity.
    pub nonscalar: bool,
}

/// Finds the combination of `basis` whose compressed block, with the
/// identity component projected out, best commutes with `M`.
///
/// Each block is replaced by its traceless part, the traceless blocks are
/// whitened (directions with Gram eigenvalue below `1e-10` of the largest are
/// dropped), and the smallest eigenvector of the whitened normal matrix of
/// `c ↦ [Σ c_i A_i, M]` gives the minimizer. `tol` is the certification
/// threshold; the residual is returned either way and compared by callers.
pub fn solve_commuting_generic(basis: &[BandedOperator], m: &GramMatrix, tol: f64) -> Result<GenericSolution> {
    if basis.is_empty() {
        return Err(Error::EmptyBasis);
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidTolerance(tol));
    }
    let (mc, _) = m.compress();
    let size = mc.nrows();
    let removed = m.family.exceptional_set();
    let mut blocks = Vec::with_capacity(basis.len());
    for op in basis {
        let a = op.compress(removed, m.n + 1);
        let asym = (&a - a.transpose()).abs().max();
        if asym > 1e-12 * a.abs().max().max(f64::MIN_POSITIVE) {
            return Err(Error::NotSymmetric(asym / a.abs().max()));
        }
        let shift = a.trace() / size as f64;
        blocks.push(a - DMatrix::identity(size, size) * shift);
    }
    // unit-norm columns so that the dependency threshold compares directions, not scales
    let scales: Vec<f64> = blocks.iter().map(|b| b.norm()).collect();
    let unit: Vec<DMatrix<f64>> =
        blocks.iter().zip(&scales).map(|(b, &s)| if s > 0.0 { b / s } else { b.clone() }).collect();
    let nb = blocks.len();
    let gram = DMatrix::from_fn(nb, nb, |i, j| unit[i].dot(&unit[j]));
    let (gvals, gvecs) = eigh(&gram)?;
    let gmax = gvals.iter().cloned().fold(0.0f64, f64::max);
    let keep: Vec<usize> = (0..nb).filter(|&i| gvals[i] > 1e-10 * gmax).collect();
    if keep.is_empty() {
        return Err(Error::NoCandidate);
    }
    // columns of W: eigenvectors scaled by λ^{-1/2}
    let w = DMatrix::from_fn(nb, keep.len(), |r, c| gvecs[(r, keep[c])] / gvals[keep[c]].sqrt());
    let comms: Vec<DMatrix<f64>> = unit.iter().map(|a| a * &mc - &mc * a).collect();
    let normal = DMatrix::from_fn(nb, nb, |i, j| comms[i].dot(&comms[j]));
    let reduced = w.transpose() * &normal * &w;
    let reduced = (&reduced + reduced.transpose()) * 0.5;
    let (vals, vecs) = eigh(&reduced)?;
    let y = vecs.column(0).into_owned();
    let u: DVector<f64> = &w * y;
    let mut c = DVector::from_fn(nb, |i, _| if scales[i] > 0.0 { u[i] / scales[i] } else { 0.0 });
    c /= c.norm();
    let imax = c.iamax();
    if c[imax] < 0.0 {
        c = -c;
    }
    let combo = blocks.iter().zip(c.iter()).fold(DMatrix::zeros(size, size), |acc, (a, &ci)| acc + a * ci);
    let residual = relative_commutator(&combo, &mc)?;
    let reach: f64 = c.iter().zip(&scales).map(|(ci, s)| ci.abs() * s).sum();
    let nonscalar = combo.norm() > 1e-8 * reach;
    Ok(GenericSolution {
        coefficients: c.iter().copied().collect(),
        residual,
        min_eigenvalue: vals[0],
        rank: keep.len(),
        nonscalar,
    })
}

/// Serializable summary of a commuting-operator construction.
#[derive(Debug, Clone, Serialize)]
pub struct CommutingReport {
    pub family: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(rename = "N")]
    pub n: usize,
    pub omega: f64,
    pub transcription: Transcription,
    pub bandwidth: usize,
    #[serde(rename = "That_block")]
    pub that_block: Vec<Vec<f64>>,
    pub cond1_residual: f64,
    pub cond2_residual: f64,
    pub commutator_residual: f64,
}

pub fn commuting_report(pair: &CommutingPair, m: &GramMatrix) -> Result<CommutingReport> {
    let k = pair.that.bandwidth();
    let b = pair.that.finite_block(pair.n + 1 + k);
    Ok(CommutingReport {
        family: pair.family.name(),
        alpha: pair.family.alpha(),
        n: pair.n,
        omega: pair.omega,
        transcription: pair.transcription,
        bandwidth: k,
        that_block: b.row_iter().map(|r| r.iter().copied().collect()).collect(),
        cond1_residual: check_cond1(pair)?,
        cond2_residual: check_cond2(&pair.that, pair.n),
        commutator_residual: commutator_residual(&pair.that, m)?,
    })
}

/// Dense compressed `(N+1)`-block of `Ť`.
pub fn compressed_that(pair: &CommutingPair) -> DMatrix<f64> {
    compress_dense(&pair.that.finite_block(pair.n + 1), pair.family.exceptional_set())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffops::effective_bandwidth;
    use crate::gram::gram_matrix;

    fn pair(fam: PolyFamily, n: usize, omega: f64) -> CommutingPair {
        CommutingPair::new(&fam, n, omega, Transcription::Verified).unwrap()
    }

    #[test]
    fn bandwidths_and_symmetry() {
        let p = pair(PolyFamily::xhermite(), 12, 0.3);
        assert_eq!(p.that.bandwidth(), 3);
        let b = p.that.finite_block(40);
        assert_eq!(effective_bandwidth(&b), 3);
        assert!((&b - b.transpose()).abs().max() <= 1e-12 * b.abs().max());
        let p = pair(PolyFamily::xlaguerre(1.3).unwrap(), 10, 0.7);
        assert_eq!(p.that.bandwidth(), 2);
        let b = p.that.finite_block(30);
        assert!(p.that.is_symmetric());
        assert!((&b - b.transpose()).abs().max() <= 1e-12 * b.abs().max());
    }

    #[test]
    fn cond2_examples() {
        let p = pair(PolyFamily::xhermite(), 12, 0.3);
        assert!(check_cond2(&p.that, 12) < 1e-9);
        let p = pair(PolyFamily::xlaguerre(1.3).unwrap(), 10, 3.0);
        assert!(check_cond2(&p.that, 10) < 1e-9);
        let bad = CommutingPair::new(&PolyFamily::xlaguerre(1.3).unwrap(), 10, 3.0, Transcription::AsPrinted).unwrap();
        assert!(check_cond2(&bad.that, 10) > 1e-6);
    }

    #[test]
    fn cond1_examples() {
        for (fam, n, o) in [(PolyFamily::xhermite(), 12, 0.3), (PolyFamily::xlaguerre(0.5).unwrap(), 5, 0.7)] {
            let p = pair(fam, n, o);
            assert!(check_cond1(&p).unwrap() < 1e-10);
        }
    }

    #[test]
    fn verify_pair_examples() {
        let h = PolyFamily::xhermite();
        let grid = linspace(-2.5, 2.5, 50);
        for j in 0..4 {
            let r = verify_pair(&h, j, 20, &grid, Transcription::Verified).unwrap();
            assert!(r < 1e-8, "j = {j}: {r}");
        }
        assert!(verify_pair(&h, 1, 20, &grid, Transcription::AsPrinted).unwrap() > 1e-3);
        let l = PolyFamily::xlaguerre(1.3).unwrap();
        let grid = linspace(0.1, 6.0, 50);
        for j in 0..3 {
            let r = verify_pair(&l, j, 20, &grid, Transcription::Verified).unwrap();
            assert!(r < 1e-8, "j = {j}: {r}");
        }
        assert!(verify_pair(&l, 3, 5, &grid, Transcription::Verified).is_err());
    }

    #[test]
    fn three_representations_agree() {
        let cases = [
            (PolyFamily::xhermite(), 12, 0.3, -2.0, 2.0),
            (PolyFamily::xhermite(), 5, -1.0, -2.0, 2.0),
            (PolyFamily::xhermite(), 20, 2.0, -2.0, 2.0),
            (PolyFamily::xlaguerre(1.3).unwrap(), 10, 0.7, 0.2, 5.0),
            (PolyFamily::xlaguerre(0.5).unwrap(), 5, 3.0, 0.2, 5.0),
            (PolyFamily::xlaguerre(2.7).unwrap(), 8, 1.5, 0.2, 5.0),
        ];
        for (i, (fam, n, o, lo, hi)) in cases.into_iter().enumerate() {
            let p = pair(fam, n, o);
            let grid = linspace(lo, hi, 20);
            // the first setting of each family is held to the plain bound
            let cancellation = if i == 0 || i == 3 { 0.0 } else { 1e-5 };
            let r = cross_representation_residual(&p, 15, &grid, cancellation).unwrap();
            assert!(r < 1e-7, "{} N={n} Ω={o}: {r:e}", fam.name());
            for &x in &grid {
                for k in fam.regular_degrees(15) {
                    let q = q_jet(&fam, k, x, JET_ORDER).unwrap();
                    let diff = p.apply_t(&q, x).unwrap();
                    let words = p.apply_words(&q).unwrap();
                    assert!((words - diff).abs() < 1e-9 * (1.0 + diff.abs()), "{} words k={k} x={x}", fam.name());
                }
            }
        }
    }

    #[test]
    fn exceptional_inputs_map_to_zero() {
        let p = pair(PolyFamily::xhermite(), 12, 0.3);
        let q = q_jet(&p.family, 1, 0.4, JET_ORDER).unwrap();
        assert_eq!(p.apply_t(&q, 0.4).unwrap(), 0.0);
        // q_0 only couples to degrees within the band
        assert_eq!(p.that.entry(0, 4), 0.0);
    }

    #[test]
    fn commutation_examples() {
        let h = PolyFamily::xhermite();
        let m = gram_matrix(&h, 12, 0.3, 1e-12).unwrap();
        let p = pair(h, 12, 0.3);
        assert!(commutator_residual(&p.that, &m).unwrap() < 1e-8);
        let id = GramMatrix { entries: DMatrix::identity(13, 13), ..m.clone() };
        assert_eq!(commutator_residual(&p.that, &id).unwrap(), 0.0);

        let l = PolyFamily::xlaguerre(1.3).unwrap();
        let m = gram_matrix(&l, 10, 0.7, 1e-12).unwrap();
        let p = pair(l, 10, 0.7);
        assert!(commutator_residual(&p.that, &m).unwrap() < 1e-8);
        let bad = CommutingPair::new(&l, 10, 0.7, Transcription::AsPrinted).unwrap();
        assert!(commutator_residual(&bad.that, &m).unwrap() > 1e-6);
    }

    #[test]
    fn kernel_symmetry() {
        let p = pair(PolyFamily::xhermite(), 12, 0.3);
        assert_eq!(kernel_symmetry_residual(&p, &[(0.5, 0.5)]).unwrap(), 0.0);
        let r = kernel_symmetry_residual(&p, &sample_pairs(10, -2.0, 2.0, 11)).unwrap();
        assert!(r < 1e-6, "{r}");
        // N = 0: single term, both sides Ť_00 q_0(x) q_0(y)
        let p0 = pair(PolyFamily::xhermite(), 0, 0.3);
        let (x, y) = (0.2, -0.9);
        let q = |t: f64| q_jet(&p0.family, 0, t, JET_ORDER).unwrap();
        let tx = p0.apply_t(&q(x), x).unwrap() * q(y).value();
        let want = p0.that.entry(0, 0) * 2.0 / std::f64::consts::PI.sqrt();
        assert!((tx - want).abs() <= 1e-9 * (1.0 + want.abs()));
    }

    #[test]
    fn ranks() {
        let hy = hermite_y_set(Transcription::Verified).unwrap();
        assert_eq!(independence_rank(&hy, 40), 14);
        let ly = laguerre_y_set(1.3, Transcription::Verified).unwrap();
        assert_eq!(independence_rank(&ly, 30), 8);
        let mut dup = ly.clone();
        dup.push(ly[3].clone());
        assert_eq!(independence_rank(&dup, 30), 8);
    }

    #[test]
    fn generic_solver() {
        let h = PolyFamily::xhermite();
        let m = gram_matrix(&h, 12, 0.3, 1e-12).unwrap();
        let p = pair(h, 12, 0.3);
        let one = solve_commuting_generic(std::slice::from_ref(&p.that), &m, 1e-8).unwrap();
        assert_eq!(one.coefficients, vec![1.0]);
        assert!(one.residual < 1e-8);

        let hy = hermite_y_set(Transcription::Verified).unwrap();
        let sol = solve_commuting_generic(&hy, &m, 1e-8).unwrap();
        assert!(sol.residual < 1e-8, "{}", sol.residual);
        assert!(sol.nonscalar);
        assert_eq!(sol.coefficients[0], 0.0);

        let l = PolyFamily::xlaguerre(1.3).unwrap();
        let ml = gram_matrix(&l, 10, 0.7, 1e-12).unwrap();
        let ly = laguerre_y_set(1.3, Transcription::Verified).unwrap();
        let sol = solve_commuting_generic(&ly, &ml, 1e-8).unwrap();
        assert!(sol.residual < 1e-8 && sol.nonscalar, "{}", sol.residual);

        assert_eq!(
            solve_commuting_generic(&[BandedOperator::identity()], &m, 1e-8).unwrap_err(),
            Error::NoCandidate
        );
        assert_eq!(solve_commuting_generic(&[], &m, 1e-8).unwrap_err(), Error::EmptyBasis);
    }

    #[test]
    fn invalid_construction() {
        let h = PolyFamily::xhermite();
        assert!(matches!(perline_that(&h, 2, 0.3), Err(Error::InvalidN { .. })));
        let l = PolyFamily::xlaguerre(1.0).unwrap();
        assert!(matches!(perline_that(&l, 5, -0.3), Err(Error::InvalidOmega { .. })));
        assert!(matches!(perline_that(&l, 0, 0.3), Err(Error::InvalidN { .. })));
    }
}
