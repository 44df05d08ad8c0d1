//! Banded semi-infinite matrices given by closed-form entry generators.
//!
//! Entry `(n, n + j)` of a [`BandedOperator`] of bandwidth `k` is produced on
//! demand for `|j| ≤ k`; nothing is stored, so operators have no intrinsic
//! size and finite blocks are materialized only when needed.

use std::fmt;
use std::sync::Arc;

use nalgebra::DMatrix;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::special_polys::{FamilyKind, PolyFamily};

type Generator = Arc<dyn Fn(usize, isize) -> f64 + Send + Sync>;

/// Which coefficient set to use for operator data that had to be corrected.
///
/// `Verified` is the default everywhere. `AsPrinted` keeps the uncorrected
/// values (the sign of the Hermite `L_1` and the Laguerre commuting-operator
/// coefficients) and exists as a negative control: verification is expected
/// to fail with it.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Transcription {
    #[default]
    Verified,
    AsPrinted,
}

#[derive(Clone)]
pub struct BandedOperator {
    bandwidth: usize,
    symmetric: bool,
    gen: Generator,
}

impl fmt::Debug for BandedOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BandedOperator")
            .field("bandwidth", &self.bandwidth)
            .field("symmetric", &self.symmetric)
            .finish_non_exhaustive()
    }
}

impl BandedOperator {
    /// Builds an operator from a generator `(n, j) ↦ entry(n, n + j)`.
    ///
    /// The generator is only called for `|j| ≤ bandwidth` and `n + j ≥ 0`.
    pub fn from_fn<F>(bandwidth: usize, symmetric: bool, f: F) -> Self
    where
        F: Fn(usize, isize) -> f64 + Send + Sync + 'static,
    {
        Self { bandwidth, symmetric, gen: Arc::new(f) }
    }

    pub fn diagonal<F>(f: F) -> Self
    where
        F: Fn(usize) -> f64 + Send + Sync + 'static,
    {
        Self::from_fn(0, true, move |n, _| f(n))
    }

    pub fn identity() -> Self {
        Self::diagonal(|_| 1.0)
    }

    pub fn zero() -> Self {
        Self::diagonal(|_| 0.0)
    }

    /// Marks the operator symmetric, e.g. a palindromic product of symmetric factors.
    pub(crate) fn assume_symmetric(mut self) -> Self {
        self.symmetric = true;
        self
    }

    pub fn bandwidth(&self) -> usize {
        self.bandwidth
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    /// Entry `(n, n + j)`; zero outside the band or below index 0.
    pub fn entry(&self, n: usize, j: isize) -> f64 {
        if j.unsigned_abs() > self.bandwidth || (n as isize + j) < 0 {
            0.0
        } else {
            (self.gen)(n, j)
        }
    }

    /// Entry at row `r`, column `c`.
    pub fn at(&self, r: usize, c: usize) -> f64 {
        self.entry(r, c as isize - r as isize)
    }

    /// Dense top-left `size × size` block.
    pub fn finite_block(&self, size: usize) -> DMatrix<f64> {
        let k = self.bandwidth;
        let mut m = DMatrix::zeros(size, size);
        for r in 0..size {
            for c in r.saturating_sub(k)..(r + k + 1).min(size) {
                m[(r, c)] = self.at(r, c);
            }
        }
        m
    }

    /// `(A c)_n = Σ_j entry(n, j) c_{n+j}`, treating entries of `c` beyond its
    /// length as zero. The output has the same length as `c`, so rows near
    /// the end miss contributions from the truncated tail.
    pub fn apply_to_coeffs(&self, c: &[f64]) -> Vec<f64> {
        let k = self.bandwidth as isize;
        (0..c.len())
            .map(|n| {
                (-k..=k)
                    .filter_map(|j| {
                        let m = n as isize + j;
                        (m >= 0 && (m as usize) < c.len()).then(|| self.entry(n, j) * c[m as usize])
                    })
                    .sum()
            })
            .collect()
    }

    /// Block of size `size` with the rows and columns listed in `removed` dropped.
    pub fn compress(&self, removed: &[usize], size: usize) -> DMatrix<f64> {
        compress_dense(&self.finite_block(size), removed)
    }

    /// Band entries of the top-left block in `(n, j, value)` form.
    pub fn to_rows(&self, size: usize) -> BandedRows {
        let k = self.bandwidth as isize;
        let mut rows = Vec::new();
        for n in 0..size {
            for j in -k..=k {
                let m = n as isize + j;
                if m >= 0 && (m as usize) < size {
                    rows.push((n, j, self.entry(n, j)));
                }
            }
        }
        BandedRows { bandwidth: self.bandwidth, size, rows }
    }
}

/// Serializable listing of a block of band entries.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BandedRows {
    pub bandwidth: usize,
    pub size: usize,
    pub rows: Vec<(usize, isize, f64)>,
}

/// Removes the given rows and columns from a square matrix.
pub fn compress_dense(m: &DMatrix<f64>, removed: &[usize]) -> DMatrix<f64> {
    let keep: Vec<usize> = (0..m.nrows()).filter(|i| !removed.contains(i)).collect();
    DMatrix::from_fn(keep.len(), keep.len(), |r, c| m[(keep[r], keep[c])])
}

pub fn compress_banded(a: &BandedOperator, removed: &[usize], size: usize) -> DMatrix<f64> {
    a.compress(removed, size)
}

/// Matrix product `AB`, of bandwidth `k_A + k_B`.
pub fn band_mul(a: &BandedOperator, b: &BandedOperator) -> BandedOperator {
    let (ka, kb) = (a.bandwidth as isize, b.bandwidth as isize);
    let (a, b) = (a.clone(), b.clone());
    BandedOperator::from_fn((ka + kb) as usize, false, move |n, j| {
        let lo = (-ka).max(j - kb).max(-(n as isize));
        let hi = ka.min(j + kb);
        let mut s = 0.0;
        for i in lo..=hi {
            let m = (n as isize + i) as usize;
            s += a.entry(n, i) * b.entry(m, j - i);
        }
        s
    })
}

pub fn band_add(a: &BandedOperator, b: &BandedOperator) -> BandedOperator {
    let k = a.bandwidth.max(b.bandwidth);
    let symmetric = a.symmetric && b.symmetric;
    let (a, b) = (a.clone(), b.clone());
    BandedOperator::from_fn(k, symmetric, move |n, j| a.entry(n, j) + b.entry(n, j))
}

pub fn band_scale(a: &BandedOperator, s: f64) -> BandedOperator {
    let a2 = a.clone();
    BandedOperator::from_fn(a.bandwidth, a.symmetric, move |n, j| s * a2.entry(n, j))
}

/// Linear combination `Σ c_i A_i`, summed in list order.
pub fn band_sum(terms: &[(f64, BandedOperator)]) -> BandedOperator {
    let k = terms.iter().map(|(_, a)| a.bandwidth).max().unwrap_or(0);
    let symmetric = terms.iter().all(|(_, a)| a.symmetric);
    let terms = terms.to_vec();
    BandedOperator::from_fn(k, symmetric, move |n, j| terms.iter().map(|(c, a)| c * a.entry(n, j)).sum())
}

/// `AB + BA`; symmetric whenever both factors are.
pub fn anticommutator(a: &BandedOperator, b: &BandedOperator) -> BandedOperator {
    let ab = band_mul(a, b);
    let ba = band_mul(b, a);
    let mut s = band_add(&ab, &ba);
    s.symmetric = a.symmetric && b.symmetric;
    s
}

/// Product of a list of operators, left to right.
pub fn band_product(ops: &[&BandedOperator]) -> BandedOperator {
    ops.iter().skip(1).fold((*ops.first().expect("non-empty product")).clone(), |acc, b| band_mul(&acc, b))
}

/// `√(Π factors)`, or `None` when the radicand is negative.
fn root(factors: &[f64]) -> Option<f64> {
    let p: f64 = factors.iter().product();
    (p >= 0.0).then(|| p.sqrt())
}

/// Wraps a raw band generator with the zero conventions: entries vanish when
/// the row or column is exceptional or a radicand is negative (`None`).
fn builtin<F>(fam: PolyFamily, bandwidth: usize, raw: F) -> BandedOperator
where
    F: Fn(f64, isize) -> Option<f64> + Send + Sync + 'static,
{
    BandedOperator::from_fn(bandwidth, true, move |n, j| {
        let m = (n as isize + j) as usize;
        if fam.is_exceptional(n) || fam.is_exceptional(m) {
            return 0.0;
        }
        raw(n as f64, j).unwrap_or(0.0)
    })
}

/// Banded partner `L_j` of the differential operator `D_j`, i.e.
/// `D_j q_n = Σ_i L_j(n, i) q_{n+i}`.
pub fn builtin_l(fam: &PolyFamily, j: usize, tr: Transcription) -> Result<BandedOperator> {
    let fam = *fam;
    let unknown = Error::UnknownOperator { j, family: fam.name() };
    let s2 = std::f64::consts::SQRT_2;
    match fam.kind() {
        FamilyKind::XHermite => match j {
            0 => Ok(builtin(fam, 0, |n, _| Some(-2.0 * n))),
            1 => {
                let sign = match tr {
                    Transcription::Verified => -1.0,
                    Transcription::AsPrinted => 1.0,
                };
                Ok(builtin(fam, 1, move |n, i| match i {
                    -1 => Some(sign * s2 * root(&[n - 1.0])? * root(&[n - 3.0])? * root(&[n])?),
                    1 => Some(sign * s2 * root(&[n + 1.0])? * root(&[n - 2.0])? * root(&[n])?),
                    _ => Some(0.0),
                }))
            }
            2 => Ok(builtin(fam, 2, |n, i| match i {
                -2 => Some(root(&[n - 2.0, n - 3.0, n - 4.0, n])? / 56.0),
                0 => Some((n - 4.0) * (n - 7.0) / 28.0),
                2 => Some(root(&[n + 2.0, n - 1.0, n - 2.0, n])? / 56.0),
                _ => Some(0.0),
            })),
            3 => Ok(builtin(fam, 3, move |n, i| match i {
                -3 => Some(s2 / 3.0 * root(&[n, n - 4.0, n - 5.0])?),
                -1 => root(&[2.0, n, n - 1.0, n - 3.0]),
                1 => root(&[2.0, n + 1.0, n, n - 2.0]),
                3 => Some(s2 / 3.0 * root(&[n + 3.0, n - 1.0, n - 2.0])?),
                _ => Some(0.0),
            })),
            _ => Err(unknown),
        },
        FamilyKind::XLaguerre => {
            let a = fam.alpha().expect("Laguerre family carries alpha");
            match j {
                0 => Ok(builtin(fam, 0, |n, _| Some((3.0 - n) / 4.0))),
                1 => Ok(builtin(fam, 1, move |n, i| match i {
                    -1 => Some(-root(&[a + n, a + n - 1.0, a + n - 2.0, n - 1.0])? / 42.0),
                    0 => Some((n - 1.0) * (n - 5.0) / 21.0),
                    1 => Some(-root(&[a + n + 1.0, a + n, a + n - 1.0, n])? / 42.0),
                    _ => Some(0.0),
                })),
                2 => Ok(builtin(fam, 2, move |n, i| match i {
                    -2 => root(&[a + n, a + n - 3.0, n - 1.0, n - 2.0]),
                    -1 => Some(-4.0 * root(&[a + n, a + n - 1.0, a + n - 2.0, n - 1.0])?),
                    0 => Some(4.0 * a * a + 10.0 * a * n + 6.0 * n * n - 5.0 * a - 6.0 * n),
                    1 => Some(-4.0 * root(&[a + n + 1.0, a + n, a + n - 1.0, n])?),
                    2 => root(&[a + n + 2.0, a + n - 1.0, n + 1.0, n]),
                    _ => Some(0.0),
                })),
                _ => Err(unknown),
            }
        }
    }
}

/// Largest `|c - r|` over nonzero entries of a dense block.
pub fn effective_bandwidth(m: &DMatrix<f64>) -> usize {
    let mut k = 0;
    for r in 0..m.nrows() {
        for c in 0..m.ncols() {
            if m[(r, c)] != 0.0 {
                k = k.max(r.abs_diff(c));
            }
        }
    }
    k
}
