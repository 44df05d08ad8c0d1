//! Words in the operators `D_j`, their banded images, and the explicit
//! linear combinations giving the commuting operator for each family.

use std::fmt;

use serde::Serialize;

use crate::diffops::{anticommutator, band_product, builtin_l, BandedOperator, Transcription};
use crate::error::Result;
use crate::jets::Jet;
use crate::special_polys::{FamilyKind, PolyFamily};

use super::differential::apply_d;

/// A word in the differential operators. `Product([a, b, c])` is
/// `D_a D_b D_c` (so `D_c` acts first); `Anti(u, v)` is `uv + vu`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Word {
    Id,
    Product(Vec<usize>),
    Anti(Vec<usize>, Vec<usize>),
}

impl Word {
    pub fn single(j: usize) -> Self {
        Word::Product(vec![j])
    }

    pub fn power(j: usize, k: usize) -> Self {
        Word::Product(vec![j; k])
    }

    pub fn anti(u: &[usize], v: &[usize]) -> Self {
        Word::Anti(u.to_vec(), v.to_vec())
    }

    /// Banded image: `D_a D_b ↦ L_b L_a`, since `D_a D_b q_n = Σ (L_b L_a)_{nm} q_m`.
    pub fn operator(&self, fam: &PolyFamily, tr: Transcription) -> Result<BandedOperator> {
        let image = |w: &[usize]| -> Result<BandedOperator> {
            let ls = w.iter().rev().map(|&j| builtin_l(fam, j, tr)).collect::<Result<Vec<_>>>()?;
            let refs: Vec<&BandedOperator> = ls.iter().collect();
            let p = band_product(&refs);
            let palindrome = w.iter().eq(w.iter().rev());
            Ok(if palindrome { p.assume_symmetric() } else { p })
        };
        match self {
            Word::Id => Ok(BandedOperator::identity()),
            Word::Product(w) => image(w),
            Word::Anti(u, v) => Ok(anticommutator(&image(u)?, &image(v)?)),
        }
    }

    /// Applies the word to a jet. Every `D_j` of order two consumes two orders.
    pub fn apply(&self, fam: &PolyFamily, g: &Jet) -> Result<Jet> {
        let run = |w: &[usize], g: &Jet| -> Result<Jet> {
            w.iter().rev().try_fold(*g, |acc, &j| apply_d(fam, j, &acc))
        };
        match self {
            Word::Id => Ok(*g),
            Word::Product(w) => run(w, g),
            Word::Anti(u, v) => Ok(run(u, &run(v, g)?)? + run(v, &run(u, g)?)?),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn product(w: &[usize]) -> String {
            let mut out = String::new();
            let mut i = 0;
            while i < w.len() {
                let mut k = 1;
                while i + k < w.len() && w[i + k] == w[i] {
                    k += 1;
                }
                out.push_str(&format!("D{}", w[i]));
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
                i += k;
            }
            out
        }
        match self {
            Word::Id => write!(f, "Id"),
            Word::Product(w) => write!(f, "{}", product(w)),
            Word::Anti(u, v) => write!(f, "{{{},{}}}", product(u), product(v)),
        }
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Operator set spanning the candidates for the Hermite family (14 words).
pub fn hermite_y_words() -> Vec<Word> {
    vec![
        Word::Id,
        Word::single(0),
        Word::single(1),
        Word::single(2),
        Word::single(3),
        Word::power(0, 2),
        Word::power(0, 3),
        Word::power(1, 2),
        Word::anti(&[3], &[0]),
        Word::anti(&[3], &[0, 0]),
        Word::anti(&[0], &[1]),
        Word::anti(&[3], &[0, 0, 0]),
        Word::anti(&[0, 0], &[1]),
        Word::anti(&[0], &[1, 1]),
    ]
}

/// Operator set spanning the candidates for the Laguerre family (8 words).
pub fn laguerre_y_words() -> Vec<Word> {
    vec![
        Word::Id,
        Word::single(0),
        Word::single(1),
        Word::single(2),
        Word::power(0, 2),
        Word::power(1, 2),
        Word::anti(&[0], &[1]),
        Word::anti(&[2], &[0]),
    ]
}

pub fn y_words(fam: &PolyFamily) -> Vec<Word> {
    match fam.kind() {
        FamilyKind::XHermite => hermite_y_words(),
        FamilyKind::XLaguerre => laguerre_y_words(),
    }
}

/// Terms `(coefficient, word)` of the commuting operator for time limit `N`
/// and band limit `Ω`.
pub fn perline_terms(fam: &PolyFamily, n: usize, omega: f64, tr: Transcription) -> Vec<(f64, Word)> {
    let nn = n as f64;
    let o = omega;
    match fam.kind() {
        FamilyKind::XHermite => vec![
            (-o.powi(3), Word::power(0, 3)),
            (0.75 * (2.0 * o * o - 1.0), Word::anti(&[1], &[0, 0])),
            (-1.5 * o, Word::anti(&[1, 1], &[0])),
            (3.0 / 8.0, Word::anti(&[3], &[0, 0, 0])),
            (3.0 * (nn * o * o + 2.0 * o * o - 1.5 * nn - 4.0), Word::anti(&[1], &[0])),
            (-3.0 * (2.0 * o * o - 1.0) * o, Word::power(0, 2)),
            (-2.0 * o * (54.0 * nn * nn + 4.0 * o * o + 48.0 * nn - 3.0), Word::single(0)),
            (-6.0 * (2.0 * nn + 1.0) * o, Word::power(1, 2)),
            (9.0 / 8.0 * (2.0 * nn + 1.0), Word::anti(&[3], &[0, 0])),
            (1.5 * (3.0 * nn * nn + 3.0 * nn - 7.0), Word::anti(&[0], &[3])),
            (3.0 * (6.0 * nn * o * o - 4.0 * nn * nn + 2.0 * o * o - 17.0 * nn - 7.0), Word::single(1)),
            (672.0 * (nn + 1.0) * nn * o, Word::single(2)),
            (1.5 * (2.0 * nn * nn + 2.0 * nn - 15.0) * (2.0 * nn + 1.0), Word::single(3)),
        ],
        FamilyKind::XLaguerre => {
            let a = fam.alpha().expect("Laguerre family carries alpha");
            let shift = o - 3.0 * a - 10.0;
            let mut c0 = 4.0
                * (nn * o * o - 6.0 * nn * o * a - o * o * a - 7.0 * nn * a * a + 2.0 * o * a * a - 13.0 * a.powi(3)
                    - 20.0 * nn * o
                    - 5.0 * o * o
                    - 20.0 * nn * a
                    + 30.0 * o * a
                    - 85.0 * a * a
                    + 90.0 * o
                    - 270.0 * a
                    - 400.0);
            let c01 = match tr {
                Transcription::Verified => {
                    c0 -= 4.0 * (nn + a) * (o + a).powi(2);
                    168.0 * shift
                }
                Transcription::AsPrinted => 168.0,
            };
            vec![
                (1764.0, Word::power(1, 2)),
                (c01, Word::anti(&[0], &[1])),
                (16.0 * shift * shift, Word::power(0, 2)),
                (4.0 * (nn + a), Word::anti(&[0], &[2])),
                (42.0 * (2.0 * nn * o + 2.0 * nn * a + 4.0 * a * a - 5.0 * o + 15.0 * a + 40.0), Word::single(1)),
                (c0, Word::single(0)),
                ((nn + a) * (nn - a - 5.0), Word::single(2)),
            ]
        }
    }
}
