//! Second-order differential operators `D_j = p ∂² + r ∂ + s` acting on jets,
//! and the coefficient functions `f_j` of the commuting operator.

use crate::diffops::Transcription;
use crate::error::{Error, Result};
use crate::jets::{horner, Jet};
use crate::special_polys::{FamilyKind, PolyFamily};

use super::tables::{self, Monomial};

/// Coefficient jets `(p, r, s)` of `D_j` at `x`.
fn coefficients(fam: &PolyFamily, j: usize, x: f64) -> Result<(Jet, Jet, Jet)> {
    let t = Jet::var(x);
    let c = |v: f64| Jet::constant(x, v);
    let unknown = Error::UnknownOperator { j, family: fam.name() };
    match fam.kind() {
        FamilyKind::XHermite => {
            let t2 = t * t;
            let den = t2.scale(2.0).add_scalar(1.0);
            match j {
                0 => {
                    let num = (t2 * t).scale(2.0) + t.scale(5.0);
                    Ok((c(1.0), num.scale(-2.0).try_div(&den)?, c(0.0)))
                }
                1 => {
                    let num = (t2 * t2).scale(4.0) + t2.scale(8.0) + (-1.0);
                    Ok((t, num.scale(-1.0).try_div(&den)?, c(0.0)))
                }
                2 => {
                    let p = t2.scale(-1.0 / 56.0).add_scalar(17.0 / 112.0);
                    let num = (t2 * t2 * t).scale(4.0) - (t2 * t).scale(28.0) - t.scale(87.0);
                    Ok((p, num.try_div(&den.scale(56.0))?, c(1.0)))
                }
                3 => Ok((c(0.0), c(0.0), (t2 * t).scale(4.0 / 3.0) + t.scale(2.0))),
                _ => Err(unknown),
            }
        }
        FamilyKind::XLaguerre => {
            let a = fam.alpha().expect("Laguerre family carries alpha");
            let ax = t.add_scalar(a);
            match j {
                0 => {
                    let r = (t.add_scalar(a + 1.0) * (-t).add_scalar(a)).try_div(&ax.scale(4.0))?;
                    let s = t.scale(3.0).add_scalar(a).try_div(&ax.scale(4.0))?;
                    Ok((t.scale(0.25), r, s))
                }
                1 => {
                    let t2 = t * t;
                    let t3 = t2 * t;
                    let p = ((-t).add_scalar(3.0 * a + 10.0) * t).scale(1.0 / 42.0);
                    let rn = t3
                        + t2.scale(-3.0 * a - 10.0)
                        + t.scale(-a * a - 5.0 * a - 10.0)
                        + (3.0 * a * a * a + 13.0 * a * a + 10.0 * a);
                    let sn = t2.scale(-a) + t.scale(-3.0 * a - 10.0) + (a * a * a + 5.0 * a * a + 10.0 * a);
                    let den = ax.scale(42.0);
                    Ok((p, rn.try_div(&den)?, sn.scale(-1.0).try_div(&den)?))
                }
                2 => Ok((c(0.0), c(0.0), ax * ax)),
                _ => Err(unknown),
            }
        }
    }
}

/// `D_j g` as a jet. Each application consumes two orders of `g`, so the
/// result is exact through order `K - 2` when `g` is exact through `K`.
pub fn apply_d(fam: &PolyFamily, j: usize, g: &Jet) -> Result<Jet> {
    let (p, r, s) = coefficients(fam, j, g.center())?;
    let d1 = g.derivative();
    let d2 = d1.derivative();
    Ok(p * d2 + r * d1 + s * *g)
}

/// Collapses a monomial table to ascending coefficients in `x`.
fn collapse(table: &[Monomial], n: f64, omega: f64, alpha: f64) -> Vec<f64> {
    let deg = table.iter().map(|(_, p)| p[3] as usize).max().unwrap_or(0);
    let mut c = vec![0.0; deg + 1];
    for (coef, p) in table {
        c[p[3] as usize] += coef * n.powi(p[0] as i32) * omega.powi(p[1] as i32) * alpha.powi(p[2] as i32);
    }
    c
}

/// Jet of the coefficient `f_j(x)` of `T = w^{-1/2} (Σ ∂^j f_j ∂^j) w^{1/2}`.
pub fn f_coeff_jet(fam: &PolyFamily, n: usize, omega: f64, j: usize, x: f64, tr: Transcription) -> Result<Jet> {
    fam.check_domain(x)?;
    let t = Jet::var(x);
    let nf = n as f64;
    let om_minus_x = (-t).add_scalar(omega);
    let poly = |table: &[Monomial], alpha: f64| horner(&collapse(table, nf, omega, alpha), &t);
    let unknown = Error::UnknownOperator { j, family: fam.name() };
    match fam.kind() {
        FamilyKind::XHermite => {
            let den = (t * t).scale(2.0).add_scalar(1.0);
            match j {
                3 => Ok(t.add_scalar(-omega).powi(3)),
                2 => (om_minus_x.powi(2) * poly(tables::H_F2, 0.0)).scale(3.0).try_div(&den.powi(2)),
                1 => (om_minus_x * poly(tables::H_F1, 0.0)).scale(-3.0).try_div(&den.powi(4)),
                0 => poly(tables::H_F0, 0.0).try_div(&den.powi(6)),
                _ => Err(unknown),
            }
        }
        FamilyKind::XLaguerre => {
            let a = fam.alpha().expect("Laguerre family carries alpha");
            let ax = t.add_scalar(a);
            match (j, tr) {
                (2, _) => Ok(om_minus_x.powi(2) * t * t),
                (1, Transcription::Verified) => (om_minus_x * poly(tables::L_F1, a)).try_div(&(ax * ax).scale(2.0)),
                (0, Transcription::Verified) => poly(tables::L_F0, a).try_div(&(t * t * ax.powi(4)).scale(16.0)),
                (1, Transcription::AsPrinted) => (om_minus_x * poly(tables::L_F1_UNCORRECTED, a)).try_div(&(ax * ax)),
                (0, Transcription::AsPrinted) => poly(tables::L_F0_UNCORRECTED, a).try_div(&ax.powi(3)),
                _ => Err(unknown),
            }
        }
    }
}
