//! Classical and exceptional Hermite/Laguerre polynomials, weights and
//! normalizations.
//!
//! Sequences are indexed over all of `ℕ₀`; `q_n` is identically zero for the
//! exceptional degrees `n ∈ X` and has degree exactly `n` otherwise.
//!
//! * Exceptional Hermite: `X = {1, 2}` on `(-∞, ∞)` with
//!   `w(x) = e^{-x²} / (1 + 2x²)²` and
//!   `q_n = c_n (H_n + 4n H_{n-2} + 4n(n-3) H_{n-4})`,
//!   `c_n = √((n-1)(n-2)) / (π^{1/4} √(2^n n!))`.
//! * Exceptional Laguerre(α), α > 0: `X = {0}` on `(0, ∞)` with
//!   `w(x) = e^{-x} x^α / (x + α)²` and
//!   `q_n = c_n (-(x + α + 1) L^{(α)}_{n-1} + L^{(α)}_{n-2})`,
//!   `c_n = √((α + n - 1)(n - 1)! / ((α + n) Γ(n + α)))`.

use std::f64::consts::PI;

use serde::Serialize;
use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::jets::{Jet, JET_ORDER};

/// Largest polynomial degree accepted by the evaluators.
pub const MAX_DEGREE: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    XHermite,
    XLaguerre,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolyFamily {
    kind: FamilyKind,
    alpha: f64,
}

impl PolyFamily {
    pub fn xhermite() -> Self {
        Self { kind: FamilyKind::XHermite, alpha: 0.0 }
    }

    pub fn xlaguerre(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::InvalidAlpha(alpha));
        }
        Ok(Self { kind: FamilyKind::XLaguerre, alpha })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    /// Laguerre parameter; `None` for the Hermite family.
    pub fn alpha(&self) -> Option<f64> {
        match self.kind {
            FamilyKind::XHermite => None,
            FamilyKind::XLaguerre => Some(self.alpha),
        }
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            FamilyKind::XHermite => "xhermite",
            FamilyKind::XLaguerre => "xlaguerre",
        }
    }

    pub fn interval(&self) -> (f64, f64) {
        match self.kind {
            FamilyKind::XHermite => (f64::NEG_INFINITY, f64::INFINITY),
            FamilyKind::XLaguerre => (0.0, f64::INFINITY),
        }
    }

    /// Exceptional degrees `X`, in increasing order.
    pub fn exceptional_set(&self) -> &'static [usize] {
        match self.kind {
            FamilyKind::XHermite => &[1, 2],
            FamilyKind::XLaguerre => &[0],
        }
    }

    pub fn is_exceptional(&self, n: usize) -> bool {
        self.exceptional_set().contains(&n)
    }

    /// Degrees in `Z ∩ [0, n_max]`.
    pub fn regular_degrees(&self, n_max: usize) -> Vec<usize> {
        (0..=n_max).filter(|&n| !self.is_exceptional(n)).collect()
    }

    /// Order `2d` of the commuting differential operator is `2 * self.half_order()`;
    /// also the half-bandwidth of its banded counterpart.
    pub fn half_order(&self) -> usize {
        match self.kind {
            FamilyKind::XHermite => 3,
            FamilyKind::XLaguerre => 2,
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        let (a, b) = self.interval();
        x.is_finite() && x > a && x < b
    }

    pub(crate) fn check_domain(&self, x: f64) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            let (a, b) = self.interval();
            Err(Error::Domain { x, a, b })
        }
    }
}

fn check_degree(n: usize) -> Result<()> {
    if n > MAX_DEGREE {
        Err(Error::DegreeCap(n))
    } else {
        Ok(())
    }
}

/// Physicists' Hermite values `H_0(x), ..., H_n(x)`.
fn hermite_table(n: usize, x: f64) -> Vec<f64> {
    let mut h = Vec::with_capacity(n + 1);
    h.push(1.0);
    if n >= 1 {
        h.push(2.0 * x);
    }
    for k in 1..n {
        let next = 2.0 * x * h[k] - 2.0 * k as f64 * h[k - 1];
        h.push(next);
    }
    h
}

/// `H_n(x)` with leading coefficient `2^n`.
pub fn hermite_classical(n: usize, x: f64) -> f64 {
    *hermite_table(n, x).last().unwrap()
}

/// `L_n^{(α)}(x)` normalized by `L_n^{(α)}(0) = binom(n + α, n)`.
pub fn laguerre_classical(n: usize, alpha: f64, x: f64) -> f64 {
    let (mut prev, mut cur) = (0.0, 1.0);
    for k in 0..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - x) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// `L_n^{(α)}` for a possibly negative index; `L_{-1} ≡ L_{-2} ≡ 0`.
fn laguerre_signed(n: isize, alpha: f64, x: f64) -> f64 {
    if n < 0 {
        0.0
    } else {
        laguerre_classical(n as usize, alpha, x)
    }
}

fn hermite_norm(n: usize) -> f64 {
    let nf = n as f64;
    let radicand = (nf - 1.0) * (nf - 2.0);
    (0.5 * radicand.ln() - 0.25 * PI.ln() - 0.5 * (nf * std::f64::consts::LN_2 + ln_gamma(nf + 1.0))).exp()
}

fn laguerre_norm(n: usize, alpha: f64) -> f64 {
    let nf = n as f64;
    let log = (alpha + nf - 1.0).ln() + ln_gamma(nf) - (alpha + nf).ln() - ln_gamma(nf + alpha);
    (0.5 * log).exp()
}

/// Normalization constant `c_n` (zero for exceptional degrees).
pub fn q_norm(fam: &PolyFamily, n: usize) -> f64 {
    if fam.is_exceptional(n) {
        return 0.0;
    }
    match fam.kind {
        FamilyKind::XHermite => hermite_norm(n),
        FamilyKind::XLaguerre => laguerre_norm(n, fam.alpha),
    }
}

/// Coefficients `(weight, shift)` of the Hermite combination
/// `H_n + 4n H_{n-2} + 4n(n-3) H_{n-4}`.
fn hermite_combination(n: usize) -> [(f64, usize); 3] {
    let nf = n as f64;
    [(1.0, 0), (4.0 * nf, 2), (4.0 * nf * (nf - 3.0), 4)]
}

pub fn q_eval(fam: &PolyFamily, n: usize, x: f64) -> Result<f64> {
    fam.check_domain(x)?;
    check_degree(n)?;
    if fam.is_exceptional(n) {
        return Ok(0.0);
    }
    let c = q_norm(fam, n);
    let raw = match fam.kind {
        FamilyKind::XHermite => {
            let h = hermite_table(n, x);
            hermite_combination(n)
                .iter()
                .filter(|(_, s)| *s <= n)
                .map(|(w, s)| w * h[n - s])
                .sum::<f64>()
        }
        FamilyKind::XLaguerre => {
            let a = fam.alpha;
            let m = n as isize;
            -(x + a + 1.0) * laguerre_signed(m - 1, a, x) + laguerre_signed(m - 2, a, x)
        }
    };
    let v = c * raw;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow { degree: n, x })
    }
}

/// Jet of `q_n` at `x`, exact through `order` (higher coefficients zero).
///
/// Uses `H_m^{(k)} = 2^k m!/(m-k)! H_{m-k}` and
/// `(L_m^{(α)})^{(k)} = (-1)^k L_{m-k}^{(α+k)}`.
pub fn q_jet(fam: &PolyFamily, n: usize, x: f64, order: usize) -> Result<Jet> {
    if order > JET_ORDER {
        return Err(Error::JetOrder(order));
    }
    fam.check_domain(x)?;
    check_degree(n)?;
    if fam.is_exceptional(n) {
        return Ok(Jet::constant(x, 0.0));
    }
    let c = q_norm(fam, n);
    let jet = match fam.kind {
        FamilyKind::XHermite => {
            let h = hermite_table(n, x);
            let mut coeffs = vec![0.0; order + 1];
            for (w, s) in hermite_combination(n) {
                if s > n || w == 0.0 {
                    continue;
                }
                let m = n - s;
                // scaled coefficient of H_m: 2^k binom(m, k) H_{m-k}
                let mut binom = 1.0;
                for (k, slot) in coeffs.iter_mut().enumerate().take(order.min(m) + 1) {
                    if k > 0 {
                        binom *= (m + 1 - k) as f64 / k as f64;
                    }
                    *slot += w * 2f64.powi(k as i32) * binom * h[m - k];
                }
            }
            Jet::from_coeffs(x, &coeffs)?.scale(c)
        }
        FamilyKind::XLaguerre => {
            let a = fam.alpha;
            let m = n as isize;
            let lag_jet = |deg: isize| -> Result<Jet> {
                let coeffs: Vec<f64> = (0..=order)
                    .map(|k| {
                        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                        sign * laguerre_signed(deg - k as isize, a + k as f64, x) / crate::jets::factorial(k)
                    })
                    .collect();
                Jet::from_coeffs(x, &coeffs)
            };
            let lin = Jet::var(x).add_scalar(a + 1.0);
            (lag_jet(m - 2)? - lin * lag_jet(m - 1)?).scale(c)
        }
    };
    if jet.coeffs().iter().all(|v| v.is_finite()) {
        Ok(jet)
    } else {
        Err(Error::Overflow { degree: n, x })
    }
}

pub fn weight(fam: &PolyFamily, x: f64) -> Result<f64> {
    fam.check_domain(x)?;
    Ok(weight_unchecked(fam, x))
}

pub(crate) fn weight_unchecked(fam: &PolyFamily, x: f64) -> f64 {
    match fam.kind {
        FamilyKind::XHermite => {
            let d = 1.0 + 2.0 * x * x;
            (-x * x).exp() / (d * d)
        }
        FamilyKind::XLaguerre => {
            let a = fam.alpha;
            (-x).exp() * x.powf(a) / ((x + a) * (x + a))
        }
    }
}

/// Jet of `w(x)^{1/2}` at `x`.
pub fn weight_sqrt_jet(fam: &PolyFamily, x: f64, order: usize) -> Result<Jet> {
    if order > JET_ORDER {
        return Err(Error::JetOrder(order));
    }
    fam.check_domain(x)?;
    let t = Jet::var(x);
    match fam.kind {
        FamilyKind::XHermite => {
            let num = (t * t).scale(-0.5).exp();
            num.try_div(&(t * t).scale(2.0).add_scalar(1.0))
        }
        FamilyKind::XLaguerre => {
            let a = fam.alpha;
            let num = t.scale(-0.5).exp() * t.powf(0.5 * a)?;
            num.try_div(&t.add_scalar(a))
        }
    }
}
