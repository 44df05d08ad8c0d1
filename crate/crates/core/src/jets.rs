//! Truncated Taylor expansions ("jets") of scalar functions at a point.
//!
//! A [`Jet`] stores the scaled coefficients `f^(k)(x0) / k!` for
//! `k = 0..=JET_ORDER`. Arithmetic follows the usual Taylor-series recurrences
//! and never reads past `JET_ORDER`, so every coefficient of a result is exact
//! (up to rounding) as long as the inputs were.
//!
//! Differentiating a jet shifts its coefficients down and loses the top one.
//! After `m` derivatives only coefficients `0..=JET_ORDER - m` are meaningful;
//! with `JET_ORDER = 8` this is enough to evaluate operators of the form
//! `∂^j f ∂^j` for `j <= 4`.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Highest stored Taylor order.
pub const JET_ORDER: usize = 8;

const LEN: usize = JET_ORDER + 1;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    center: f64,
    coeffs: [f64; LEN],
}

impl Jet {
    /// Jet of the identity function `x ↦ x` at `x`.
    pub fn var(x: f64) -> Self {
        let mut coeffs = [0.0; LEN];
        coeffs[0] = x;
        coeffs[1] = 1.0;
        Self { center: x, coeffs }
    }

    pub fn constant(center: f64, value: f64) -> Self {
        let mut coeffs = [0.0; LEN];
        coeffs[0] = value;
        Self { center, coeffs }
    }

    /// Builds a jet from scaled coefficients; missing entries are zero.
    pub fn from_coeffs(center: f64, scaled: &[f64]) -> Result<Self> {
        if scaled.len() > LEN {
            return Err(Error::JetOrder(scaled.len() - 1));
        }
        let mut coeffs = [0.0; LEN];
        coeffs[..scaled.len()].copy_from_slice(scaled);
        Ok(Self { center, coeffs })
    }

    pub fn center(&self) -> f64 {
        self.center
    }

    pub fn value(&self) -> f64 {
        self.coeffs[0]
    }

    pub fn coeffs(&self) -> &[f64; LEN] {
        &self.coeffs
    }

    /// Scaled coefficient `f^(k)(x0) / k!`.
    pub fn coeff(&self, k: usize) -> Result<f64> {
        self.coeffs.get(k).copied().ok_or(Error::JetOrder(k))
    }

    /// `f^(k)(x0) = k! * coeffs[k]`.
    pub fn derivative_extract(&self, k: usize) -> Result<f64> {
        let c = self.coeff(k)?;
        Ok(c * factorial(k))
    }

    /// Jet of `f'`. The top coefficient becomes zero (unknown).
    pub fn derivative(&self) -> Self {
        let mut coeffs = [0.0; LEN];
        for k in 0..JET_ORDER {
            coeffs[k] = (k + 1) as f64 * self.coeffs[k + 1];
        }
        Self { center: self.center, coeffs }
    }

    pub fn nth_derivative(&self, m: usize) -> Self {
        (0..m).fold(*self, |j, _| j.derivative())
    }

    fn check_center(&self, other: &Self) -> Result<()> {
        if self.center == other.center {
            Ok(())
        } else {
            Err(Error::JetCenterMismatch(self.center, other.center))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_center(other)?;
        let mut coeffs = self.coeffs;
        for (c, o) in coeffs.iter_mut().zip(other.coeffs.iter()) {
            *c += o;
        }
        Ok(Self { center: self.center, coeffs })
    }

    /// Truncated Cauchy product.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_center(other)?;
        let mut coeffs = [0.0; LEN];
        for k in 0..LEN {
            coeffs[k] = (0..=k).map(|i| self.coeffs[i] * other.coeffs[k - i]).sum();
        }
        Ok(Self { center: self.center, coeffs })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check_center(other)?;
        let b0 = other.coeffs[0];
        if b0 == 0.0 {
            return Err(Error::JetDivisionByZero);
        }
        let mut coeffs = [0.0; LEN];
        for k in 0..LEN {
            let acc: f64 = (1..=k).map(|i| other.coeffs[i] * coeffs[k - i]).sum();
            coeffs[k] = (self.coeffs[k] - acc) / b0;
        }
        Ok(Self { center: self.center, coeffs })
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut coeffs = self.coeffs;
        coeffs.iter_mut().for_each(|c| *c *= s);
        Self { center: self.center, coeffs }
    }

    pub fn add_scalar(&self, s: f64) -> Self {
        let mut out = *self;
        out.coeffs[0] += s;
        out
    }

    pub fn exp(&self) -> Self {
        let a = &self.coeffs;
        let mut e = [0.0; LEN];
        e[0] = a[0].exp();
        for k in 1..LEN {
            let acc: f64 = (1..=k).map(|i| i as f64 * a[i] * e[k - i]).sum();
            e[k] = acc / k as f64;
        }
        Self { center: self.center, coeffs: e }
    }

    pub fn sqrt(&self) -> Result<Self> {
        let a = &self.coeffs;
        if a[0] <= 0.0 {
            return Err(Error::JetNonPositiveBase(a[0]));
        }
        let mut s = [0.0; LEN];
        s[0] = a[0].sqrt();
        for k in 1..LEN {
            let acc: f64 = (1..k).map(|i| s[i] * s[k - i]).sum();
            s[k] = (a[k] - acc) / (2.0 * s[0]);
        }
        Ok(Self { center: self.center, coeffs: s })
    }

    pub fn ln(&self) -> Result<Self> {
        let a = &self.coeffs;
        if a[0] <= 0.0 {
            return Err(Error::JetNonPositiveBase(a[0]));
        }
        let mut l = [0.0; LEN];
        l[0] = a[0].ln();
        for k in 1..LEN {
            let acc: f64 = (1..k).map(|i| i as f64 * l[i] * a[k - i]).sum();
            l[k] = (a[k] - acc / k as f64) / a[0];
        }
        Ok(Self { center: self.center, coeffs: l })
    }

    /// `self^p` for real `p`, requiring a positive leading coefficient.
    pub fn powf(&self, p: f64) -> Result<Self> {
        let a = &self.coeffs;
        if a[0] <= 0.0 {
            return Err(Error::JetNonPositiveBase(a[0]));
        }
        let mut y = [0.0; LEN];
        y[0] = a[0].powf(p);
        for k in 1..LEN {
            let acc: f64 = (1..=k)
                .map(|i| ((p + 1.0) * i as f64 - k as f64) * a[i] * y[k - i])
                .sum();
            y[k] = acc / (k as f64 * a[0]);
        }
        Ok(Self { center: self.center, coeffs: y })
    }

    /// Non-negative integer power by repeated multiplication.
    pub fn powi(&self, n: u32) -> Self {
        let mut out = Jet::constant(self.center, 1.0);
        for _ in 0..n {
            out = out * *self;
        }
        out
    }
}

/// Panics on center mismatch; use [`Jet::try_add`] when centers may differ.
impl Add for Jet {
    type Output = Jet;
    fn add(self, rhs: Jet) -> Jet {
        self.try_add(&rhs).expect("jet centers differ")
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, rhs: Jet) -> Jet {
        self.try_add(&rhs.scale(-1.0)).expect("jet centers differ")
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, rhs: Jet) -> Jet {
        self.try_mul(&rhs).expect("jet centers differ")
    }
}

impl Mul<f64> for Jet {
    type Output = Jet;
    fn mul(self, rhs: f64) -> Jet {
        self.scale(rhs)
    }
}

impl Add<f64> for Jet {
    type Output = Jet;
    fn add(self, rhs: f64) -> Jet {
        self.add_scalar(rhs)
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scale(-1.0)
    }
}

pub(crate) fn factorial(k: usize) -> f64 {
    (1..=k).fold(1.0, |acc, i| acc * i as f64)
}

/// Evaluates `Σ c_k x^k` on a jet by Horner's rule.
pub(crate) fn horner(coeffs: &[f64], x: &Jet) -> Jet {
    let mut acc = Jet::constant(x.center(), 0.0);
    for &c in coeffs.iter().rev() {
        acc = (acc * *x).add_scalar(c);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn var_jets() {
        assert_eq!(Jet::var(0.0).coeffs()[..3], [0.0, 1.0, 0.0]);
        assert_eq!(Jet::var(2.5).coeffs()[..3], [2.5, 1.0, 0.0]);
        assert_eq!(Jet::var(1.7).derivative_extract(2).unwrap(), 0.0);
        assert_eq!(Jet::var(5.0).derivative_extract(1).unwrap(), 1.0);
    }

    #[test]
    fn square_at_one() {
        let x = Jet::var(1.0);
        assert_eq!((x * x).coeffs()[..4], [1.0, 2.0, 1.0, 0.0]);
    }

    #[test]
    fn cube_third_derivative() {
        let x = Jet::var(2.0);
        assert_eq!(x.powi(3).derivative_extract(3).unwrap(), 6.0);
    }

    #[test]
    fn exp_of_minus_x_squared() {
        let x = Jet::var(0.0);
        let e = (-(x * x)).exp();
        let want = [1.0, 0.0, -1.0, 0.0, 0.5, 0.0, -1.0 / 6.0, 0.0, 1.0 / 24.0];
        for (got, want) in e.coeffs().iter().zip(want) {
            assert_relative_eq!(*got, want, epsilon = 1e-15);
        }
    }

    #[test]
    fn geometric_series() {
        let x = Jet::var(0.0);
        let den = (x * x).scale(2.0).add_scalar(1.0);
        let r = Jet::constant(0.0, 1.0).try_div(&den).unwrap();
        assert_eq!(r.coeffs()[..5], [1.0, 0.0, -2.0, 0.0, 4.0]);
    }

    #[test]
    fn exp_derivatives_at_zero() {
        let e = Jet::var(0.0).exp();
        for k in 0..=JET_ORDER {
            assert_relative_eq!(e.derivative_extract(k).unwrap(), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn errors() {
        let z = Jet::constant(0.3, 0.0);
        assert_eq!(Jet::var(0.3).try_div(&z), Err(Error::JetDivisionByZero));
        assert!(matches!(Jet::constant(0.0, -1.0).sqrt(), Err(Error::JetNonPositiveBase(_))));
        assert_eq!(Jet::var(1.0).derivative_extract(9), Err(Error::JetOrder(9)));
        assert!(Jet::var(1.0).try_mul(&Jet::var(2.0)).is_err());
    }

    #[test]
    fn ln_and_powf_agree_with_exp() {
        let x = Jet::var(1.3);
        let a = (x * x).add_scalar(0.5);
        let p1 = a.powf(0.65).unwrap();
        let p2 = (a.ln().unwrap().scale(0.65)).exp();
        for k in 0..=JET_ORDER {
            assert_relative_eq!(p1.coeffs()[k], p2.coeffs()[k], epsilon = 1e-12, max_relative = 1e-12);
        }
    }

    fn five_point(f: &dyn Fn(f64) -> f64, x: f64, h: f64) -> [f64; 3] {
        let (fm2, fm1, f0, fp1, fp2) = (f(x - 2.0 * h), f(x - h), f(x), f(x + h), f(x + 2.0 * h));
        [
            (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h),
            (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h),
            (-fm2 + 2.0 * fm1 - 2.0 * fp1 + fp2) / (2.0 * h * h * h),
        ]
    }

    #[test]
    fn finite_difference_oracle() {
        let omega = 0.4;
        let f1 = |x: f64| (-x * x / 2.0).exp() / (1.0 + 2.0 * x * x);
        let f2 = |x: f64| (x - omega).powi(3);
        for &x0 in &[-1.3, -0.2, 0.45, 1.1] {
            let x = Jet::var(x0);
            let j1 = (-(x * x).scale(0.5))
                .exp()
                .try_div(&(x * x).scale(2.0).add_scalar(1.0))
                .unwrap();
            let j2 = x.add_scalar(-omega).powi(3);
            for (f, j, hs) in [(&f1 as &dyn Fn(f64) -> f64, j1, [1e-3, 1e-3, 1e-2]), (&f2, j2, [1e-3, 1e-3, 1e-2])] {
                let fd1 = five_point(f, x0, hs[0]);
                // Richardson step on the O(h²) third-derivative stencil
                let fd3 = five_point(f, x0, hs[2]);
                let fd3_half = five_point(f, x0, 0.5 * hs[2]);
                let got: Vec<f64> = (1..=3).map(|k| j.derivative_extract(k).unwrap()).collect();
                let want = [fd1[0], fd1[1], (4.0 * fd3_half[2] - fd3[2]) / 3.0];
                for (g, w) in got.iter().zip(want) {
                    assert!((g - w).abs() <= 1e-6 * (1.0 + w.abs()), "{g} vs {w} at {x0}");
                }
            }
        }
    }

    fn arb_jet(center: f64) -> impl Strategy<Value = Jet> {
        proptest::collection::vec(-2.0f64..2.0, LEN).prop_map(move |v| Jet::from_coeffs(center, &v).unwrap())
    }

    proptest! {
        #[test]
        fn leibniz_rule(a in arb_jet(0.7), b in arb_jet(0.7)) {
            let p = a * b;
            for k in 0..=JET_ORDER {
                let want: f64 = (0..=k)
                    .map(|i| {
                        let binom = factorial(k) / (factorial(i) * factorial(k - i));
                        binom * a.derivative_extract(i).unwrap() * b.derivative_extract(k - i).unwrap()
                    })
                    .sum();
                let got = p.derivative_extract(k).unwrap();
                prop_assert!((got - want).abs() <= 1e-9 * (1.0 + want.abs()));
            }
        }

        #[test]
        fn sqrt_of_square(mut a in arb_jet(-0.2), lead in 0.5f64..3.0) {
            // keep |a_k| ≤ a_0 / 2 (radius of convergence ≥ 2); for wilder jets
            // the sqrt recurrence amplifies rounding geometrically in k
            for k in 1..LEN {
                a.coeffs[k] *= lead / 4.0;
            }
            a.coeffs[0] = lead;
            let r = (a * a).sqrt().unwrap();
            for k in 0..=JET_ORDER {
                prop_assert!((r.coeffs()[k] - a.coeffs()[k]).abs() <= 1e-12 * (1.0 + a.coeffs()[k].abs()));
            }
        }

        #[test]
        fn division_inverts_multiplication(a in arb_jet(1.0), mut b in arb_jet(1.0), lead in 0.5f64..3.0) {
            b.coeffs[0] = lead;
            let q = (a * b).try_div(&b).unwrap();
            for k in 0..=JET_ORDER {
                prop_assert!((q.coeffs()[k] - a.coeffs()[k]).abs() <= 1e-9);
            }
        }
    }
}
