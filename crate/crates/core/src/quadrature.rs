//! Composite Gauss-Legendre quadrature with panel bisection, plus analytic
//! truncation points for the unbounded family intervals.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::special_polys::{FamilyKind, PolyFamily};

/// Maximum number of panels one adaptive integral may use.
pub const PANEL_BUDGET: usize = 1 << 12;

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub order: usize,
}

impl QuadratureRule {
    /// Applies the rule on `[a, b]`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut s = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            s += w * f(mid + half * x);
        }
        s * half
    }
}

/// Gauss-Legendre rule of the given order on `[-1, 1]`, nodes ascending.
pub fn gauss_legendre(order: usize) -> Result<QuadratureRule> {
    if !(1..=128).contains(&order) {
        return Err(Error::QuadratureOrder(order));
    }
    let n = order;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        // Tricomi initial guess for the i-th largest root
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[n - 1 - i] = x;
        nodes[i] = -x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    Ok(QuadratureRule { nodes, weights, order })
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

fn gl32() -> &'static QuadratureRule {
    static RULE: OnceLock<QuadratureRule> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(32).expect("order 32 is valid"))
}

fn gl16() -> &'static QuadratureRule {
    static RULE: OnceLock<QuadratureRule> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(16).expect("order 16 is valid"))
}

/// Adaptive composite Gauss-Legendre integral of `f` over `[a, b]`.
///
/// The interval is first cut into `ceil((b - a) / 4)` equal panels. Each panel
/// is accepted once `|G32 - G16|` is below its share `tol * width / (b - a)`
/// of the tolerance, otherwise it is bisected. Accepted panels are summed left
/// to right, so the result is independent of scheduling. Returns
/// `(value, error_estimate)`.
pub fn integrate_adaptive<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<(f64, f64)> {
    if !(a.is_finite() && b.is_finite() && a < b && tol > 0.0 && tol.is_finite()) {
        return Err(Error::QuadratureRange { a, b, tol });
    }
    let (hi, lo) = (gl32(), gl16());
    let total = b - a;
    let initial = ((total / 4.0).ceil() as usize).clamp(1, PANEL_BUDGET);
    let h = total / initial as f64;

    // Stack of pending panels; popped left-first so acceptance order is left to right.
    let mut stack: Vec<(f64, f64)> = (0..initial)
        .rev()
        .map(|i| {
            let l = a + h * i as f64;
            let r = if i + 1 == initial { b } else { a + h * (i + 1) as f64 };
            (l, r)
        })
        .collect();
    let mut panels = initial;
    let (mut value, mut err) = (0.0, 0.0);
    while let Some((l, r)) = stack.pop() {
        let g32 = hi.integrate(&f, l, r);
        let g16 = lo.integrate(&f, l, r);
        let e = (g32 - g16).abs();
        if !g32.is_finite() {
            return Err(Error::NonConvergence { a, b, panels });
        }
        let local = tol * (r - l) / total;
        if e <= local || r - l <= 1e-12 * total.max(1.0) {
            value += g32;
            err += e;
            continue;
        }
        panels += 1;
        if panels > PANEL_BUDGET {
            return Err(Error::NonConvergence { a, b, panels: PANEL_BUDGET });
        }
        let m = 0.5 * (l + r);
        stack.push((m, r));
        stack.push((l, m));
    }
    Ok((value, err))
}

/// Truncation point `A` for Hermite-family integrals over `(-∞, ·)`.
///
/// Doubles `A` from 8 until `x^{2d} e^{-x²} ≤ e^{-x²/2}` holds for `x ≥ A` and
/// the tail bound `∫_A^∞ e^{-x²/2} dx ≤ e^{-A²/2}/A` is below `tol`. Returns
/// 0 for the Laguerre family, whose interval starts at 0.
pub fn lower_cutoff(fam: &PolyFamily, degree: usize, tol: f64) -> f64 {
    if fam.kind() == FamilyKind::XLaguerre {
        return 0.0;
    }
    let d = degree as f64;
    let mut a: f64 = 8.0;
    loop {
        let dominated = 2.0 * d * a.ln() <= 0.5 * a * a;
        let tail = (-0.5 * a * a).exp() / a;
        if dominated && tail < tol {
            return a;
        }
        a *= 2.0;
    }
}

/// Truncation point `B` for integrals over `(·, ∞)`.
///
/// For the Laguerre family the integrand is bounded by `x^p e^{-x}` with
/// `p = 2·degree + α`; `B` doubles from 8 until `x^p e^{-x} ≤ e^{-x/2}` for
/// `x ≥ B` and `∫_B^∞ e^{-x/2} dx = 2e^{-B/2}` is below `tol`. The Hermite
/// interval is symmetric, so the lower cutoff is reused.
pub fn upper_cutoff(fam: &PolyFamily, degree: usize, tol: f64) -> f64 {
    match fam.alpha() {
        None => lower_cutoff(fam, degree, tol),
        Some(alpha) => {
            let p = 2.0 * degree as f64 + alpha;
            let mut b: f64 = 8.0;
            loop {
                // x^p e^{-x/2} is decreasing beyond x = 2p, so require b ≥ 2p too
                let dominated = p * b.ln() <= 0.5 * b && b >= 2.0 * p;
                if dominated && 2.0 * (-0.5 * b).exp() < tol {
                    return b;
                }
                b *= 2.0;
            }
        }
    }
}

/// Integral of `f` over the whole family interval, truncated at the cutoffs for `degree`.
pub fn integrate_family<F: Fn(f64) -> f64>(fam: &PolyFamily, f: F, degree: usize, tol: f64) -> Result<(f64, f64)> {
    let hi = upper_cutoff(fam, degree, tol / 10.0);
    let lo = match fam.kind() {
        FamilyKind::XHermite => -lower_cutoff(fam, degree, tol / 10.0),
        FamilyKind::XLaguerre => 0.0,
    };
    integrate_adaptive(f, lo, hi, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn low_order_rules() {
        let r = gauss_legendre(1).unwrap();
        assert_eq!(r.nodes, vec![0.0]);
        assert_eq!(r.weights, vec![2.0]);
        let r = gauss_legendre(2).unwrap();
        assert_relative_eq!(r.nodes[1], 1.0 / 3f64.sqrt(), epsilon = 1e-15);
        assert_relative_eq!(r.nodes[0], -1.0 / 3f64.sqrt(), epsilon = 1e-15);
        assert_relative_eq!(r.weights[0], 1.0, epsilon = 1e-15);
        let r = gauss_legendre(3).unwrap();
        assert_relative_eq!(r.integrate(|x| x.powi(4), -1.0, 1.0), 0.4, epsilon = 1e-15);
        assert!(gauss_legendre(0).is_err());
        assert!(gauss_legendre(129).is_err());
    }

    #[test]
    fn rule_invariants() {
        for order in [4, 16, 32, 64, 128] {
            let r = gauss_legendre(order).unwrap();
            let s: f64 = r.weights.iter().sum();
            assert!((s - 2.0).abs() < 1e-14, "order {order}: {s}");
            assert!(r.weights.iter().all(|&w| w > 0.0));
            for k in 0..2 * order {
                let exact = if k % 2 == 0 { 2.0 / (k as f64 + 1.0) } else { 0.0 };
                let got = r.integrate(|x| x.powi(k as i32), -1.0, 1.0);
                assert!((got - exact).abs() < 1e-12, "order {order}, x^{k}: {got}");
            }
        }
    }

    #[test]
    fn adaptive_examples() {
        let (v, _) = integrate_adaptive(|_| 1.0, 0.0, 3.0, 1e-12).unwrap();
        assert_relative_eq!(v, 3.0, epsilon = 1e-14);
        let a = lower_cutoff(&PolyFamily::xhermite(), 0, 1e-12);
        let (v, _) = integrate_adaptive(|x| (-x * x).exp(), -a, a, 1e-12).unwrap();
        assert!((v - std::f64::consts::PI.sqrt()).abs() < 1e-12);
        assert!(integrate_adaptive(|x| x, 1.0, 0.0, 1e-12).is_err());
        assert!(integrate_adaptive(|x| x, 0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let r = integrate_adaptive(|x| if x < 0.3 { 0.0 } else { 1.0 / (x - 0.3).sqrt() }, 0.0, 1.0, 1e-15);
        assert!(matches!(r, Err(Error::NonConvergence { .. })));
    }

    #[test]
    fn cutoffs() {
        let h = PolyFamily::xhermite();
        let a0 = lower_cutoff(&h, 0, 1e-12);
        // erfc(A) √π / 2 is the one-sided tail
        assert!((-a0 * a0).exp() / a0 < 2e-12);
        assert!(lower_cutoff(&h, 30, 1e-12) > a0);
        let l = PolyFamily::xlaguerre(1.0).unwrap();
        assert_eq!(lower_cutoff(&l, 10, 1e-12), 0.0);
        let b = upper_cutoff(&l, 10, 1e-12);
        assert!(b >= 42.0);
        let (v, _) = integrate_family(&l, |x| (-x).exp(), 0, 1e-12).unwrap();
        assert!((v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn q3_orthonormality_oracle() {
        let h = PolyFamily::xhermite();
        let f = |x: f64| {
            let q = crate::special_polys::q_eval(&h, 3, x).unwrap();
            q * q * crate::special_polys::weight(&h, x).unwrap()
        };
        let (v, _) = integrate_family(&h, f, 3, 1e-11).unwrap();
        assert!((v - 1.0).abs() < 1e-10, "{v}");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(20))]
        #[test]
        fn gram_integrands_match_doubled_order(m in 0usize..12, n in 0usize..12, omega in -2.0f64..2.0) {
            let h = PolyFamily::xhermite();
            let f = |x: f64| {
                crate::special_polys::q_eval(&h, m, x).unwrap()
                    * crate::special_polys::q_eval(&h, n, x).unwrap()
                    * crate::special_polys::weight(&h, x).unwrap()
            };
            let a = -lower_cutoff(&h, 12, 1e-13);
            let (v, e) = integrate_adaptive(f, a, omega, 1e-12).unwrap();
            let rule = gauss_legendre(64).unwrap();
            let panels = 64;
            let w = (omega - a) / panels as f64;
            let fine: f64 = (0..panels).map(|i| rule.integrate(f, a + w * i as f64, a + w * (i + 1) as f64)).sum();
            prop_assert!((v - fine).abs() < 5e-12, "{} vs {}", v, fine);
            // halving panels does not blow up the estimate
            let (_, e_half) = integrate_adaptive(f, a, omega, 0.5e-12).unwrap();
            prop_assert!(e_half <= 2.0 * e.max(1e-15));
        }
    }
}
