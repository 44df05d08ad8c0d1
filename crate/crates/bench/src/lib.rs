//! Shared fixtures for the benchmarks.

use xbl_core::gram::gram_matrix;
use xbl_core::{GramMatrix, PolyFamily};

/// A `(family, N, Ω)` setting.
#[derive(Debug, Clone, Copy)]
pub struct Case {
    pub label: &'static str,
    pub family: PolyFamily,
    pub n: usize,
    pub omega: f64,
}

/// Representative settings: small and large time limits for both families.
pub fn cases() -> Vec<Case> {
    let h = PolyFamily::xhermite();
    let l = PolyFamily::xlaguerre(1.3).expect("positive alpha");
    vec![
        Case { label: "xhermite_N12", family: h, n: 12, omega: 0.3 },
        Case { label: "xhermite_N40", family: h, n: 40, omega: 1.0 },
        Case { label: "xlaguerre_N10", family: l, n: 10, omega: 0.7 },
        Case { label: "xlaguerre_N30", family: l, n: 30, omega: 3.0 },
    ]
}

pub fn gram(case: &Case) -> GramMatrix {
    gram_matrix(&case.family, case.n, case.omega, 1e-12).expect("valid case")
}
