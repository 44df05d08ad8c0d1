//! Invariant suite run by the `verify` command: every check is a named
//! residual compared with a fixed threshold.

use std::fmt::Write as _;

use serde::Serialize;

use crate::commuting::{
    check_cond1, check_cond2, commutator_residual, cross_representation_residual, independence_rank,
    kernel_symmetry_residual, linspace, sample_pairs, solve_commuting_generic, verify_pair, y_set, CommutingPair,
};
use crate::diffops::Transcription;
use crate::error::Result;
use crate::gram::{gram_matrix, orthonormality_defect};
use crate::special_polys::{FamilyKind, PolyFamily};
use crate::spectral::spectral_report;

/// Thresholds shared with the acceptance tests.
pub mod thresholds {
    pub const ORTHONORMALITY: f64 = 1e-9;
    pub const INTERTWINING: f64 = 1e-8;
    pub const COND1: f64 = 1e-10;
    pub const COND2: f64 = 1e-9;
    pub const COMMUTATOR: f64 = 1e-8;
    pub const CROSS_REPRESENTATION: f64 = 1e-7;
    pub const KERNEL_SYMMETRY: f64 = 1e-6;
    pub const GENERIC_SOLVER: f64 = 1e-8;
    pub const SPECTRUM_AGREEMENT: f64 = 1e-8;
    pub const SPECTRUM_MARGIN: f64 = 1e-10;
}

/// Highest degree in the orthonormality check.
pub const ORTHONORMALITY_DEGREE: usize = 25;
/// Highest degree in the intertwining check.
pub const INTERTWINING_DEGREE: usize = 20;
/// Highest degree in the cross-representation check.
pub const CROSS_DEGREE: usize = 15;
/// Weight of the banded-sum cancellation allowance in the suite's cross-representation check.
pub const CROSS_CANCELLATION: f64 = 1e-5;

/// Sample range used for pointwise checks.
pub fn sample_range(fam: &PolyFamily) -> (f64, f64) {
    match fam.kind() {
        FamilyKind::XHermite => (-2.0, 2.0),
        FamilyKind::XLaguerre => (0.2, 5.0),
    }
}

/// Wider range for the intertwining grid.
pub fn intertwining_grid(fam: &PolyFamily) -> Vec<f64> {
    match fam.kind() {
        FamilyKind::XHermite => linspace(-3.0, 3.0, 50),
        FamilyKind::XLaguerre => linspace(0.1, 8.0, 50),
    }
}

/// Rank the candidate set must reach.
pub fn expected_rank(fam: &PolyFamily) -> (usize, usize) {
    match fam.kind() {
        FamilyKind::XHermite => (14, 40),
        FamilyKind::XLaguerre => (8, 30),
    }
}

/// Number of builtin intertwining pairs.
pub fn builtin_count(fam: &PolyFamily) -> usize {
    match fam.kind() {
        FamilyKind::XHermite => 4,
        FamilyKind::XLaguerre => 3,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteConfig {
    pub family: PolyFamily,
    pub n: usize,
    pub omega: f64,
    pub tol: f64,
    pub eps: f64,
    pub seed: u64,
    pub transcription: Transcription,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Comparison {
    /// Passes when `value < threshold`.
    Below,
    /// Passes when `value == threshold`.
    Equal,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub value: f64,
    pub threshold: f64,
    pub comparison: Comparison,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckResult {
    fn below(name: impl Into<String>, value: f64, threshold: f64) -> Self {
        Self { name: name.into(), value, threshold, comparison: Comparison::Below, passed: value < threshold, note: None }
    }

    fn equal(name: impl Into<String>, value: f64, expected: f64) -> Self {
        Self { name: name.into(), value, threshold: expected, comparison: Comparison::Equal, passed: value == expected, note: None }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub checks: Vec<CheckResult>,
    pub failures: usize,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// Plain-text table, one line per check.
    pub fn table(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            let op = match c.comparison {
                Comparison::Below => "<",
                Comparison::Equal => "==",
            };
            let _ = write!(
                out,
                "{}  {:width$}  {:.3e} {op} {:.1e}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.value,
                c.threshold
            );
            if let Some(n) = &c.note {
                let _ = write!(out, "  ({n})");
            }
            out.push('\n');
        }
        let _ = writeln!(out, "{} of {} checks failed", self.failures, self.checks.len());
        out
    }
}

/// Runs every check for one configuration. Errors are returned only for
/// invalid input or internal failures; numerical misses are recorded as
/// failed checks.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let fam = &cfg.family;
    let tr = cfg.transcription;
    let pair = CommutingPair::new(fam, cfg.n, cfg.omega, tr)?;
    let m = gram_matrix(fam, cfg.n, cfg.omega, cfg.tol)?;
    let (lo, hi) = sample_range(fam);
    let mut checks = Vec::new();

    checks.push(CheckResult::below(
        "orthonormality",
        orthonormality_defect(fam, ORTHONORMALITY_DEGREE, cfg.tol)?,
        thresholds::ORTHONORMALITY,
    ));

    let grid = intertwining_grid(fam);
    for j in 0..builtin_count(fam) {
        checks.push(CheckResult::below(
            format!("intertwining_D{j}"),
            verify_pair(fam, j, INTERTWINING_DEGREE, &grid, tr)?,
            thresholds::INTERTWINING,
        ));
    }

    checks.push(CheckResult::below("cond1", check_cond1(&pair)?, thresholds::COND1));
    checks.push(CheckResult::below("cond2", check_cond2(&pair.that, cfg.n), thresholds::COND2));
    checks.push(CheckResult::below("commutator", commutator_residual(&pair.that, &m)?, thresholds::COMMUTATOR));
    checks.push(CheckResult::below(
        "cross_representation",
        cross_representation_residual(&pair, CROSS_DEGREE, &linspace(lo, hi, 20), CROSS_CANCELLATION)?,
        thresholds::CROSS_REPRESENTATION,
    ));
    checks.push(CheckResult::below(
        "kernel_symmetry",
        kernel_symmetry_residual(&pair, &sample_pairs(10, lo, hi, cfg.seed))?,
        thresholds::KERNEL_SYMMETRY,
    ));

    let ys = y_set(fam, tr)?;
    let (rank, block) = expected_rank(fam);
    let mut rank_check = CheckResult::equal("independence_rank", independence_rank(&ys, block) as f64, rank as f64);
    rank_check.note = Some(format!("block {block}"));
    checks.push(rank_check);

    let sol = solve_commuting_generic(&ys, &m, thresholds::GENERIC_SOLVER)?;
    let mut generic = CheckResult::below("generic_solver", sol.residual, thresholds::GENERIC_SOLVER);
    if !sol.nonscalar {
        generic.passed = false;
        generic.note = Some("solution is a multiple of the identity".into());
    }
    checks.push(generic);

    let spec = spectral_report(&pair, &m, cfg.eps)?;
    let mut agreement =
        CheckResult::below("spectrum_agreement", spec.spectrum_agreement, thresholds::SPECTRUM_AGREEMENT);
    if spec.degenerate {
        agreement.passed = true;
        agreement.note = Some("degenerate spectrum of the banded operator; excluded".into());
    }
    checks.push(agreement);
    let outside = spec
        .eig_m_direct
        .iter()
        .map(|&v| (-v).max(v - 1.0).max(0.0))
        .fold(0.0, f64::max);
    checks.push(CheckResult::below("spectrum_bounds", outside, thresholds::SPECTRUM_MARGIN));

    let failures = checks.iter().filter(|c| !c.passed).count();
    Ok(SuiteReport { checks, failures })
}
