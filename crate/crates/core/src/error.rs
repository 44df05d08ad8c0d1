use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("x = {x} lies outside the open interval ({a}, {b})")]
    Domain { x: f64, a: f64, b: f64 },

    #[error("alpha must be positive for the exceptional Laguerre family, got {0}")]
    InvalidAlpha(f64),

    #[error("degree {0} exceeds the supported cap of {cap}", cap = crate::special_polys::MAX_DEGREE)]
    DegreeCap(usize),

    #[error("non-finite value while evaluating degree {degree} at x = {x}")]
    Overflow { degree: usize, x: f64 },

    #[error("jet order {0} exceeds JET_ORDER = {max}", max = crate::jets::JET_ORDER)]
    JetOrder(usize),

    #[error("jet division by a jet with zero leading coefficient")]
    JetDivisionByZero,

    #[error("jet square root/log/power of a jet with non-positive leading coefficient {0}")]
    JetNonPositiveBase(f64),

    #[error("jets expanded at different centers ({0} vs {1})")]
    JetCenterMismatch(f64, f64),

    #[error("Gauss-Legendre order {0} is outside 1..=128")]
    QuadratureOrder(usize),

    #[error("invalid integration range [{a}, {b}] or tolerance {tol}")]
    QuadratureRange { a: f64, b: f64, tol: f64 },

    #[error("adaptive quadrature on [{a}, {b}] did not converge within {panels} panels")]
    NonConvergence { a: f64, b: f64, panels: usize },

    #[error("time limit N = {n} rejected: {reason}")]
    InvalidN { n: usize, reason: &'static str },

    #[error("band limit omega = {omega} must lie in the open interval ({a}, {b})")]
    InvalidOmega { omega: f64, a: f64, b: f64 },

    #[error("no builtin operator with index {j} for family {family}")]
    UnknownOperator { j: usize, family: &'static str },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("operator basis is empty")]
    EmptyBasis,

    #[error("no candidate direction remains after projecting out the identity")]
    NoCandidate,

    #[error("matrix is not symmetric (relative asymmetry {0:e})")]
    NotSymmetric(f64),

    #[error("Jacobi eigensolver did not converge within {0} sweeps")]
    SweepBudget(usize),

    #[error("eps must lie in (0, 1/2), got {0}")]
    InvalidEps(f64),

    #[error("invalid tolerance {0}")]
    InvalidTolerance(f64),
}

impl Error {
    /// True for errors caused by bad user input rather than numerical trouble.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Domain { .. }
                | Error::InvalidAlpha(_)
                | Error::DegreeCap(_)
                | Error::InvalidN { .. }
                | Error::InvalidOmega { .. }
                | Error::UnknownOperator { .. }
                | Error::InvalidEps(_)
                | Error::InvalidTolerance(_)
                | Error::QuadratureOrder(_)
        )
    }
}
