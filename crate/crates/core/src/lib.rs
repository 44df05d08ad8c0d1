//! Time-and-band limiting for exceptional Hermite and Laguerre polynomial
//! families.
//!
//! The crate builds the Gram matrix of the time-and-band limited operator,
//! the commuting operator in banded (`Ť`) and differential (`T`) form, and
//! uses `Ť` to diagonalize the Gram matrix.

pub mod commuting;
pub mod diffops;
pub mod error;
pub mod gram;
pub mod jets;
pub mod quadrature;
pub mod report;
pub mod special_polys;
pub mod spectral;
pub mod verify;

pub use commuting::{CommutingPair, CommutingReport, GenericSolution, Word};
pub use diffops::{BandedOperator, Transcription};
pub use error::{Error, Result};
pub use gram::GramMatrix;
pub use jets::{Jet, JET_ORDER};
pub use special_polys::{FamilyKind, PolyFamily};
pub use spectral::SpectralReport;
pub use verify::{CheckResult, SuiteConfig, SuiteReport};
