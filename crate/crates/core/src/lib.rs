//! Exact computation of the Hilbert depth of Hilbert functions of graded
//! modules, with the constructions and verification batteries around it.
//!
//! The central type is [`HilbertFunction`], a rational generating function
//! `numerator / (1 - t)^p` kept in canonical form. [`qdepth::qdepth`]
//! returns the depth together with a β-table certificate.

mod decimal;
pub mod fault;
pub mod hyp;
pub mod numbers;
pub mod qdepth;
pub mod report;
pub mod series;
pub mod squarefree;
pub mod verify;

pub use numbers::{Integer, Rational};
pub use qdepth::{BetaTable, QDepthError, QDepthResult, Refutation};
pub use report::{VerificationReport, Violation};
pub use series::{
    parse_spec, FunctionSpec, HilbertFunction, LaurentPolynomial, SeriesError, SpecError,
};
