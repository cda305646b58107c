//! Exact computations in numerical semigroup rings `k[[t^H]]`.
//!
//! Everything lives in the monomial model `R = k[[t^H]]`: the maximal ideal,
//! `E = End(m)`, the canonical module `K`, duals, reflexivity (which is
//! membership in the syzygy category), and the endomorphism chain are all
//! exact integer-set computations.

pub mod census;
pub mod chain;
pub mod classification;
pub mod error;
pub mod ideal;
pub mod reference;
pub mod semigroup;

pub use census::{
    enumerate_by_genus, equivalence_suite, random_ideal, run_census, CensusRecord, SuiteConfig, SuiteReport,
};
pub use chain::{
    dyadic_family, end_chain, stable_dim_bounds, syzygy_finite_type_verdict, verify_family, ChainReport, DimBounds,
    Verdict,
};
pub use classification::{classify, AgConditions, ClassificationReport};
pub use error::{Error, Result};
pub use ideal::{parse_ideal, IdealRecord, RelativeIdeal};
pub use reference::{run_reference_checks, ReferenceChecks, ReferenceReport};
pub use semigroup::NumericalSemigroup;
