//! Exact arithmetic for numerical semigroups with four generators.
//!
//! * [`semigroup`]: generator sets, Apéry tables, Frobenius number, genus,
//!   membership, symmetry and minimality.
//! * [`hilbert`]: Hilbert-series numerators and the classification into
//!   nonsymmetric, symmetric complete intersection and symmetric not-CI.
//! * [`bounds`]: symmetric functions of the numerator exponents, the exact
//!   identities and inequalities they obey, and closed-form lower bounds on `F`.
//! * [`survey`]: exhaustive enumeration over a generator range with per-instance
//!   law checks and CSV / JSONL output.

pub mod bounds;
pub mod error;
pub mod hilbert;
pub mod semigroup;
pub mod survey;

pub use bounds::{
    bound_ci, bound_ns3, bound_ns4, bound_report, bound_symmetric_not_ci, elementary_symmetric,
    exact_threshold_check, maclaurin_chain, newton_consistency, power_sums,
    verify_intermediate_inequalities, verify_key_identity, BoundReport, SymmetricFunctionData,
};
pub use error::{Error, Result};
pub use hilbert::{
    classify, numerator, parse_bresinsky, peel_ci_product, NumeratorPoly, SemigroupClass,
};
pub use semigroup::{
    apery_set, frobenius, genus, is_member, is_minimal_generating_set, is_symmetric, AperyTable,
    GeneratorSet,
};
pub use survey::{run_survey, summarize, SummaryStats, SurveyConfig, SurveyRecord};
