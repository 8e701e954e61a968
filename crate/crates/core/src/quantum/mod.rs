//! Asymmetric quantum code parameters from classical codes: the standard and
//! Hermitian CSS constructions, the family pipelines built on them, bound
//! calculators and table audits.

mod audit;
mod bounds;
mod css;
mod params;
mod pipelines;

pub use audit::{audit_table, AuditRow, AuditTarget, RowStatus, VerificationReport};
pub use bounds::{bound, BoundKind};
pub use css::{allone_aqc, css_hermitian, css_standard};
pub use params::{AqcParams, Check, ExactFlags, Provenance, Purity, Side, UpperBounds};
pub use pipelines::{
    charpin_family, concat_expand_aqc, concat_formula, lemma_bch1, negacyclic_expand_aqc,
    quantum_concat_params, rs_direct_sum_aqc, th_best_family, CharpinFamilies, FamilyOutcome,
    ThBestInput,
};
