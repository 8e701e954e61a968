//! Linear codes over GF(q): canonical generators, duals, containment,
//! puncturing, extension, direct sums, subfield expansion and minimum
//! (relative) distance.

mod code;
mod distance;
mod expand;
mod record;

pub use code::{
    contains_allones, contains_code, direct_sum, dual, extend_parity, hermitian_dual, puncture,
    ClassicalParams, LinearCode,
};
pub(crate) use distance::certified_floor;
pub use distance::{
    is_mds, min_distance, params, relative_min_weight, DistanceMethod, DistanceResult, Exactness,
};
pub use expand::{expand_basis, expand_with_parity};
pub use record::{CodeRecord, DistanceSummary};
