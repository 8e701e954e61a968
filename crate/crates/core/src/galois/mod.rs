//! Finite fields GF(p^e), subfield towers, the trace map, and dual /
//! self-dual bases.

mod basis;
mod field;
pub(crate) mod primepoly;
mod tower;

pub use basis::{
    find_dual_basis, find_self_dual_basis, gram_matrix, search_self_dual_basis,
    self_dual_basis_exists, ExtensionBasis, SelfDualSearch, SELF_DUAL_NODE_BUDGET,
};
pub use field::{build_field, Field, FieldDescriptor};
pub use primepoly::is_irreducible;
pub use tower::{trace, Tower};
