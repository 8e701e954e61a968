//! Polynomials over GF(q), cyclotomic cosets, cyclic / negacyclic defining
//! sets, generator polynomials and the BCH bound.

mod defining_set;
mod poly;

pub(crate) use defining_set::gcd;
pub use defining_set::{
    bch_bound, bch_defining_set, cyclotomic_coset, defining_set_closure,
    generator_from_defining_set, hermitian_dual_defining_set, minimal_polynomial,
    primitive_root_of_unity, splitting_tower, CodeKind, CyclotomicCoset, DefiningSet,
};
pub use poly::Poly;
