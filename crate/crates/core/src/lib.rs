//! Classical code constructions over finite fields and the derivation of
//! symmetric / asymmetric CSS quantum code parameters from them.
//!
//! The crate is organized bottom-up:
//!
//! * [`galois`]: fields, towers, trace and (self-)dual bases
//! * [`polyalg`]: polynomials, cyclotomic cosets, cyclic and negacyclic defining sets
//! * [`lincode`]: linear codes, duals, minimum distance, subfield expansions
//! * [`families`]: RS, BCH, simplex, Preparata-like and negacyclic MDS families
//! * [`quantum`]: CSS pipelines, bound calculators and table audits
//! * [`qct`]: JSON records, the JSON-lines catalog and the `qct` command line

pub mod config;
pub mod error;
pub mod families;
pub mod galois;
pub mod linalg;
pub mod lincode;
pub mod polyalg;
pub mod qct;
pub mod quantum;

pub use config::Config;
pub use error::{QctError, Result};
