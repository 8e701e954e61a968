//! Command line front end and the JSON-lines catalog.

pub mod catalog;
mod cli;
mod render;

pub use catalog::{content_id, Catalog, CatalogEntry, EntryKind, Query};
pub use cli::run;
