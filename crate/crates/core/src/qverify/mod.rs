//! Executable catalog of identities and limit statements.
//!
//! Identities are evaluated over a [`GridSpec`] of rational parameters. Exact
//! entries demand structural equality; interval entries demand intersecting
//! enclosures no wider than the stated tolerance; limit entries demand a
//! certified strictly decreasing distance along the parameter sequence.

pub mod catalog;
pub mod check;
pub mod grid;
pub mod limits;

pub use catalog::{catalog, catalog_ids, gate, run_all, run_identities, run_identity, CatalogEntry};
pub use check::{Binding, CheckMode, Checker, IdentityCheck, Outcome};
pub use grid::{default_grid, GridSpec, QDomain};
pub use limits::{limit_table, ConvergenceRow, ConvergenceTable, LimitName, LimitSpec, LIMIT_NAMES};
