//! Presentations and type of numerical monoids, the extremal bounds on the
//! number of minimal relations and the type for fixed embedding dimension and
//! multiplicity, and graded Betti numbers of the artinian ideals behind them.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod arith;
pub mod constructions;
pub mod error;
pub mod ideals;
pub mod monoid;
pub mod presentation;
pub mod search;
pub mod sumset;

pub use error::{ArithError, ConstructionError, IdealError, MonoidError, PresentationError};
pub use monoid::{AperySet, NumericalMonoid};
