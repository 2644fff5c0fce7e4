//! Exact invariants, singular fibers, Hasse divisors and ordinarity of
//! isotrivial elliptic surfaces over prime fields of characteristic p > 3.

pub mod curves;
pub mod document;
pub mod error;
pub mod ffpoly;
pub mod fibration;
pub mod golden;
pub mod ordinarity;
pub mod scan;

pub use document::SpecDocument;
pub use error::{Error, Result, Violation};
