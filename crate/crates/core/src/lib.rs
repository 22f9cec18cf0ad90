//! Exact q-series arithmetic for theta functions, eta-quotients, the
//! Rogers–Ramanujan functions and theta series of binary quadratic forms,
//! with a small expression language and a catalogue of verifiable identities.

pub mod dsl;
pub mod error;
pub mod forms;
pub mod registry;
pub mod rogers_ramanujan;
pub mod series;
pub mod theta;

pub use error::{Error, Result};
pub use series::{Agreement, Rat, Series};
