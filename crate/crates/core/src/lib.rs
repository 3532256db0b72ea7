//! Exact minimum-span bases, minimal trellis realizations and minimal
//! polynomial bases over prime fields.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function of immutable inputs, so values can be shared freely across
//! threads.
//!
//! * [`field`]: arithmetic in GF(p), dense matrices, row reduction and kernels.
//! * [`span`]: generator matrices on a finite time axis, spans, and reduction
//!   to a shortest (minimum-span) basis.
//! * [`profiles`]: state, transition, in- and out-space dimension profiles,
//!   from a shortest basis and from independent quotient oracles.
//! * [`trellis`]: controller and observer canonical realizations.
//! * [`duality`]: dual codes and the state/transition duality identities.
//! * [`lti`]: polynomial matrices for time-invariant systems, minors,
//!   minimality tests, reduction to a minimal basis and the dual basis.

#![no_std]

extern crate alloc;
#[cfg(test)]
#[macro_use]
extern crate std;

mod error;

pub mod duality;
pub mod field;
pub mod lti;
pub mod profiles;
pub mod span;
pub mod trellis;

pub use error::{Error, Result};
pub use field::{Fe, Matrix, PrimeField, Rref};
pub use span::{CodeSpec, GeneratorMatrix, Interval, ShortestBasis, Span};
