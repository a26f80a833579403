//! Exact and numerical verification of the local and global zeta integrals
//! attached to a Siegel cusp form on GSp(4) and a form on GL(2) with Steinberg
//! components at the level primes.
//!
//! The non-archimedean computations run in exact arithmetic over ℚ(√q) in the
//! formal variable `t = q^(-3s)`; the archimedean and global pieces are
//! evaluated in double precision.

pub mod error;
pub mod exact;

pub use error::{Error, Result};
pub mod cosets;
pub mod local_field;
pub mod rng;
pub mod satake;
pub mod sugano;
pub mod local_integral;
pub mod arch;
pub mod global;
pub mod input;
pub mod driver;
