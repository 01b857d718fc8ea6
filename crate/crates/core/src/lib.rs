//! Exact Betti numbers for rank-3 parabolic Higgs moduli spaces.
//!
//! Everything here is integer or rational arithmetic on arbitrary-precision
//! values. The crate is `no_std` and only needs an allocator.
#![no_std]

extern crate alloc;

pub mod error;
pub mod exactalg;
pub mod hausel;
pub mod higgs3;
pub mod symcurve;
pub mod triples;
pub mod weights;

pub use error::{Error, Result};
pub use exactalg::{AuxSeries, LaurentPoly, QExpr, RatFun};
pub use weights::WeightSystem;

/// Version string folded into cache keys and serialized output.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
