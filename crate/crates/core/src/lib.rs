//! Exact checks for topological Hall-type theorems and reconfiguration graphs.
//!
//! Everything is computed over the rationals; floating point never decides a
//! topological or geometric predicate.

#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod complex;
pub mod error;
pub mod exactla;
pub mod ext;
pub mod graphs;
pub mod hallcheck;
pub mod geometry;
pub mod homology;
pub mod matroid;
pub mod reconfig;
pub mod sperner;

pub use error::{Error, Result};
pub use ext::ExtNat;
