//! Exact-arithmetic toolkit for quiver schemes.
//!
//! Everything here is computed over the integers or the rationals, never
//! floating point. The crate decides flatness of quiver moment maps by the
//! decomposition criterion, builds étale slice quivers from representation
//! types, applies simple Weyl reflections to dimension/parameter data,
//! specializes the flatness test to framed type-A quivers (including the
//! W-algebra parameter correspondence), and computes t-graded Hilbert
//! series of affine quiver schemes by Molien-Weyl constant-term extraction
//! with independent brute-force oracles.
//!
//! All values are immutable after construction and every operation is a
//! deterministic pure function, so the whole API is safe for concurrent
//! use without synchronization.

// indexed loops over adjacency/Cartan matrices read better than iterator
// chains here
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod flatness;
pub mod hilbert;
pub mod io;
pub mod quiver;
pub mod rat;
pub mod reflections;
pub mod slices;
pub mod typea;

pub use error::{Error, Result};
pub use quiver::{DimVector, FramingVector, IntMatrix, ParamPair, Quiver};
