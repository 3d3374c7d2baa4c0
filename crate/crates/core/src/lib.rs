//! Computational structures for three-argument norms and metrics.
//!
//! This crate makes generalized norm structures evaluable:
//!
//! * [`structures`]: a catalog of norm, metric, S-norm, S-metric and G-norm
//!   instances behind one immutable [`StructureHandle`] type.
//! * [`generators`]: the structure-to-structure constructions (norm to
//!   S-norm, S-norm to S-metric, and so on) with machine-readable
//!   provenance.
//! * [`axioms`]: a sampling-based falsifier for each axiom system, with
//!   deterministic seeds and replayable counterexample witnesses.
//! * [`geometry`]: membership and 2-D boundary tracing for the triple-norm
//!   balls, whose level sets are 3-ellipses in the norm-generated case.
//! * [`setanalysis`]: diameter, Chebyshev radius and centre, and diametral
//!   classification for finite point sets.
//! * [`sequences`]: finite-horizon convergence and Cauchy diagnostics.
//! * [`rhoades`]: Rhoades-type contractive condition evaluators, implication
//!   checks between them, and a numerical fixed-point search.
//!
//! The crate is `no_std` compatible (with `alloc`); disable the default
//! `std` feature and enable `libm` to build without the standard library.
//! All evaluation is pure and handles are freely shareable across threads.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

mod float;

pub mod axioms;
pub mod error;
pub mod generators;
pub mod geometry;
pub mod rhoades;
pub mod sampling;
pub mod sequences;
pub mod setanalysis;
pub mod structures;
pub mod vector;

pub use error::CoreError;
pub use sampling::SampleSpec;
pub use structures::{StructureHandle, StructureKind};
pub use vector::Vector;

/// Crate-wide result type.
pub type Result<T> = core::result::Result<T, CoreError>;
