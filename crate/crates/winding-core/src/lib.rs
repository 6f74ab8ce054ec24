//! Exact winding numbers of piecewise-linear graph drawings in the plane.
//!
//! All coordinates are arbitrary-precision rationals, so every incidence
//! and disjointness decision is exact. The crate provides:
//!
//! * [`exact_geom`] — rational points and the geometric predicates
//!   everything else is built on;
//! * [`polyline`] — open and closed polygonal lines, their concatenation
//!   algebra, exact winding numbers and float turning numbers;
//! * [`graph_drawing`] — graphs, PL drawings, almost-embedding validation,
//!   winding-number vectors and a seeded rejection sampler;
//! * [`constructor`] — spiral pairs, the base simple almost embedding,
//!   the finger move, and the realizer that produces an almost embedding
//!   of K4 with any prescribed odd-sum winding vector.
//!
//! The crate is `no_std` (alloc required); IO, file formats and the CLI
//! live in the companion `winding-cli` crate.

#![no_std]
#![deny(clippy::cast_precision_loss)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod constructor;
pub mod error;
pub mod exact_geom;
pub mod graph_drawing;
pub mod polyline;

pub use error::Error;
pub use exact_geom::{Pt, Rat};
pub use graph_drawing::{Drawing, Graph, ValidationReport, WindingVector};
pub use polyline::{Cycle, Polyline};
