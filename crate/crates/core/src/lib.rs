//! Box-counting dimension with square and triangle δ-meshes.
//!
//! This crate is `no_std` (it needs `alloc`). It provides
//!
//! - exact dyadic scalars and closed convex primitives ([`dyadic`],
//!   [`scalar`], [`geometry`]),
//! - the Bradley spiral prefractal, its triangle decomposition and
//!   calibration prefractals ([`generators`]),
//! - square-mesh and triangle-mesh counting with a sampling cross-check
//!   ([`mesh`], [`oracle`]),
//! - closed-form spiral counts, δ schedules and log-log fits ([`estimate`]).
//!
//! IO, parallel counting and the command-line tool live in the `fracmesh`
//! crate.
#![no_std]

extern crate alloc;

pub mod dyadic;
pub mod error;
pub mod estimate;
pub mod generators;
pub mod geometry;
pub mod mesh;
pub mod oracle;
pub mod scalar;

pub use dyadic::Dyadic;
pub use error::{Error, Result};
pub use geometry::{AnyGeoSet, ConvexPrimitive, GeoSet, Point};
pub use mesh::{CellKey, CellMode, CountRecord, Diagonal, Half, MeshKind, MeshSpec};
pub use scalar::{Coord, Scalar};
