//! File formats, parallel counting, reports and the command implementations
//! behind the `fracmesh` binary.

pub mod fracgeo;
pub mod parallel;
pub mod plot;
pub mod run;
pub mod table;
pub mod trace;
