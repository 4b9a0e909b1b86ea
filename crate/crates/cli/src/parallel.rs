//! Data-parallel mesh counting over primitives.
//!
//! Each worker collects the keys hit by one chunk of primitives into its own
//! set; the sets are merged by union, so the count does not depend on how
//! the primitives were split.

use std::collections::BTreeSet;

use fracmesh_core::mesh::{collect_keys, Prepared};
use fracmesh_core::{CellKey, Coord, CountRecord, Error, GeoSet, MeshKind, MeshSpec, Result};
use rayon::prelude::*;

fn union(mut a: BTreeSet<CellKey>, mut b: BTreeSet<CellKey>) -> BTreeSet<CellKey> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    a.extend(b);
    a
}

/// Count with primitives split into chunks of `chunk` (at least 1).
pub fn par_count_chunked<S: Coord>(
    g: &GeoSet<S>,
    spec: &MeshSpec<S>,
    kind: MeshKind,
    chunk: usize,
) -> Result<CountRecord> {
    if g.is_empty() {
        return Err(Error::EmptyInput);
    }
    spec.validate()?;
    let keys = g
        .primitives
        .par_chunks(chunk.max(1))
        .map(|part| {
            let mut local = BTreeSet::new();
            collect_keys(part, spec, kind, &mut local).map(|()| local)
        })
        .try_reduce(BTreeSet::new, |a, b| Ok(union(a, b)))?;
    Ok(CountRecord {
        mesh: kind,
        delta: spec.delta.to_scalar(),
        count: keys.len() as u64,
    })
}

pub fn par_count<S: Coord>(g: &GeoSet<S>, spec: &MeshSpec<S>, kind: MeshKind) -> Result<CountRecord> {
    let workers = rayon::current_num_threads().max(1);
    let chunk = g.primitives.len().div_ceil(workers * 4).max(1);
    par_count_chunked(g, spec, kind, chunk)
}

pub fn par_count_prepared(p: &Prepared<'_>, kind: MeshKind) -> Result<CountRecord> {
    match p {
        Prepared::Exact(g, spec) => par_count(g, spec, kind),
        Prepared::Approx(g, spec) => par_count(g, spec, kind),
    }
}
