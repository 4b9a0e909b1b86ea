//! Point-sampling count used to cross-check the exact mesh counts.
//!
//! Each primitive is replaced by a finite sample (its vertices, points along
//! its edges, lattice points inside it). Every sample is located on the mesh
//! by index arithmetic alone, so this path shares nothing with the
//! separating-axis predicate. Because samples are a subset of the set, the
//! result never exceeds the exact count.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{validation, Error, Result};
use crate::geometry::{GeoSet, Point};
use crate::mesh::{CellKey, CellMode, CountRecord, Diagonal, Half, MeshKind, MeshSpec};
use crate::scalar::Coord;

fn pow2_neg<S: Coord>(e: u32) -> S {
    (0..e).fold(S::one(), |acc, _| acc.half())
}

/// Smallest `e` with `2^e >= x`.
fn ceil_log2(x: f64) -> u32 {
    let mut e = 0;
    while libm::exp2(f64::from(e)) < x && e < 60 {
        e += 1;
    }
    e
}

fn inside<S: Coord>(poly: &[Point<S>], p: Point<S>) -> bool {
    let n = poly.len();
    (0..n).all(|i| {
        let a = poly[i];
        let b = poly[(i + 1) % n];
        b.sub(a).cross(p.sub(a)).sign() != Ordering::Less
    })
}

/// Sample points of one primitive at `density` samples per unit length.
pub fn sample_primitive<S: Coord>(verts: &[Point<S>], density: u32) -> Vec<Point<S>> {
    let mut out: Vec<Point<S>> = verts.to_vec();
    let n = verts.len();
    let edges = if n == 2 { 1 } else if n > 2 { n } else { 0 };
    for i in 0..edges {
        let (a, b) = (verts[i], verts[(i + 1) % n]);
        let d = b.sub(a);
        let len = libm::fabs(d.x.to_f64()) + libm::fabs(d.y.to_f64());
        let e = ceil_log2(len * f64::from(density));
        let step = Point::new(d.x * pow2_neg(e), d.y * pow2_neg(e));
        for j in 1..(1i64 << e) {
            let t = S::from_i64(j);
            out.push(Point::new(a.x + step.x * t, a.y + step.y * t));
        }
    }
    if n >= 3 {
        let e = ceil_log2(f64::from(density));
        let h: S = pow2_neg(e);
        let hf = h.to_f64();
        let (lo, hi) = verts.iter().skip(1).fold((verts[0], verts[0]), |(lo, hi), v| {
            (
                Point::new(lo.x.min_coord(v.x), lo.y.min_coord(v.y)),
                Point::new(hi.x.max_coord(v.x), hi.y.max_coord(v.y)),
            )
        });
        let i0 = libm::ceil(lo.x.to_f64() / hf) as i64;
        let i1 = libm::floor(hi.x.to_f64() / hf) as i64;
        let j0 = libm::ceil(lo.y.to_f64() / hf) as i64;
        let j1 = libm::floor(hi.y.to_f64() / hf) as i64;
        for j in j0..=j1 {
            for i in i0..=i1 {
                let p = Point::new(S::from_i64(i) * h, S::from_i64(j) * h);
                if inside(verts, p) {
                    out.push(p);
                }
            }
        }
    }
    out
}

fn axis_cells<S: Coord>(v: S, origin: S, delta: S, mode: CellMode) -> ([i64; 2], usize) {
    let g = v.grid_index(origin, delta);
    match mode {
        CellMode::Closed if g.on_line => ([g.floor - 1, g.floor], 2),
        _ => ([g.floor, 0], 1),
    }
}

fn halves_containing<S: Coord>(
    spec: &MeshSpec<S>,
    m: i64,
    n: i64,
    p: Point<S>,
    mut visit: impl FnMut(Half),
) {
    let x0 = spec.offset.x + S::from_i64(m) * spec.delta;
    let y0 = spec.offset.y + S::from_i64(n) * spec.delta;
    let (u, v) = (p.x - x0, p.y - y0);
    // sign of the local coordinate relative to the diagonal; Less => lower
    let side = match spec.diagonal {
        Diagonal::Ne => v.cmp_coord(u),
        Diagonal::Nw => (u + v).cmp_coord(spec.delta),
    };
    match (spec.cell_mode, side) {
        (CellMode::Closed, Ordering::Equal) => {
            visit(Half::Lower);
            visit(Half::Upper);
        }
        (_, Ordering::Less) => visit(Half::Lower),
        (_, Ordering::Greater) => visit(Half::Upper),
        (CellMode::HalfOpen, Ordering::Equal) => visit(match spec.diagonal {
            Diagonal::Ne => Half::Lower,
            Diagonal::Nw => Half::Upper,
        }),
    }
}

/// Distinct-key count of the mesh cells containing at least one sample.
pub fn sampling_oracle_count<S: Coord>(
    g: &GeoSet<S>,
    spec: &MeshSpec<S>,
    kind: MeshKind,
    density: u32,
) -> Result<CountRecord> {
    if density < 1 {
        return Err(validation("sampling density must be at least 1"));
    }
    if g.is_empty() {
        return Err(Error::EmptyInput);
    }
    spec.validate()?;
    let mut keys = BTreeSet::new();
    for prim in &g.primitives {
        for p in sample_primitive(prim.vertices(), density) {
            let (ms, mc) = axis_cells(p.x, spec.offset.x, spec.delta, spec.cell_mode);
            let (ns, nc) = axis_cells(p.y, spec.offset.y, spec.delta, spec.cell_mode);
            for &m in &ms[..mc] {
                for &n in &ns[..nc] {
                    match kind {
                        MeshKind::Square => {
                            keys.insert(CellKey { m, n, half: None });
                        }
                        MeshKind::Triangle => halves_containing(spec, m, n, p, |h| {
                            keys.insert(CellKey { m, n, half: Some(h) });
                        }),
                    }
                }
            }
        }
    }
    Ok(CountRecord {
        mesh: kind,
        delta: spec.delta.to_scalar(),
        count: keys.len() as u64,
    })
}
