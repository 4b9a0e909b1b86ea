//! The Bradley spiral prefractal.
//!
//! Stage `k` inscribes the midpoint square `N_k` in `N_{k-1}` and removes one
//! of the four corner triangles between them; the removed corner turns 45°
//! clockwise per stage (NE, E, SE, S, ...). `S_k` is stored as a union of
//! closed primitives: `N_k` plus the three kept triangles of every stage.
//! The closed union reproduces the boundary bookkeeping of the construction:
//! the kept hypotenuses lie on `∂N_k`, while the leg `T_k` shares with
//! `T_{k-1}` belongs to no kept primitive.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::dyadic::Dyadic;
use crate::error::{validation, Error, Result};
use crate::geometry::{ConvexPrimitive, GeoSet, Point};

/// Default cap on construction depth. `3·2^24` decomposition triangles is
/// already beyond desk-scale memory.
pub const DEFAULT_DEPTH_CAP: u32 = 24;

/// One of the eight compass directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Compass {
    NE,
    E,
    SE,
    S,
    SW,
    W,
    NW,
    N,
}

impl Compass {
    /// Clockwise order starting at NE.
    pub const CLOCKWISE: [Compass; 8] = [
        Compass::NE,
        Compass::E,
        Compass::SE,
        Compass::S,
        Compass::SW,
        Compass::W,
        Compass::NW,
        Compass::N,
    ];

    /// Integer direction vector.
    pub fn vector(self) -> (i64, i64) {
        match self {
            Compass::NE => (1, 1),
            Compass::E => (1, 0),
            Compass::SE => (1, -1),
            Compass::S => (0, -1),
            Compass::SW => (-1, -1),
            Compass::W => (-1, 0),
            Compass::NW => (-1, 1),
            Compass::N => (0, 1),
        }
    }

    pub fn is_diagonal(self) -> bool {
        let (x, y) = self.vector();
        x != 0 && y != 0
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Compass::NE => "NE",
            Compass::E => "E",
            Compass::SE => "SE",
            Compass::S => "S",
            Compass::SW => "SW",
            Compass::W => "W",
            Compass::NW => "NW",
            Compass::N => "N",
        }
    }
}

impl fmt::Display for Compass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Corner removed at stage `k ≥ 1`: NE turned clockwise by `45°·(k-1)`.
pub fn removal_direction(k: u32) -> Result<Compass> {
    if k == 0 {
        return Err(Error::Domain("stage index must be at least 1".into()));
    }
    Ok(Compass::CLOCKWISE[((k - 1) % 8) as usize])
}

/// Bookkeeping for one construction stage.
#[derive(Debug, Clone, PartialEq)]
pub struct StageTrace {
    pub k: u32,
    /// `N_{k-1}`.
    pub square_before: ConvexPrimitive<Dyadic>,
    /// `N_k`.
    pub square_after: ConvexPrimitive<Dyadic>,
    /// `T_k`, right-angle vertex first.
    pub removed_triangle: ConvexPrimitive<Dyadic>,
    pub removed_direction: Compass,
    pub kept_triangles: [ConvexPrimitive<Dyadic>; 3],
    pub kept_directions: [Compass; 3],
    /// Leg of `T_k` lying on the hypotenuse of `T_{k-1}`; `None` at `k = 1`.
    pub removed_boundary: Option<ConvexPrimitive<Dyadic>>,
    /// Sides of `T_k` that stay in the set: the hypotenuse, plus for `k ≥ 2`
    /// the leg shared with a kept triangle of the previous stage.
    pub kept_boundary: Vec<ConvexPrimitive<Dyadic>>,
}

pub fn unit_square() -> ConvexPrimitive<Dyadic> {
    ConvexPrimitive::from_trusted(vec![
        Point::dyadic(0, 0, 0),
        Point::dyadic(1, 0, 0),
        Point::dyadic(1, 1, 0),
        Point::dyadic(0, 1, 0),
    ])
}

fn is_square(v: &[Point<Dyadic>]) -> bool {
    if v.len() != 4 {
        return false;
    }
    let edges: Vec<Point<Dyadic>> = (0..4).map(|i| v[(i + 1) % 4].sub(v[i])).collect();
    let side = edges[0].norm_sq();
    !side.is_zero()
        && edges.iter().all(|e| e.norm_sq() == side)
        && (0..4).all(|i| edges[i].dot(edges[(i + 1) % 4]).is_zero())
        && edges[0].cross(edges[1]).signum() > 0
}

/// Rotates a vertex cycle to start at the lowest, then leftmost, vertex.
fn canonical_start(mut v: Vec<Point<Dyadic>>) -> Vec<Point<Dyadic>> {
    let start = (0..v.len())
        .min_by(|&a, &b| (v[a].y, v[a].x).cmp(&(v[b].y, v[b].x)))
        .unwrap_or(0);
    v.rotate_left(start);
    v
}

/// The square through the edge midpoints of `sq`, with exactly half its
/// area. Vertices start at the lowest (then leftmost) corner, CCW.
pub fn inscribed_square(sq: &ConvexPrimitive<Dyadic>) -> Result<ConvexPrimitive<Dyadic>> {
    let v = sq.vertices();
    if !is_square(v) {
        return Err(validation("inscribed_square needs a counterclockwise square"));
    }
    let mids = (0..4).map(|i| v[i].midpoint(v[(i + 1) % 4])).collect();
    Ok(ConvexPrimitive::from_trusted(canonical_start(mids)))
}

/// Index of the vertex of `sq` pointing in direction `dir` from its centre.
fn corner_index(v: &[Point<Dyadic>], dir: Compass) -> usize {
    let center = v[0].midpoint(v[2]);
    let (dx, dy) = dir.vector();
    let u = Point::new(Dyadic::from_int(dx), Dyadic::from_int(dy));
    let score = |i: usize| v[i].sub(center).dot(u);
    let best = (0..4).max_by(|&a, &b| score(a).cmp(&score(b))).unwrap();
    debug_assert_eq!((0..4).filter(|&i| score(i) == score(best)).count(), 1);
    best
}

/// Direction of vertex `i` of a square, relative to its centre.
fn corner_direction(v: &[Point<Dyadic>], i: usize) -> Compass {
    let center = v[0].midpoint(v[2]);
    let d = v[i].sub(center);
    let s = |x: Dyadic| x.signum() as i64;
    let vec = (s(d.x), s(d.y));
    *Compass::CLOCKWISE.iter().find(|c| c.vector() == vec).expect("corner direction")
}

/// Corner triangle at vertex `i`: `[v_i, mid(v_i, v_{i+1}), mid(v_{i-1}, v_i)]`.
fn corner_triangle(v: &[Point<Dyadic>], i: usize) -> ConvexPrimitive<Dyadic> {
    let next = v[(i + 1) % 4];
    let prev = v[(i + 3) % 4];
    ConvexPrimitive::from_trusted(vec![v[i], v[i].midpoint(next), prev.midpoint(v[i])])
}

fn on_segment(a: Point<Dyadic>, b: Point<Dyadic>, p: Point<Dyadic>) -> bool {
    ConvexPrimitive::from_trusted(vec![a, b]).contains_point(p)
}

fn check_depth(k: u32, cap: u32) -> Result<()> {
    if k > cap {
        Err(Error::Resource { requested: k, cap })
    } else {
        Ok(())
    }
}

/// Builds `S_k` together with the trace of stages `1..=k`.
///
/// The set holds `3k + 1` primitives: `N_k` first, then the kept triangles
/// in stage order.
pub fn bradley_stage(k: u32, cap: u32) -> Result<(GeoSet<Dyadic>, Vec<StageTrace>)> {
    check_depth(k, cap)?;
    let mut square = unit_square();
    let mut kept: Vec<ConvexPrimitive<Dyadic>> = Vec::with_capacity(3 * k as usize);
    let mut traces: Vec<StageTrace> = Vec::with_capacity(k as usize);
    for stage in 1..=k {
        let next = inscribed_square(&square)?;
        let dir = removal_direction(stage)?;
        let v = square.vertices();
        let ri = corner_index(v, dir);
        let removed = corner_triangle(v, ri);
        let rv = removed.vertices();
        let (corner, m_next, m_prev) = (rv[0], rv[1], rv[2]);

        let mut kept_tri = Vec::with_capacity(3);
        let mut kept_dir = Vec::with_capacity(3);
        for i in (0..4).filter(|&i| i != ri) {
            kept_tri.push(corner_triangle(v, i));
            kept_dir.push(corner_direction(v, i));
        }

        let hyp = ConvexPrimitive::from_trusted(vec![m_next, m_prev]);
        let (removed_boundary, kept_boundary) = match traces.last() {
            None => (None, vec![hyp]),
            Some(prev) => {
                let pv = prev.removed_triangle.vertices();
                let (h0, h1) = (pv[1], pv[2]);
                let leg_next = ConvexPrimitive::from_trusted(vec![corner, m_next]);
                let leg_prev = ConvexPrimitive::from_trusted(vec![corner, m_prev]);
                if on_segment(h0, h1, corner) && on_segment(h0, h1, m_next) {
                    (Some(leg_next), vec![hyp, leg_prev])
                } else {
                    debug_assert!(on_segment(h0, h1, m_prev));
                    (Some(leg_prev), vec![hyp, leg_next])
                }
            }
        };

        kept.extend(kept_tri.iter().cloned());
        traces.push(StageTrace {
            k: stage,
            square_before: square.clone(),
            square_after: next.clone(),
            removed_triangle: removed,
            removed_direction: dir,
            kept_triangles: kept_tri.try_into().expect("three kept triangles"),
            kept_directions: kept_dir.try_into().expect("three kept directions"),
            removed_boundary,
            kept_boundary,
        });
        square = next;
    }
    let mut primitives = Vec::with_capacity(3 * k as usize + 1);
    primitives.push(square);
    primitives.extend(kept);
    Ok((GeoSet::new("bradley", Some(k), primitives), traces))
}

/// Splits a right isoceles triangle `[r, p, q]` (right angle at `r`)
/// through the midpoint of its hypotenuse.
fn bisect(t: &ConvexPrimitive<Dyadic>) -> [ConvexPrimitive<Dyadic>; 2] {
    let v = t.vertices();
    let (r, p, q) = (v[0], v[1], v[2]);
    let m = p.midpoint(q);
    [
        ConvexPrimitive::from_trusted(vec![m, r, p]),
        ConvexPrimitive::from_trusted(vec![m, q, r]),
    ]
}

fn lex_key(t: &ConvexPrimitive<Dyadic>) -> Vec<(Dyadic, Dyadic)> {
    t.vertices().iter().map(|p| (p.x, p.y)).collect()
}

/// Covers `S_k` by exactly `3·2^k + 1` right isoceles triangles with leg
/// `2^{-(k+1)/2}` and pairwise disjoint interiors.
///
/// `N_k` is cut along both diagonals into 4 triangles; every kept stage-`j`
/// triangle is bisected `k - j` times. Output is in stage order (the pieces
/// of `N_k` last), lexicographic by vertex list within a stage. Every
/// triangle lists its right-angle vertex first.
pub fn construction_decomposition(k: u32, cap: u32) -> Result<Vec<ConvexPrimitive<Dyadic>>> {
    if k == 0 {
        return Err(Error::Domain(
            "decomposition needs k >= 1; stage 0 is the undivided square".into(),
        ));
    }
    check_depth(k, cap)?;
    let (set, traces) = bradley_stage(k, cap)?;
    let mut out = Vec::with_capacity(3 * (1usize << k) + 1);
    for trace in &traces {
        let mut pieces: Vec<ConvexPrimitive<Dyadic>> = trace.kept_triangles.to_vec();
        for _ in trace.k..k {
            pieces = pieces.iter().flat_map(bisect).collect();
        }
        pieces.sort_by_cached_key(lex_key);
        out.extend(pieces);
    }
    let nk = set.primitives[0].vertices();
    let center = nk[0].midpoint(nk[2]);
    let mut core: Vec<ConvexPrimitive<Dyadic>> = (0..4)
        .map(|i| ConvexPrimitive::from_trusted(vec![center, nk[i], nk[(i + 1) % 4]]))
        .collect();
    core.sort_by_cached_key(lex_key);
    out.extend(core);
    Ok(out)
}

/// Smallest stage whose triangle leg `2^{-(k+1)/2}` is at most `δ/2`, i.e.
/// the shallowest prefractal that differs from `S` only below mesh scale.
pub fn depth_for_delta(delta: f64) -> Result<u32> {
    if !(delta > 0.0) || !delta.is_finite() {
        return Err(validation("delta must be positive and finite"));
    }
    let target = delta / 2.0 * (1.0 + 1e-12);
    let mut k = 0u32;
    while libm::exp2(-(f64::from(k) + 1.0) / 2.0) > target {
        k += 1;
    }
    Ok(k)
}
