//! Square and triangle δ-mesh counting.
//!
//! The square mesh has cells `[mδ, (m+1)δ] × [nδ, (n+1)δ]` (shifted by the
//! mesh offset). The triangle mesh splits each cell along one diagonal into
//! two right isoceles triangles with legs of length δ. A cell or triangle is
//! counted when it meets at least one primitive of the set; closed cells
//! count boundary contact, half-open cells partition the plane.

use alloc::borrow::Cow;
use alloc::collections::BTreeSet;
use alloc::format;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::dyadic::Dyadic;
use crate::error::{validation, Error, Result};
use crate::geometry::{hulls_meet, AnyGeoSet, ConvexPrimitive, GeoSet, Point, Touch};
use crate::scalar::{Coord, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MeshKind {
    Square,
    Triangle,
}

impl MeshKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MeshKind::Square => "square",
            MeshKind::Triangle => "triangle",
        }
    }
}

impl fmt::Display for MeshKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MeshKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "square" => Ok(MeshKind::Square),
            "triangle" => Ok(MeshKind::Triangle),
            _ => Err(validation(format!("unknown mesh kind `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CellMode {
    #[default]
    Closed,
    HalfOpen,
}

impl CellMode {
    pub fn as_str(self) -> &'static str {
        match self {
            CellMode::Closed => "closed",
            CellMode::HalfOpen => "half-open",
        }
    }

    fn touch(self) -> Touch {
        match self {
            CellMode::Closed => Touch::Closed,
            CellMode::HalfOpen => Touch::HalfOpen,
        }
    }
}

/// Which diagonal splits a cell into triangles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Diagonal {
    /// Lower-left to upper-right.
    #[default]
    Ne,
    /// Upper-left to lower-right.
    Nw,
}

impl FromStr for CellMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(CellMode::Closed),
            "half-open" => Ok(CellMode::HalfOpen),
            _ => Err(validation(format!("unknown cell mode `{s}`"))),
        }
    }
}

impl Diagonal {
    pub fn as_str(self) -> &'static str {
        match self {
            Diagonal::Ne => "ne",
            Diagonal::Nw => "nw",
        }
    }
}

impl FromStr for Diagonal {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ne" => Ok(Diagonal::Ne),
            "nw" => Ok(Diagonal::Nw),
            _ => Err(validation(format!("unknown diagonal `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Half {
    Lower,
    Upper,
}

/// Index of a counted cell, or of one triangle of it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellKey {
    pub m: i64,
    pub n: i64,
    pub half: Option<Half>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeshSpec<S> {
    pub delta: S,
    pub offset: Point<S>,
    pub cell_mode: CellMode,
    pub diagonal: Diagonal,
}

impl<S: Coord> MeshSpec<S> {
    /// Closed cells, `ne` diagonal, grid anchored at the origin.
    pub fn new(delta: S) -> Self {
        MeshSpec {
            delta,
            offset: Point::new(S::zero(), S::zero()),
            cell_mode: CellMode::Closed,
            diagonal: Diagonal::Ne,
        }
    }

    pub fn with_mode(mut self, mode: CellMode) -> Self {
        self.cell_mode = mode;
        self
    }

    pub fn with_diagonal(mut self, diagonal: Diagonal) -> Self {
        self.diagonal = diagonal;
        self
    }

    pub fn with_offset(mut self, offset: Point<S>) -> Self {
        self.offset = offset;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let d = self.delta.to_f64();
        if self.delta.sign() != Ordering::Greater || !d.is_finite() {
            return Err(validation("mesh delta must be positive"));
        }
        Ok(())
    }

    /// Lower-left corner of cell `(m, n)`.
    fn corner(&self, m: i64, n: i64) -> Point<S> {
        Point::new(
            self.offset.x + S::from_i64(m) * self.delta,
            self.offset.y + S::from_i64(n) * self.delta,
        )
    }

    pub fn cell_polygon(&self, m: i64, n: i64) -> [Point<S>; 4] {
        let a = self.corner(m, n);
        let c = self.corner(m + 1, n + 1);
        [a, Point::new(c.x, a.y), c, Point::new(a.x, c.y)]
    }

    pub fn triangle_polygon(&self, m: i64, n: i64, half: Half) -> [Point<S>; 3] {
        let [a, b, c, d] = self.cell_polygon(m, n);
        match (self.diagonal, half) {
            (Diagonal::Ne, Half::Lower) => [a, b, c],
            (Diagonal::Ne, Half::Upper) => [a, c, d],
            (Diagonal::Nw, Half::Lower) => [a, b, d],
            (Diagonal::Nw, Half::Upper) => [b, c, d],
        }
    }
}

/// One sample of the counting function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CountRecord {
    pub mesh: MeshKind,
    pub delta: Scalar,
    pub count: u64,
}

fn axis_range<S: Coord>(lo: S, hi: S, origin: S, delta: S, mode: CellMode) -> (i64, i64) {
    let a = lo.grid_index(origin, delta);
    let b = hi.grid_index(origin, delta);
    let first = match mode {
        CellMode::Closed if a.on_line => a.floor - 1,
        _ => a.floor,
    };
    (first, b.floor)
}

/// Cells whose extent (closed or half-open per `spec`) meets the box
/// `bbox`, row by row.
pub fn enumerate_candidate_cells<S: Coord>(
    bbox: (Point<S>, Point<S>),
    spec: &MeshSpec<S>,
) -> Result<impl Iterator<Item = CellKey>> {
    spec.validate()?;
    let (lo, hi) = bbox;
    if lo.x.cmp_coord(hi.x) == Ordering::Greater || lo.y.cmp_coord(hi.y) == Ordering::Greater {
        return Err(validation("bounding box corners out of order"));
    }
    let (m0, m1) = axis_range(lo.x, hi.x, spec.offset.x, spec.delta, spec.cell_mode);
    let (n0, n1) = axis_range(lo.y, hi.y, spec.offset.y, spec.delta, spec.cell_mode);
    Ok((n0..=n1).flat_map(move |n| (m0..=m1).map(move |m| CellKey { m, n, half: None })))
}

/// Visits every cell key (square) or triangle key of the mesh met by `prim`.
///
/// Within one row of cells the cells met by a convex primitive are
/// contiguous, so each row is scanned inward from both ends to the first
/// hit and the run between is taken whole.
pub fn for_each_hit<S: Coord>(
    prim: &ConvexPrimitive<S>,
    spec: &MeshSpec<S>,
    kind: MeshKind,
    mut visit: impl FnMut(CellKey),
) -> Result<()> {
    spec.validate()?;
    let touch = spec.cell_mode.touch();
    let verts = prim.vertices();
    let (lo, hi) = prim.bounding_box();
    let (m0, m1) = axis_range(lo.x, hi.x, spec.offset.x, spec.delta, spec.cell_mode);
    let (n0, n1) = axis_range(lo.y, hi.y, spec.offset.y, spec.delta, spec.cell_mode);
    let hit = |m: i64, n: i64| hulls_meet(verts, &spec.cell_polygon(m, n), touch);
    for n in n0..=n1 {
        let Some(first) = (m0..=m1).find(|&m| hit(m, n)) else {
            continue;
        };
        let last = (first..=m1).rev().find(|&m| m == first || hit(m, n)).unwrap_or(first);
        for m in first..=last {
            let key = CellKey { m, n, half: None };
            match kind {
                MeshKind::Square => visit(key),
                MeshKind::Triangle => {
                    let cell = spec.cell_polygon(m, n);
                    // a cell inside the primitive has both halves inside it
                    let inside = verts.len() >= 3 && cell.iter().all(|&c| prim.contains_point(c));
                    for half in [Half::Lower, Half::Upper] {
                        if inside || hulls_meet(verts, &spec.triangle_polygon(m, n, half), touch) {
                            visit(CellKey { half: Some(half), ..key });
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Distinct keys hit by any primitive in `prims`, merged into `keys`.
pub fn collect_keys<S: Coord>(
    prims: &[ConvexPrimitive<S>],
    spec: &MeshSpec<S>,
    kind: MeshKind,
    keys: &mut BTreeSet<CellKey>,
) -> Result<()> {
    for p in prims {
        for_each_hit(p, spec, kind, |k| {
            keys.insert(k);
        })?;
    }
    Ok(())
}

/// Counts the mesh cells (or triangles) meeting `g`.
pub fn count_mesh<S: Coord>(g: &GeoSet<S>, spec: &MeshSpec<S>, kind: MeshKind) -> Result<CountRecord> {
    if g.is_empty() {
        return Err(Error::EmptyInput);
    }
    spec.validate()?;
    let mut keys = BTreeSet::new();
    collect_keys(&g.primitives, spec, kind, &mut keys)?;
    Ok(CountRecord {
        mesh: kind,
        delta: spec.delta.to_scalar(),
        count: keys.len() as u64,
    })
}

/// `N_δ(g)`: number of δ-mesh squares meeting `g`.
pub fn count_square_mesh<S: Coord>(g: &GeoSet<S>, spec: &MeshSpec<S>) -> Result<CountRecord> {
    count_mesh(g, spec, MeshKind::Square)
}

/// `T_δ(g)`: number of δ-mesh right triangles meeting `g`.
pub fn count_triangle_mesh<S: Coord>(g: &GeoSet<S>, spec: &MeshSpec<S>) -> Result<CountRecord> {
    count_mesh(g, spec, MeshKind::Triangle)
}

/// Requested arithmetic mode for a mode-agnostic count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ModeRequest {
    /// Exact whenever the set, δ and offset are all dyadic.
    #[default]
    Auto,
    Exact,
    Approx,
}

/// Mesh settings whose δ and offset carry their own mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeshOptions {
    pub offset: (Scalar, Scalar),
    pub cell_mode: CellMode,
    pub diagonal: Diagonal,
}

impl Default for MeshOptions {
    fn default() -> Self {
        MeshOptions {
            offset: (Scalar::Exact(Dyadic::ZERO), Scalar::Exact(Dyadic::ZERO)),
            cell_mode: CellMode::Closed,
            diagonal: Diagonal::Ne,
        }
    }
}

/// A set and mesh resolved to a single arithmetic mode.
#[derive(Debug, Clone)]
pub enum Prepared<'a> {
    Exact(&'a GeoSet<Dyadic>, MeshSpec<Dyadic>),
    Approx(Cow<'a, GeoSet<f64>>, MeshSpec<f64>),
}

impl Prepared<'_> {
    pub fn is_exact(&self) -> bool {
        matches!(self, Prepared::Exact(..))
    }

    pub fn count(&self, kind: MeshKind) -> Result<CountRecord> {
        match self {
            Prepared::Exact(g, spec) => count_mesh(g, spec, kind),
            Prepared::Approx(g, spec) => count_mesh(g, spec, kind),
        }
    }
}

/// Resolves `set` and the mesh parameters to one arithmetic mode.
///
/// Exact mode fails with [`Error::Mode`] when the set, δ or the offset is
/// not dyadic; `Auto` falls back to approx mode in that case.
pub fn prepare<'a>(
    set: &'a AnyGeoSet,
    delta: Scalar,
    opts: &MeshOptions,
    mode: ModeRequest,
) -> Result<Prepared<'a>> {
    let exact_parts = match (set, delta, opts.offset) {
        (AnyGeoSet::Exact(g), Scalar::Exact(d), (Scalar::Exact(ox), Scalar::Exact(oy))) => {
            Some((g, d, Point::new(ox, oy)))
        }
        _ => None,
    };
    let approx = |set: &'a AnyGeoSet| {
        let g = match set {
            AnyGeoSet::Exact(g) => Cow::Owned(g.to_f64()),
            AnyGeoSet::Approx(g) => Cow::Borrowed(g),
        };
        let spec = MeshSpec {
            delta: delta.to_f64(),
            offset: Point::new(opts.offset.0.to_f64(), opts.offset.1.to_f64()),
            cell_mode: opts.cell_mode,
            diagonal: opts.diagonal,
        };
        Prepared::Approx(g, spec)
    };
    let prepared = match (mode, exact_parts) {
        (ModeRequest::Exact, None) => {
            return Err(Error::Mode(
                "exact mode needs a dyadic set, delta and offset".into(),
            ))
        }
        (ModeRequest::Approx, _) | (ModeRequest::Auto, None) => approx(set),
        (_, Some((g, d, offset))) => Prepared::Exact(
            g,
            MeshSpec {
                delta: d,
                offset,
                cell_mode: opts.cell_mode,
                diagonal: opts.diagonal,
            },
        ),
    };
    match &prepared {
        Prepared::Exact(_, s) => s.validate()?,
        Prepared::Approx(_, s) => s.validate()?,
    }
    Ok(prepared)
}

/// Mode-agnostic count.
pub fn count_any(
    set: &AnyGeoSet,
    kind: MeshKind,
    delta: Scalar,
    opts: &MeshOptions,
    mode: ModeRequest,
) -> Result<CountRecord> {
    prepare(set, delta, opts, mode)?.count(kind)
}
