//! Closed convex primitives and the separating-axis intersection predicate.
//!
//! A [`ConvexPrimitive`] is the closed convex hull of one, two, or at least
//! three counterclockwise vertices. A [`GeoSet`] is a finite union of them.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::dyadic::Dyadic;
use crate::error::{validation, Error, Result};
use crate::scalar::Coord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point<S> {
    pub x: S,
    pub y: S,
}

impl<S: Coord> Point<S> {
    pub fn new(x: S, y: S) -> Self {
        Point { x, y }
    }

    pub fn midpoint(self, other: Self) -> Self {
        Point::new((self.x + other.x).half(), (self.y + other.y).half())
    }

    pub fn sub(self, other: Self) -> Self {
        Point::new(self.x - other.x, self.y - other.y)
    }

    pub fn add(self, other: Self) -> Self {
        Point::new(self.x + other.x, self.y + other.y)
    }

    pub fn dot(self, other: Self) -> S {
        self.x * other.x + self.y * other.y
    }

    /// z-component of `self × other`.
    pub fn cross(self, other: Self) -> S {
        self.x * other.y - self.y * other.x
    }

    pub fn norm_sq(self) -> S {
        self.dot(self)
    }

    pub fn coincides(self, other: Self) -> bool {
        self.x.cmp_coord(other.x) == Ordering::Equal && self.y.cmp_coord(other.y) == Ordering::Equal
    }

    pub fn to_f64(self) -> Point<f64> {
        Point::new(self.x.to_f64(), self.y.to_f64())
    }
}

impl Point<Dyadic> {
    /// Convenience constructor for `(a/2^e, b/2^e)`.
    pub fn dyadic(a: i128, b: i128, e: u32) -> Self {
        Point::new(Dyadic::new(a, e), Dyadic::new(b, e))
    }
}

/// Orientation of `c` relative to the directed line `a → b`.
#[inline]
pub fn orient<S: Coord>(a: Point<S>, b: Point<S>, c: Point<S>) -> Ordering {
    b.sub(a).cross(c.sub(a)).sign()
}

/// Closed convex hull of an ordered vertex list.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPrimitive<S> {
    vertices: Vec<Point<S>>,
}

impl<S: Coord> ConvexPrimitive<S> {
    /// Validates and wraps a vertex list.
    ///
    /// Length 1 is a point, 2 a segment, 3 or more a convex polygon in
    /// counterclockwise order. Collinear polygon vertices are accepted;
    /// repeated consecutive vertices, clockwise order and non-convex
    /// outlines are rejected.
    pub fn new(vertices: Vec<Point<S>>) -> Result<Self> {
        let n = vertices.len();
        match n {
            0 => return Err(validation("primitive needs at least one vertex")),
            1 => {}
            2 => {
                if vertices[0].coincides(vertices[1]) {
                    return Err(validation("segment endpoints coincide"));
                }
            }
            _ => {
                for i in 0..n {
                    if vertices[i].coincides(vertices[(i + 1) % n]) {
                        return Err(validation("repeated consecutive vertices"));
                    }
                }
                // every vertex on or left of every edge, and positive area
                for i in 0..n {
                    let (a, b) = (vertices[i], vertices[(i + 1) % n]);
                    if vertices.iter().any(|&v| orient(a, b, v) == Ordering::Less) {
                        return Err(validation(
                            "polygon is not convex in counterclockwise order",
                        ));
                    }
                }
                if twice_signed_area(&vertices).sign() != Ordering::Greater {
                    return Err(validation("polygon has zero area or clockwise order"));
                }
            }
        }
        Ok(ConvexPrimitive { vertices })
    }

    /// Wraps vertices known to be well formed (generator output).
    pub(crate) fn from_trusted(vertices: Vec<Point<S>>) -> Self {
        debug_assert!(ConvexPrimitive::new(vertices.clone()).is_ok());
        ConvexPrimitive { vertices }
    }

    pub fn point(p: Point<S>) -> Self {
        ConvexPrimitive { vertices: alloc::vec![p] }
    }

    pub fn segment(a: Point<S>, b: Point<S>) -> Result<Self> {
        ConvexPrimitive::new(alloc::vec![a, b])
    }

    pub fn polygon(vertices: Vec<Point<S>>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(validation("polygon needs at least three vertices"));
        }
        ConvexPrimitive::new(vertices)
    }

    pub fn vertices(&self) -> &[Point<S>] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Point<S>> {
        self.vertices
    }

    pub fn is_polygon(&self) -> bool {
        self.vertices.len() >= 3
    }

    /// Shoelace area of the closed hull; zero for points and segments.
    pub fn area(&self) -> S {
        if self.vertices.len() < 3 {
            return S::zero();
        }
        twice_signed_area(&self.vertices).half()
    }

    pub fn bounding_box(&self) -> (Point<S>, Point<S>) {
        let first = self.vertices[0];
        self.vertices.iter().skip(1).fold((first, first), |(lo, hi), v| {
            (
                Point::new(lo.x.min_coord(v.x), lo.y.min_coord(v.y)),
                Point::new(hi.x.max_coord(v.x), hi.y.max_coord(v.y)),
            )
        })
    }

    /// Closed point-membership test.
    pub fn contains_point(&self, p: Point<S>) -> bool {
        let v = &self.vertices;
        match v.len() {
            1 => v[0].coincides(p),
            2 => {
                orient(v[0], v[1], p) == Ordering::Equal && {
                    let d = v[1].sub(v[0]);
                    let t = p.sub(v[0]).dot(d);
                    t.sign() != Ordering::Less && t.cmp_coord(d.norm_sq()) != Ordering::Greater
                }
            }
            n => (0..n).all(|i| orient(v[i], v[(i + 1) % n], p) != Ordering::Less),
        }
    }

    /// Whether the closed hulls of `self` and `other` share a point.
    pub fn intersects(&self, other: &Self) -> bool {
        hulls_meet(&self.vertices, &other.vertices, Touch::Closed)
    }

    pub fn translate(&self, by: Point<S>) -> Self {
        ConvexPrimitive {
            vertices: self.vertices.iter().map(|v| v.add(by)).collect(),
        }
    }

    pub fn to_f64(&self) -> ConvexPrimitive<f64> {
        ConvexPrimitive {
            vertices: self.vertices.iter().map(|v| v.to_f64()).collect(),
        }
    }
}

/// Free-function form of [`ConvexPrimitive::area`].
pub fn convex_area<S: Coord>(p: &ConvexPrimitive<S>) -> S {
    p.area()
}

/// Free-function form of [`ConvexPrimitive::intersects`].
pub fn convex_intersects<S: Coord>(a: &ConvexPrimitive<S>, b: &ConvexPrimitive<S>) -> bool {
    a.intersects(b)
}

fn twice_signed_area<S: Coord>(v: &[Point<S>]) -> S {
    let n = v.len();
    (0..n).fold(S::zero(), |acc, i| acc + v[i].cross(v[(i + 1) % n]))
}

/// Contact semantics for [`hulls_meet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Touch {
    /// Both hulls closed; boundary contact counts.
    Closed,
    /// The region is half-open: it owns the points `p` for which
    /// `p + (ε, ε²)` lies in its interior for every small enough `ε > 0`.
    /// Mesh cells and triangles owned this way partition the plane.
    HalfOpen,
}

/// Separating-axis test between the closed hull of `set` and `region`.
///
/// Candidate axes are the edge normals of both hulls; a segment also
/// contributes its direction and a point the two coordinate axes, so
/// degenerate hulls need no special handling. For [`Touch::HalfOpen`],
/// `region` must be counterclockwise with nonempty interior.
pub(crate) fn hulls_meet<S: Coord>(set: &[Point<S>], region: &[Point<S>], touch: Touch) -> bool {
    match touch {
        Touch::Closed => !any_axis_separates(set, region, true),
        Touch::HalfOpen => meets_half_open(set, region),
    }
}

#[inline]
fn for_each_axis<S: Coord>(v: &[Point<S>], mut f: impl FnMut(Point<S>)) {
    match v.len() {
        1 => {
            f(Point::new(S::one(), S::zero()));
            f(Point::new(S::zero(), S::one()));
        }
        2 => {
            let d = v[1].sub(v[0]);
            f(Point::new(-d.y, d.x));
            f(d);
        }
        n => {
            for i in 0..n {
                let d = v[(i + 1) % n].sub(v[i]);
                f(Point::new(-d.y, d.x));
            }
        }
    }
}

#[inline]
fn projection_range<S: Coord>(v: &[Point<S>], u: Point<S>) -> (S, S) {
    let first = v[0].dot(u);
    v.iter().skip(1).fold((first, first), |(lo, hi), p| {
        let t = p.dot(u);
        (lo.min_coord(t), hi.max_coord(t))
    })
}

#[inline]
fn separates<S: Coord>(set: &[Point<S>], region: &[Point<S>], u: Point<S>, strict: bool) -> bool {
    let (s_lo, s_hi) = projection_range(set, u);
    let (r_lo, r_hi) = projection_range(region, u);
    let apart = |a: S, b: S| match a.cmp_coord(b) {
        Ordering::Less => true,
        Ordering::Equal => !strict,
        Ordering::Greater => false,
    };
    apart(s_hi, r_lo) || apart(r_hi, s_lo)
}

fn any_axis_separates<S: Coord>(set: &[Point<S>], region: &[Point<S>], strict: bool) -> bool {
    let mut separated = false;
    for v in [set, region] {
        for_each_axis(v, |u| {
            if !separated && separates(set, region, u, strict) {
                separated = true;
            }
        });
    }
    separated
}

/// An edge `a -> b` of a counterclockwise region belongs to the half-open
/// region when its outward normal `n` satisfies `n·(1, ε) < 0`.
fn owns_edge<S: Coord>(a: Point<S>, b: Point<S>) -> bool {
    let d = b.sub(a);
    // outward normal is (d.y, -d.x)
    match d.y.sign() {
        Ordering::Less => true,
        Ordering::Equal => d.x.sign() == Ordering::Greater,
        Ordering::Greater => false,
    }
}

fn owns_point<S: Coord>(region: &[Point<S>], p: Point<S>) -> bool {
    let n = region.len();
    (0..n).all(|i| {
        let (a, b) = (region[i], region[(i + 1) % n]);
        match b.sub(a).cross(p.sub(a)).sign() {
            Ordering::Greater => true,
            Ordering::Equal => owns_edge(a, b),
            Ordering::Less => false,
        }
    })
}

fn hull_contains<S: Coord>(v: &[Point<S>], p: Point<S>) -> bool {
    match v.len() {
        1 => v[0].coincides(p),
        2 => {
            let e = v[1].sub(v[0]);
            e.cross(p.sub(v[0])).sign() == Ordering::Equal
                && p.sub(v[0]).dot(e).sign() != Ordering::Less
                && p.sub(v[1]).dot(e).sign() != Ordering::Greater
        }
        n => (0..n).all(|i| v[(i + 1) % n].sub(v[i]).cross(p.sub(v[i])).sign() != Ordering::Less),
    }
}

/// Whether `p + t·d` stays in the hull for some `t > 0`; `p` must lie in it.
fn feasible_direction<S: Coord>(v: &[Point<S>], p: Point<S>, d: Point<S>) -> bool {
    match v.len() {
        1 => false,
        2 => {
            let e = v[1].sub(v[0]);
            if e.cross(d).sign() != Ordering::Equal {
                return false;
            }
            let along = d.dot(e).sign();
            !(p.coincides(v[0]) && along != Ordering::Greater
                || p.coincides(v[1]) && along != Ordering::Less)
        }
        n => (0..n).all(|i| {
            let e = v[(i + 1) % n].sub(v[i]);
            e.cross(p.sub(v[i])).sign() != Ordering::Equal || e.cross(d).sign() != Ordering::Less
        }),
    }
}

/// Half-open contact: does the closed hull `set` contain a point owned by
/// the half-open `region`?
fn meets_half_open<S: Coord>(set: &[Point<S>], region: &[Point<S>]) -> bool {
    if any_axis_separates(set, region, true) {
        return false;
    }
    if !any_axis_separates(set, region, false) {
        // the set reaches the open interior
        return true;
    }
    // The contact is a convex subset of the boundary, so it lies within one
    // edge. An owned edge is owned except possibly at its endpoints; the
    // contact misses the region only if it shrinks to an unowned endpoint.
    let n = region.len();
    (0..n).any(|i| {
        let (a, b) = (region[i], region[(i + 1) % n]);
        if !owns_edge(a, b) || any_axis_separates(set, &[a, b], true) {
            return false;
        }
        let only_at = |p: Point<S>, q: Point<S>| {
            !owns_point(region, p) && hull_contains(set, p) && !feasible_direction(set, p, q.sub(p))
        };
        !(only_at(a, b) || only_at(b, a))
    })
}

/// A named finite union of closed convex primitives.
#[derive(Debug, Clone, PartialEq)]
pub struct GeoSet<S> {
    pub name: String,
    pub stage: Option<u32>,
    pub primitives: Vec<ConvexPrimitive<S>>,
}

impl<S: Coord> GeoSet<S> {
    pub fn new(name: impl Into<String>, stage: Option<u32>, primitives: Vec<ConvexPrimitive<S>>) -> Self {
        GeoSet {
            name: name.into(),
            stage,
            primitives,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.primitives.is_empty()
    }

    /// Componentwise min/max over all vertices.
    pub fn bounding_box(&self) -> Result<(Point<S>, Point<S>)> {
        let mut it = self.primitives.iter().map(|p| p.bounding_box());
        let first = it.next().ok_or(Error::EmptyInput)?;
        Ok(it.fold(first, |(lo, hi), (plo, phi)| {
            (
                Point::new(lo.x.min_coord(plo.x), lo.y.min_coord(plo.y)),
                Point::new(hi.x.max_coord(phi.x), hi.y.max_coord(phi.y)),
            )
        }))
    }

    /// Sum of primitive areas; equals the area of the union only when the
    /// primitives have pairwise disjoint interiors.
    pub fn area_sum(&self) -> S {
        self.primitives.iter().fold(S::zero(), |acc, p| acc + p.area())
    }

    pub fn contains_point(&self, p: Point<S>) -> bool {
        self.primitives.iter().any(|q| q.contains_point(p))
    }

    pub fn translate(&self, by: Point<S>) -> Self {
        GeoSet {
            name: self.name.clone(),
            stage: self.stage,
            primitives: self.primitives.iter().map(|p| p.translate(by)).collect(),
        }
    }

    pub fn to_f64(&self) -> GeoSet<f64> {
        GeoSet {
            name: self.name.clone(),
            stage: self.stage,
            primitives: self.primitives.iter().map(|p| p.to_f64()).collect(),
        }
    }
}

/// Free-function form of [`GeoSet::bounding_box`].
pub fn bounding_box<S: Coord>(g: &GeoSet<S>) -> Result<(Point<S>, Point<S>)> {
    g.bounding_box()
}

/// A [`GeoSet`] in either arithmetic mode.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyGeoSet {
    Exact(GeoSet<Dyadic>),
    Approx(GeoSet<f64>),
}

impl AnyGeoSet {
    pub fn is_exact(&self) -> bool {
        matches!(self, AnyGeoSet::Exact(_))
    }

    pub fn name(&self) -> &str {
        match self {
            AnyGeoSet::Exact(g) => &g.name,
            AnyGeoSet::Approx(g) => &g.name,
        }
    }

    pub fn stage(&self) -> Option<u32> {
        match self {
            AnyGeoSet::Exact(g) => g.stage,
            AnyGeoSet::Approx(g) => g.stage,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            AnyGeoSet::Exact(g) => g.primitives.len(),
            AnyGeoSet::Approx(g) => g.primitives.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn to_approx(&self) -> GeoSet<f64> {
        match self {
            AnyGeoSet::Exact(g) => g.to_f64(),
            AnyGeoSet::Approx(g) => g.clone(),
        }
    }
}

impl From<GeoSet<Dyadic>> for AnyGeoSet {
    fn from(g: GeoSet<Dyadic>) -> Self {
        AnyGeoSet::Exact(g)
    }
}

impl From<GeoSet<f64>> for AnyGeoSet {
    fn from(g: GeoSet<f64>) -> Self {
        AnyGeoSet::Approx(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(a: i128, b: i128, e: u32) -> Point<Dyadic> {
        Point::dyadic(a, b, e)
    }

    fn poly(v: Vec<Point<Dyadic>>) -> ConvexPrimitive<Dyadic> {
        ConvexPrimitive::new(v).unwrap()
    }

    fn unit_square() -> ConvexPrimitive<Dyadic> {
        poly(vec![p(0, 0, 0), p(1, 0, 0), p(1, 1, 0), p(0, 1, 0)])
    }

    #[test]
    fn area_examples() {
        assert_eq!(unit_square().area(), Dyadic::ONE);
        let tri = poly(vec![p(0, 0, 0), p(1, 0, 0), p(0, 1, 0)]);
        assert_eq!(tri.area(), Dyadic::pow2_neg(1));
        let diamond = poly(vec![p(1, 0, 1), p(2, 1, 1), p(1, 2, 1), p(0, 1, 1)]);
        assert_eq!(convex_area(&diamond), Dyadic::pow2_neg(1));
        assert_eq!(ConvexPrimitive::point(p(1, 1, 2)).area(), Dyadic::ZERO);
        assert_eq!(ConvexPrimitive::segment(p(0, 0, 0), p(1, 1, 0)).unwrap().area(), Dyadic::ZERO);
    }

    #[test]
    fn malformed_primitives_rejected() {
        assert!(ConvexPrimitive::<Dyadic>::new(vec![]).is_err());
        assert!(ConvexPrimitive::segment(p(1, 1, 0), p(1, 1, 0)).is_err());
        // clockwise
        assert!(ConvexPrimitive::new(vec![p(0, 0, 0), p(0, 1, 0), p(1, 0, 0)]).is_err());
        // repeated consecutive vertex
        assert!(ConvexPrimitive::new(vec![p(0, 0, 0), p(1, 0, 0), p(1, 0, 0), p(0, 1, 0)]).is_err());
        // all collinear
        assert!(ConvexPrimitive::new(vec![p(0, 0, 0), p(1, 0, 0), p(2, 0, 0)]).is_err());
        // reflex vertex
        assert!(ConvexPrimitive::new(vec![p(0, 0, 0), p(2, 0, 0), p(1, 1, 2), p(0, 2, 0)]).is_err());
        // collinear vertex on an edge is fine
        assert!(ConvexPrimitive::new(vec![p(0, 0, 0), p(1, 0, 1), p(1, 0, 0), p(0, 1, 0)]).is_ok());
    }

    #[test]
    fn bounding_box_examples() {
        let diamond = poly(vec![p(1, 0, 1), p(2, 1, 1), p(1, 2, 1), p(0, 1, 1)]);
        let g = GeoSet::new("d", None, vec![diamond]);
        assert_eq!(g.bounding_box().unwrap(), (p(0, 0, 0), p(1, 1, 0)));

        let g = GeoSet::new("pt", None, vec![ConvexPrimitive::point(p(1, 1, 2))]);
        assert_eq!(bounding_box(&g).unwrap(), (p(1, 1, 2), p(1, 1, 2)));

        let g = GeoSet::new(
            "segs",
            None,
            vec![
                ConvexPrimitive::segment(p(0, 0, 0), p(1, 0, 0)).unwrap(),
                ConvexPrimitive::segment(p(0, 0, 0), p(0, 1, 0)).unwrap(),
            ],
        );
        assert_eq!(g.bounding_box().unwrap(), (p(0, 0, 0), p(1, 1, 0)));

        let empty: GeoSet<Dyadic> = GeoSet::new("e", None, vec![]);
        assert_eq!(empty.bounding_box(), Err(Error::EmptyInput));
    }

    #[test]
    fn intersection_examples() {
        let a = poly(vec![p(0, 0, 0), p(1, 0, 0), p(0, 1, 0)]);
        let b = poly(vec![p(1, 0, 0), p(2, 0, 0), p(2, 1, 0)]);
        assert!(convex_intersects(&a, &b), "shared vertex touches");

        let far = unit_square().translate(p(2, 0, 0));
        assert!(!unit_square().intersects(&far));

        let seg = ConvexPrimitive::segment(p(1, 3, 2), p(3, 1, 2)).unwrap();
        assert!(seg.intersects(&a));
        assert!(a.intersects(&seg));
    }

    #[test]
    fn degenerate_pairs() {
        let pt = ConvexPrimitive::point(p(1, 1, 1));
        assert!(pt.intersects(&pt));
        assert!(!pt.intersects(&ConvexPrimitive::point(p(1, 1, 0))));
        let s1 = ConvexPrimitive::segment(p(0, 0, 0), p(1, 0, 0)).unwrap();
        let s2 = ConvexPrimitive::segment(p(2, 0, 0), p(3, 0, 0)).unwrap();
        assert!(!s1.intersects(&s2), "collinear disjoint segments");
        let s3 = ConvexPrimitive::segment(p(1, 0, 0), p(3, 0, 0)).unwrap();
        assert!(s1.intersects(&s3), "collinear segments sharing an endpoint");
        let cross = ConvexPrimitive::segment(p(1, -1, 1), p(1, 1, 1)).unwrap();
        assert!(s1.intersects(&cross));
        assert!(ConvexPrimitive::point(p(1, 0, 1)).intersects(&s1));
        assert!(!ConvexPrimitive::point(p(1, 1, 1)).intersects(&s1));
    }

    #[test]
    fn half_open_region_ownership() {
        let cell = [p(0, 0, 0), p(1, 0, 0), p(1, 1, 0), p(0, 1, 0)];
        let at = |a, b, e| [p(a, b, e)];
        assert!(hulls_meet(&at(0, 0, 0), &cell, Touch::HalfOpen));
        assert!(hulls_meet(&at(0, 1, 1), &cell, Touch::HalfOpen));
        assert!(hulls_meet(&at(1, 0, 1), &cell, Touch::HalfOpen));
        assert!(!hulls_meet(&at(1, 1, 0), &cell, Touch::HalfOpen));
        assert!(!hulls_meet(&at(2, 1, 1), &cell, Touch::HalfOpen));
        assert!(!hulls_meet(&at(1, 2, 1), &cell, Touch::HalfOpen));
        // a segment along the right edge belongs to the neighbour
        let right = [p(1, 0, 0), p(1, 1, 0)];
        assert!(!hulls_meet(&right, &cell, Touch::HalfOpen));
        assert!(hulls_meet(&right, &cell, Touch::Closed));
        // ne diagonal: points on it belong to the lower triangle
        let lower = [p(0, 0, 0), p(1, 0, 0), p(1, 1, 0)];
        let upper = [p(0, 0, 0), p(1, 1, 0), p(0, 1, 0)];
        assert!(hulls_meet(&at(1, 1, 1), &lower, Touch::HalfOpen));
        assert!(!hulls_meet(&at(1, 1, 1), &upper, Touch::HalfOpen));
        assert!(hulls_meet(&at(0, 0, 0), &lower, Touch::HalfOpen));
        assert!(!hulls_meet(&at(0, 0, 0), &upper, Touch::HalfOpen));
        assert!(hulls_meet(&at(0, 1, 1), &upper, Touch::HalfOpen));
    }

    #[test]
    fn contains_point_closed() {
        let sq = unit_square();
        assert!(sq.contains_point(p(1, 1, 0)));
        assert!(sq.contains_point(p(1, 1, 1)));
        assert!(!sq.contains_point(p(3, 1, 1)));
        let seg = ConvexPrimitive::segment(p(0, 0, 0), p(1, 1, 0)).unwrap();
        assert!(seg.contains_point(p(1, 1, 2)));
        assert!(!seg.contains_point(p(2, 2, 0)));
    }

    #[test]
    fn approx_mode_tolerates_rounding() {
        let a = ConvexPrimitive::new(vec![
            Point::new(0.0, 0.0),
            Point::new(0.1 + 0.2, 0.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap();
        let b = ConvexPrimitive::point(Point::new(0.3, 0.0));
        assert!(a.intersects(&b));
    }
}
