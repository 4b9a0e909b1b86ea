#![allow(dead_code)]

use fracmesh_core::{ConvexPrimitive, Dyadic, GeoSet, Point};
use rand::Rng;

pub fn dy(n: i128, e: u32) -> Dyadic {
    Dyadic::new(n, e)
}

pub fn pt(a: i128, b: i128, e: u32) -> Point<Dyadic> {
    Point::dyadic(a, b, e)
}

/// Random dyadic coordinate `i / 2^e` in `[lo, hi]` (units of 1).
pub fn coord(rng: &mut impl Rng, e: u32, lo: i128, hi: i128) -> Dyadic {
    let scale = 1i128 << e;
    Dyadic::new(rng.gen_range(lo * scale..=hi * scale), e)
}

fn cross(o: Point<Dyadic>, a: Point<Dyadic>, b: Point<Dyadic>) -> Dyadic {
    a.sub(o).cross(b.sub(o))
}

/// Monotone-chain convex hull, CCW, collinear points dropped.
pub fn hull(mut pts: Vec<Point<Dyadic>>) -> Vec<Point<Dyadic>> {
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<Point<Dyadic>> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p).signum() <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point<Dyadic>> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p).signum() <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Random point, segment or convex polygon with coordinates `i/2^e` in
/// `[lo, hi]`.
pub fn random_primitive(rng: &mut impl Rng, e: u32, lo: i128, hi: i128) -> ConvexPrimitive<Dyadic> {
    let n = match rng.gen_range(0..10) {
        0 => 1,
        1 | 2 => 2,
        _ => rng.gen_range(3..7),
    };
    loop {
        let pts: Vec<_> = (0..n)
            .map(|_| Point::new(coord(rng, e, lo, hi), coord(rng, e, lo, hi)))
            .collect();
        let verts = if n >= 3 { hull(pts) } else { pts };
        if let Ok(p) = ConvexPrimitive::new(verts) {
            return p;
        }
    }
}

pub fn random_union(rng: &mut impl Rng, count: usize) -> GeoSet<Dyadic> {
    let prims = (0..count).map(|_| random_primitive(rng, 4, 0, 1)).collect();
    GeoSet::new("random", None, prims)
}
