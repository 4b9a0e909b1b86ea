//! Calibration prefractals with known similarity dimension.

use alloc::vec;
use alloc::vec::Vec;

use crate::dyadic::Dyadic;
use crate::geometry::{ConvexPrimitive, GeoSet, Point};

/// `3^d` closed triangles from repeated corner subdivision of the unit
/// right triangle `(0,0), (1,0), (0,1)`.
pub fn sierpinski(depth: u32) -> GeoSet<Dyadic> {
    let mut tris = vec![[
        Point::dyadic(0, 0, 0),
        Point::dyadic(1, 0, 0),
        Point::dyadic(0, 1, 0),
    ]];
    for _ in 0..depth {
        tris = tris
            .iter()
            .flat_map(|&[a, b, c]| {
                let (ab, bc, ca) = (a.midpoint(b), b.midpoint(c), c.midpoint(a));
                [[a, ab, ca], [ab, b, bc], [ca, bc, c]]
            })
            .collect();
    }
    let primitives = tris
        .into_iter()
        .map(|t| ConvexPrimitive::from_trusted(t.to_vec()))
        .collect();
    GeoSet::new("sierpinski", Some(depth), primitives)
}

/// `4^d` segments of the Koch curve from `(0,0)` to `(1,0)`, bumps upward.
pub fn koch(depth: u32) -> GeoSet<f64> {
    let (s, c) = (libm::sin(core::f64::consts::FRAC_PI_3), 0.5);
    let mut pts = vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0)];
    for _ in 0..depth {
        let mut next = Vec::with_capacity(pts.len() * 4);
        for w in pts.windows(2) {
            let (p, q) = (w[0], w[1]);
            let d = Point::new((q.x - p.x) / 3.0, (q.y - p.y) / 3.0);
            let a = Point::new(p.x + d.x, p.y + d.y);
            let b = Point::new(p.x + 2.0 * d.x, p.y + 2.0 * d.y);
            let peak = Point::new(a.x + c * d.x - s * d.y, a.y + s * d.x + c * d.y);
            next.extend([p, a, peak, b]);
        }
        next.push(*pts.last().unwrap());
        pts = next;
    }
    let primitives = pts
        .windows(2)
        .map(|w| ConvexPrimitive::from_trusted(vec![w[0], w[1]]))
        .collect();
    GeoSet::new("koch", Some(depth), primitives)
}

/// `4^d` squares of side `3^-d`: the product of two middle-thirds Cantor
/// sets at depth `d`. Thirds are not dyadic, so this runs in approx mode.
pub fn cantor_dust(depth: u32) -> GeoSet<f64> {
    let mut intervals = vec![0.0f64];
    let mut side = 1.0;
    for _ in 0..depth {
        side /= 3.0;
        intervals = intervals
            .iter()
            .flat_map(|&lo| [lo, lo + 2.0 * side])
            .collect();
    }
    let mut primitives = Vec::with_capacity(intervals.len() * intervals.len());
    for &y in &intervals {
        for &x in &intervals {
            primitives.push(ConvexPrimitive::from_trusted(vec![
                Point::new(x, y),
                Point::new(x + side, y),
                Point::new(x + side, y + side),
                Point::new(x, y + side),
            ]));
        }
    }
    GeoSet::new("cantor-dust", Some(depth), primitives)
}

pub fn filled_square() -> GeoSet<Dyadic> {
    GeoSet::new("filled-square", None, vec![super::bradley::unit_square()])
}

pub fn unit_segment() -> GeoSet<Dyadic> {
    GeoSet::new(
        "segment",
        None,
        vec![ConvexPrimitive::from_trusted(vec![
            Point::dyadic(0, 0, 0),
            Point::dyadic(1, 0, 0),
        ])],
    )
}
