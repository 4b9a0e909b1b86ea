#![allow(dead_code)]

use std::cmp::Ordering;
use std::path::Path;
use std::process::{Command, Output};

use fracmesh_core::geometry::orient;
use fracmesh_core::{ConvexPrimitive, Dyadic, GeoSet, Point};
use rand::Rng;

pub fn fracmesh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fracmesh"))
        .args(args)
        .output()
        .expect("spawn fracmesh")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

pub fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

pub fn path_str(p: &Path) -> &str {
    p.to_str().expect("utf-8 temp path")
}

fn coord(rng: &mut impl Rng, e: u32) -> Dyadic {
    Dyadic::new(rng.gen_range(0..=(1i128 << e)), e)
}

/// Random point, segment or triangle with coordinates `i/2^e` in `[0, 1]`.
pub fn random_primitive(rng: &mut impl Rng, e: u32) -> ConvexPrimitive<Dyadic> {
    let shape = rng.gen_range(0..6);
    loop {
        let [a, b, c] = [(); 3].map(|_| Point::new(coord(rng, e), coord(rng, e)));
        let verts = match shape {
            0 => vec![a],
            1 => vec![a, b],
            _ => match orient(a, b, c) {
                Ordering::Greater => vec![a, b, c],
                Ordering::Less => vec![a, c, b],
                Ordering::Equal => continue,
            },
        };
        if let Ok(prim) = ConvexPrimitive::new(verts) {
            return prim;
        }
    }
}

pub fn random_union(rng: &mut impl Rng, count: usize) -> GeoSet<Dyadic> {
    let prims = (0..count).map(|_| random_primitive(rng, 4)).collect();
    GeoSet::new("random", None, prims)
}
