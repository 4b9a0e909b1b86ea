//! Plain-text report of the Bradley construction, one block per stage.

use std::fmt::Write as _;

use fracmesh_core::generators::bradley::StageTrace;
use fracmesh_core::{ConvexPrimitive, Dyadic};

fn verts(p: &ConvexPrimitive<Dyadic>) -> String {
    p.vertices()
        .iter()
        .map(|v| format!("({}, {})", v.x, v.y))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn render(traces: &[StageTrace]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "bradley construction, {} stage(s)", traces.len());
    for t in traces {
        let _ = writeln!(s, "\nstage {}", t.k);
        let _ = writeln!(s, "  square before    {}", verts(&t.square_before));
        let _ = writeln!(s, "  square after     {}", verts(&t.square_after));
        let _ = writeln!(
            s,
            "  removed {:<2}       {}",
            t.removed_direction.as_str(),
            verts(&t.removed_triangle)
        );
        for (tri, dir) in t.kept_triangles.iter().zip(t.kept_directions) {
            let _ = writeln!(s, "  kept {:<2}          {}", dir.as_str(), verts(tri));
        }
        match &t.removed_boundary {
            Some(b) => {
                let _ = writeln!(s, "  removed boundary {}", verts(b));
            }
            None => {
                let _ = writeln!(s, "  removed boundary -");
            }
        }
        for b in &t.kept_boundary {
            let _ = writeln!(s, "  kept boundary    {}", verts(b));
        }
    }
    s
}
