mod common;

use std::collections::BTreeSet;

use common::{dy, pt, random_union};
use fracmesh_core::generators::reference::{filled_square, sierpinski, unit_segment};
use fracmesh_core::generators::{bradley_stage, DEFAULT_DEPTH_CAP};
use fracmesh_core::mesh::{collect_keys, count_mesh, count_square_mesh, count_triangle_mesh};
use fracmesh_core::oracle::sampling_oracle_count;
use fracmesh_core::{CellMode, ConvexPrimitive, Diagonal, Dyadic, GeoSet, MeshKind, MeshSpec, Point};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn spiral(k: u32) -> GeoSet<Dyadic> {
    bradley_stage(k, DEFAULT_DEPTH_CAP).unwrap().0
}

fn corpus() -> Vec<GeoSet<Dyadic>> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut sets = vec![spiral(1), spiral(4), filled_square(), unit_segment(), sierpinski(3)];
    sets.extend((0..8).map(|i| random_union(&mut rng, 1 + i % 4)));
    sets
}

fn count(g: &GeoSet<Dyadic>, spec: &MeshSpec<Dyadic>, kind: MeshKind) -> u64 {
    count_mesh(g, spec, kind).unwrap().count
}

#[test]
fn filled_square_triangle_golden() {
    // hand count over the 32 candidate triangles: 8 interior, 16 along the
    // four sides, 2 + 2 at the (-1,-1) and (2,2) corners, 1 + 1 at the others
    let spec = MeshSpec::new(dy(1, 1));
    assert_eq!(count_triangle_mesh(&filled_square(), &spec).unwrap().count, 30);
    assert_eq!(count_square_mesh(&filled_square(), &spec).unwrap().count, 16);
}

#[test]
fn spiral_s1_quarter_mesh_matches_sampling() {
    let spec = MeshSpec::new(dy(1, 2));
    let s1 = spiral(1);
    for kind in [MeshKind::Square, MeshKind::Triangle] {
        let exact = count(&s1, &spec, kind);
        let dense = sampling_oracle_count(&s1, &spec, kind, 256).unwrap().count;
        assert_eq!(exact, dense, "{kind}");
    }
}

#[test]
fn sampling_oracle_converges_on_s2() {
    let spec = MeshSpec::new(dy(1, 3));
    let s2 = spiral(2);
    for kind in [MeshKind::Square, MeshKind::Triangle] {
        let exact = count(&s2, &spec, kind);
        let counts: Vec<u64> = [4, 16, 64]
            .iter()
            .map(|&d| sampling_oracle_count(&s2, &spec, kind, d).unwrap().count)
            .collect();
        assert!(counts.windows(2).all(|w| w[0] <= w[1]), "{counts:?}");
        assert_eq!(*counts.last().unwrap(), exact, "{kind}");
    }
}

#[test]
fn sampling_oracle_bounds_and_saturates() {
    for g in corpus() {
        for j in 1..=5 {
            let spec = MeshSpec::new(Dyadic::pow2_neg(j));
            for kind in [MeshKind::Square, MeshKind::Triangle] {
                let exact = count(&g, &spec, kind);
                for density in [1, 8, 32] {
                    let o = sampling_oracle_count(&g, &spec, kind, density).unwrap().count;
                    assert!(o <= exact, "{} j={j} {kind} density {density}", g.name);
                }
            }
        }
    }
    let spec = MeshSpec::new(dy(1, 1));
    let sq = filled_square();
    assert_eq!(sampling_oracle_count(&sq, &spec, MeshKind::Square, 64).unwrap().count, 16);
    assert_eq!(sampling_oracle_count(&sq, &spec, MeshKind::Triangle, 64).unwrap().count, 30);
}

#[test]
fn mesh_inequality_holds_in_all_modes() {
    for g in corpus() {
        for j in 1..=6 {
            for mode in [CellMode::Closed, CellMode::HalfOpen] {
                for diag in [Diagonal::Ne, Diagonal::Nw] {
                    let spec = MeshSpec::new(Dyadic::pow2_neg(j)).with_mode(mode).with_diagonal(diag);
                    let n = count(&g, &spec, MeshKind::Square);
                    let t = count(&g, &spec, MeshKind::Triangle);
                    assert!(n <= t && t <= 2 * n, "{} j={j} {mode:?} {diag:?}: N={n} T={t}", g.name);
                }
            }
        }
    }
}

#[test]
fn closed_counts_dominate_half_open() {
    for g in corpus() {
        for j in 1..=6 {
            let closed = MeshSpec::new(Dyadic::pow2_neg(j));
            let half_open = closed.with_mode(CellMode::HalfOpen);
            for kind in [MeshKind::Square, MeshKind::Triangle] {
                assert!(count(&g, &closed, kind) >= count(&g, &half_open, kind));
            }
        }
    }
}

#[test]
fn monotone_and_subadditive() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..20 {
        let a = random_union(&mut rng, 3);
        let b = random_union(&mut rng, 2);
        let mut ab = a.clone();
        ab.primitives.extend(b.primitives.iter().cloned());
        for j in 2..=5 {
            let spec = MeshSpec::new(Dyadic::pow2_neg(j));
            for kind in [MeshKind::Square, MeshKind::Triangle] {
                let (ca, cb, cab) = (count(&a, &spec, kind), count(&b, &spec, kind), count(&ab, &spec, kind));
                assert!(ca <= cab && cb <= cab);
                assert!(cab <= ca + cb);
            }
        }
    }
}

#[test]
fn grid_translation_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut sets = corpus();
    sets.push(random_union(&mut rng, 4));
    for g in sets {
        for j in [2u32, 4] {
            let delta = Dyadic::pow2_neg(j);
            let base = MeshSpec::new(delta);
            let shift = Point::new(dy(3, 5), dy(-7, 6));
            let both = base.with_offset(shift);
            let moved = g.translate(shift);
            let whole = g.translate(Point::new(delta * Dyadic::from_int(3), delta * Dyadic::from_int(-2)));
            for kind in [MeshKind::Square, MeshKind::Triangle] {
                let c = count(&g, &base, kind);
                assert_eq!(c, count(&moved, &both, kind), "{} shifted with grid", g.name);
                assert_eq!(c, count(&whole, &base, kind), "{} shifted by cells", g.name);
            }
        }
    }
}

#[test]
fn exact_and_approx_counts_agree() {
    for g in corpus() {
        let approx_set = g.to_f64();
        for j in 1..=6 {
            let spec = MeshSpec::new(Dyadic::pow2_neg(j));
            let aspec = MeshSpec::new(Dyadic::pow2_neg(j).to_f64());
            for kind in [MeshKind::Square, MeshKind::Triangle] {
                assert_eq!(
                    count(&g, &spec, kind),
                    count_mesh(&approx_set, &aspec, kind).unwrap().count,
                    "{} j={j} {kind}",
                    g.name
                );
            }
        }
    }
}

#[test]
fn partitioned_counting_is_deterministic() {
    let g = spiral(6);
    let spec = MeshSpec::new(Dyadic::pow2_neg(5));
    for kind in [MeshKind::Square, MeshKind::Triangle] {
        let whole = count(&g, &spec, kind);
        for parts in [2usize, 3, 7] {
            let chunk = g.primitives.len().div_ceil(parts);
            let mut merged = BTreeSet::new();
            for piece in g.primitives.chunks(chunk).rev() {
                let mut local = BTreeSet::new();
                collect_keys(piece, &spec, kind, &mut local).unwrap();
                merged.extend(local);
            }
            assert_eq!(merged.len() as u64, whole);
        }
    }
}

#[test]
fn count_is_independent_of_primitive_order() {
    let mut g = spiral(5);
    let spec = MeshSpec::new(Dyadic::pow2_neg(4));
    let before = count(&g, &spec, MeshKind::Triangle);
    g.primitives.reverse();
    assert_eq!(before, count(&g, &spec, MeshKind::Triangle));
}

#[test]
fn counts_are_positive_for_nonempty_sets() {
    let tiny = GeoSet::new("p", None, vec![ConvexPrimitive::point(pt(1, 3, 7))]);
    for j in 0..=10 {
        let spec = MeshSpec::new(Dyadic::pow2_neg(j));
        assert!(count(&tiny, &spec, MeshKind::Square) >= 1);
        assert!(count(&tiny, &spec, MeshKind::Triangle) >= 1);
    }
}

#[test]
fn half_open_filled_square_counts() {
    // cells [mδ,(m+1)δ) meeting [0,1]^2: m,n in 0..=2^j. Triangles: both halves
    // of the 4^j inner cells, both halves of the right column (edge points go
    // upper, the corner lower), lower halves of the top row and the corner.
    for j in 1..=6u32 {
        let spec = MeshSpec::new(Dyadic::pow2_neg(j)).with_mode(CellMode::HalfOpen);
        let s = 1u64 << j;
        assert_eq!(count(&filled_square(), &spec, MeshKind::Square), (s + 1) * (s + 1));
        assert_eq!(count(&filled_square(), &spec, MeshKind::Triangle), 2 * s * s + 3 * s + 1);
    }
}

#[test]
fn half_open_cells_partition_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..400 {
        let p = Point::new(common::coord(&mut rng, 3, -1, 2), common::coord(&mut rng, 3, -1, 2));
        let g = GeoSet::new("p", None, vec![ConvexPrimitive::point(p)]);
        for j in 0..=3 {
            for diagonal in [Diagonal::Ne, Diagonal::Nw] {
                let spec = MeshSpec::new(Dyadic::pow2_neg(j))
                    .with_mode(CellMode::HalfOpen)
                    .with_diagonal(diagonal);
                assert_eq!(count(&g, &spec, MeshKind::Square), 1, "{p:?}");
                assert_eq!(count(&g, &spec, MeshKind::Triangle), 1, "{p:?} {diagonal:?}");
            }
        }
    }
}

#[test]
fn half_open_contact_along_unowned_edges() {
    let spec = MeshSpec::new(dy(1, 1)).with_mode(CellMode::HalfOpen);
    let keys = |prim: ConvexPrimitive<Dyadic>| {
        let mut k = BTreeSet::new();
        collect_keys(&[prim], &spec, MeshKind::Square, &mut k).unwrap();
        k.into_iter().map(|c| (c.m, c.n)).collect::<Vec<_>>()
    };
    // a square ending on the line x = 1/2 reaches cell 1 only through its
    // closed left edge
    let left = ConvexPrimitive::polygon(vec![pt(0, 0, 2), pt(2, 0, 2), pt(2, 1, 2), pt(0, 1, 2)]).unwrap();
    assert_eq!(keys(left), vec![(0, 0), (1, 0)]);
    // its right side on x = 0 lies in cell 0; y = 1/2 would start row 1
    let west = ConvexPrimitive::polygon(vec![pt(-2, 1, 3), pt(0, 1, 3), pt(0, 3, 3), pt(-2, 3, 3)]).unwrap();
    assert_eq!(keys(west), vec![(-1, 0), (0, 0)]);
    // a segment through the grid vertex (1/8, 7/8) at a non-dyadic parameter
    let seg = ConvexPrimitive::segment(pt(1, 16, 4), pt(8, 2, 4)).unwrap();
    let fine = MeshSpec::new(dy(1, 3)).with_mode(CellMode::HalfOpen);
    let mut k = BTreeSet::new();
    collect_keys(&[seg], &fine, MeshKind::Square, &mut k).unwrap();
    assert!(k.iter().any(|c| (c.m, c.n) == (1, 7)));
    // and ends on the owned corner of cell (4, 1)
    assert!(k.iter().any(|c| (c.m, c.n) == (4, 1)));
}
