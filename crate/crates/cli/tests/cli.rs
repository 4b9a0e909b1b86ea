mod common;

use std::fs;

use common::{fracmesh, path_str, stderr, stdout};
use fracmesh::run;
use fracmesh_core::generators::{reference_prefractal, FractalKind, PrefractalSpec};

#[test]
fn generate_depth_zero_is_one_poly() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("b0.fg");
    let o = fracmesh(&["generate", "--fractal", "bradley", "--depth", "0", "--out", path_str(&out)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = fs::read_to_string(&out).unwrap();
    assert_eq!(text, "fracgeo v1\nset bradley stage 0\npoly 4 0 0 1 0 1 1 0 1\n");
}

#[test]
fn generated_files_reload_unchanged() {
    let dir = tempfile::tempdir().unwrap();
    for kind in FractalKind::ALL {
        let spec = PrefractalSpec::new(kind, 3);
        let path = dir.path().join(format!("{}.fg", kind.as_str()));
        let set = run::generate(&spec, &path, None).unwrap();
        assert_eq!(run::load_set(&path).unwrap(), set, "{kind:?}");
        assert_eq!(set, reference_prefractal(&spec).unwrap());
    }
}

#[test]
fn trace_only_for_bradley() {
    let dir = tempfile::tempdir().unwrap();
    let (out, tr) = (dir.path().join("s.fg"), dir.path().join("s.txt"));
    let o = fracmesh(&[
        "generate", "--fractal", "bradley", "--depth", "3", "--out", path_str(&out), "--trace", path_str(&tr),
    ]);
    assert!(o.status.success());
    let text = fs::read_to_string(&tr).unwrap();
    assert_eq!(text.matches("\nstage ").count(), 3);
    let o = fracmesh(&[
        "generate", "--fractal", "koch", "--depth", "2", "--out", path_str(&out), "--trace", path_str(&tr),
    ]);
    assert!(!o.status.success());
}

#[test]
fn decompose_six_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d6.fg");
    let o = fracmesh(&["decompose", "--depth", "6", "--out", path_str(&out)]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "193 triangles, area 3/4 + 2^-8, PASS\n");
    let set = run::load_set(&out).unwrap();
    assert_eq!(set.len(), 193);
    assert_eq!(set.stage(), Some(6));
}

#[test]
fn decompose_rejects_stage_zero_and_cap() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d.fg");
    assert!(!fracmesh(&["decompose", "--depth", "0", "--out", path_str(&out)]).status.success());
    let o = fracmesh(&["decompose", "--depth", "9", "--depth-cap", "8", "--out", path_str(&out)]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("depth cap"), "{}", stderr(&o));
}

#[test]
fn ratio_tables() {
    let o = fracmesh(&["ratio", "--tol", "0.1"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().filter(|l| l.trim_start().starts_with(char::is_numeric)).collect();
    assert_eq!(rows.len(), 11);
    assert!(rows[10].split_whitespace().eq(["11", "6145", "2.0975328825433373"]));

    let o = fracmesh(&["ratio", "--reach-two"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("stopped at k = 1, B = 2.8073549220576042"));

    let o = fracmesh(&["ratio", "--tol", "0.5"]);
    assert!(stdout(&o).contains("stopped at k = 2, B = 2.4669598120940615"));

    let o = fracmesh(&["ratio", "--tol", "0.01", "--k-max", "6"]);
    assert!(!o.status.success());
    assert_eq!(stdout(&o).lines().filter(|l| l.trim_start().starts_with(char::is_numeric)).count(), 6);
    assert!(stdout(&o).contains("no convergence"));

    assert!(!fracmesh(&["ratio", "--tol", "0"]).status.success());
}

#[test]
fn count_then_estimate() {
    let dir = tempfile::tempdir().unwrap();
    let fg = dir.path().join("sq.fg");
    let csv = dir.path().join("counts.csv");
    let fit = dir.path().join("fit.csv");
    assert!(fracmesh(&["generate", "--fractal", "filled-square", "--depth", "0", "--out", path_str(&fg)]).status.success());
    let o = fracmesh(&[
        "count", "--in", path_str(&fg), "--mesh", "square", "--schedule", "dyadic:1:3", "--out", path_str(&csv),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(
        fs::read_to_string(&csv).unwrap(),
        "mesh,delta,count,delta_exact\nsquare,0.5,16,1/2^1\nsquare,0.25,36,1/2^2\nsquare,0.125,100,1/2^3\n"
    );
    let o = fracmesh(&["estimate", "--in", path_str(&csv), "--out", path_str(&fit)]);
    assert!(o.status.success());
    let text = fs::read_to_string(&fit).unwrap();
    assert!(text.starts_with("mesh,slope,intercept,r_squared,n_points\nsquare,"));
    assert!(text.trim_end().ends_with(",3"));

    let o = fracmesh(&[
        "count", "--in", path_str(&fg), "--mesh", "triangle", "--schedule", "dyadic:1:1", "--cells", "half-open",
        "--out", path_str(&csv),
    ]);
    assert!(o.status.success());
    assert!(fs::read_to_string(&csv).unwrap().ends_with("triangle,0.5,15,1/2^1\n"));
}

#[test]
fn estimate_on_one_row_fails() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("one.csv");
    fs::write(&csv, "mesh,delta,count,delta_exact\nsquare,0.5,16,1/2^1\n").unwrap();
    let o = fracmesh(&["estimate", "--in", path_str(&csv), "--out", path_str(&dir.path().join("fit.csv"))]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("insufficient data"), "{}", stderr(&o));
}

#[test]
fn stage_schedule_warns_once_about_approx_mode() {
    let dir = tempfile::tempdir().unwrap();
    let fg = dir.path().join("s2.fg");
    let csv = dir.path().join("c.csv");
    assert!(fracmesh(&["generate", "--fractal", "bradley", "--depth", "2", "--out", path_str(&fg)]).status.success());
    let o = fracmesh(&[
        "count", "--in", path_str(&fg), "--mesh", "triangle", "--schedule", "stage:1:6", "--out", path_str(&csv),
    ]);
    assert!(o.status.success());
    assert_eq!(stderr(&o).matches("warning").count(), 1);
    let text = fs::read_to_string(&csv).unwrap();
    let exact_cols: Vec<&str> = text.lines().skip(1).map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(exact_cols, ["1/2^1", "", "1/2^2", "", "1/2^3", ""]);
}

#[test]
fn malformed_input_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let fg = dir.path().join("bad.fg");
    fs::write(&fg, "fracgeo v1\nset x stage -\npoint 0 0\ncircle 0 0 1\n").unwrap();
    let o = fracmesh(&[
        "count", "--in", path_str(&fg), "--mesh", "square", "--schedule", "dyadic:1:2", "--out",
        path_str(&dir.path().join("c.csv")),
    ]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("line 4"), "{}", stderr(&o));
}

#[test]
fn missing_paths_fail_before_work() {
    let dir = tempfile::tempdir().unwrap();
    let o = fracmesh(&[
        "count", "--in", path_str(&dir.path().join("nope.fg")), "--mesh", "square", "--schedule", "dyadic:1:2",
        "--out", path_str(&dir.path().join("c.csv")),
    ]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("does not exist"));
    let o = fracmesh(&[
        "generate", "--fractal", "segment", "--depth", "0", "--out", path_str(&dir.path().join("no/dir/x.fg")),
    ]);
    assert!(!o.status.success());
}

#[test]
fn bad_arguments_are_rejected() {
    for args in [
        &["ratio", "--k-max", "0"][..],
        &["generate", "--fractal", "mandelbrot", "--depth", "1", "--out", "x"],
        &["compare", "--schedule", "dyadic:2:1", "--fractal", "segment", "--out-dir", "x"],
        &["compare", "--schedule", "cubic:1:2", "--fractal", "segment", "--out-dir", "x"],
        &["compare", "--schedule", "dyadic:1:2", "--out-dir", "x"],
        &["compare", "--schedule", "dyadic:1:2", "--fractal", "segment", "--cells", "open", "--out-dir", "x"],
    ] {
        assert!(!fracmesh(args).status.success(), "{args:?}");
    }
}

#[test]
fn compare_spiral_row_count() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cmp");
    let o = fracmesh(&[
        "compare", "--fractal", "bradley", "--depth", "8", "--schedule", "dyadic:2:6", "--out-dir", path_str(&out),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let counts = fs::read_to_string(out.join("counts.csv")).unwrap();
    assert_eq!(counts.lines().count(), 1 + 10);
    let report = fs::read_to_string(out.join("report.txt")).unwrap();
    assert!(report.contains("mesh inequality: PASS"));
    // stage 8 does not resolve delta 2^-4 and finer
    assert_eq!(report.matches("warning: delta").count(), 3);
    assert_eq!(fs::read_to_string(out.join("fit.csv")).unwrap().lines().count(), 3);
    let svg = fs::read_to_string(out.join("plot.svg")).unwrap();
    assert!(svg.contains("−log₁₀ δ") && svg.contains("log₁₀ count"));
}

#[test]
fn compare_auto_depth_resolves_every_delta() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("auto");
    let o = fracmesh(&["compare", "--fractal", "bradley", "--schedule", "dyadic:2:5", "--out-dir", path_str(&out)]);
    assert!(o.status.success());
    let report = fs::read_to_string(out.join("report.txt")).unwrap();
    assert!(report.contains("(stage 11)"), "{report}");
    assert!(report.contains("warnings: none"));
}

#[test]
fn compare_filled_square_slopes_agree() {
    let dir = tempfile::tempdir().unwrap();
    let src = run::Source::fractal(FractalKind::FilledSquare, 0);
    let settings = run::MeshSettings {
        schedule: run::parse_schedule("dyadic:2:8").unwrap(),
        options: Default::default(),
        mode: Default::default(),
    };
    let o = run::compare(&src, &settings, dir.path()).unwrap();
    let sq = o.fit(fracmesh_core::MeshKind::Square).unwrap().slope;
    let tr = o.fit(fracmesh_core::MeshKind::Triangle).unwrap().slope;
    assert!((sq - tr).abs() <= 0.05, "{sq} vs {tr}");
}

#[test]
fn offset_and_mode_flags() {
    let dir = tempfile::tempdir().unwrap();
    let fg = dir.path().join("seg.fg");
    let csv = dir.path().join("c.csv");
    assert!(fracmesh(&["generate", "--fractal", "segment", "--depth", "0", "--out", path_str(&fg)]).status.success());
    let run_count = |extra: &[&str]| {
        let mut args = vec![
            "count", "--in", path_str(&fg), "--mesh", "square", "--schedule", "dyadic:2:2", "--out", path_str(&csv),
        ];
        args.extend_from_slice(extra);
        let o = fracmesh(&args);
        (o.status.success(), fs::read_to_string(&csv).unwrap_or_default())
    };
    // closed segment on a grid line touches two rows of cells
    assert!(run_count(&[]).1.contains("square,0.25,12,"));
    // moved off the grid lines it meets only one row
    assert!(run_count(&["--offset", "1/2^3,1/2^3"]).1.contains("square,0.25,5,"));
    assert!(run_count(&["--offset", "0.125,0.125"]).1.contains("square,0.25,5,"));
    assert!(run_count(&["--mode", "approx"]).1.contains("square,0.25,12,"));
    assert!(!run_count(&["--offset", "0.1,0", "--mode", "exact"]).0);
}
