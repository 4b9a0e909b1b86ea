//! Subcommand implementations, shared by the binary and the tests.

use std::fmt;
use std::fs;
use std::io::BufWriter;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, ensure, Context, Result};
use fracmesh_core::estimate::{
    converge_ratio, cover_count_formula, fit_loglog, make_schedule, ratio_estimate, FitResult,
    Schedule, StopRule,
};
use fracmesh_core::generators::{
    bradley_stage, construction_decomposition, depth_for_delta, reference_prefractal, FractalKind,
    PrefractalSpec, DEFAULT_DEPTH_CAP,
};
use fracmesh_core::mesh::{prepare, MeshOptions, ModeRequest};
use fracmesh_core::{AnyGeoSet, CountRecord, Dyadic, GeoSet, MeshKind, Scalar};

use crate::parallel::par_count_prepared;
use crate::plot::{self, Marker, Series};
use crate::table::{self, g17};
use crate::{fracgeo, trace};

/// `dyadic:J0:J1`, `stage:K0:K1` or `linear:D0:D1:N`.
pub fn parse_schedule(s: &str) -> Result<Schedule> {
    let parts: Vec<&str> = s.split(':').collect();
    let int = |t: &str| -> Result<u32> {
        t.parse().with_context(|| format!("bad integer `{t}` in schedule `{s}`"))
    };
    let real = |t: &str| -> Result<f64> {
        t.parse().with_context(|| format!("bad number `{t}` in schedule `{s}`"))
    };
    let sched = match parts.as_slice() {
        ["dyadic", a, b] => Schedule::Dyadic { j0: int(a)?, j1: int(b)? },
        ["stage", a, b] => Schedule::Stage { k0: int(a)?, k1: int(b)? },
        ["linear", a, b, n] => Schedule::Linear {
            max: real(a)?,
            min: real(b)?,
            n: int(n)?,
        },
        _ => bail!("schedule `{s}` is not dyadic:J0:J1, stage:K0:K1 or linear:D0:D1:N"),
    };
    make_schedule(&sched)?;
    Ok(sched)
}

pub fn schedule_label(s: &Schedule) -> String {
    match *s {
        Schedule::Dyadic { j0, j1 } => format!("dyadic:{j0}:{j1}"),
        Schedule::Stage { k0, k1 } => format!("stage:{k0}:{k1}"),
        Schedule::Linear { max, min, n } => format!("linear:{}:{}:{n}", g17(max), g17(min)),
    }
}

/// A dyadic string, or a decimal literal.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    if let Ok(d) = s.parse::<Dyadic>() {
        return Ok(Scalar::Exact(d));
    }
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(Scalar::Approx(v)),
        _ => bail!("`{s}` is neither a dyadic rational nor a decimal"),
    }
}

/// `X,Y`.
pub fn parse_offset(s: &str) -> Result<(Scalar, Scalar)> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| anyhow!("offset `{s}` is not X,Y"))?;
    Ok((parse_scalar(x.trim())?, parse_scalar(y.trim())?))
}

pub fn load_set(path: &Path) -> Result<AnyGeoSet> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    fracgeo::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn save_set(path: &Path, set: &AnyGeoSet) -> Result<()> {
    let text = fracgeo::write(set)?;
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn check_input(path: &Path) -> Result<()> {
    ensure!(path.is_file(), "input {} does not exist or is not a file", path.display());
    Ok(())
}

fn check_output(path: &Path) -> Result<()> {
    let parent = path.parent().filter(|p| !p.as_os_str().is_empty());
    if let Some(dir) = parent {
        ensure!(dir.is_dir(), "output directory {} does not exist", dir.display());
    }
    ensure!(!path.is_dir(), "output {} is a directory", path.display());
    Ok(())
}

/// Writes the prefractal, and for Bradley optionally its stage trace.
pub fn generate(spec: &PrefractalSpec, out: &Path, trace_out: Option<&Path>) -> Result<AnyGeoSet> {
    check_output(out)?;
    if let Some(t) = trace_out {
        check_output(t)?;
        ensure!(
            spec.kind == FractalKind::Bradley,
            "a stage trace exists only for the bradley construction"
        );
    }
    let set = reference_prefractal(spec)?;
    save_set(out, &set)?;
    if let Some(t) = trace_out {
        let (_, traces) = bradley_stage(spec.depth, spec.depth_cap)?;
        fs::write(t, trace::render(&traces)).with_context(|| format!("writing {}", t.display()))?;
    }
    Ok(set)
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecomposeOutcome {
    pub k: u32,
    pub triangles: usize,
    pub area: Dyadic,
    pub pass: bool,
}

impl DecomposeOutcome {
    pub fn expected_area(k: u32) -> Dyadic {
        Dyadic::new(3, 2) + Dyadic::pow2_neg(k + 2)
    }
}

impl fmt::Display for DecomposeOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} triangles, area ", self.triangles)?;
        if self.area == Self::expected_area(self.k) {
            write!(f, "3/4 + 2^-{}", self.k + 2)?;
        } else {
            write!(f, "{} (expected 3/4 + 2^-{})", self.area, self.k + 2)?;
        }
        f.write_str(if self.pass { ", PASS" } else { ", FAIL" })
    }
}

/// Writes the `3·2^k + 1` cover triangles and checks count and area.
pub fn decompose(k: u32, depth_cap: u32, out: &Path) -> Result<DecomposeOutcome> {
    check_output(out)?;
    let tris = construction_decomposition(k, depth_cap)?;
    let area = tris.iter().fold(Dyadic::ZERO, |acc, t| acc + t.area());
    let expected = cover_count_formula(k)?;
    let outcome = DecomposeOutcome {
        k,
        triangles: tris.len(),
        area,
        pass: tris.len() as u128 == expected && area == DecomposeOutcome::expected_area(k),
    };
    let set: AnyGeoSet = GeoSet::new("bradley-cover", Some(k), tris).into();
    save_set(out, &set)?;
    Ok(outcome)
}

/// Shared mesh settings of `count` and `compare`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeshSettings {
    pub schedule: Schedule,
    pub options: MeshOptions,
    pub mode: ModeRequest,
}

/// Counts `set` at every δ of the schedule. Returns the records and any
/// warnings about arithmetic mode.
pub fn count_schedule(
    set: &AnyGeoSet,
    kinds: &[MeshKind],
    settings: &MeshSettings,
) -> Result<(Vec<CountRecord>, Vec<String>)> {
    let deltas = make_schedule(&settings.schedule)?;
    let mut warnings = Vec::new();
    let mut records = Vec::with_capacity(kinds.len() * deltas.len());
    for &kind in kinds {
        for &d in &deltas {
            let p = prepare(set, d, &settings.options, settings.mode)?;
            if set.is_exact() && !p.is_exact() && warnings.is_empty() {
                warnings.push(format!(
                    "delta {d} (or the offset) is not dyadic; such scales are counted in approx mode"
                ));
            }
            records.push(par_count_prepared(&p, kind)?);
        }
    }
    Ok((records, warnings))
}

pub struct CountOutcome {
    pub records: Vec<CountRecord>,
    pub warnings: Vec<String>,
}

pub fn count(input: &Path, mesh: MeshKind, settings: &MeshSettings, out: &Path) -> Result<CountOutcome> {
    check_input(input)?;
    check_output(out)?;
    let set = load_set(input)?;
    let (records, warnings) = count_schedule(&set, &[mesh], settings)?;
    write_counts_file(out, &records)?;
    Ok(CountOutcome { records, warnings })
}

fn write_counts_file(path: &Path, records: &[CountRecord]) -> Result<()> {
    let f = fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
    table::write_counts(BufWriter::new(f), records).with_context(|| format!("writing {}", path.display()))
}

fn write_fit_file(path: &Path, fits: &[FitResult]) -> Result<()> {
    let f = fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
    table::write_fits(BufWriter::new(f), fits).with_context(|| format!("writing {}", path.display()))
}

/// One fit per mesh kind present, square first.
pub fn fit_by_mesh(records: &[CountRecord]) -> Result<Vec<FitResult>> {
    ensure!(
        !records.is_empty(),
        fracmesh_core::Error::InsufficientData { distinct: 0 }
    );
    let mut fits = Vec::new();
    for kind in [MeshKind::Square, MeshKind::Triangle] {
        let group: Vec<CountRecord> = records.iter().copied().filter(|r| r.mesh == kind).collect();
        if !group.is_empty() {
            fits.push(fit_loglog(&group).with_context(|| format!("fitting the {kind} mesh"))?);
        }
    }
    Ok(fits)
}

pub fn estimate(input: &Path, out: &Path) -> Result<Vec<FitResult>> {
    check_input(input)?;
    check_output(out)?;
    let f = fs::File::open(input).with_context(|| format!("opening {}", input.display()))?;
    let records = table::read_counts(f).with_context(|| format!("reading {}", input.display()))?;
    let fits = fit_by_mesh(&records)?;
    write_fit_file(out, &fits)?;
    Ok(fits)
}

/// Where `compare` gets its set.
#[derive(Debug, Clone, PartialEq)]
pub enum Source {
    File(PathBuf),
    /// `depth: None` picks the shallowest depth that resolves the finest δ.
    Fractal {
        kind: FractalKind,
        depth: Option<u32>,
        depth_cap: u32,
    },
}

impl Source {
    pub fn fractal(kind: FractalKind, depth: u32) -> Self {
        Source::Fractal {
            kind,
            depth: Some(depth),
            depth_cap: DEFAULT_DEPTH_CAP,
        }
    }
}

/// Smallest depth of `kind` whose finest feature is at most `δ/2`; `None`
/// for sets with no finer structure.
pub fn required_depth(kind: FractalKind, delta: f64) -> Result<Option<u32>> {
    let shrink = match kind {
        FractalKind::Bradley => return Ok(Some(depth_for_delta(delta)?)),
        FractalKind::Sierpinski => 2.0,
        FractalKind::Koch | FractalKind::CantorDust => 3.0,
        FractalKind::FilledSquare | FractalKind::Segment => return Ok(None),
    };
    ensure!(delta > 0.0 && delta.is_finite(), "delta must be positive and finite");
    let target = delta / 2.0 * (1.0 + 1e-12);
    let mut d = 0u32;
    let mut feature = 1.0f64;
    while feature > target {
        feature /= shrink;
        d += 1;
    }
    Ok(Some(d))
}

#[derive(Debug, Clone, PartialEq)]
pub struct InequalityRow {
    pub delta: Scalar,
    pub square: u64,
    pub triangle: u64,
    pub holds: bool,
}

#[derive(Debug, Clone)]
pub struct CompareOutcome {
    pub set_name: String,
    pub stage: Option<u32>,
    pub records: Vec<CountRecord>,
    pub fits: Vec<FitResult>,
    pub rows: Vec<InequalityRow>,
    pub warnings: Vec<String>,
}

impl CompareOutcome {
    pub fn inequality_holds(&self) -> bool {
        self.rows.iter().all(|r| r.holds)
    }

    pub fn fit(&self, kind: MeshKind) -> Option<&FitResult> {
        self.fits.iter().find(|f| f.mesh == kind)
    }
}

/// Square and triangle counts over the schedule, both fits, the
/// `N ≤ T ≤ 2N` table, and the four output files in `out_dir`.
pub fn compare(source: &Source, settings: &MeshSettings, out_dir: &Path) -> Result<CompareOutcome> {
    let deltas = make_schedule(&settings.schedule)?;
    let finest = deltas.iter().map(|d| d.to_f64()).fold(f64::INFINITY, f64::min);
    let set = match source {
        Source::File(p) => {
            check_input(p)?;
            load_set(p)?
        }
        &Source::Fractal {
            kind,
            depth,
            depth_cap,
        } => {
            let depth = match depth {
                Some(d) => d,
                None => required_depth(kind, finest)?.unwrap_or(0),
            };
            reference_prefractal(&PrefractalSpec { kind, depth, depth_cap })?
        }
    };
    fs::create_dir_all(out_dir).with_context(|| format!("creating {}", out_dir.display()))?;

    let mut warnings = Vec::new();
    if let (Ok(kind), Some(stage)) = (set.name().parse::<FractalKind>(), set.stage()) {
        for d in &deltas {
            if let Some(need) = required_depth(kind, d.to_f64())? {
                if need > stage {
                    warnings.push(format!(
                        "delta {d} is below the resolution of stage {stage}; depth {need} or more is needed"
                    ));
                }
            }
        }
    }

    let (records, mode_warnings) =
        count_schedule(&set, &[MeshKind::Square, MeshKind::Triangle], settings)?;
    warnings.extend(mode_warnings);
    let (sq, tr) = records.split_at(deltas.len());
    let rows: Vec<InequalityRow> = sq
        .iter()
        .zip(tr)
        .map(|(n, t)| InequalityRow {
            delta: n.delta,
            square: n.count,
            triangle: t.count,
            holds: n.count <= t.count && t.count <= 2 * n.count,
        })
        .collect();
    let fits = fit_by_mesh(&records)?;

    let outcome = CompareOutcome {
        set_name: set.name().to_string(),
        stage: set.stage(),
        records,
        fits,
        rows,
        warnings,
    };
    write_counts_file(&out_dir.join("counts.csv"), &outcome.records)?;
    write_fit_file(&out_dir.join("fit.csv"), &outcome.fits)?;
    let report = render_report(&outcome, &set, settings);
    let report_path = out_dir.join("report.txt");
    fs::write(&report_path, report).with_context(|| format!("writing {}", report_path.display()))?;
    let svg = render_plot(&outcome);
    let plot_path = out_dir.join("plot.svg");
    fs::write(&plot_path, svg).with_context(|| format!("writing {}", plot_path.display()))?;
    Ok(outcome)
}

fn render_report(o: &CompareOutcome, set: &AnyGeoSet, settings: &MeshSettings) -> String {
    use std::fmt::Write as _;
    let mut s = String::new();
    let stage = o.stage.map_or_else(|| "-".to_string(), |k| k.to_string());
    let _ = writeln!(s, "square vs triangle mesh comparison");
    let _ = writeln!(
        s,
        "set        {} (stage {stage}), {} primitives, {} coordinates",
        o.set_name,
        set.len(),
        if set.is_exact() { "exact" } else { "approx" }
    );
    let _ = writeln!(s, "schedule   {}", schedule_label(&settings.schedule));
    let opts = &settings.options;
    let _ = writeln!(
        s,
        "mesh       cells {}, diagonal {}, offset {},{}",
        opts.cell_mode.as_str(),
        opts.diagonal.as_str(),
        opts.offset.0,
        opts.offset.1
    );
    let _ = writeln!(s, "\n{:<24} {:>12} {:>12} {:>8}  N<=T<=2N", "delta", "N", "T", "T/N");
    for r in &o.rows {
        let _ = writeln!(
            s,
            "{:<24} {:>12} {:>12} {:>8.4}  {}",
            r.delta.to_string(),
            r.square,
            r.triangle,
            r.triangle as f64 / r.square as f64,
            if r.holds { "ok" } else { "VIOLATED" }
        );
    }
    let _ = writeln!(s, "\nfit of log10 count against -log10 delta");
    for f in &o.fits {
        let _ = writeln!(
            s,
            "{:<9} slope {}  intercept {}  r^2 {}  points {}",
            f.mesh.as_str(),
            g17(f.slope),
            g17(f.intercept),
            g17(f.r_squared),
            f.n_points
        );
    }
    if let (Some(a), Some(b)) = (o.fit(MeshKind::Square), o.fit(MeshKind::Triangle)) {
        let _ = writeln!(s, "slope difference (triangle - square) {}", g17(b.slope - a.slope));
    }
    let _ = writeln!(s);
    if o.warnings.is_empty() {
        let _ = writeln!(s, "warnings: none");
    }
    for w in &o.warnings {
        let _ = writeln!(s, "warning: {w}");
    }
    let _ = writeln!(
        s,
        "mesh inequality: {}",
        if o.inequality_holds() { "PASS" } else { "FAIL" }
    );
    s
}

fn render_plot(o: &CompareOutcome) -> String {
    let series = [
        (MeshKind::Square, "#1f77b4", Marker::Circle),
        (MeshKind::Triangle, "#d62728", Marker::Triangle),
    ]
    .into_iter()
    .map(|(kind, color, marker)| {
        let fit = o.fit(kind);
        Series {
            label: match fit {
                Some(f) => format!("{} mesh, slope {:.4}", kind.as_str(), f.slope),
                None => format!("{} mesh", kind.as_str()),
            },
            color,
            marker,
            points: o
                .records
                .iter()
                .filter(|r| r.mesh == kind)
                .map(|r| (-r.delta.to_f64().log10(), (r.count as f64).log10()))
                .collect(),
            fit: fit.map(|f| (f.slope, f.intercept)),
        }
    })
    .collect::<Vec<_>>();
    let title = match o.stage {
        Some(k) => format!("{} stage {k}: box counting", o.set_name),
        None => format!("{}: box counting", o.set_name),
    };
    plot::render(&title, &series)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioRow {
    pub k: u32,
    pub cover_count: u128,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RatioOutcome {
    pub rows: Vec<RatioRow>,
    /// The stopping `(k, B)`, or the core error when no `k` qualifies.
    pub stop: std::result::Result<(u32, f64), fracmesh_core::Error>,
}

/// Largest `k` whose cover count fits the table's integer column.
pub const RATIO_K_LIMIT: u32 = 125;

pub fn ratio(rule: StopRule, k_max: u32) -> Result<RatioOutcome> {
    ensure!(k_max >= 1, "k-max must be at least 1");
    ensure!(k_max <= RATIO_K_LIMIT, "k-max must be at most {RATIO_K_LIMIT}");
    if let StopRule::Tolerance(t) = rule {
        ensure!(t > 0.0 && t.is_finite(), "tolerance must be positive");
    }
    let stop = converge_ratio(rule, k_max);
    let last = match stop {
        Ok((k, _)) => k,
        Err(_) => k_max,
    };
    let rows = (1..=last)
        .map(|k| {
            Ok(RatioRow {
                k,
                cover_count: cover_count_formula(k)?,
                value: ratio_estimate(k)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RatioOutcome { rows, stop })
}

impl fmt::Display for RatioOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:>4}  {:>40}  B", "k", "3*2^k+1")?;
        for r in &self.rows {
            writeln!(f, "{:>4}  {:>40}  {}", r.k, r.cover_count, g17(r.value))?;
        }
        match &self.stop {
            Ok((k, b)) => writeln!(f, "stopped at k = {k}, B = {}", g17(*b)),
            Err(e) => writeln!(f, "{e}"),
        }
    }
}
