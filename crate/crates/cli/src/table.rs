//! `counts.csv` and `fit.csv`.

use std::io;

use fracmesh_core::estimate::FitResult;
use fracmesh_core::{CountRecord, Dyadic, MeshKind, Scalar};
use thiserror::Error;

pub const COUNTS_HEADER: [&str; 4] = ["mesh", "delta", "count", "delta_exact"];
pub const FIT_HEADER: [&str; 5] = ["mesh", "slope", "intercept", "r_squared", "n_points"];

#[derive(Debug, Error)]
pub enum TableError {
    #[error("line {line}: {msg}")]
    Parse { line: u64, msg: String },
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

/// `x` with 17 significant digits, formatted like C's `%.17g`.
pub fn g17(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0" } else { "0" }.to_string();
    }
    let sci = format!("{x:.16e}");
    let (mant, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..17).contains(&exp) {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_fraction(mant), exp.abs())
    } else {
        let digits = (16 - exp) as usize;
        trim_fraction(&format!("{x:.digits$}")).to_string()
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn write_counts<W: io::Write>(out: W, records: &[CountRecord]) -> Result<(), TableError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(COUNTS_HEADER)?;
    for r in records {
        let exact = r.delta.as_exact().map(|d| d.to_string()).unwrap_or_default();
        w.write_record([
            r.mesh.as_str(),
            &g17(r.delta.to_f64()),
            &r.count.to_string(),
            &exact,
        ])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

/// Reads a count table. The `delta_exact` column is optional; when present
/// and nonempty it must agree with the decimal column.
pub fn read_counts<R: io::Read>(input: R) -> Result<Vec<CountRecord>, TableError> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).from_reader(input);
    let header: Vec<String> = rdr.headers()?.iter().map(str::to_string).collect();
    let with_exact = header == COUNTS_HEADER;
    if !with_exact && header != COUNTS_HEADER[..3] {
        return Err(TableError::Parse {
            line: 1,
            msg: format!("expected header `{}`", COUNTS_HEADER.join(",")),
        });
    }
    let mut out = Vec::new();
    for row in rdr.records() {
        let row = row?;
        let line = row.position().map_or(0, |p| p.line());
        let bad = |msg: String| TableError::Parse { line, msg };
        let mesh: MeshKind = row[0].parse().map_err(|e| bad(format!("{e}")))?;
        let approx: f64 = row[1]
            .parse()
            .ok()
            .filter(|v: &f64| v.is_finite())
            .ok_or_else(|| bad(format!("bad delta `{}`", &row[1])))?;
        let count: u64 = row[2]
            .parse()
            .map_err(|_| bad(format!("bad count `{}`", &row[2])))?;
        let delta = match row.get(3).filter(|s| with_exact && !s.is_empty()) {
            Some(s) => {
                let d: Dyadic = s.parse().map_err(|e| bad(format!("bad delta_exact `{s}`: {e}")))?;
                if (d.to_f64() - approx).abs() > 1e-15 * approx.abs() {
                    return Err(bad(format!("delta {approx} disagrees with delta_exact {d}")));
                }
                Scalar::Exact(d)
            }
            None => Scalar::Approx(approx),
        };
        out.push(CountRecord { mesh, delta, count });
    }
    Ok(out)
}

pub fn write_fits<W: io::Write>(out: W, fits: &[FitResult]) -> Result<(), TableError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(FIT_HEADER)?;
    for f in fits {
        w.write_record([
            f.mesh.as_str(),
            &g17(f.slope),
            &g17(f.intercept),
            &g17(f.r_squared),
            &f.n_points.to_string(),
        ])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}
