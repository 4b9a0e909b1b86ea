//! The line-oriented `fracgeo v1` geometry format.
//!
//! ```text
//! fracgeo v1
//! set <name> stage <k|->
//! point <x> <y>
//! seg <x1> <y1> <x2> <y2>
//! poly <n> <x1> <y1> ... <xn> <yn>
//! ```
//!
//! A file whose coordinates are all `<int>` or `<int>/2^<uint>` loads in
//! exact mode. One decimal literal anywhere switches the whole set to
//! approx mode.

use std::fmt::{self, Write as _};

use fracmesh_core::{AnyGeoSet, ConvexPrimitive, Coord, Dyadic, GeoSet, Point};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FracgeoError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("set name `{0}` must be one non-empty token without whitespace")]
    Name(String),
}

fn err(line: usize, msg: impl Into<String>) -> FracgeoError {
    FracgeoError::Parse {
        line,
        msg: msg.into(),
    }
}

struct RawPrimitive {
    line: usize,
    coords: Vec<String>,
}

enum Token {
    Exact(Dyadic),
    Approx(f64),
}

fn classify(tok: &str, line: usize) -> Result<Token, FracgeoError> {
    if let Ok(d) = tok.parse::<Dyadic>() {
        return Ok(Token::Exact(d));
    }
    let looks_decimal = tok
        .bytes()
        .all(|b| b.is_ascii_digit() || matches!(b, b'.' | b'-' | b'+' | b'e' | b'E'));
    match tok.parse::<f64>() {
        Ok(v) if looks_decimal && v.is_finite() => Ok(Token::Approx(v)),
        _ => Err(err(line, format!("bad coordinate `{tok}`"))),
    }
}

fn build<S: Coord>(
    raw: &[RawPrimitive],
    conv: impl Fn(&Token) -> S,
) -> Result<Vec<ConvexPrimitive<S>>, FracgeoError> {
    raw.iter()
        .map(|r| {
            let vals: Vec<S> = r
                .coords
                .iter()
                .map(|t| classify(t, r.line).map(|t| conv(&t)))
                .collect::<Result<_, _>>()?;
            let pts: Vec<Point<S>> = vals.chunks(2).map(|c| Point::new(c[0], c[1])).collect();
            ConvexPrimitive::new(pts).map_err(|e| err(r.line, e.to_string()))
        })
        .collect()
}

/// Parses a `fracgeo v1` document.
pub fn parse(text: &str) -> Result<AnyGeoSet, FracgeoError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    match lines.next() {
        Some((_, "fracgeo v1")) => {}
        Some((n, other)) => return Err(err(n, format!("expected `fracgeo v1`, found `{other}`"))),
        None => return Err(err(1, "empty file")),
    }
    let (name, stage) = match lines.next() {
        Some((n, l)) => {
            let f: Vec<&str> = l.split_whitespace().collect();
            if f.len() != 4 || f[0] != "set" || f[2] != "stage" {
                return Err(err(n, "expected `set <name> stage <k|->`"));
            }
            let stage = match f[3] {
                "-" => None,
                s => Some(s.parse::<u32>().map_err(|_| err(n, format!("bad stage `{s}`")))?),
            };
            (f[1].to_string(), stage)
        }
        None => return Err(err(2, "missing `set` line")),
    };

    let mut raw = Vec::new();
    let mut any_decimal = false;
    for (n, l) in lines {
        let f: Vec<&str> = l.split_whitespace().collect();
        let Some(&kw) = f.first() else {
            return Err(err(n, "empty line"));
        };
        let coords = match kw {
            "point" | "seg" => {
                let want = if kw == "point" { 2 } else { 4 };
                if f.len() != want + 1 {
                    return Err(err(n, format!("`{kw}` takes {want} coordinates")));
                }
                &f[1..]
            }
            "poly" => {
                let k: usize = f
                    .get(1)
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| err(n, "`poly` needs a vertex count"))?;
                if k < 3 {
                    return Err(err(n, "`poly` needs at least 3 vertices"));
                }
                if f.len() != 2 + 2 * k {
                    return Err(err(n, format!("`poly {k}` takes {} coordinates", 2 * k)));
                }
                &f[2..]
            }
            other => return Err(err(n, format!("unknown directive `{other}`"))),
        };
        for t in coords {
            if let Token::Approx(_) = classify(t, n)? {
                any_decimal = true;
            }
        }
        raw.push(RawPrimitive {
            line: n,
            coords: coords.iter().map(|s| s.to_string()).collect(),
        });
    }

    Ok(if any_decimal {
        let prims = build(&raw, |t| match t {
            Token::Exact(d) => d.to_f64(),
            Token::Approx(v) => *v,
        })?;
        GeoSet::new(name, stage, prims).into()
    } else {
        let prims = build(&raw, |t| match t {
            Token::Exact(d) => *d,
            Token::Approx(_) => unreachable!("decimal in an exact file"),
        })?;
        GeoSet::new(name, stage, prims).into()
    })
}

/// How a coordinate is spelled in a file.
trait Spell {
    fn spell(&self, out: &mut String) -> fmt::Result;
}

impl Spell for Dyadic {
    fn spell(&self, out: &mut String) -> fmt::Result {
        write!(out, "{self}")
    }
}

impl Spell for f64 {
    // Debug keeps a decimal point on integral values, so the file reloads
    // in approx mode.
    fn spell(&self, out: &mut String) -> fmt::Result {
        write!(out, "{self:?}")
    }
}

fn write_set<S: Coord + Spell>(g: &GeoSet<S>) -> Result<String, FracgeoError> {
    if g.name.is_empty() || g.name.chars().any(char::is_whitespace) {
        return Err(FracgeoError::Name(g.name.clone()));
    }
    let mut out = String::from("fracgeo v1\n");
    let stage = g.stage.map_or_else(|| "-".to_string(), |k| k.to_string());
    let _ = writeln!(out, "set {} stage {stage}", g.name);
    for p in &g.primitives {
        let v = p.vertices();
        match v.len() {
            1 => out.push_str("point"),
            2 => out.push_str("seg"),
            n => {
                let _ = write!(out, "poly {n}");
            }
        }
        for q in v {
            out.push(' ');
            let _ = q.x.spell(&mut out);
            out.push(' ');
            let _ = q.y.spell(&mut out);
        }
        out.push('\n');
    }
    Ok(out)
}

/// Serializes a set; exact sets are written with dyadic strings.
pub fn write(set: &AnyGeoSet) -> Result<String, FracgeoError> {
    match set {
        AnyGeoSet::Exact(g) => write_set(g),
        AnyGeoSet::Approx(g) => write_set(g),
    }
}
