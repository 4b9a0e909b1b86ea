//! Prefractal generators.

pub mod bradley;
pub mod reference;

use core::fmt;
use core::str::FromStr;

use crate::error::{validation, Error, Result};
use crate::geometry::AnyGeoSet;

pub use bradley::{
    bradley_stage, construction_decomposition, depth_for_delta, inscribed_square,
    removal_direction, Compass, StageTrace, DEFAULT_DEPTH_CAP,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FractalKind {
    Bradley,
    Sierpinski,
    Koch,
    CantorDust,
    FilledSquare,
    Segment,
}

impl FractalKind {
    pub const ALL: [FractalKind; 6] = [
        FractalKind::Bradley,
        FractalKind::Sierpinski,
        FractalKind::Koch,
        FractalKind::CantorDust,
        FractalKind::FilledSquare,
        FractalKind::Segment,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FractalKind::Bradley => "bradley",
            FractalKind::Sierpinski => "sierpinski",
            FractalKind::Koch => "koch",
            FractalKind::CantorDust => "cantor-dust",
            FractalKind::FilledSquare => "filled-square",
            FractalKind::Segment => "segment",
        }
    }
}

impl fmt::Display for FractalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FractalKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FractalKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| validation(alloc::format!("unknown fractal kind `{s}`")))
    }
}

/// Which prefractal to build, and how deep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrefractalSpec {
    pub kind: FractalKind,
    pub depth: u32,
    pub depth_cap: u32,
}

impl PrefractalSpec {
    pub fn new(kind: FractalKind, depth: u32) -> Self {
        PrefractalSpec {
            kind,
            depth,
            depth_cap: DEFAULT_DEPTH_CAP,
        }
    }
}

/// Builds the prefractal described by `spec`.
///
/// Bradley, Sierpinski, the filled square and the segment are exact; Koch
/// (√3) and Cantor dust (thirds) are approximate.
pub fn reference_prefractal(spec: &PrefractalSpec) -> Result<AnyGeoSet> {
    if spec.depth > spec.depth_cap {
        return Err(Error::Resource {
            requested: spec.depth,
            cap: spec.depth_cap,
        });
    }
    let d = spec.depth;
    Ok(match spec.kind {
        FractalKind::Bradley => bradley_stage(d, spec.depth_cap)?.0.into(),
        FractalKind::Sierpinski => reference::sierpinski(d).into(),
        FractalKind::Koch => reference::koch(d).into(),
        FractalKind::CantorDust => reference::cantor_dust(d).into(),
        FractalKind::FilledSquare => reference::filled_square().into(),
        FractalKind::Segment => reference::unit_segment().into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinds_parse() {
        for k in FractalKind::ALL {
            assert_eq!(k.as_str().parse::<FractalKind>().unwrap(), k);
        }
        assert!(matches!("mandelbrot".parse::<FractalKind>(), Err(Error::Validation(_))));
    }

    #[test]
    fn reference_counts() {
        let sier = reference_prefractal(&PrefractalSpec::new(FractalKind::Sierpinski, 3)).unwrap();
        assert_eq!(sier.len(), 27);
        assert!(sier.is_exact());
        let dust = reference_prefractal(&PrefractalSpec::new(FractalKind::CantorDust, 2)).unwrap();
        assert_eq!(dust.len(), 16);
        assert!(!dust.is_exact());
        let sq = reference_prefractal(&PrefractalSpec::new(FractalKind::FilledSquare, 0)).unwrap();
        assert_eq!(sq.len(), 1);
        let br = reference_prefractal(&PrefractalSpec::new(FractalKind::Bradley, 2)).unwrap();
        assert_eq!(br.len(), 7);
        let capped = PrefractalSpec { depth_cap: 3, ..PrefractalSpec::new(FractalKind::Koch, 4) };
        assert!(reference_prefractal(&capped).is_err());
    }
}
