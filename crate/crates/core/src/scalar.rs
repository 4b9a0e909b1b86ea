//! Coordinate arithmetic in exact or approximate mode.
//!
//! Geometry and counting are generic over [`Coord`]. A single computation
//! runs entirely in one mode: [`Dyadic`] never rounds, `f64` compares with an
//! absolute tolerance of [`APPROX_TOLERANCE`].

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::dyadic::Dyadic;

/// Absolute tolerance for sign and equality predicates in approx mode.
pub const APPROX_TOLERANCE: f64 = 1e-12;

/// Index-space tolerance used when locating approximate coordinates on a
/// mesh: a coordinate within this many cell widths of a grid line is treated
/// as lying on it.
pub const GRID_TOLERANCE: f64 = 1e-9;

/// Position of a coordinate along one mesh axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridIndex {
    /// `floor((x - offset) / δ)`.
    pub floor: i64,
    /// Whether `x` lies on the grid line `offset + floor·δ`.
    pub on_line: bool,
}

/// Scalar field used for coordinates.
pub trait Coord:
    Copy
    + PartialEq
    + PartialOrd
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// True for exact arithmetic.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn half(self) -> Self;
    fn to_f64(self) -> f64;
    fn to_scalar(self) -> Scalar;

    /// Sign of `self`; approx mode maps `|x| <= APPROX_TOLERANCE` to `Equal`.
    fn sign(self) -> Ordering;

    /// Mode-aware three-way comparison.
    fn cmp_coord(self, other: Self) -> Ordering {
        (self - other).sign()
    }

    /// Locates `(self - origin) / delta` on the integer grid. `delta > 0`.
    fn grid_index(self, origin: Self, delta: Self) -> GridIndex;

    fn min_coord(self, other: Self) -> Self {
        if other.cmp_coord(self) == Ordering::Less {
            other
        } else {
            self
        }
    }

    fn max_coord(self, other: Self) -> Self {
        if other.cmp_coord(self) == Ordering::Greater {
            other
        } else {
            self
        }
    }
}

impl Coord for Dyadic {
    const EXACT: bool = true;

    fn zero() -> Self {
        Dyadic::ZERO
    }
    fn one() -> Self {
        Dyadic::ONE
    }
    fn from_i64(v: i64) -> Self {
        Dyadic::from_int(v)
    }
    fn half(self) -> Self {
        Dyadic::half(self)
    }
    fn to_f64(self) -> f64 {
        Dyadic::to_f64(self)
    }
    fn to_scalar(self) -> Scalar {
        Scalar::Exact(self)
    }
    #[inline]
    fn sign(self) -> Ordering {
        self.signum().cmp(&0)
    }
    #[inline]
    fn cmp_coord(self, other: Self) -> Ordering {
        self.cmp(&other)
    }
    fn grid_index(self, origin: Self, delta: Self) -> GridIndex {
        let (floor, exact) = (self - origin).floor_div(delta);
        GridIndex {
            floor: i64::try_from(floor).expect("grid index out of range"),
            on_line: exact,
        }
    }
}

impl Coord for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn half(self) -> Self {
        self * 0.5
    }
    fn to_f64(self) -> f64 {
        self
    }
    fn to_scalar(self) -> Scalar {
        Scalar::Approx(self)
    }
    #[inline]
    fn sign(self) -> Ordering {
        if self > APPROX_TOLERANCE {
            Ordering::Greater
        } else if self < -APPROX_TOLERANCE {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
    fn grid_index(self, origin: Self, delta: Self) -> GridIndex {
        let t = (self - origin) / delta;
        let nearest = libm::round(t);
        if libm::fabs(t - nearest) <= GRID_TOLERANCE {
            GridIndex {
                floor: nearest as i64,
                on_line: true,
            }
        } else {
            GridIndex {
                floor: libm::floor(t) as i64,
                on_line: false,
            }
        }
    }
}

/// A scalar value tagged with its arithmetic mode.
#[derive(Clone, Copy, PartialEq)]
pub enum Scalar {
    Exact(Dyadic),
    Approx(f64),
}

impl Scalar {
    pub fn to_f64(self) -> f64 {
        match self {
            Scalar::Exact(d) => d.to_f64(),
            Scalar::Approx(v) => v,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn as_exact(self) -> Option<Dyadic> {
        match self {
            Scalar::Exact(d) => Some(d),
            Scalar::Approx(_) => None,
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(d) => write!(f, "{d}"),
            Scalar::Approx(v) => write!(f, "~{v}"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(d) => write!(f, "{d}"),
            Scalar::Approx(v) => write!(f, "{v}"),
        }
    }
}

impl From<Dyadic> for Scalar {
    fn from(d: Dyadic) -> Self {
        Scalar::Exact(d)
    }
}

impl From<f64> for Scalar {
    fn from(v: f64) -> Self {
        Scalar::Approx(v)
    }
}
