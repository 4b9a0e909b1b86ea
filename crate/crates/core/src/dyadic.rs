//! Exact dyadic rationals `numerator / 2^exponent`.
//!
//! Every coordinate the Bradley construction produces is a dyadic rational:
//! the unit square has integer corners and the only operation applied to
//! them is taking midpoints. Mesh corners `m·δ` for `δ = 2^-j` are dyadic as
//! well, so the whole exact pipeline stays inside this type.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

/// An exact rational of the form `numerator / 2^exponent`.
///
/// Values are always kept canonical: the numerator is odd, or the value is
/// zero and stored as `0 / 2^0`. Canonical form makes the derived equality
/// and hashing agree with numeric equality.
///
/// Arithmetic is exact. The numerator is an `i128`; an operation whose
/// result does not fit panics with `"dyadic overflow"` rather than rounding.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: i128,
    exp: u32,
}

/// Error returned when a string is not `<int>` or `<int>/2^<uint>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDyadicError;

impl fmt::Display for ParseDyadicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected <int> or <int>/2^<uint>")
    }
}

impl core::error::Error for ParseDyadicError {}

#[inline]
fn shl_exact(n: i128, s: u32) -> i128 {
    if n == 0 || s == 0 {
        return n;
    }
    // one bit must remain for the sign
    if s >= 127 || (n.unsigned_abs().leading_zeros()) <= s {
        panic!("dyadic overflow");
    }
    n << s
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { num: 0, exp: 0 };
    pub const ONE: Dyadic = Dyadic { num: 1, exp: 0 };

    /// Builds `numerator / 2^exponent` and normalizes it.
    pub fn new(numerator: i128, exponent: u32) -> Self {
        Dyadic {
            num: numerator,
            exp: exponent,
        }
        .normalize()
    }

    pub const fn from_int(v: i64) -> Self {
        // an integer is canonical with exponent 0
        Dyadic {
            num: v as i128,
            exp: 0,
        }
    }

    /// `2^-e`.
    pub const fn pow2_neg(e: u32) -> Self {
        Dyadic { num: 1, exp: e }
    }

    pub const fn numerator(self) -> i128 {
        self.num
    }

    pub const fn exponent(self) -> u32 {
        self.exp
    }

    /// Canonical form with the same value. Idempotent.
    pub fn normalize(self) -> Self {
        if self.num == 0 {
            return Dyadic::ZERO;
        }
        let shift = self.num.trailing_zeros().min(self.exp);
        Dyadic {
            num: self.num >> shift,
            exp: self.exp - shift,
        }
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn signum(self) -> i32 {
        self.num.signum() as i32
    }

    pub fn abs(self) -> Self {
        Dyadic {
            num: self.num.abs(),
            exp: self.exp,
        }
    }

    /// Exact halving.
    pub fn half(self) -> Self {
        if self.num == 0 {
            return self;
        }
        if self.num & 1 == 0 {
            Dyadic {
                num: self.num >> 1,
                exp: self.exp,
            }
        } else {
            Dyadic {
                num: self.num,
                exp: self.exp + 1,
            }
        }
    }

    pub fn is_integer(self) -> bool {
        self.exp == 0
    }

    /// Numerators of `self` and `other` over the common denominator
    /// `2^max(exp)`.
    #[inline]
    fn aligned(self, other: Self) -> (i128, i128, u32) {
        let e = self.exp.max(other.exp);
        (
            shl_exact(self.num, e - self.exp),
            shl_exact(other.num, e - other.exp),
            e,
        )
    }

    /// `floor(self / divisor)` together with whether the division is exact.
    ///
    /// Panics if `divisor` is not positive.
    pub fn floor_div(self, divisor: Self) -> (i128, bool) {
        assert!(divisor.num > 0, "floor_div by a non-positive divisor");
        let (a, b, _) = self.aligned(divisor);
        (a.div_euclid(b), a.rem_euclid(b) == 0)
    }

    pub fn to_f64(self) -> f64 {
        libm::ldexp(self.num as f64, -(self.exp as i32))
    }

    /// Exact conversion from a finite binary64 value.
    ///
    /// Returns `None` for non-finite inputs or values outside the `i128`
    /// numerator range.
    pub fn from_f64(v: f64) -> Option<Self> {
        if !v.is_finite() {
            return None;
        }
        if v == 0.0 {
            return Some(Dyadic::ZERO);
        }
        let bits = v.to_bits();
        let sign = if bits >> 63 == 1 { -1i128 } else { 1 };
        let raw_exp = ((bits >> 52) & 0x7ff) as i32;
        let frac = bits & ((1u64 << 52) - 1);
        let (mant, e) = if raw_exp == 0 {
            (frac as i128, -1074)
        } else {
            ((frac | (1u64 << 52)) as i128, raw_exp - 1075)
        };
        // value = mant * 2^e
        if e >= 0 {
            if e >= 74 {
                return None;
            }
            Some(Dyadic::new(sign * (mant << e), 0))
        } else {
            Some(Dyadic::new(sign * mant, (-e) as u32))
        }
    }
}

impl Default for Dyadic {
    fn default() -> Self {
        Dyadic::ZERO
    }
}

impl From<i64> for Dyadic {
    fn from(v: i64) -> Self {
        Dyadic::from_int(v)
    }
}

impl Add for Dyadic {
    type Output = Dyadic;
    #[inline]
    fn add(self, rhs: Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(rhs);
        Dyadic::new(a.checked_add(b).expect("dyadic overflow"), e)
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;
    #[inline]
    fn sub(self, rhs: Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(rhs);
        Dyadic::new(a.checked_sub(b).expect("dyadic overflow"), e)
    }
}

impl Mul for Dyadic {
    type Output = Dyadic;
    #[inline]
    fn mul(self, rhs: Dyadic) -> Dyadic {
        let num = self.num.checked_mul(rhs.num).expect("dyadic overflow");
        // product of odd numerators is odd, so this is already canonical
        if num == 0 {
            Dyadic::ZERO
        } else {
            Dyadic {
                num,
                exp: self.exp + rhs.exp,
            }
        }
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            num: -self.num,
            exp: self.exp,
        }
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.num.signum(), other.num.signum());
        if sa != sb {
            return sa.cmp(&sb);
        }
        let (a, b, _) = self.aligned(*other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Dyadic {
    type Err = ParseDyadicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (num, exp) = match s.split_once('/') {
            None => (s, None),
            Some((n, d)) => {
                let e = d.strip_prefix("2^").ok_or(ParseDyadicError)?;
                (n, Some(e))
            }
        };
        let valid_int = |t: &str| {
            let digits = t.strip_prefix('-').or_else(|| t.strip_prefix('+')).unwrap_or(t);
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        };
        if !valid_int(num) {
            return Err(ParseDyadicError);
        }
        let num: i128 = num.parse().map_err(|_| ParseDyadicError)?;
        let exp: u32 = match exp {
            None => 0,
            Some(e) if !e.is_empty() && e.bytes().all(|b| b.is_ascii_digit()) => {
                e.parse().map_err(|_| ParseDyadicError)?
            }
            Some(_) => return Err(ParseDyadicError),
        };
        if exp > 1000 {
            return Err(ParseDyadicError);
        }
        Ok(Dyadic::new(num, exp))
    }
}
