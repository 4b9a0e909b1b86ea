//! Closed-form spiral counts, the finite-stage ratio sequence, δ schedules
//! and log-log least-squares fits.

use alloc::format;
use alloc::vec::Vec;

use crate::dyadic::Dyadic;
use crate::error::{validation, Error, Result};
use crate::mesh::{CountRecord, MeshKind};
use crate::scalar::Scalar;

/// `3·2^k + 1`, the number of stage-`k` triangles covering the spiral.
pub fn cover_count_formula(k: u32) -> Result<u128> {
    if k < 1 {
        return Err(Error::Domain("cover count needs k >= 1".into()));
    }
    1u128
        .checked_shl(k)
        .filter(|_| k < 126)
        .map(|p| 3 * p + 1)
        .ok_or_else(|| Error::Domain(format!("3·2^{k} + 1 does not fit in 128 bits")))
}

/// `B(k) = log(3·2^k + 1) / log(2^{(k+1)/2}) = 2·log2(3·2^k + 1)/(k + 1)`.
///
/// Evaluated as `2·(k + log2(3 + 2^-k))/(k + 1)`, which stays accurate for
/// every `k` without forming `2^k`.
pub fn ratio_estimate(k: u32) -> Result<f64> {
    if k < 1 {
        return Err(Error::Domain("ratio estimate needs k >= 1".into()));
    }
    let kf = f64::from(k);
    let log_count = kf + libm::log2(3.0 + libm::exp2(-kf));
    Ok(2.0 * log_count / (kf + 1.0))
}

/// When the ratio iteration stops.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StopRule {
    /// First `k` with `B(k) - 2 <= tolerance`.
    Tolerance(f64),
    /// First `k` with `B(k) >= 2`, read literally; always `k = 1`.
    ReachTwo,
}

/// Iterates `k = 1, 2, ...` up to `k_max` and returns the first `(k, B(k))`
/// satisfying `rule`.
pub fn converge_ratio(rule: StopRule, k_max: u32) -> Result<(u32, f64)> {
    if let StopRule::Tolerance(t) = rule {
        if !(t > 0.0) {
            return Err(validation("tolerance must be positive"));
        }
    }
    if k_max < 1 {
        return Err(validation("k_max must be at least 1"));
    }
    let mut last = f64::NAN;
    for k in 1..=k_max {
        let b = ratio_estimate(k)?;
        let stop = match rule {
            StopRule::Tolerance(t) => b - 2.0 <= t,
            StopRule::ReachTwo => b >= 2.0,
        };
        if stop {
            return Ok((k, b));
        }
        last = b;
    }
    Err(Error::NonConvergence { k: k_max, last })
}

/// A decreasing sequence of mesh sizes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Schedule {
    /// `δ_j = 2^-j` for `j = j0..=j1`.
    Dyadic { j0: u32, j1: u32 },
    /// `δ_k = 2^{-(k+1)/2}` for `k = k0..=k1`; exact for odd `k`.
    Stage { k0: u32, k1: u32 },
    /// `n` equally spaced values from `max` down to `min`.
    Linear { max: f64, min: f64, n: u32 },
}

/// Expands a schedule into strictly decreasing δ values, each tagged with
/// its arithmetic mode.
pub fn make_schedule(s: &Schedule) -> Result<Vec<Scalar>> {
    match *s {
        Schedule::Dyadic { j0, j1 } => {
            if j0 > j1 {
                return Err(validation("dyadic schedule needs j0 <= j1"));
            }
            Ok((j0..=j1).map(|j| Scalar::Exact(Dyadic::pow2_neg(j))).collect())
        }
        Schedule::Stage { k0, k1 } => {
            if k0 > k1 {
                return Err(validation("stage schedule needs k0 <= k1"));
            }
            Ok((k0..=k1)
                .map(|k| {
                    if k % 2 == 1 {
                        Scalar::Exact(Dyadic::pow2_neg((k + 1) / 2))
                    } else {
                        Scalar::Approx(libm::exp2(-(f64::from(k) + 1.0) / 2.0))
                    }
                })
                .collect())
        }
        Schedule::Linear { max, min, n } => {
            if !(min > 0.0) || !max.is_finite() || n == 0 {
                return Err(validation("linear schedule needs 0 < min and n >= 1"));
            }
            if n == 1 {
                return if max == min {
                    Ok(alloc::vec![Scalar::Approx(max)])
                } else {
                    Err(validation("a single-value linear schedule needs max == min"))
                };
            }
            if !(max > min) {
                return Err(validation("linear schedule must be strictly decreasing"));
            }
            let step = (max - min) / f64::from(n - 1);
            Ok((0..n)
                .map(|i| {
                    if i == n - 1 {
                        Scalar::Approx(min)
                    } else {
                        Scalar::Approx(max - step * f64::from(i))
                    }
                })
                .collect())
        }
    }
}

/// Least-squares line through `(−log10 δ, log10 count)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitResult {
    pub mesh: MeshKind,
    /// The dimension estimate.
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub n_points: usize,
}

/// Ordinary least squares for `y = slope·x + intercept`.
///
/// Returns `(slope, intercept, r_squared)`; `r_squared` is 1 when the `y`
/// values have no spread. Needs at least two distinct `x`.
pub fn fit_line(xs: &[f64], ys: &[f64]) -> Result<(f64, f64, f64)> {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    if xs.len() < 2 {
        return Err(Error::InsufficientData { distinct: xs.len() });
    }
    let x_bar = xs.iter().sum::<f64>() / n;
    let y_bar = ys.iter().sum::<f64>() / n;
    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for (&x, &y) in xs.iter().zip(ys) {
        sxx += (x - x_bar) * (x - x_bar);
        sxy += (x - x_bar) * (y - y_bar);
        syy += (y - y_bar) * (y - y_bar);
    }
    if sxx == 0.0 {
        return Err(Error::InsufficientData { distinct: 1 });
    }
    let slope = sxy / sxx;
    let intercept = y_bar - slope * x_bar;
    let ss_res: f64 = xs
        .iter()
        .zip(ys)
        .map(|(&x, &y)| {
            let r = y - (slope * x + intercept);
            r * r
        })
        .sum();
    let r_squared = if syy == 0.0 {
        1.0
    } else {
        (1.0 - ss_res / syy).clamp(0.0, 1.0)
    };
    Ok((slope, intercept, r_squared))
}

/// Fits `log10(count)` against `−log10(δ)` over records of one mesh kind.
pub fn fit_loglog(records: &[CountRecord]) -> Result<FitResult> {
    let first = records.first().ok_or(Error::InsufficientData { distinct: 0 })?;
    if records.iter().any(|r| r.mesh != first.mesh) {
        return Err(validation("records mix square and triangle meshes"));
    }
    if records.iter().any(|r| r.count == 0) {
        return Err(Error::Domain("log of a zero count".into()));
    }
    if records.iter().any(|r| !(r.delta.to_f64() > 0.0)) {
        return Err(Error::Domain("delta must be positive".into()));
    }
    let mut deltas: Vec<f64> = records.iter().map(|r| r.delta.to_f64()).collect();
    deltas.sort_by(f64::total_cmp);
    deltas.dedup();
    if deltas.len() < 2 {
        return Err(Error::InsufficientData {
            distinct: deltas.len(),
        });
    }
    let xs: Vec<f64> = records.iter().map(|r| -libm::log10(r.delta.to_f64())).collect();
    let ys: Vec<f64> = records.iter().map(|r| libm::log10(r.count as f64)).collect();
    let (slope, intercept, r_squared) = fit_line(&xs, &ys)?;
    Ok(FitResult {
        mesh: first.mesh,
        slope,
        intercept,
        r_squared,
        n_points: records.len(),
    })
}
