//! Zeros of the truncated sums `c + sum_r s_r / (r^z - 1)`.
//!
//! Seeds on a grid are refined with Newton's method, duplicates merged, and
//! every survivor certified by the argument principle on a small circle that
//! encloses no lattice pole. [`count_zeros_in_region`] counts zeros over a
//! whole rectangle the same way, as a completeness check on the search.

mod contour;
mod target;

use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::error::{Error, Result};
use crate::point::ComplexPoint;
use crate::representations::POLE_GATE;

pub use contour::{count_zeros_in_region, winding_count, RegionCount};
pub use target::{Preset, Target};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_GRID: usize = 40;
pub const DEFAULT_MAX_ITER: usize = 100;

/// Newton steps longer than this are shortened.
const MAX_STEP: f64 = 1.0;
const DERIVATIVE_FLOOR: f64 = 1e-14;
const VERIFY_RADIUS: f64 = 0.3;

/// Axis-aligned rectangle plus the number of Newton seeds along each axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SearchRegion {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
    pub grid_re: usize,
    pub grid_im: usize,
}

impl SearchRegion {
    pub fn new(re_min: f64, re_max: f64, im_min: f64, im_max: f64) -> Result<Self> {
        Self::with_grid(re_min, re_max, im_min, im_max, DEFAULT_GRID, DEFAULT_GRID)
    }

    pub fn with_grid(
        re_min: f64,
        re_max: f64,
        im_min: f64,
        im_max: f64,
        grid_re: usize,
        grid_im: usize,
    ) -> Result<Self> {
        let finite = [re_min, re_max, im_min, im_max]
            .iter()
            .all(|v| v.is_finite());
        if !finite || !(re_min < re_max) || !(im_min < im_max) {
            return Err(Error::invalid(format!(
                "region needs finite re_min < re_max and im_min < im_max, got [{re_min}, {re_max}] x [{im_min}, {im_max}]"
            )));
        }
        if grid_re < 2 || grid_im < 2 {
            return Err(Error::invalid(format!(
                "grid needs at least 2 seeds per axis, got {grid_re} x {grid_im}"
            )));
        }
        Ok(SearchRegion {
            re_min,
            re_max,
            im_min,
            im_max,
            grid_re,
            grid_im,
        })
    }

    pub fn cell_re(&self) -> f64 {
        (self.re_max - self.re_min) / (self.grid_re - 1) as f64
    }

    pub fn cell_im(&self) -> f64 {
        (self.im_max - self.im_min) / (self.grid_im - 1) as f64
    }

    pub fn contains(&self, z: Complex64, slack: f64) -> bool {
        z.re >= self.re_min - slack
            && z.re <= self.re_max + slack
            && z.im >= self.im_min - slack
            && z.im <= self.im_max + slack
    }

    /// Seeds in row-major order, bottom row first.
    pub fn seeds(&self) -> Vec<Complex64> {
        let (dx, dy) = (self.cell_re(), self.cell_im());
        (0..self.grid_im)
            .flat_map(|j| {
                (0..self.grid_re).map(move |i| {
                    Complex64::new(self.re_min + i as f64 * dx, self.im_min + j as f64 * dy)
                })
            })
            .collect()
    }

    /// The rectangle grown by its own width and height on every side; Newton
    /// iterates leaving it are abandoned.
    pub fn escape_box(&self) -> SearchRegion {
        let (w, h) = (self.re_max - self.re_min, self.im_max - self.im_min);
        SearchRegion {
            re_min: self.re_min - w,
            re_max: self.re_max + w,
            im_min: self.im_min - h,
            im_max: self.im_max + h,
            ..*self
        }
    }
}

/// `re_min,re_max,im_min,im_max`.
impl FromStr for SearchRegion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<f64> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::invalid(format!("cannot parse '{t}' in region '{s}'")))
            })
            .collect::<Result<_>>()?;
        match parts[..] {
            [a, b, c, d] => SearchRegion::new(a, b, c, d),
            _ => Err(Error::invalid(format!(
                "region must be re_min,re_max,im_min,im_max, got '{s}'"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RootRecord {
    pub location: ComplexPoint,
    /// `|f(location)|`
    pub residual: f64,
    /// Winding number one on a pole-free circle and residual within tolerance.
    pub verified: bool,
    /// Winding number on the verification circle, when it could be computed.
    pub winding: Option<i64>,
    /// Index of the conjugate root in the same result list.
    pub conjugate_of: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum NewtonFailure {
    #[error(
        "seed or iterate within the pole gate of 2*pi*i*{lattice_index}/log({base}) at {re}{im:+}i"
    )]
    Pole {
        re: f64,
        im: f64,
        base: u64,
        lattice_index: i64,
    },
    #[error("derivative vanished at {re}{im:+}i")]
    Stagnation { re: f64, im: f64 },
    #[error("iterate left the search box at {re}{im:+}i")]
    Escape { re: f64, im: f64 },
    #[error("non-finite value at {re}{im:+}i")]
    Divergence { re: f64, im: f64 },
    #[error("no convergence after {iterations} iterations")]
    IterationCap { iterations: usize },
}

fn pole_failure(target: &Target, z: Complex64) -> Option<NewtonFailure> {
    let (d, base, lattice_index) = target.nearest_pole(z);
    (d < POLE_GATE).then_some(NewtonFailure::Pole {
        re: z.re,
        im: z.im,
        base,
        lattice_index,
    })
}

/// Newton iteration `z <- z - f(z)/f'(z)` from `seed`.
///
/// Succeeds once a step shorter than `tol` lands where `|f| <= tol`. Iterates
/// farther than `1e4` from the origin count as escaped.
pub fn newton_refine(
    target: &Target,
    seed: ComplexPoint,
    tol: f64,
    max_iter: usize,
) -> std::result::Result<RootRecord, NewtonFailure> {
    newton_in_box(target, seed.value(), tol, max_iter, None).map(|(z, residual)| RootRecord {
        location: ComplexPoint::try_from(z).expect("converged iterates are finite"),
        residual,
        verified: false,
        winding: None,
        conjugate_of: None,
    })
}

fn newton_in_box(
    target: &Target,
    seed: Complex64,
    tol: f64,
    max_iter: usize,
    escape: Option<&SearchRegion>,
) -> std::result::Result<(Complex64, f64), NewtonFailure> {
    if let Some(fail) = pole_failure(target, seed) {
        return Err(fail);
    }
    let escaped = |z: Complex64| match escape {
        Some(b) => !b.contains(z, 0.0),
        None => z.norm() > 1e4,
    };
    let mut z = seed;
    for _ in 0..max_iter {
        let (f, df) = target.eval_with_derivative(z);
        if !(f.is_finite() && df.is_finite()) {
            return Err(NewtonFailure::Divergence { re: z.re, im: z.im });
        }
        if df.norm() < DERIVATIVE_FLOOR {
            return Err(NewtonFailure::Stagnation { re: z.re, im: z.im });
        }
        let mut step = f / df;
        let len = step.norm();
        if len > MAX_STEP {
            step *= MAX_STEP / len;
        }
        z -= step;
        if escaped(z) {
            return Err(NewtonFailure::Escape { re: z.re, im: z.im });
        }
        if let Some(fail) = pole_failure(target, z) {
            return Err(fail);
        }
        if len < tol {
            let residual = target.eval(z).norm();
            if residual <= tol {
                return Ok((z, residual));
            }
        }
    }
    Err(NewtonFailure::IterationCap {
        iterations: max_iter,
    })
}

fn order_key(a: &Complex64, b: &Complex64) -> std::cmp::Ordering {
    a.im.total_cmp(&b.im).then(a.re.total_cmp(&b.re))
}

/// Grid-seeded search for zeros of `target` inside `region`.
///
/// Output is sorted by `(im, re)` and does not depend on how the seeds were
/// scheduled across threads. Candidates that fail verification are kept with
/// `verified = false`.
pub fn find_zeros(target: &Target, region: &SearchRegion, tol: f64) -> Result<Vec<RootRecord>> {
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(Error::invalid(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let dedupe = 10.0 * tol;
    let escape = region.escape_box();
    let candidates: Vec<Complex64> = region
        .seeds()
        .into_par_iter()
        .filter_map(|seed| {
            newton_in_box(target, seed, tol, DEFAULT_MAX_ITER, Some(&escape))
                .ok()
                .map(|(z, _)| z)
        })
        .filter(|z| region.contains(*z, dedupe))
        .collect();

    let mut sorted = candidates;
    sorted.sort_by(order_key);
    let mut roots: Vec<Complex64> = Vec::new();
    for z in sorted {
        if roots.iter().all(|r| (r - z).norm() > dedupe) {
            roots.push(z);
        }
    }

    // Roots within the dedupe radius of the real axis are real: f is real there.
    for z in roots.iter_mut() {
        if z.im != 0.0 && z.im.abs() <= dedupe {
            let snapped = Complex64::new(z.re, 0.0);
            if target.eval(snapped).norm() <= tol {
                *z = snapped;
            }
        }
    }
    roots.sort_by(order_key);

    let mut records: Vec<RootRecord> = roots
        .iter()
        .enumerate()
        .map(|(i, &z)| verify(target, &roots, i, z, tol))
        .collect::<Result<_>>()?;

    for i in 0..records.len() {
        let z = records[i].location.value();
        if z.im == 0.0 {
            continue;
        }
        records[i].conjugate_of = roots
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(j, w)| (j, (w - z.conj()).norm()))
            .filter(|&(_, d)| d <= dedupe)
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .map(|(j, _)| j);
    }
    Ok(records)
}

fn verify(
    target: &Target,
    roots: &[Complex64],
    i: usize,
    z: Complex64,
    tol: f64,
) -> Result<RootRecord> {
    let residual = target.eval(z).norm();
    let nearest_root = roots
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, w)| (w - z).norm())
        .fold(f64::INFINITY, f64::min);
    let (pole_dist, _, _) = target.nearest_pole(z);
    let radius = VERIFY_RADIUS.min(0.45 * nearest_root).min(0.9 * pole_dist);
    let center = ComplexPoint::try_from(z)?;
    let mut winding = None;
    let mut samples = 256;
    while samples <= 1 << 16 {
        match winding_count(target, center, radius, samples) {
            Ok(w) => {
                winding = Some(w);
                break;
            }
            Err(Error::Resolution { .. }) => samples *= 2,
            Err(_) => break,
        }
    }
    Ok(RootRecord {
        location: center,
        residual,
        verified: winding == Some(1) && residual <= tol,
        winding,
        conjugate_of: None,
    })
}
