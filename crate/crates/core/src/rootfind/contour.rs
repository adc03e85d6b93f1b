//! Argument-principle counts on circles and rectangles.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::point::ComplexPoint;
use crate::representations::POLE_GATE;
use crate::rootfind::{SearchRegion, Target};

/// Largest phase change accepted between neighbouring samples.
const MAX_PHASE_STEP: f64 = PI / 2.0;

fn check_sample(f: Complex64, at: Complex64) -> Result<()> {
    if !f.is_finite() {
        return Err(Error::Contour(format!(
            "non-finite value on contour at {at}"
        )));
    }
    if f.norm() == 0.0 {
        return Err(Error::Contour(format!("zero on contour at {at}")));
    }
    Ok(())
}

/// Winding number of `f` around 0 along the circle `|z - center| = radius`,
/// sampled at `samples` equally spaced points.
///
/// Fails if a lattice pole lies inside or within the pole gate of the
/// circle, or if two neighbouring samples differ in phase by more than
/// `pi/2`. With no pole inside, the result is the number of enclosed zeros.
pub fn winding_count(
    target: &Target,
    center: ComplexPoint,
    radius: f64,
    samples: usize,
) -> Result<i64> {
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(Error::invalid(format!(
            "radius must be positive, got {radius}"
        )));
    }
    if samples < 8 {
        return Err(Error::invalid(format!(
            "need at least 8 samples, got {samples}"
        )));
    }
    let c = center.value();
    let (pole_dist, base, k) = target.nearest_pole(c);
    if pole_dist <= radius + POLE_GATE {
        return Err(Error::Contour(format!(
            "pole 2*pi*i*{k}/log({base}) lies {pole_dist:.3e} from the center, inside or on the radius-{radius} circle"
        )));
    }

    let point = |j: usize| c + Complex64::from_polar(radius, 2.0 * PI * j as f64 / samples as f64);
    let first = target.eval(point(0));
    check_sample(first, point(0))?;
    let mut prev = first;
    let mut total = 0.0;
    let mut max_step = 0.0f64;
    for j in 1..=samples {
        let f = if j == samples {
            first
        } else {
            target.eval(point(j))
        };
        check_sample(f, point(j))?;
        let step = (f / prev).arg();
        max_step = max_step.max(step.abs());
        total += step;
        prev = f;
    }
    if max_step > MAX_PHASE_STEP {
        return Err(Error::Resolution { samples, max_step });
    }
    Ok((total / (2.0 * PI)).round() as i64)
}

/// Zero count over a rectangle: `zeros = winding + poles inside`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegionCount {
    /// The rectangle actually integrated over, after nudging edges off poles.
    pub region: SearchRegion,
    pub winding: i64,
    pub poles_inside: usize,
    pub zeros: i64,
}

const NUDGE_LIMIT: usize = 16;
const INITIAL_PIECES: usize = 64;
const MAX_DEPTH: u32 = 40;

/// Counts the zeros of `target` inside `region` with the argument principle.
///
/// Edges that pass within the pole gate of a lattice pole are moved outward
/// by one grid cell first. The boundary is sampled adaptively, bisecting any
/// segment whose phase change exceeds `pi/2`.
pub fn count_zeros_in_region(target: &Target, region: &SearchRegion) -> Result<RegionCount> {
    let region = nudge_off_poles(target, region)?;
    let corners = [
        Complex64::new(region.re_min, region.im_min),
        Complex64::new(region.re_max, region.im_min),
        Complex64::new(region.re_max, region.im_max),
        Complex64::new(region.re_min, region.im_max),
    ];
    let mut total = 0.0;
    for side in 0..4 {
        let (a, b) = (corners[side], corners[(side + 1) % 4]);
        for piece in 0..INITIAL_PIECES {
            let p = a + (b - a) * (piece as f64 / INITIAL_PIECES as f64);
            let q = a + (b - a) * ((piece + 1) as f64 / INITIAL_PIECES as f64);
            let (fp, fq) = (target.eval(p), target.eval(q));
            check_sample(fp, p)?;
            check_sample(fq, q)?;
            total += segment_phase(target, p, q, fp, fq, 0)?;
        }
    }
    let winding = (total / (2.0 * PI)).round() as i64;
    let poles_inside = target.poles_inside(&region).len();
    Ok(RegionCount {
        region,
        winding,
        poles_inside,
        zeros: winding + poles_inside as i64,
    })
}

fn segment_phase(
    target: &Target,
    a: Complex64,
    b: Complex64,
    fa: Complex64,
    fb: Complex64,
    depth: u32,
) -> Result<f64> {
    let step = (fb / fa).arg();
    if step.abs() <= MAX_PHASE_STEP {
        return Ok(step);
    }
    if depth >= MAX_DEPTH {
        return Err(Error::Resolution {
            samples: 1 << MAX_DEPTH,
            max_step: step.abs(),
        });
    }
    let mid = 0.5 * (a + b);
    let fm = target.eval(mid);
    check_sample(fm, mid)?;
    Ok(segment_phase(target, a, mid, fa, fm, depth + 1)?
        + segment_phase(target, mid, b, fm, fb, depth + 1)?)
}

fn nudge_off_poles(target: &Target, region: &SearchRegion) -> Result<SearchRegion> {
    let mut r = *region;
    for _ in 0..NUDGE_LIMIT {
        let mut moved = false;
        // Lattice poles sit on the imaginary axis. Vertical edges hit one
        // only when they run along that axis.
        let spans_axis = r.re_min - POLE_GATE <= 0.0 && 0.0 <= r.re_max + POLE_GATE;
        if r.re_min.abs() < POLE_GATE && axis_has_pole_between(target, r.im_min, r.im_max) {
            r.re_min -= r.cell_re();
            moved = true;
        }
        if r.re_max.abs() < POLE_GATE && axis_has_pole_between(target, r.im_min, r.im_max) {
            r.re_max += r.cell_re();
            moved = true;
        }
        if spans_axis && target.nearest_pole(Complex64::new(0.0, r.im_min)).0 < POLE_GATE {
            r.im_min -= r.cell_im();
            moved = true;
        }
        if spans_axis && target.nearest_pole(Complex64::new(0.0, r.im_max)).0 < POLE_GATE {
            r.im_max += r.cell_im();
            moved = true;
        }
        if !moved {
            return Ok(r);
        }
    }
    Err(Error::Contour(format!(
        "could not move the region boundary off the pole lattice after {NUDGE_LIMIT} attempts"
    )))
}

fn axis_has_pole_between(target: &Target, lo: f64, hi: f64) -> bool {
    // the origin belongs to every base
    if lo <= 0.0 && 0.0 <= hi {
        return true;
    }
    target.bases().iter().any(|&r| {
        let spacing = 2.0 * PI / (r as f64).ln();
        (lo / spacing).ceil() <= (hi / spacing).floor()
    })
}
