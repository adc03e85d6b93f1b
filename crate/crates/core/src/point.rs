use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite complex number. NaN and infinite components are rejected on
/// construction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPoint", into = "RawPoint")]
pub struct ComplexPoint(Complex64);

#[derive(Serialize, Deserialize)]
struct RawPoint {
    re: f64,
    im: f64,
}

impl TryFrom<RawPoint> for ComplexPoint {
    type Error = Error;

    fn try_from(raw: RawPoint) -> Result<Self> {
        ComplexPoint::new(raw.re, raw.im)
    }
}

impl From<ComplexPoint> for RawPoint {
    fn from(p: ComplexPoint) -> Self {
        RawPoint {
            re: p.re(),
            im: p.im(),
        }
    }
}

impl ComplexPoint {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if re.is_finite() && im.is_finite() {
            Ok(ComplexPoint(Complex64::new(re, im)))
        } else {
            Err(Error::invalid(format!(
                "complex point must be finite, got ({re}, {im})"
            )))
        }
    }

    pub fn real(x: f64) -> Result<Self> {
        Self::new(x, 0.0)
    }

    pub fn re(&self) -> f64 {
        self.0.re
    }

    pub fn im(&self) -> f64 {
        self.0.im
    }

    pub fn value(&self) -> Complex64 {
        self.0
    }

    pub fn norm(&self) -> f64 {
        self.0.norm()
    }

    pub fn conj(&self) -> Self {
        ComplexPoint(self.0.conj())
    }
}

impl TryFrom<Complex64> for ComplexPoint {
    type Error = Error;

    fn try_from(c: Complex64) -> Result<Self> {
        ComplexPoint::new(c.re, c.im)
    }
}

impl From<ComplexPoint> for Complex64 {
    fn from(p: ComplexPoint) -> Self {
        p.0
    }
}

impl fmt::Display for ComplexPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.re(), self.im())
    }
}

/// Parses the `re,im` syntax used on the command line. A bare real number is
/// accepted as `re,0`.
impl FromStr for ComplexPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse = |t: &str| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| Error::invalid(format!("cannot parse '{t}' as a real number")))
        };
        match s.split_once(',') {
            Some((re, im)) => ComplexPoint::new(parse(re)?, parse(im)?),
            None => ComplexPoint::new(parse(s)?, 0.0),
        }
    }
}

/// `exp(w) - 1` without cancellation for small `|w|`.
pub(crate) fn exp_m1(w: Complex64) -> Complex64 {
    let (s, c) = w.im.sin_cos();
    let half = (0.5 * w.im).sin();
    Complex64::new(w.re.exp_m1() * c - 2.0 * half * half, w.re.exp() * s)
}

/// `1 / (exp(w) - 1)` and `exp(w) / (exp(w) - 1)^2`, evaluated on the side of
/// the imaginary axis where nothing overflows.
pub(crate) fn geometric_term(w: Complex64) -> (Complex64, Complex64) {
    if w.re > 0.0 {
        // q = exp(-w), 1/(e^w - 1) = q/(1 - q), e^w/(e^w - 1)^2 = q/(1 - q)^2
        let q = (-w).exp();
        let one_minus_q = -exp_m1(-w);
        let inv = one_minus_q.inv();
        (q * inv, q * inv * inv)
    } else {
        let d = exp_m1(w);
        let inv = d.inv();
        (inv, (d + 1.0) * inv * inv)
    }
}

/// Hyperbolic cotangent through `tanh`, independent of [`geometric_term`].
pub(crate) fn coth(u: Complex64) -> Complex64 {
    if u.re > 300.0 {
        return Complex64::new(1.0, 0.0);
    }
    if u.re < -300.0 {
        return Complex64::new(-1.0, 0.0);
    }
    u.tanh().inv()
}
