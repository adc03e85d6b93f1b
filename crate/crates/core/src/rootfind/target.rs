use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::admissible::admissible_up_to;
use crate::error::{Error, Result};
use crate::point::geometric_term;
use crate::representations::{log_table, nearest_pole, Family};
use crate::rootfind::SearchRegion;

/// The function `c + sum_r s_r / (r^z - 1)` whose zeros are sought, with
/// `s_r = 1` (direct) or `s_r = (-1)^(r-1)` (alternating) over the admissible
/// bases `r <= n`.
///
/// For the alternating family this is the numerator of the alternating
/// representation; the `1 - 2^(1-z)` prefactor adds no zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct Target {
    family: Family,
    n: u64,
    constant: f64,
    logs: Vec<(u64, f64)>,
}

impl Target {
    pub fn new(family: Family, n: u64, constant: f64) -> Result<Self> {
        if !constant.is_finite() {
            return Err(Error::invalid(format!(
                "constant must be finite, got {constant}"
            )));
        }
        let set = admissible_up_to(n)?;
        Ok(Target {
            family,
            n,
            constant,
            logs: log_table(&set),
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn truncation(&self) -> u64 {
        self.n
    }

    pub fn constant(&self) -> f64 {
        self.constant
    }

    pub fn bases(&self) -> Vec<u64> {
        self.logs.iter().map(|&(r, _)| r).collect()
    }

    /// `f(z)`, without pole gating.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.eval_with_derivative(z).0
    }

    /// `(f(z), f'(z))`, without pole gating.
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut f = Complex64::new(self.constant, 0.0);
        let mut df = Complex64::new(0.0, 0.0);
        for &(r, log_r) in &self.logs {
            let s = self.family.sign(r);
            let (inv, sq) = geometric_term(z * log_r);
            f += s * inv;
            df -= s * log_r * sq;
        }
        (f, df)
    }

    /// `(distance, base, k)` of the nearest lattice pole `2 pi i k / log r`.
    pub fn nearest_pole(&self, z: Complex64) -> (f64, u64, i64) {
        nearest_pole(z, &self.logs)
    }

    /// Residue sum `sum_r s_r / log r` at the shared pole `z = 0`.
    pub fn origin_residue(&self) -> f64 {
        self.logs
            .iter()
            .map(|&(r, log_r)| self.family.sign(r) / log_r)
            .sum()
    }

    /// Lattice poles strictly inside the region, each a simple pole. The
    /// origin counts only when its residue sum does not cancel.
    pub fn poles_inside(&self, region: &SearchRegion) -> Vec<Complex64> {
        let mut poles = Vec::new();
        if !(region.re_min < 0.0 && 0.0 < region.re_max) {
            return poles;
        }
        if region.im_min < 0.0 && 0.0 < region.im_max && self.origin_residue().abs() > 1e-12 {
            poles.push(Complex64::new(0.0, 0.0));
        }
        for &(_, log_r) in &self.logs {
            let spacing = 2.0 * PI / log_r;
            let k_lo = (region.im_min / spacing).floor() as i64;
            let k_hi = (region.im_max / spacing).ceil() as i64;
            for k in k_lo..=k_hi {
                let y = k as f64 * spacing;
                if k != 0 && region.im_min < y && y < region.im_max {
                    poles.push(Complex64::new(0.0, y));
                }
            }
        }
        poles.sort_by(|a, b| a.im.total_cmp(&b.im));
        poles
    }

    /// Human-readable formula, e.g. `1/2 - 1/(2^z-1) + 1/(3^z-1)`.
    pub fn formula(&self) -> String {
        let mut s = if self.constant == 0.5 {
            "1/2".to_string()
        } else {
            format!("{}", self.constant)
        };
        for &(r, _) in &self.logs {
            let sign = if self.family.sign(r) > 0.0 { '+' } else { '-' };
            s.push_str(&format!(" {sign} 1/({r}^z-1)"));
        }
        s
    }
}

/// The eight truncations whose zeros are tabulated in the literature on this
/// regrouping: four direct and four alternating.
///
/// The alternating `n = 5` equation carries the constant `1/2`; all others
/// use `1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Preset {
    #[serde(rename = "paper-direct-2")]
    Direct2,
    #[serde(rename = "paper-direct-3")]
    Direct3,
    #[serde(rename = "paper-direct-5")]
    Direct5,
    #[serde(rename = "paper-direct-6")]
    Direct6,
    #[serde(rename = "paper-alt-2")]
    Alt2,
    #[serde(rename = "paper-alt-3")]
    Alt3,
    #[serde(rename = "paper-alt-5")]
    Alt5,
    #[serde(rename = "paper-alt-6")]
    Alt6,
}

impl Preset {
    pub const ALL: [Preset; 8] = [
        Preset::Direct2,
        Preset::Direct3,
        Preset::Direct5,
        Preset::Direct6,
        Preset::Alt2,
        Preset::Alt3,
        Preset::Alt5,
        Preset::Alt6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Direct2 => "paper-direct-2",
            Preset::Direct3 => "paper-direct-3",
            Preset::Direct5 => "paper-direct-5",
            Preset::Direct6 => "paper-direct-6",
            Preset::Alt2 => "paper-alt-2",
            Preset::Alt3 => "paper-alt-3",
            Preset::Alt5 => "paper-alt-5",
            Preset::Alt6 => "paper-alt-6",
        }
    }

    pub fn family(self) -> Family {
        match self {
            Preset::Direct2 | Preset::Direct3 | Preset::Direct5 | Preset::Direct6 => Family::Direct,
            _ => Family::Alternating,
        }
    }

    pub fn truncation(self) -> u64 {
        match self {
            Preset::Direct2 | Preset::Alt2 => 2,
            Preset::Direct3 | Preset::Alt3 => 3,
            Preset::Direct5 | Preset::Alt5 => 5,
            Preset::Direct6 | Preset::Alt6 => 6,
        }
    }

    pub fn constant(self) -> f64 {
        match self {
            Preset::Alt5 => 0.5,
            _ => 1.0,
        }
    }

    pub fn target(self) -> Target {
        Target::new(self.family(), self.truncation(), self.constant())
            .expect("preset truncations are valid")
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Preset::ALL.iter().map(|p| p.name()).collect();
                Error::invalid(format!(
                    "unknown preset '{s}' (expected one of {})",
                    names.join(", ")
                ))
            })
    }
}
