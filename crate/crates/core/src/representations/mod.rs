//! Partial sums of the zeta function over admissible bases, in each of the
//! forms that regroup the Dirichlet series.
//!
//! | kind               | value                                                     |
//! |--------------------|-----------------------------------------------------------|
//! | `Direct`           | `1 + sum_r 1/(r^z - 1)`                                   |
//! | `Coth`             | `(2 - l)/2 + 1/2 sum_r coth(z log r / 2)`                 |
//! | `Alternating`      | `(1 + sum_r (-1)^(r-1)/(r^z - 1)) / (1 - 2^(1-z))`        |
//! | `AlternatingCoth`  | `(c + 1/2 sum_r (-1)^(r-1) coth(z log r / 2)) / (1 - 2^(1-z))` |
//! | `BernoulliSeries`  | Laurent expansion of the direct form, see [`bernoulli`]  |
//!
//! `r` runs over the admissible bases up to the truncation `n` and `l` is
//! their count.

pub mod bernoulli;
pub mod reference;
pub mod special;

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::admissible::{admissible_up_to, AdmissibleSet};
use crate::error::{Error, Result};
use crate::point::{coth, exp_m1, geometric_term, ComplexPoint};

pub use bernoulli::{
    euler_even_zeta, zeta_bernoulli_partial, zeta_bernoulli_partial_with, BernoulliTable,
};
pub use reference::reference_zeta;
pub use special::{special_value, SpecialKind, SpecialValue};

/// Evaluations closer than this to a term pole are refused.
pub const POLE_GATE: f64 = 1e-6;

/// Smallest `|1 - 2^(1-z)|` the alternating forms will divide by.
pub const PREFACTOR_GATE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RepresentationKind {
    Direct,
    Coth,
    Alternating,
    AlternatingCoth,
    BernoulliSeries,
}

impl RepresentationKind {
    pub const ALL: [RepresentationKind; 5] = [
        RepresentationKind::Direct,
        RepresentationKind::Coth,
        RepresentationKind::Alternating,
        RepresentationKind::AlternatingCoth,
        RepresentationKind::BernoulliSeries,
    ];

    pub fn family(self) -> Family {
        match self {
            RepresentationKind::Direct
            | RepresentationKind::Coth
            | RepresentationKind::BernoulliSeries => Family::Direct,
            RepresentationKind::Alternating | RepresentationKind::AlternatingCoth => {
                Family::Alternating
            }
        }
    }
}

/// Sign pattern of the terms: all `+1`, or `(-1)^(r-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Direct,
    Alternating,
}

impl Family {
    pub fn sign(self, r: u64) -> f64 {
        match self {
            Family::Direct => 1.0,
            Family::Alternating if r.is_multiple_of(2) => -1.0,
            Family::Alternating => 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalResult {
    pub kind: RepresentationKind,
    pub value: ComplexPoint,
    pub truncation: u64,
    pub term_count: usize,
    /// Bound on the distance to the full zeta value; only defined for
    /// `Re(z) > 1`.
    pub tail_bound: Option<f64>,
}

/// `n^(1 - sigma) / (sigma - 1)`, the integral bound on `sum_{m > n} m^-sigma`.
///
/// Every term the partial sum over admissible bases `<= n` leaves out has
/// `m > n`, so this bounds the remainder for `Re(z) = sigma`.
pub fn remainder_bound(n: u64, sigma: f64) -> Result<f64> {
    if !(sigma > 1.0) || !sigma.is_finite() {
        return Err(Error::domain(format!(
            "remainder bound needs sigma > 1, got {sigma}"
        )));
    }
    if n < 1 {
        return Err(Error::invalid("remainder bound needs n >= 1"));
    }
    let n = n as f64;
    Ok(n.powf(1.0 - sigma) / (sigma - 1.0))
}

/// Nearest lattice pole `2 pi i k / log r` over the admissible bases, as
/// `(distance, base, k)`.
pub(crate) fn nearest_pole(z: Complex64, logs: &[(u64, f64)]) -> (f64, u64, i64) {
    let mut best = (f64::INFINITY, 0u64, 0i64);
    for &(r, log_r) in logs {
        let spacing = 2.0 * PI / log_r;
        let k = (z.im / spacing).round();
        let d = z.re.hypot(z.im - k * spacing);
        if d < best.0 {
            best = (d, r, k as i64);
        }
    }
    best
}

/// Distance from `z` to the nearest singularity of any term `1/(r^z - 1)`,
/// `r` admissible and `<= n`. The origin is a pole of every term.
pub fn pole_distance(z: ComplexPoint, n: u64) -> Result<f64> {
    let set = admissible_up_to(n)?;
    Ok(nearest_pole(z.value(), &log_table(&set)).0)
}

pub(crate) fn log_table(set: &AdmissibleSet) -> Vec<(u64, f64)> {
    set.iter().map(|r| (r, (r as f64).ln())).collect()
}

fn gate_poles(z: Complex64, logs: &[(u64, f64)]) -> Result<()> {
    let (distance, base, lattice_index) = nearest_pole(z, logs);
    if distance < POLE_GATE {
        return Err(Error::Pole {
            base,
            lattice_index,
            distance,
        });
    }
    Ok(())
}

/// `1 - 2^(1-z)`, refusing values too close to zero.
fn eta_prefactor(z: Complex64) -> Result<Complex64> {
    let p = -exp_m1((1.0 - z) * LN_2);
    if p.norm() < PREFACTOR_GATE {
        return Err(Error::SingularPrefactor {
            re: z.re,
            im: z.im,
            magnitude: p.norm(),
        });
    }
    Ok(p)
}

/// Constant of the alternating coth form: `1 - (odd - even)/2`, where `odd`
/// and `even` count admissible bases of each parity.
///
/// It equals `1` when both parities are equally represented and `1/2` when
/// odd bases lead by one, which covers every truncation up to 16 except
/// `n = 2`.
pub fn alternating_coth_constant(set: &AdmissibleSet) -> f64 {
    1.0 - (set.odd_count() as f64 - set.even_count() as f64) / 2.0
}

/// The two-branch constant keyed on the parity of the term count: `1` for
/// even `l`, `1/2` for odd `l`. It agrees with [`alternating_coth_constant`]
/// only when the parities of the bases are balanced to within one.
pub fn parity_branch_constant(term_count: usize) -> f64 {
    if term_count.is_multiple_of(2) {
        1.0
    } else {
        0.5
    }
}

struct Prepared {
    set: AdmissibleSet,
    logs: Vec<(u64, f64)>,
}

impl Prepared {
    fn new(z: ComplexPoint, n: u64) -> Result<Self> {
        let set = admissible_up_to(n)?;
        let logs = log_table(&set);
        gate_poles(z.value(), &logs)?;
        Ok(Prepared { set, logs })
    }

    fn result(
        &self,
        kind: RepresentationKind,
        value: Complex64,
        tail_bound: Option<f64>,
    ) -> Result<EvalResult> {
        Ok(EvalResult {
            kind,
            value: ComplexPoint::try_from(value)?,
            truncation: self.set.limit(),
            term_count: self.set.term_count(),
            tail_bound,
        })
    }

    fn geometric_sum(&self, z: Complex64, family: Family) -> Complex64 {
        self.logs
            .iter()
            .map(|&(r, log_r)| family.sign(r) * geometric_term(z * log_r).0)
            .sum()
    }

    fn coth_sum(&self, z: Complex64, family: Family) -> Complex64 {
        self.logs
            .iter()
            .map(|&(r, log_r)| family.sign(r) * coth(z * (0.5 * log_r)))
            .sum()
    }
}

fn direct_tail(z: ComplexPoint, n: u64) -> Result<Option<f64>> {
    (z.re() > 1.0)
        .then(|| remainder_bound(n, z.re()))
        .transpose()
}

fn alternating_checks(z: ComplexPoint) -> Result<Complex64> {
    if !(z.re() > 0.0) {
        return Err(Error::domain(format!(
            "alternating forms need Re(z) > 0, got Re(z) = {}",
            z.re()
        )));
    }
    eta_prefactor(z.value())
}

/// `1 + sum_r 1/(r^z - 1)`.
pub fn zeta_direct_partial(z: ComplexPoint, n: u64) -> Result<EvalResult> {
    let prep = Prepared::new(z, n)?;
    let value = 1.0 + prep.geometric_sum(z.value(), Family::Direct);
    prep.result(RepresentationKind::Direct, value, direct_tail(z, n)?)
}

/// `(2 - l)/2 + 1/2 sum_r coth(z log r / 2)`.
pub fn zeta_coth_partial(z: ComplexPoint, n: u64) -> Result<EvalResult> {
    let prep = Prepared::new(z, n)?;
    let l = prep.set.term_count() as f64;
    let value = (2.0 - l) / 2.0 + 0.5 * prep.coth_sum(z.value(), Family::Direct);
    prep.result(RepresentationKind::Coth, value, direct_tail(z, n)?)
}

/// `(1 + sum_r (-1)^(r-1)/(r^z - 1)) / (1 - 2^(1-z))`, for `Re(z) > 0`.
///
/// The tail bound, when `Re(z) > 1`, is the direct bound divided by
/// `|1 - 2^(1-z)|`.
pub fn zeta_alt_partial(z: ComplexPoint, n: u64) -> Result<EvalResult> {
    let prefactor = alternating_checks(z)?;
    let prep = Prepared::new(z, n)?;
    let numerator = 1.0 + prep.geometric_sum(z.value(), Family::Alternating);
    let tail = direct_tail(z, n)?.map(|b| b / prefactor.norm());
    prep.result(RepresentationKind::Alternating, numerator / prefactor, tail)
}

/// Alternating coth form with the constant from [`alternating_coth_constant`].
pub fn zeta_alt_coth_partial(z: ComplexPoint, n: u64) -> Result<EvalResult> {
    let prefactor = alternating_checks(z)?;
    let prep = Prepared::new(z, n)?;
    let constant = alternating_coth_constant(&prep.set);
    let numerator = constant + 0.5 * prep.coth_sum(z.value(), Family::Alternating);
    let tail = direct_tail(z, n)?.map(|b| b / prefactor.norm());
    prep.result(
        RepresentationKind::AlternatingCoth,
        numerator / prefactor,
        tail,
    )
}

/// Dispatches on `kind`. `order` is the Laurent truncation and is only used by
/// [`RepresentationKind::BernoulliSeries`] (default 40).
pub fn evaluate(
    kind: RepresentationKind,
    z: ComplexPoint,
    n: u64,
    order: Option<usize>,
) -> Result<EvalResult> {
    match kind {
        RepresentationKind::Direct => zeta_direct_partial(z, n),
        RepresentationKind::Coth => zeta_coth_partial(z, n),
        RepresentationKind::Alternating => zeta_alt_partial(z, n),
        RepresentationKind::AlternatingCoth => zeta_alt_coth_partial(z, n),
        RepresentationKind::BernoulliSeries => zeta_bernoulli_partial(z, n, order.unwrap_or(40)),
    }
}

/// `d/dz sum_r s_r / (r^z - 1) = -sum_r s_r log(r) r^z / (r^z - 1)^2`, with
/// signs from `family`. For [`Family::Alternating`] this is the derivative of
/// the numerator, without the `1 - 2^(1-z)` prefactor.
pub fn derivative_partial(family: Family, z: ComplexPoint, n: u64) -> Result<ComplexPoint> {
    let prep = Prepared::new(z, n)?;
    let zc = z.value();
    let d: Complex64 = prep
        .logs
        .iter()
        .map(|&(r, log_r)| -family.sign(r) * log_r * geometric_term(zc * log_r).1)
        .sum();
    ComplexPoint::try_from(d)
}
