//! Exact Bernoulli numbers and the Laurent-series form of the partial sum.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::admissible::admissible_up_to;
use crate::error::{Error, Result};
use crate::point::ComplexPoint;
use crate::representations::{remainder_bound, EvalResult, RepresentationKind};

/// Default upper limit on the index of a [`BernoulliTable`].
pub const DEFAULT_MAX_INDEX: usize = 200;

/// Exact rational Bernoulli numbers `B_0 ..= B_M` with `B_1 = -1/2`, the
/// convention of `x / (e^x - 1) = sum B_k x^k / k!`.
#[derive(Debug, Clone, PartialEq)]
pub struct BernoulliTable {
    values: Vec<BigRational>,
}

impl BernoulliTable {
    /// Builds the table up to index `max_index` (at most [`DEFAULT_MAX_INDEX`]).
    pub fn new(max_index: usize) -> Result<Self> {
        Self::with_limit(max_index, DEFAULT_MAX_INDEX)
    }

    pub fn with_limit(max_index: usize, limit: usize) -> Result<Self> {
        if max_index > limit {
            return Err(Error::invalid(format!(
                "Bernoulli index {max_index} exceeds the configured maximum {limit}"
            )));
        }
        Ok(BernoulliTable {
            values: akiyama_tanigawa(max_index),
        })
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, k: usize) -> Option<&BigRational> {
        self.values.get(k)
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn to_f64(&self, k: usize) -> Option<f64> {
        self.values.get(k).and_then(ToPrimitive::to_f64)
    }

    /// `B_k / k!` rounded once to `f64`; stays representable where `B_k` and
    /// `k!` separately do not.
    pub fn over_factorial(&self, k: usize) -> Option<f64> {
        let b = self.values.get(k)?;
        let fact: BigInt = (1..=k as u64).map(BigInt::from).product();
        (b / BigRational::from_integer(fact)).to_f64()
    }
}

/// Akiyama–Tanigawa transform. It produces `B_1 = +1/2`; the sign is flipped
/// afterwards.
fn akiyama_tanigawa(max_index: usize) -> Vec<BigRational> {
    let mut row: Vec<BigRational> = Vec::with_capacity(max_index + 1);
    let mut out = Vec::with_capacity(max_index + 1);
    for m in 0..=max_index {
        row.push(BigRational::new(BigInt::one(), BigInt::from(m + 1)));
        for j in (1..=m).rev() {
            let diff = &row[j - 1] - &row[j];
            row[j - 1] = diff * BigInt::from(j);
        }
        out.push(row[0].clone());
    }
    if max_index >= 1 {
        out[1] = -out[1].clone();
    }
    out
}

/// `zeta(2m)` from Euler's closed form
/// `(-1)^(m+1) B_2m (2 pi)^(2m) / (2 (2m)!)`.
pub fn euler_even_zeta(m: u32) -> Result<f64> {
    euler_even_zeta_with(&BernoulliTable::new(2 * m as usize)?, m)
}

pub fn euler_even_zeta_with(table: &BernoulliTable, m: u32) -> Result<f64> {
    if m == 0 {
        return Err(Error::invalid("euler_even_zeta needs m >= 1"));
    }
    let k = 2 * m as usize;
    let ratio = table.over_factorial(k).ok_or_else(|| {
        Error::invalid(format!(
            "Bernoulli table holds indices up to {}, need {k}",
            table.max_index()
        ))
    })?;
    // |B_2m| / (2m)! carries the sign (-1)^(m+1); the product is positive.
    Ok(ratio.abs() * (2.0 * PI).powi(k as i32) / 2.0)
}

/// The partial sum written as its Bernoulli (Laurent) series truncated at
/// order `order`:
///
/// `1 + sum_{m=-1}^{order} z^m B_{m+1} P_m / (m+1)!`, with
/// `P_m = sum_r (log r)^m` over the admissible bases `r <= n`.
///
/// The expansion of `1 / (r^z - 1)` converges only for `|z| log r < 2 pi`.
pub fn zeta_bernoulli_partial(z: ComplexPoint, n: u64, order: usize) -> Result<EvalResult> {
    let table = BernoulliTable::new(order + 1)?;
    zeta_bernoulli_partial_with(&table, z, n, order)
}

pub fn zeta_bernoulli_partial_with(
    table: &BernoulliTable,
    z: ComplexPoint,
    n: u64,
    order: usize,
) -> Result<EvalResult> {
    let set = admissible_up_to(n)?;
    if z.norm() == 0.0 {
        return Err(Error::Pole {
            base: set.members()[0],
            lattice_index: 0,
            distance: 0.0,
        });
    }
    let largest = set.largest();
    let radius = 2.0 * PI / (largest as f64).ln();
    if z.norm() >= radius {
        return Err(Error::OutsideLaurentDisk {
            abs_z: z.norm(),
            largest_base: largest,
            radius,
        });
    }
    if table.max_index() < order + 1 {
        return Err(Error::invalid(format!(
            "Bernoulli table holds indices up to {}, order {order} needs {}",
            table.max_index(),
            order + 1
        )));
    }
    let logs: Vec<f64> = set.iter().map(|r| (r as f64).ln()).collect();
    let zc = z.value();

    // m = -1 term: B_0 P_{-1} / z
    let p_minus_one: f64 = logs.iter().map(|l| l.recip()).sum();
    let mut value = num_complex::Complex64::new(1.0, 0.0) + p_minus_one / zc;

    let mut z_pow = num_complex::Complex64::new(1.0, 0.0);
    let mut log_pows = vec![1.0; logs.len()];
    for m in 0..=order {
        if m > 0 {
            z_pow *= zc;
            for (p, l) in log_pows.iter_mut().zip(&logs) {
                *p *= l;
            }
        }
        let coeff = table.over_factorial(m + 1).expect("index checked above");
        if coeff == 0.0 {
            continue;
        }
        let power_sum: f64 = log_pows.iter().sum();
        value += z_pow * (coeff * power_sum);
    }

    let tail_bound = (z.re() > 1.0)
        .then(|| remainder_bound(n, z.re()))
        .transpose()?;
    Ok(EvalResult {
        kind: RepresentationKind::BernoulliSeries,
        value: ComplexPoint::try_from(value)?,
        truncation: n,
        term_count: set.term_count(),
        tail_bound,
    })
}

/// Primes `p` with `(p - 1) | k`; their product is the denominator of `B_k`
/// for even `k >= 2`.
pub fn von_staudt_clausen_denominator(k: u64) -> BigInt {
    (2..=k + 1)
        .filter(|&p| k.is_multiple_of(p - 1) && is_prime(p))
        .map(BigInt::from)
        .product()
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::binomial;
    use num_traits::{Signed, Zero};

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// `B_m = -1/(m+1) sum_{j<m} C(m+1, j) B_j`, independent of the table.
    fn recurrence_oracle(max: usize) -> Vec<BigRational> {
        let mut b: Vec<BigRational> = vec![BigRational::one()];
        for m in 1..=max {
            let mut acc = BigRational::zero();
            for (j, bj) in b.iter().enumerate() {
                acc +=
                    BigRational::from_integer(binomial(BigInt::from(m + 1), BigInt::from(j))) * bj;
            }
            b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
        }
        b
    }

    #[test]
    fn small_values() {
        let t = BernoulliTable::new(2).unwrap();
        assert_eq!(t.values(), &[rat(1, 1), rat(-1, 2), rat(1, 6)]);
        let t = BernoulliTable::new(12).unwrap();
        assert!(t.get(3).unwrap().is_zero());
        assert_eq!(t.get(12).unwrap(), &rat(-691, 2730));
    }

    #[test]
    fn matches_recurrence_oracle() {
        let oracle = recurrence_oracle(60);
        let t = BernoulliTable::new(60).unwrap();
        assert_eq!(t.values(), oracle.as_slice());
    }

    #[test]
    fn odd_indices_vanish_and_denominators_follow_von_staudt_clausen() {
        let t = BernoulliTable::new(DEFAULT_MAX_INDEX).unwrap();
        for k in 3..=DEFAULT_MAX_INDEX {
            let b = t.get(k).unwrap();
            if k % 2 == 1 {
                assert!(b.is_zero(), "B_{k}");
            } else {
                assert_eq!(
                    b.denom(),
                    &von_staudt_clausen_denominator(k as u64),
                    "B_{k}"
                );
                // signs alternate: B_2m has sign (-1)^(m+1)
                assert_eq!(b.is_negative(), k % 4 == 0, "sign of B_{k}");
            }
        }
    }

    #[test]
    fn limit_is_enforced() {
        assert!(BernoulliTable::new(DEFAULT_MAX_INDEX + 1).is_err());
        assert!(BernoulliTable::with_limit(10, 5).is_err());
        assert!(BernoulliTable::with_limit(10, 10).is_ok());
    }

    #[test]
    fn over_factorial_at_the_top_of_the_table() {
        let t = BernoulliTable::new(DEFAULT_MAX_INDEX).unwrap();
        let x = t.over_factorial(200).unwrap();
        // |B_2m|/(2m)! ~ 2 / (2 pi)^(2m) for large m
        let approx = 2.0 / (2.0 * PI).powi(200);
        assert!(((x.abs() - approx) / approx).abs() < 1e-12);
    }

    #[test]
    fn euler_closed_forms() {
        assert!((euler_even_zeta(1).unwrap() - PI * PI / 6.0).abs() < 1e-15);
        assert!((euler_even_zeta(2).unwrap() - PI.powi(4) / 90.0).abs() < 1e-14);
        assert!((euler_even_zeta(3).unwrap() - PI.powi(6) / 945.0).abs() < 1e-14);
        assert!(euler_even_zeta(0).is_err());
        assert!(euler_even_zeta(101).is_err());
    }

    #[test]
    fn bernoulli_series_first_two_terms() {
        // order 0: 1 + P_{-1}/z + B_1 l
        let z = ComplexPoint::real(0.5).unwrap();
        let r = zeta_bernoulli_partial(z, 6, 0).unwrap();
        let p: f64 = [2.0f64, 3.0, 5.0, 6.0].iter().map(|x| x.ln().recip()).sum();
        let expected = 1.0 + 2.0 * p - 2.0;
        assert!((r.value.re() - expected).abs() < 1e-14);
        assert_eq!(r.value.im(), 0.0);
        assert_eq!(r.term_count, 4);
        assert_eq!(r.tail_bound, None);
    }

    #[test]
    fn bernoulli_series_domain() {
        let z = ComplexPoint::real(2.0).unwrap();
        match zeta_bernoulli_partial(z, 600, 10) {
            Err(Error::OutsideLaurentDisk {
                largest_base,
                radius,
                ..
            }) => {
                assert_eq!(largest_base, 600);
                assert!((radius - 2.0 * PI / 600f64.ln()).abs() < 1e-15);
            }
            other => panic!("expected domain error, got {other:?}"),
        }
        let origin = ComplexPoint::real(0.0).unwrap();
        assert!(matches!(
            zeta_bernoulli_partial(origin, 6, 10),
            Err(Error::Pole { .. })
        ));
        assert!(zeta_bernoulli_partial(ComplexPoint::real(0.5).unwrap(), 6, 300).is_err());
    }
}
