//! Admissible bases: integers `r >= 2` that are not perfect powers.
//!
//! Every integer `m >= 2` has a unique decomposition `m = b^k` with `b` not a
//! perfect power, so the geometric series `sum_j r^{-jz}` over admissible `r`
//! visits every `m >= 2` exactly once. The partial sums in
//! [`crate::representations`] are indexed by the admissible set.

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest truncation accepted by [`admissible_up_to`]. The sieve allocates
/// one byte per integer up to the limit.
pub const MAX_TRUNCATION: u64 = 100_000_000;

/// Canonical factorization `value = base^exponent` with maximal exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PowerDecomposition {
    pub value: u64,
    pub base: u64,
    pub exponent: u32,
}

impl PowerDecomposition {
    /// `exponent == 1`, i.e. `value` is not a perfect power.
    pub fn is_admissible(&self) -> bool {
        self.exponent == 1
    }
}

/// Floor of the `k`-th root of `m`, computed exactly.
pub fn integer_root(m: u64, k: u32) -> u64 {
    assert!(k >= 1, "root degree must be positive");
    if k == 1 || m < 2 {
        return m;
    }
    if k >= 64 {
        return 1;
    }
    // Float estimate, then fix up with exact checked powers.
    let mut r = (m as f64).powf(1.0 / f64::from(k)).round() as u64;
    r = r.max(1);
    while pow_le(r, k, m) != Some(true) {
        r -= 1;
    }
    while pow_le(r + 1, k, m) == Some(true) {
        r += 1;
    }
    r
}

/// `Some(b^k <= m)`, or `None` when `b^k` overflows (which also means `> m`).
fn pow_le(b: u64, k: u32, m: u64) -> Option<bool> {
    b.checked_pow(k).map(|p| p <= m)
}

/// Decomposes `m` as `base^exponent` with the largest possible exponent.
///
/// The base of a maximal-exponent decomposition is never itself a perfect
/// power, otherwise the exponent could be multiplied further.
pub fn decompose_power(m: u64) -> Result<PowerDecomposition> {
    if m < 2 {
        return Err(Error::invalid(format!(
            "decompose_power needs m >= 2, got {m}"
        )));
    }
    let max_exponent = 63 - m.leading_zeros();
    for k in (2..=max_exponent).rev() {
        let r = integer_root(m, k);
        if r >= 2 && r.checked_pow(k) == Some(m) {
            return Ok(PowerDecomposition {
                value: m,
                base: r,
                exponent: k,
            });
        }
    }
    Ok(PowerDecomposition {
        value: m,
        base: m,
        exponent: 1,
    })
}

pub fn is_admissible(m: u64) -> bool {
    m >= 2
        && decompose_power(m)
            .map(|d| d.is_admissible())
            .unwrap_or(false)
}

/// Sorted admissible bases `2 <= r <= limit`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissibleSet {
    limit: u64,
    members: Vec<u64>,
}

impl AdmissibleSet {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    /// The number of terms `l` appearing in the coth constants.
    pub fn term_count(&self) -> usize {
        self.members.len()
    }

    pub fn largest(&self) -> u64 {
        *self
            .members
            .last()
            .expect("admissible sets are never empty")
    }

    pub fn odd_count(&self) -> usize {
        self.members.iter().filter(|&&r| r % 2 == 1).count()
    }

    pub fn even_count(&self) -> usize {
        self.term_count() - self.odd_count()
    }

    pub fn contains(&self, r: u64) -> bool {
        self.members.binary_search(&r).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.members.iter().copied()
    }
}

/// All admissible bases up to and including `n`, by sieving out `b^k <= n`.
pub fn admissible_up_to(n: u64) -> Result<AdmissibleSet> {
    if n < 2 {
        return Err(Error::invalid(format!(
            "truncation n must be >= 2, got {n}"
        )));
    }
    if n > MAX_TRUNCATION {
        return Err(Error::invalid(format!(
            "truncation n = {n} exceeds the supported maximum {MAX_TRUNCATION}"
        )));
    }
    let len = n as usize + 1;
    let mut is_power = vec![false; len];
    let mut b = 2u64;
    while b * b <= n {
        if !is_power[b as usize] {
            let mut p = b * b;
            loop {
                is_power[p as usize] = true;
                match p.checked_mul(b) {
                    Some(q) if q <= n => p = q,
                    _ => break,
                }
            }
        }
        b += 1;
    }
    let members = (2..=n).filter(|&r| !is_power[r as usize]).collect();
    Ok(AdmissibleSet { limit: n, members })
}
