//! Reference evaluator for `zeta(z)` on `Re(z) > 0`, independent of the
//! admissible-base machinery.
//!
//! The alternating series `eta(z) = sum_{m>=1} (-1)^(m-1) m^-z` is summed with
//! Borwein's Chebyshev-weighted acceleration and divided by `1 - 2^(1-z)`.
//! With `d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)`,
//!
//! `eta(z) ~ sum_{k<n} (-1)^k (1 - d_k/d_n) (k+1)^-z`.
//!
//! For `Re(z) >= 1/2` the error in `zeta` is at most
//! `3 (1 + 2|t|) e^(pi|t|/2) / ((3 + sqrt 8)^n |1 - 2^(1-z)|)` with `t = Im z`.
//! [`reference_zeta`] picks the smallest `n` pushing the numerator below
//! `1e-17` and adds a margin for `0 < Re(z) < 1/2`. The weights lie in
//! `[0, 1]`, so the sum itself loses no precision to cancellation.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::point::{exp_m1, ComplexPoint};

/// Upper limit on the acceleration order. `(3 + sqrt 8)^n` must stay finite.
pub const MAX_ORDER: usize = 380;

const MARGIN_TERMS: usize = 8;

/// Acceleration order needed at imaginary part `t`.
pub fn order_for(im: f64) -> usize {
    let t = im.abs();
    let log_numerator = (3.0 * (1.0 + 2.0 * t)).ln() + PI * t / 2.0;
    let target = 17.0 * std::f64::consts::LN_10;
    let rate = (3.0 + 8f64.sqrt()).ln();
    ((log_numerator + target) / rate).ceil() as usize + MARGIN_TERMS
}

/// `zeta(z)` for `Re(z) > 0`, `z != 1`.
pub fn reference_zeta(z: ComplexPoint) -> Result<ComplexPoint> {
    let order = order_for(z.im());
    if order > MAX_ORDER {
        return Err(Error::domain(format!(
            "reference zeta supports |Im z| up to about 400, got {}",
            z.im()
        )));
    }
    reference_zeta_with_order(z, order)
}

/// [`reference_zeta`] at a fixed acceleration order.
pub fn reference_zeta_with_order(z: ComplexPoint, order: usize) -> Result<ComplexPoint> {
    if !(z.re() > 0.0) {
        return Err(Error::domain(format!(
            "reference zeta needs Re(z) > 0, got Re(z) = {}",
            z.re()
        )));
    }
    if z.re() == 1.0 && z.im() == 0.0 {
        return Err(Error::Pole {
            base: 1,
            lattice_index: 0,
            distance: 0.0,
        });
    }
    if order == 0 || order > MAX_ORDER {
        return Err(Error::invalid(format!(
            "acceleration order must be in 1..={MAX_ORDER}, got {order}"
        )));
    }
    let zc = z.value();
    let prefactor = -exp_m1((1.0 - zc) * LN_2);
    if prefactor.norm() == 0.0 {
        return Err(Error::SingularPrefactor {
            re: z.re(),
            im: z.im(),
            magnitude: 0.0,
        });
    }
    let eta = borwein_eta(zc, order);
    ComplexPoint::try_from(eta / prefactor)
}

fn borwein_eta(z: Complex64, n: usize) -> Complex64 {
    let nf = n as f64;
    // partial sums d_k of a_i = n (n+i-1)! 4^i / ((n-i)! (2i)!), a_0 = 1
    let mut d = Vec::with_capacity(n + 1);
    let mut a = 1.0f64;
    let mut acc = 1.0f64;
    d.push(acc);
    for i in 0..n {
        let fi = i as f64;
        a *= 4.0 * (nf + fi) * (nf - fi) / ((2.0 * fi + 1.0) * (2.0 * fi + 2.0));
        acc += a;
        d.push(acc);
    }
    let dn = d[n];
    let mut sum = Complex64::new(0.0, 0.0);
    for k in (0..n).rev() {
        let weight = (dn - d[k]) / dn;
        let term = (-z * ((k + 1) as f64).ln()).exp() * weight;
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum
}

/// Checks the evaluator against classical constants. Returns the largest
/// absolute deviation seen.
pub fn self_check() -> Result<f64> {
    let cases = [
        (2.0, PI * PI / 6.0),
        (4.0, PI.powi(4) / 90.0),
        (3.0, 1.202_056_903_159_594_3),
        (0.5, -1.460_354_508_809_586_8),
    ];
    let mut worst = 0.0f64;
    for (x, expected) in cases {
        let got = reference_zeta(ComplexPoint::real(x)?)?;
        worst = worst.max((got.re() - expected).abs()).max(got.im().abs());
    }
    // first nontrivial zero
    let rho = ComplexPoint::new(0.5, 14.134_725_141_734_693)?;
    worst = worst.max(reference_zeta(rho)?.norm());
    if worst > 1e-10 {
        return Err(Error::domain(format!(
            "reference zeta failed its self-check: deviation {worst:e}"
        )));
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(re: f64, im: f64) -> ComplexPoint {
        ComplexPoint::new(re, im).unwrap()
    }

    #[test]
    fn classical_values() {
        let v = reference_zeta(pt(2.0, 0.0)).unwrap();
        assert!((v.re() - 1.644_934_066_8).abs() < 1e-10);
        let v = reference_zeta(pt(3.0, 0.0)).unwrap();
        assert!((v.re() - 1.202_056_903_2).abs() < 1e-10);
        let v = reference_zeta(pt(0.5, 0.0)).unwrap();
        assert!((v.re() + 1.460_354_508_8).abs() < 1e-10);
    }

    #[test]
    fn zeta3_cross_checked_by_direct_summation() {
        // sum_{m <= N} m^-3 plus the Euler-Maclaurin tail 1/(2N^2) - 1/(2N^3) + ...
        let n = 100_000u64;
        let head: f64 = (1..=n).rev().map(|m| (m as f64).powi(-3)).sum();
        let nf = n as f64;
        let tail = 1.0 / (2.0 * nf * nf) - 1.0 / (2.0 * nf.powi(3)) + 1.0 / (4.0 * nf.powi(4));
        let v = reference_zeta(pt(3.0, 0.0)).unwrap();
        assert!((v.re() - (head + tail)).abs() < 1e-12);
    }

    #[test]
    fn two_orders_agree() {
        for &(re, im) in &[
            (0.5, 0.0),
            (0.25, 3.0),
            (0.75, 0.0),
            (2.0, 10.0),
            (0.6, 25.0),
        ] {
            let z = pt(re, im);
            let lo = reference_zeta_with_order(z, order_for(im)).unwrap();
            let hi = reference_zeta_with_order(z, order_for(im) + 30).unwrap();
            assert!((lo.value() - hi.value()).norm() < 1e-12, "at {z}");
        }
    }

    #[test]
    fn self_check_passes() {
        assert!(self_check().unwrap() < 1e-10);
    }

    #[test]
    fn domain_and_pole() {
        assert!(matches!(
            reference_zeta(pt(1.0, 0.0)),
            Err(Error::Pole { .. })
        ));
        assert!(matches!(
            reference_zeta(pt(0.0, 1.0)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            reference_zeta(pt(-1.0, 0.0)),
            Err(Error::Domain(_))
        ));
        assert!(reference_zeta(pt(0.5, 1000.0)).is_err());
        assert!(reference_zeta_with_order(pt(2.0, 0.0), 0).is_err());
    }

    #[test]
    fn conjugate_symmetric() {
        let z = pt(0.8, 7.5);
        let a = reference_zeta(z).unwrap();
        let b = reference_zeta(z.conj()).unwrap();
        assert!((a.value().conj() - b.value()).norm() < 1e-15);
    }
}
