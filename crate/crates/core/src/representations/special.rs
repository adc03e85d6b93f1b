//! Partial sums at integer arguments `m`, `2m` and `2m + 1`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::point::ComplexPoint;
use crate::representations::bernoulli::DEFAULT_MAX_INDEX;
use crate::representations::{euler_even_zeta, zeta_direct_partial, EvalResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpecialKind {
    /// argument `m`
    Any,
    /// argument `2m`
    Even,
    /// argument `2m + 1`
    Odd,
}

impl SpecialKind {
    pub fn argument(self, m: u32) -> Option<u32> {
        match self {
            SpecialKind::Any => Some(m),
            SpecialKind::Even => m.checked_mul(2),
            SpecialKind::Odd => m.checked_mul(2).and_then(|x| x.checked_add(1)),
        }
    }
}

impl FromStr for SpecialKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "any" | "any-m" => Ok(SpecialKind::Any),
            "even" | "even-2m" => Ok(SpecialKind::Even),
            "odd" | "odd-2m+1" => Ok(SpecialKind::Odd),
            other => Err(Error::invalid(format!(
                "unknown special kind '{other}' (expected any, even or odd)"
            ))),
        }
    }
}

impl fmt::Display for SpecialKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpecialKind::Any => "any",
            SpecialKind::Even => "even",
            SpecialKind::Odd => "odd",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpecialValue {
    pub kind: SpecialKind,
    pub m: u32,
    pub argument: u32,
    pub result: EvalResult,
    /// Euler's closed form, for even arguments.
    pub euler: Option<f64>,
    /// `|partial sum - euler|`, for even arguments.
    pub deviation: Option<f64>,
}

/// Direct partial sum at the integer argument `m`, `2m` or `2m + 1`.
pub fn special_value(kind: SpecialKind, m: u32, n: u64) -> Result<SpecialValue> {
    let argument = kind
        .argument(m)
        .filter(|&a| a >= 2)
        .ok_or_else(|| Error::invalid(format!("{kind} argument from m = {m} must be >= 2")))?;
    let result = zeta_direct_partial(ComplexPoint::real(f64::from(argument))?, n)?;
    // beyond the Bernoulli table zeta(2m) is 1 to double precision anyway
    let euler = if argument % 2 == 0 && argument as usize <= DEFAULT_MAX_INDEX {
        Some(euler_even_zeta(argument / 2)?)
    } else {
        None
    };
    let deviation = euler.map(|e| (result.value.re() - e).abs());
    Ok(SpecialValue {
        kind,
        m,
        argument,
        result,
        euler,
        deviation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn even_m1() {
        let v = special_value(SpecialKind::Even, 1, 10_000).unwrap();
        assert_eq!(v.argument, 2);
        assert!((v.euler.unwrap() - PI * PI / 6.0).abs() < 1e-15);
        assert!(v.deviation.unwrap() <= 2e-4);
    }

    #[test]
    fn odd_m1() {
        let v = special_value(SpecialKind::Odd, 1, 10_000).unwrap();
        assert_eq!(v.argument, 3);
        assert!((v.result.value.re() - 1.202_057).abs() < 2e-4);
        assert!(v.euler.is_none() && v.deviation.is_none());
    }

    #[test]
    fn any_m2() {
        let v = special_value(SpecialKind::Any, 2, 6).unwrap();
        assert!((v.result.value.re() - 107.0 / 70.0).abs() < 1e-15);
        // argument 2 is even, so the Euler value is reported too
        assert!(v.euler.is_some());
    }

    #[test]
    fn small_arguments_rejected() {
        assert!(matches!(
            special_value(SpecialKind::Any, 1, 10),
            Err(Error::InvalidInput(_))
        ));
        assert!(special_value(SpecialKind::Even, 0, 10).is_err());
        assert!(special_value(SpecialKind::Odd, 0, 10).is_err());
        assert!(special_value(SpecialKind::Odd, 1, 1).is_err());
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("even".parse::<SpecialKind>().unwrap(), SpecialKind::Even);
        assert_eq!("odd-2m+1".parse::<SpecialKind>().unwrap(), SpecialKind::Odd);
        assert!("prime".parse::<SpecialKind>().is_err());
    }
}
