//! Partial sums of the Riemann zeta function regrouped over admissible bases
//! (integers that are not perfect powers), their coth, alternating and
//! Bernoulli-series forms, and the complex zeros of the truncations.
//!
//! ```
//! use admissible_zeta::{zeta_direct_partial, zeta_coth_partial, ComplexPoint};
//!
//! let z = ComplexPoint::real(2.0).unwrap();
//! let direct = zeta_direct_partial(z, 6).unwrap();
//! let coth = zeta_coth_partial(z, 6).unwrap();
//! assert!((direct.value.re() - 107.0 / 70.0).abs() < 1e-15);
//! assert!((coth.value.re() - direct.value.re()).abs() < 1e-12);
//! ```
//!
//! Runnable examples live in `examples/`, one per capability; see the README.

pub mod admissible;
pub mod cli;
pub mod error;
pub mod point;
pub mod representations;
pub mod rootfind;

pub use admissible::{admissible_up_to, decompose_power, AdmissibleSet, PowerDecomposition};
pub use error::{Error, Result};
pub use point::ComplexPoint;
pub use representations::{
    derivative_partial, euler_even_zeta, evaluate, pole_distance, reference_zeta, remainder_bound,
    special_value, zeta_alt_coth_partial, zeta_alt_partial, zeta_bernoulli_partial,
    zeta_coth_partial, zeta_direct_partial, BernoulliTable, EvalResult, Family, RepresentationKind,
    SpecialKind,
};
pub use rootfind::{
    find_zeros, newton_refine, winding_count, Preset, RootRecord, SearchRegion, Target,
};
