//! The accelerated alternating-series reference value, including points in
//! the critical strip and near the first nontrivial zero.
//!
//! ```bash
//! cargo run --example reference_zeta
//! ```

use admissible_zeta::representations::reference::self_check;
use admissible_zeta::{reference_zeta, ComplexPoint};

fn main() -> Result<(), admissible_zeta::Error> {
    for (re, im) in [
        (2.0, 0.0),
        (3.0, 0.0),
        (0.5, 0.0),
        (0.75, 0.0),
        (0.5, 14.134725141734693),
        (1.5, 30.0),
    ] {
        let z = ComplexPoint::new(re, im)?;
        let v = reference_zeta(z)?;
        println!("zeta({z}) = {:+.15} {:+.15}i", v.re(), v.im());
    }
    println!(
        "largest deviation over the built-in checks: {:.2e}",
        self_check()?
    );
    Ok(())
}
