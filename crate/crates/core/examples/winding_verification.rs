//! Newton refinement from a hand-picked seed, then an argument-principle
//! check that the refined point is a simple zero.
//!
//! ```bash
//! cargo run --example winding_verification
//! ```

use admissible_zeta::rootfind::{count_zeros_in_region, SearchRegion};
use admissible_zeta::{newton_refine, winding_count, ComplexPoint, Family, Target};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let target = Target::new(Family::Direct, 3, 1.0)?;
    println!("f(z) = {}", target.formula());

    let seed = ComplexPoint::new(0.1, 3.4)?;
    let root = newton_refine(&target, seed, 1e-12, 100)?;
    println!(
        "seed {seed} -> {} (|f| = {:.1e})",
        root.location, root.residual
    );

    for radius in [0.05, 0.2, 0.5] {
        match winding_count(&target, root.location, radius, 512) {
            Ok(w) => println!("  winding on radius {radius}: {w}"),
            Err(e) => println!("  radius {radius}: {e}"),
        }
    }

    let region: SearchRegion = "-2,2,-6,6".parse()?;
    let count = count_zeros_in_region(&target, &region)?;
    println!(
        "rectangle [-2,2]x[-6,6]: winding {} + {} poles inside = {} zeros",
        count.winding, count.poles_inside, count.zeros
    );
    Ok(())
}
