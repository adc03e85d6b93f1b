//! Laurent expansion in Bernoulli numbers: exact table entries and the
//! series error as the order grows.
//!
//! ```bash
//! cargo run --example bernoulli_series
//! ```

use admissible_zeta::{zeta_bernoulli_partial, zeta_direct_partial, BernoulliTable, ComplexPoint};

fn main() -> Result<(), admissible_zeta::Error> {
    let table = BernoulliTable::new(20)?;
    for k in [0, 1, 2, 4, 12, 20] {
        println!("B_{k} = {}", table.get(k).expect("within table"));
    }

    let z = ComplexPoint::new(0.5, 0.25)?;
    let n = 6;
    let direct = zeta_direct_partial(z, n)?.value.value();
    println!("\nz = {z}, n = {n}, direct value {direct:.15}");
    for order in [0, 5, 10, 20, 40] {
        let series = zeta_bernoulli_partial(z, n, order)?.value.value();
        println!("  order {order:>2}: error {:.3e}", (series - direct).norm());
    }
    // outside the disk |z| log n < 2 pi the expansion is refused
    if let Err(e) = zeta_bernoulli_partial(ComplexPoint::real(2.0)?, 600, 10) {
        println!("\nz = 2, n = 600: {e}");
    }
    Ok(())
}
