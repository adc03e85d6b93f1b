//! CSV of the direct and alternating truncations at a real argument against
//! the reference value, ready for plotting.
//!
//! ```bash
//! cargo run --release --example convergence -- 1.5 > convergence.csv
//! ```

use admissible_zeta::{reference_zeta, zeta_alt_partial, zeta_direct_partial, ComplexPoint};

fn main() -> Result<(), admissible_zeta::Error> {
    let sigma: f64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(2.0);
    let z = ComplexPoint::real(sigma)?;
    let exact = reference_zeta(z)?.re();
    println!("n,direct_error,alternating_error,tail_bound");
    let mut n = 10u64;
    while n <= 100_000 {
        let direct = zeta_direct_partial(z, n)?;
        let alt = zeta_alt_partial(z, n)?;
        println!(
            "{n},{:.6e},{:.6e},{}",
            (direct.value.re() - exact).abs(),
            (alt.value.re() - exact).abs(),
            direct
                .tail_bound
                .map_or(String::new(), |b| format!("{b:.6e}")),
        );
        n *= 10;
    }
    Ok(())
}
