//! Truncated sums at even and odd integers, with the even ones checked
//! against the Bernoulli closed form.
//!
//! ```bash
//! cargo run --release --example special_values
//! ```

use admissible_zeta::{euler_even_zeta, special_value, SpecialKind};

fn main() -> Result<(), admissible_zeta::Error> {
    let n = 10_000;
    for m in 1..=4 {
        let even = special_value(SpecialKind::Even, m, n)?;
        println!(
            "zeta({}) ~ {:.12}  closed form {:.12}  deviation {:.2e}",
            even.argument,
            even.result.value.re(),
            euler_even_zeta(m)?,
            even.deviation.unwrap_or(f64::NAN),
        );
        let odd = special_value(SpecialKind::Odd, m, n)?;
        println!("zeta({}) ~ {:.12}", odd.argument, odd.result.value.re());
    }
    Ok(())
}
