//! Admissible bases up to a bound and the canonical decomposition of a few
//! integers into `base^exponent`.
//!
//! ```bash
//! cargo run --example admissible_bases -- 30
//! ```

use admissible_zeta::{admissible_up_to, decompose_power};

fn main() -> Result<(), admissible_zeta::Error> {
    let n = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(30);
    let set = admissible_up_to(n)?;
    println!(
        "admissible bases <= {n} ({} terms, {} odd, {} even):",
        set.term_count(),
        set.odd_count(),
        set.even_count()
    );
    println!("  {:?}", set.members());

    for m in [7u64, 36, 64, 1 << 40, 3u64.pow(39), u64::MAX] {
        let d = decompose_power(m)?;
        println!("{m} = {}^{}", d.base, d.exponent);
    }
    Ok(())
}
