//! Every representation of the truncated sum at one point, side by side with
//! the reference value.
//!
//! ```bash
//! cargo run --example representations -- 0.5 14 50
//! ```

use admissible_zeta::{evaluate, reference_zeta, ComplexPoint, RepresentationKind};

fn main() -> Result<(), admissible_zeta::Error> {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .filter_map(|s| s.parse().ok())
        .collect();
    let (re, im, n) = match args[..] {
        [re, im, n] => (re, im, n as u64),
        _ => (2.0, 0.0, 6),
    };
    let z = ComplexPoint::new(re, im)?;
    let reference = reference_zeta(z).ok();
    println!("z = {z}, n = {n}");
    for kind in RepresentationKind::ALL {
        match evaluate(kind, z, n, None) {
            Ok(r) => {
                let err = reference.map(|v| (v.value() - r.value.value()).norm());
                println!(
                    "{:<18} {:+.15} {:+.15}i  error vs reference {}  tail bound {}",
                    format!("{kind:?}"),
                    r.value.re(),
                    r.value.im(),
                    err.map_or("-".into(), |e| format!("{e:.2e}")),
                    r.tail_bound.map_or("-".into(), |b| format!("{b:.2e}")),
                );
            }
            Err(e) => println!("{:<18} {e}", format!("{kind:?}")),
        }
    }
    Ok(())
}
