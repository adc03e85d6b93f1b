//! Zeros of the eight tabulated truncations, each certified by the argument
//! principle, plus a zero count over the whole search rectangle.
//!
//! ```bash
//! cargo run --release --example preset_zeros
//! ```

use admissible_zeta::rootfind::{
    count_zeros_in_region, find_zeros, Preset, SearchRegion, DEFAULT_TOL,
};

fn main() -> Result<(), admissible_zeta::Error> {
    for preset in Preset::ALL {
        let region: SearchRegion = match preset {
            Preset::Direct2 => "-5,5,-10,10",
            Preset::Alt2 => "-1,3,-40,40",
            _ => "-2,2,-6,6",
        }
        .parse()?;
        let target = preset.target();
        let roots = find_zeros(&target, &region, DEFAULT_TOL)?;
        let count = count_zeros_in_region(&target, &region)?;
        println!("{preset}: {}", target.formula());
        println!(
            "  region [{}, {}] x [{}, {}]: {} zeros by the argument principle",
            region.re_min, region.re_max, region.im_min, region.im_max, count.zeros
        );
        for r in &roots {
            println!(
                "  {:+.6} {:+.6}i  residual {:.1e}  verified {}",
                r.location.re(),
                r.location.im(),
                r.residual,
                r.verified
            );
        }
        if roots.is_empty() {
            println!("  (no zeros)");
        }
    }
    Ok(())
}
