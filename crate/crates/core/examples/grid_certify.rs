//! Exact grid maximum of the outside-vertex pentagon bound, with the
//! covering correction under both Lipschitz constants.
//!
//! ```text
//! cargo run --release --example grid_certify -- 100
//! ```

use std::time::Instant;

use c5cert::grid::{certify_x0_claim, gradient_bound, grid_max, GridMode, GridSpec};
use c5cert::rational::{ratio, to_decimal};

fn main() -> c5cert::Result<()> {
    let s: u32 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(100);
    let spec = GridSpec::new(s)?;
    let threshold = ratio(1, 624);
    for mode in [GridMode::Strict, GridMode::Relaxed, GridMode::Unconstrained] {
        let started = Instant::now();
        let r = grid_max(&spec, mode, true, None)?;
        println!(
            "s={s} {mode:?}: max {} at {:?} ({} points, {:.1?})",
            to_decimal(&r.max_value, 9),
            r.argmax.u,
            r.evaluated,
            started.elapsed()
        );
        if mode == GridMode::Unconstrained {
            continue;
        }
        for (name, l) in [
            ("printed", ratio(1, 1000)),
            ("formula", gradient_bound(&spec)),
        ] {
            let rep = certify_x0_claim(&spec, &r, &l, &threshold);
            println!(
                "  L {name} = {}: total {} vs 1/624 = {} -> {}",
                to_decimal(&l, 6),
                to_decimal(&rep.bound.total, 9),
                to_decimal(&threshold, 9),
                if rep.bound.pass { "pass" } else { "fail" }
            );
        }
    }
    Ok(())
}
