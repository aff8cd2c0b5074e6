//! Certified bounds of the reduced quadratic programs under both
//! right-hand sides, plus the derived constants that feed the rest of the
//! argument.
//!
//! ```text
//! cargo run --release --example qp
//! ```

use c5cert::qp::{
    derive_main_threshold, max_funky_degree_bound, qp_bounds, FlagConstants, RhsMode,
};
use c5cert::rational::{decimal, to_decimal};

fn main() -> c5cert::Result<()> {
    let fc = FlagConstants::published();
    println!("threshold {}", to_decimal(&derive_main_threshold(&fc), 12));
    for mode in [RhsMode::Printed, RhsMode::Derived] {
        let b = qp_bounds(&fc, mode)?;
        println!("{mode:?} rhs = {}", to_decimal(&b.rhs, 12));
        for s in [&b.min_x1, &b.max_x1, &b.max_x0, &b.max_f] {
            println!(
                "  {:?}: [{}, {}] via {}",
                s.objective,
                to_decimal(&s.bound.lo, 12),
                to_decimal(&s.bound.hi, 12),
                s.case
            );
        }
    }
    println!(
        "funky degree bound at x_min = 0.19816: {}",
        to_decimal(&max_funky_degree_bound(&fc, &decimal("0.19816"))?, 9)
    );
    Ok(())
}
