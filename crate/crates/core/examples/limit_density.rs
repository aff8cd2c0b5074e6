//! Exact pattern densities in the iterated C5 blow-up limit, and the finite
//! depths converging to them.
//!
//! ```text
//! cargo run --release --example limit_density
//! ```

use c5cert::counting::PatternFamily;
use c5cert::limit::{all_graphs, finite_density, limit_density};
use c5cert::rational::{to_decimal, to_fraction, Rational};
use c5cert::SmallGraph;

fn main() -> c5cert::Result<()> {
    let c5 = SmallGraph::c5();
    for fam in [
        PatternFamily::c5(),
        PatternFamily::c22111(),
        PatternFamily::c31111(),
    ] {
        let d = limit_density(&c5, fam)?;
        println!(
            "{:<7} {:>6} = {}",
            fam.label,
            to_fraction(&d.density),
            to_decimal(&d.density, 12)
        );
        for depth in 1..=5 {
            let f = finite_density(depth, fam)?;
            println!(
                "    depth {depth} (n = {:>4}): {}",
                5u64.pow(depth as u32),
                to_decimal(&f, 12)
            );
        }
    }
    let classes = all_graphs(7);
    let total: Rational = classes
        .iter()
        .map(|g| limit_density(&c5, &PatternFamily::single("g", g)).map(|d| d.density))
        .sum::<c5cert::Result<Rational>>()?;
    println!(
        "sum over {} seven-vertex classes: {}",
        classes.len(),
        to_fraction(&total)
    );
    Ok(())
}
