//! The full ledger of numeric claims under the rounded and the exact
//! right-hand side, with grids at s = 100 and s = 200 for the covering
//! sub-checks.
//!
//! ```text
//! cargo run --release --example verify_claims
//! ```

use c5cert::grid::{grid_max, GridMode, GridSpec};
use c5cert::ledger::{render_table, verify_claims, GridInputs};
use c5cert::qp::{FlagConstants, RhsMode};

fn main() -> c5cert::Result<()> {
    let mut grids = GridInputs::default();
    for s in [100, 200] {
        let spec = GridSpec::new(s)?;
        for mode in [GridMode::Strict, GridMode::Relaxed] {
            grids.results.push(grid_max(&spec, mode, true, None)?);
        }
    }
    let fc = FlagConstants::published();
    for mode in [RhsMode::Printed, RhsMode::Derived] {
        let records = verify_claims(&fc, mode, &grids)?;
        let failed = records.iter().filter(|r| !r.pass).count();
        println!("== {mode:?}: {failed} of {} records fail", records.len());
        print!("{}", render_table(&records));
    }
    Ok(())
}
