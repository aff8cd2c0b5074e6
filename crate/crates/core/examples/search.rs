//! Exact maximum pentagon counts for small orders, compared with the
//! recursive construction, then a seeded local search at a larger order.
//!
//! ```text
//! cargo run --release --example search -- 9 25
//! ```

use std::time::Instant;

use c5cert::blowup::recursion_value;
use c5cert::search::{exhaustive_c, hill_climb};

fn main() -> c5cert::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().ok());
    let top = args.next().flatten().unwrap_or(8);
    let climb = args.next().flatten().unwrap_or(20);
    for n in 5..=top {
        let started = Instant::now();
        let r = exhaustive_c(n)?;
        println!(
            "C({n}) = {:>4}   R({n}) = {:>4}   {} extremal of {} classes   {:.1?}",
            r.best_count,
            recursion_value(n as u64),
            r.witnesses.len(),
            r.graphs_examined,
            started.elapsed()
        );
        for w in &r.witnesses {
            println!("    {w}");
        }
    }
    let started = Instant::now();
    let r = hill_climb(climb, 1, 400)?;
    println!(
        "climb n={climb}: best {} (R = {}) after {} moves, {:.1?}\n    {}",
        r.best_count,
        recursion_value(climb as u64),
        r.graphs_examined,
        started.elapsed(),
        r.witnesses[0]
    );
    Ok(())
}
