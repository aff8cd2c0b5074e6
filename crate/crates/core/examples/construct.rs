//! Builds blow-up trees, checks the pentagon counts against the balanced
//! recursion, and recovers the five-part structure of a shuffled blow-up.
//!
//! ```text
//! cargo run --release --example construct -- "c5(k2,e3,c5,1,1)"
//! ```

use c5cert::blowup::{detect_5_partition, recursion_value, BlowupTree};
use c5cert::counting::c5_count;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> c5cert::Result<()> {
    for k in 1..=2 {
        let g = BlowupTree::c5_iterated(k).realize()?;
        let n = g.n() as u64;
        println!(
            "C5 iterated {k}x: n={n} count={} R(n)={}",
            c5_count(&g),
            recursion_value(n)
        );
    }
    for n in [5u64, 10, 25, 26, 125, 1000, 1_000_000] {
        println!("R({n}) = {}", recursion_value(n));
    }

    let spec = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "c5(k2,e3,c5,1,1)".into());
    let tree = BlowupTree::parse(&spec)?;
    let g = tree.realize()?;
    println!(
        "{spec}: {} vertices, {} pentagons, graph6 {}",
        g.n(),
        c5_count(&g),
        g.to_graph6()
    );

    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(1));
    let shuffled = g.permuted(&perm);
    match detect_5_partition(&shuffled) {
        Ok(p) => println!("recovered parts of sizes {:?}", p.sizes()),
        Err(f) => println!("no partition: {}", f.reason),
    }
    Ok(())
}
