//! Picks the best pentagon of a perturbed blow-up and partitions the rest of
//! the graph around it: class weights, funky pairs and funky degrees.
//!
//! ```text
//! cargo run --release --example analyze
//! ```

use c5cert::blowup::BlowupTree;
use c5cert::counting::{best_pentagon, funky_analysis};
use c5cert::rational::{decimal, int, to_decimal};

fn main() -> c5cert::Result<()> {
    let mut g = BlowupTree::pentagon_parts(&[4, 4, 4, 4, 4])?.realize()?;
    // break the blow-up a little
    g.toggle_edge(0, 9);
    g.toggle_edge(1, 2);
    let (z, score) = best_pentagon(&g, &decimal("3.98"))?;
    println!(
        "pentagon {:?} with score {}",
        z.vertices(),
        to_decimal(&score, 9)
    );
    let a = funky_analysis(&g, &z)?;
    for (i, class) in a.classes.iter().enumerate() {
        println!("  class {i}: {class:?}");
    }
    println!(
        "  x = {:?}",
        a.x.iter().map(|x| to_decimal(x, 4)).collect::<Vec<_>>()
    );
    println!(
        "  f = {}  funky pairs {:?}",
        to_decimal(&a.f, 6),
        a.funky_pairs
    );
    for d in a.df_per_vertex.iter().filter(|d| d.value > int(0)) {
        println!(
            "  vertex {} (class {}): funky degree {}",
            d.vertex,
            d.class,
            to_decimal(&d.value, 4)
        );
    }
    Ok(())
}
