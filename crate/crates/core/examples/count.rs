//! Induced pentagon counts: the Petersen graph, complements, and the
//! seven-vertex families around a fixed pentagon.
//!
//! ```text
//! cargo run --release --example count
//! ```

use c5cert::blowup::BlowupTree;
use c5cert::counting::{c5_count, count_family, local_density_7, vertex_c5_counts, PatternFamily};
use c5cert::rational::to_decimal;
use c5cert::SmallGraph;

fn main() -> c5cert::Result<()> {
    let p = SmallGraph::petersen();
    println!(
        "Petersen: {} (complement {})",
        c5_count(&p),
        c5_count(&p.complement())
    );

    let g = BlowupTree::c5_iterated(2).realize()?;
    let v = vertex_c5_counts(&g);
    println!(
        "C5 iterated twice: {} pentagons, per vertex {:?}",
        v.total,
        &v.per_vertex[..5]
    );
    for fam in [PatternFamily::c22111(), PatternFamily::c31111()] {
        println!(
            "  {}: {} members, {} copies",
            fam.label,
            fam.members.len(),
            count_family(&g, fam)
        );
    }
    // one vertex from each top-level part
    let z = [0, 5, 10, 15, 20];
    for fam in [PatternFamily::c22111(), PatternFamily::c31111()] {
        let d = local_density_7(&g, &z, fam)?;
        println!("  local {} around {z:?}: {}", fam.label, to_decimal(&d, 9));
    }
    Ok(())
}
