//! Maximum induced pentagon counts over all graphs of a given order, by
//! isomorph-free generation, and a seeded local search for larger orders.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canonical::{canonize, marked_key, CanonKey};
use crate::counting::{c5_count, c5_matcher, pair_c5_count_unchecked};
use crate::error::{Error, Result};
use crate::graph::{Bits, SmallGraph};

pub const MAX_EXHAUSTIVE: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchResult {
    pub n: usize,
    pub best_count: u64,
    /// graph6 of every extremal class (exhaustive) or of the best graph found.
    pub witnesses: Vec<String>,
    pub exhaustive: bool,
    pub graphs_examined: u64,
    /// Number of isomorphism classes generated at each order `1..=n`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub classes_per_order: Vec<u64>,
}

/// Vertex invariant used to narrow the candidates for canonical deletion.
fn invariant(g: &SmallGraph, v: usize) -> (u32, u32) {
    let row = g.neighbors(v);
    (
        row.count_ones(),
        Bits(row).map(|u| g.neighbors(u).count_ones()).sum(),
    )
}

fn extend(parent: &SmallGraph, nbrs: u64) -> SmallGraph {
    let m = parent.n();
    let mut g = SmallGraph::empty(m + 1).expect("order checked");
    for (u, v) in parent.edges() {
        g.add_edge(u, v);
    }
    for u in Bits(nbrs) {
        g.add_edge(u, m);
    }
    g
}

/// Canonical key of `child` if its last vertex is a legal canonical
/// deletion, i.e. lies in the orbit of the deletion vertex picked by the
/// canonical labeling among the vertices of maximal invariant.
fn accept(child: &SmallGraph) -> Option<CanonKey> {
    let n = child.n();
    let new = n - 1;
    let inv: Vec<(u32, u32)> = (0..n).map(|v| invariant(child, v)).collect();
    let top = *inv.iter().max().expect("nonempty");
    if inv[new] != top {
        return None;
    }
    let candidates: Vec<usize> = (0..n).filter(|&v| inv[v] == top).collect();
    let c = canonize(child, None);
    if candidates.len() == 1 {
        return Some(c.key);
    }
    let w = *c
        .lab
        .iter()
        .rev()
        .find(|v| candidates.contains(v))
        .expect("candidate placed");
    if w == new || marked_key(child, w) == marked_key(child, new) {
        Some(c.key)
    } else {
        None
    }
}

/// Isomorphism classes of order `m + 1` whose canonical parent is `parent`.
fn children(parent: &SmallGraph) -> Vec<CanonKey> {
    let m = parent.n();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for nbrs in 0u64..1 << m {
        if let Some(k) = accept(&extend(parent, nbrs)) {
            if seen.insert(k) {
                out.push(k);
            }
        }
    }
    out
}

/// Every isomorphism class on `n` vertices, in a deterministic order.
pub fn generate(n: usize) -> Result<Vec<CanonKey>> {
    Ok(generate_levels(n)?.pop().unwrap_or_default())
}

fn generate_levels(n: usize) -> Result<Vec<Vec<CanonKey>>> {
    if n == 0 || n > MAX_EXHAUSTIVE {
        return Err(Error::OutOfRange {
            what: "order",
            value: n as i64,
            range: "1..=10",
        });
    }
    let one = crate::canonical::canonical_key(&SmallGraph::empty(1)?);
    let mut levels = vec![vec![one]];
    while levels.len() < n {
        let next: Vec<CanonKey> = levels
            .last()
            .expect("nonempty")
            .par_iter()
            .flat_map_iter(|k| children(&k.graph()))
            .collect();
        levels.push(next);
    }
    Ok(levels)
}

/// Exact `C(n)` for `5 <= n <= 10` with all extremal classes.
pub fn exhaustive_c(n: usize) -> Result<SearchResult> {
    if !(5..=MAX_EXHAUSTIVE).contains(&n) {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as i64,
            range: "5..=10",
        });
    }
    let levels = generate_levels(n - 1)?;
    let mut classes_per_order: Vec<u64> = levels.iter().map(|l| l.len() as u64).collect();
    // The last level is never stored; each parent reports its own best.
    let per_parent: Vec<(u64, u64, Vec<CanonKey>)> = levels
        .last()
        .expect("nonempty")
        .par_iter()
        .map(|k| {
            let kids = children(&k.graph());
            let mut best = 0;
            let mut wit = Vec::new();
            for c in &kids {
                let count = c5_count(&c.graph());
                if count > best {
                    best = count;
                    wit.clear();
                }
                if count == best {
                    wit.push(*c);
                }
            }
            (kids.len() as u64, best, wit)
        })
        .collect();
    let total: u64 = per_parent.iter().map(|p| p.0).sum();
    let best = per_parent.iter().map(|p| p.1).max().unwrap_or(0);
    let mut witnesses: Vec<CanonKey> = per_parent
        .into_iter()
        .filter(|p| p.1 == best)
        .flat_map(|p| p.2)
        .collect();
    witnesses.sort_unstable();
    classes_per_order.push(total);
    Ok(SearchResult {
        n,
        best_count: best,
        witnesses: witnesses.iter().map(|k| k.graph().to_graph6()).collect(),
        exhaustive: true,
        graphs_examined: total,
        classes_per_order,
    })
}

fn vertex_c5_count(g: &SmallGraph, v: usize) -> u64 {
    let m = c5_matcher();
    let rest: Vec<usize> = Bits(g.vertex_mask() & !(1 << v)).collect();
    let mut count = 0;
    let r = rest.len();
    for a in 0..r {
        for b in a + 1..r {
            for c in b + 1..r {
                for d in c + 1..r {
                    let mask = 1 << v | 1 << rest[a] | 1 << rest[b] | 1 << rest[c] | 1 << rest[d];
                    if m.matches_mask(g, mask) {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

/// `g` with `v` replaced by a non-adjacent twin of `u`.
fn duplicate(g: &SmallGraph, v: usize, u: usize) -> SmallGraph {
    let mut h = g.clone();
    for w in 0..g.n() {
        if w != v {
            h.set_edge(v, w, w != u && g.has_edge(u, w));
        }
    }
    h
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> SmallGraph {
    let mut g = SmallGraph::empty(n).expect("n <= 64");
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

#[derive(Clone, Copy)]
enum Move {
    Flip(usize, usize),
    Twin(usize, usize),
}

/// Steepest ascent over all edge flips and a random sample of `n` vertex
/// replacements per step, restarting from a fresh random graph at local
/// maxima. `iterations` counts steps; the outcome depends only on the seed.
pub fn hill_climb(n: usize, seed: u64, iterations: u64) -> Result<SearchResult> {
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = random_graph(&mut rng, n);
    let mut count = c5_count(&g);
    let mut best = (count, g.clone());
    let mut examined = 0u64;
    for _ in 0..iterations {
        let mut chosen: Option<(i64, Move)> = None;
        let mut consider = |delta: i64, mv: Move| {
            if delta > 0 && chosen.is_none_or(|(d, _)| delta > d) {
                chosen = Some((delta, mv));
            }
        };
        for u in 0..n {
            for v in u + 1..n {
                let before = pair_c5_count_unchecked(&g, u, v) as i64;
                g.toggle_edge(u, v);
                let after = pair_c5_count_unchecked(&g, u, v) as i64;
                g.toggle_edge(u, v);
                examined += 1;
                consider(after - before, Move::Flip(u, v));
            }
        }
        if n >= 2 {
            for _ in 0..n {
                let v = rng.gen_range(0..n);
                let u = (v + rng.gen_range(1..n)) % n;
                let before = vertex_c5_count(&g, v) as i64;
                let after = vertex_c5_count(&duplicate(&g, v, u), v) as i64;
                examined += 1;
                consider(after - before, Move::Twin(v, u));
            }
        }
        match chosen {
            Some((delta, Move::Flip(u, v))) => {
                g.toggle_edge(u, v);
                count = (count as i64 + delta) as u64;
            }
            Some((delta, Move::Twin(v, u))) => {
                g = duplicate(&g, v, u);
                count = (count as i64 + delta) as u64;
            }
            None => {
                g = random_graph(&mut rng, n);
                count = c5_count(&g);
            }
        }
        if count > best.0 {
            best = (count, g.clone());
        }
    }
    Ok(SearchResult {
        n,
        best_count: best.0,
        witnesses: vec![best.1.to_graph6()],
        exhaustive: false,
        graphs_examined: examined,
        classes_per_order: Vec::new(),
    })
}
