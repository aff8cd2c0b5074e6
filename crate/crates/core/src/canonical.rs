//! Canonical labeling of small graphs by partition refinement and
//! backtracking, with pruning by automorphisms discovered along the way.

use crate::graph::{Bits, SmallGraph};

/// Largest vertex count accepted by the canonical labeling routines.
pub const MAX_CANON: usize = 16;

/// Compact isomorphism-class key: vertex count plus the canonical upper
/// triangle packed into 120 bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonKey {
    pub n: u8,
    pub bits: u128,
}

impl CanonKey {
    /// The canonical representative graph.
    pub fn graph(&self) -> SmallGraph {
        let n = self.n as usize;
        let mut g = SmallGraph::empty(n).expect("n <= 16");
        let total = n * n.saturating_sub(1) / 2;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                k += 1;
                if self.bits >> (total - k) & 1 == 1 {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

/// Certificate plus the relabeling that realizes it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    /// graph6 encoding of the canonical representative.
    pub certificate: Vec<u8>,
    /// `relabeling[v]` is the canonical label of vertex `v`.
    pub relabeling: Vec<usize>,
}

impl CanonicalForm {
    pub fn graph(&self) -> SmallGraph {
        SmallGraph::from_graph6(std::str::from_utf8(&self.certificate).expect("ascii"))
            .expect("certificate is valid graph6")
    }
}

/// Result of one canonical labeling run.
#[derive(Clone, Debug)]
pub(crate) struct Canon {
    pub key: CanonKey,
    /// `lab[p]` is the vertex placed at canonical position `p`.
    pub lab: Vec<usize>,
}

pub fn canonical_form(g: &SmallGraph) -> CanonicalForm {
    let c = canonize(g, None);
    let mut relabeling = vec![0; g.n()];
    for (p, &v) in c.lab.iter().enumerate() {
        relabeling[v] = p;
    }
    CanonicalForm {
        certificate: c.key.graph().to_graph6().into_bytes(),
        relabeling,
    }
}

pub fn canonical_key(g: &SmallGraph) -> CanonKey {
    canonize(g, None).key
}

/// Canonical key of `g` with vertex `v` distinguished. Two vertices get
/// equal keys iff some automorphism maps one to the other.
pub(crate) fn marked_key(g: &SmallGraph, v: usize) -> CanonKey {
    canonize(g, Some(v)).key
}

pub fn is_isomorphic(g: &SmallGraph, h: &SmallGraph) -> bool {
    g.n() == h.n() && g.edge_count() == h.edge_count() && canonical_key(g) == canonical_key(h)
}

/// Coarsest equitable refinement of `cells` (an ordered partition given as
/// vertex masks). The result depends only on the graph structure and the
/// input cell order, never on vertex names.
pub(crate) fn refine(rows: &[u64], cells: &mut Vec<u64>) {
    let mut scratch = Vec::with_capacity(rows.len());
    'restart: loop {
        for si in 0..cells.len() {
            let splitter = cells[si];
            scratch.clear();
            let mut split = false;
            for &cell in cells.iter() {
                if cell & cell.wrapping_sub(1) == 0 {
                    scratch.push(cell);
                    continue;
                }
                let mut groups = [0u64; 65];
                let mut lo = 64;
                let mut hi = 0;
                for v in Bits(cell) {
                    let c = (rows[v] & splitter).count_ones() as usize;
                    groups[c] |= 1 << v;
                    lo = lo.min(c);
                    hi = hi.max(c);
                }
                if lo != hi {
                    split = true;
                }
                scratch.extend(groups[lo..=hi].iter().copied().filter(|&m| m != 0));
            }
            if split {
                std::mem::swap(cells, &mut scratch);
                continue 'restart;
            }
        }
        return;
    }
}

pub(crate) fn canonize(g: &SmallGraph, marked: Option<usize>) -> Canon {
    let n = g.n();
    assert!(
        n <= MAX_CANON,
        "canonical labeling supports at most {MAX_CANON} vertices, got {n}"
    );
    if n == 0 {
        return Canon {
            key: CanonKey { n: 0, bits: 0 },
            lab: Vec::new(),
        };
    }
    let mut cells = match marked {
        Some(v) if n > 1 => vec![1u64 << v, g.vertex_mask() & !(1u64 << v)],
        _ => vec![g.vertex_mask()],
    };
    let mut search = Search {
        rows: g.rows(),
        best: None,
        autos: Vec::new(),
    };
    let mut prefix = Vec::with_capacity(n);
    refine(search.rows, &mut cells);
    search.descend(cells, &mut prefix);
    let (bits, lab) = search.best.expect("at least one leaf");
    Canon {
        key: CanonKey { n: n as u8, bits },
        lab,
    }
}

struct Search<'a> {
    rows: &'a [u64],
    best: Option<(u128, Vec<usize>)>,
    autos: Vec<Vec<u8>>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<u64>, prefix: &mut Vec<usize>) {
        let Some(ti) = cells.iter().position(|c| c.count_ones() > 1) else {
            self.leaf(&cells);
            return;
        };
        let target = cells[ti];
        let mut explored: Vec<usize> = Vec::new();
        for v in Bits(target) {
            if !explored.is_empty() && self.equivalent_to_explored(v, &explored, prefix) {
                continue;
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(1u64 << v);
            child.push(target & !(1u64 << v));
            child.extend_from_slice(&cells[ti + 1..]);
            refine(self.rows, &mut child);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    /// True if `v` shares an orbit with an explored sibling under the group
    /// generated by known automorphisms that fix `prefix` pointwise.
    fn equivalent_to_explored(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let n = self.rows.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for a in &self.autos {
            if prefix.iter().any(|&u| a[u] as usize != u) {
                continue;
            }
            any = true;
            for (x, &y) in a.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y as usize));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&e| find(&mut parent, e) == rv)
    }

    fn leaf(&mut self, cells: &[u64]) {
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let n = lab.len();
        let mut code = 0u128;
        for j in 1..n {
            let row = self.rows[lab[j]];
            for &li in &lab[..j] {
                code = (code << 1) | (row >> li & 1) as u128;
            }
        }
        match &self.best {
            Some((b, best_lab)) if code == *b => {
                let mut a = vec![0u8; n];
                for p in 0..n {
                    a[best_lab[p]] = lab[p] as u8;
                }
                if a.iter().enumerate().any(|(x, &y)| x != y as usize) {
                    self.autos.push(a);
                }
            }
            Some((b, _)) if code < *b => {}
            _ => self.best = Some((code, lab)),
        }
    }
}

/// Number of automorphisms, by extending partial vertex maps one vertex at a
/// time and discarding any map that breaks adjacency or degree.
pub fn automorphism_count(g: &SmallGraph) -> u64 {
    fn extend(g: &SmallGraph, image: &mut Vec<usize>, used: u64) -> u64 {
        let i = image.len();
        if i == g.n() {
            return 1;
        }
        let mut total = 0;
        for j in Bits(g.vertex_mask() & !used) {
            if g.degree(j) != g.degree(i) {
                continue;
            }
            if image
                .iter()
                .enumerate()
                .all(|(k, &jk)| g.has_edge(i, k) == g.has_edge(j, jk))
            {
                image.push(j);
                total += extend(g, image, used | 1 << j);
                image.pop();
            }
        }
        total
    }
    extend(g, &mut Vec::with_capacity(g.n()), 0)
}
