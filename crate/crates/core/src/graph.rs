//! Small undirected simple graphs stored as one adjacency word per vertex.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// An undirected simple graph on at most 64 vertices.
///
/// Row `v` of `adj` has bit `u` set iff `uv` is an edge. Rows at index
/// `>= n` and bits at positions `>= n` are always zero, so the derived
/// equality and hashing compare labeled graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    n: usize,
    adj: [u64; MAX_VERTICES],
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

impl SmallGraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(SmallGraph {
            n,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        let all = low_mask(n);
        for v in 0..n {
            g.adj[v] = all & !(1u64 << v);
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::RepeatedVertex(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Cycle `0-1-...-(n-1)-0`.
    pub fn cycle(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        if n >= 3 {
            for v in 0..n {
                g.add_edge(v, (v + 1) % n);
            }
        }
        Ok(g)
    }

    pub fn c5() -> Self {
        Self::cycle(5).expect("5 <= 64")
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::from_edges(10, &edges).expect("valid edge list")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Bitmask with one bit per vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj[..self.n]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    #[inline]
    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] ^= 1 << v;
        self.adj[v] ^= 1 << u;
    }

    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        if present {
            self.add_edge(u, v)
        } else {
            self.remove_edge(u, v)
        }
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in Bits(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Edge `uv` present in the output iff absent in `self`, for `u != v`.
    pub fn complement(&self) -> Self {
        let all = self.vertex_mask();
        let mut g = self.clone();
        for v in 0..self.n {
            g.adj[v] = !self.adj[v] & all & !(1u64 << v);
        }
        g
    }

    /// Subgraph induced by `vertices`, relabeled `0..len` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut g = Self::empty(vertices.len()).expect("subset of at most 64 vertices");
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Subgraph induced by the vertices in `mask`, in increasing order.
    pub fn induced_mask(&self, mask: u64) -> Self {
        let vs: Vec<usize> = Bits(mask).collect();
        self.induced(&vs)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length");
        let mut g = Self::empty(self.n).expect("same size");
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Disjoint union with `other` placed after `self`'s vertices.
    pub fn disjoint_union(&self, other: &SmallGraph) -> Result<Self> {
        let mut g = Self::empty(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        Ok(g)
    }

    /// Lexicographic product `self[h]`: every vertex of `self` is replaced by
    /// a copy of `h`, copies of adjacent vertices are completely joined.
    pub fn lexicographic_product(&self, h: &SmallGraph) -> Result<Self> {
        let total = self.n * h.n;
        let mut g = Self::empty(total)?;
        for x in 0..self.n {
            for (u, v) in h.edges() {
                g.add_edge(x * h.n + u, x * h.n + v);
            }
            for y in Bits(self.adj[x] & !low_mask(x + 1)) {
                for u in 0..h.n {
                    for v in 0..h.n {
                        g.add_edge(x * h.n + u, y * h.n + v);
                    }
                }
            }
        }
        Ok(g)
    }

    /// Checks the structural invariants (symmetry, no loops, no stray bits).
    pub fn is_well_formed(&self) -> bool {
        let all = self.vertex_mask();
        (0..self.n).all(|u| {
            self.adj[u] & !all == 0
                && !self.has_edge(u, u)
                && Bits(self.adj[u]).all(|v| self.has_edge(v, u))
        }) && self.adj[self.n..].iter().all(|&r| r == 0)
    }

    // graph6 -----------------------------------------------------------

    /// Encodes in graph6: size header followed by the upper triangle in
    /// column-major order, packed big-endian into 6-bit groups offset by 63.
    pub fn to_graph6(&self) -> String {
        let n = self.n;
        let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
        if n <= 62 {
            out.push(n as u8 + 63);
        } else {
            out.push(126);
            out.push(((n >> 12) & 63) as u8 + 63);
            out.push(((n >> 6) & 63) as u8 + 63);
            out.push((n & 63) as u8 + 63);
        }
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | self.has_edge(i, j) as u8;
                filled += 1;
                if filled == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((acc << (6 - filled)) + 63);
        }
        String::from_utf8(out).expect("graph6 bytes are printable ASCII")
    }

    pub fn from_graph6(text: &str) -> Result<Self> {
        let bytes = text.as_bytes();
        let err = |offset: usize, reason: &str| Error::Graph6 {
            offset,
            reason: reason.to_string(),
        };
        let sextet = |i: usize| -> Result<u8> {
            match bytes.get(i) {
                None => Err(err(i, "unexpected end of input")),
                Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
                Some(_) => Err(err(i, "byte outside the graph6 range 63..=126")),
            }
        };
        if bytes.is_empty() {
            return Err(err(0, "empty input"));
        }
        let (n, mut pos) = if bytes[0] == 126 {
            if bytes.get(1) == Some(&126) {
                return Err(err(
                    1,
                    "graphs with more than 258047 vertices are not supported",
                ));
            }
            let n =
                ((sextet(1)? as usize) << 12) | ((sextet(2)? as usize) << 6) | sextet(3)? as usize;
            if n <= 62 {
                return Err(err(1, "long size header used for a size below 63"));
            }
            (n, 4)
        } else {
            (sextet(0)? as usize, 1)
        };
        if n > MAX_VERTICES {
            return Err(err(0, &format!("{n} vertices exceeds the limit of 64")));
        }
        let bits = n * n.saturating_sub(1) / 2;
        let expected = pos + bits.div_ceil(6);
        if bytes.len() > expected {
            return Err(err(expected, "trailing bytes after edge data"));
        }
        let mut g = Self::empty(n)?;
        let mut k = 0;
        'outer: for j in 1..n {
            for i in 0..j {
                if k % 6 == 0 && k > 0 {
                    pos += 1;
                }
                let word = sextet(pos)?;
                if word >> (5 - k % 6) & 1 == 1 {
                    g.add_edge(i, j);
                }
                k += 1;
                if k == bits {
                    break 'outer;
                }
            }
        }
        if bits > 0 {
            let used = bits % 6;
            if used != 0 && sextet(pos)? & ((1 << (6 - used)) - 1) != 0 {
                return Err(err(pos, "nonzero padding bits"));
            }
        }
        Ok(g)
    }
}

impl fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmallGraph({} {:?})", self.n, self.to_graph6())
    }
}

impl fmt::Display for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c5_graph6_matches_reference_encoding() {
        let c5 = SmallGraph::c5();
        assert_eq!(c5.to_graph6(), "Dhc");
        assert_eq!(SmallGraph::from_graph6("Dhc").unwrap(), c5);
    }

    #[test]
    fn petersen_graph6_matches_reference_encoding() {
        let p = SmallGraph::from_graph6("IheA@GUAo").unwrap();
        assert_eq!(p.n(), 10);
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_eq!(
            SmallGraph::petersen().complement().complement(),
            SmallGraph::petersen()
        );
    }

    #[test]
    fn long_header_for_63_and_64_vertices() {
        let c63 = SmallGraph::cycle(63).unwrap();
        let text = c63.to_graph6();
        assert!(text.starts_with("~??~hCGGC@?G?_@"));
        assert_eq!(SmallGraph::from_graph6(&text).unwrap(), c63);

        let mut p64 = SmallGraph::empty(64).unwrap();
        for v in 0..63 {
            p64.add_edge(v, v + 1);
        }
        let text = p64.to_graph6();
        assert!(text.starts_with("~?@?hCGGC@?G?_@"));
        assert!(text.ends_with("?G?????????@"));
        assert_eq!(SmallGraph::from_graph6(&text).unwrap(), p64);
    }

    #[test]
    fn trivial_sizes() {
        assert_eq!(SmallGraph::empty(0).unwrap().to_graph6(), "?");
        assert_eq!(SmallGraph::empty(1).unwrap().to_graph6(), "@");
        assert_eq!(SmallGraph::complete(5).unwrap().to_graph6(), "D~{");
    }

    #[test]
    fn parse_errors_name_offsets() {
        assert!(matches!(
            SmallGraph::from_graph6(""),
            Err(Error::Graph6 { offset: 0, .. })
        ));
        assert!(matches!(
            SmallGraph::from_graph6("Dhcx"),
            Err(Error::Graph6 { offset: 3, .. })
        ));
        assert!(matches!(
            SmallGraph::from_graph6("Dh"),
            Err(Error::Graph6 { offset: 2, .. })
        ));
        assert!(matches!(
            SmallGraph::from_graph6("D h"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        // 65 vertices
        assert!(matches!(
            SmallGraph::from_graph6("~?@@"),
            Err(Error::Graph6 { offset: 0, .. })
        ));
        // the last sextet of C5 has four padding bits
        assert!(matches!(
            SmallGraph::from_graph6("Dhd"),
            Err(Error::Graph6 { offset: 2, .. })
        ));
    }

    #[test]
    fn complement_basics() {
        let e5 = SmallGraph::empty(5).unwrap();
        assert_eq!(e5.complement(), SmallGraph::complete(5).unwrap());
        let c5 = SmallGraph::c5();
        assert_eq!(c5.complement().complement(), c5);
        assert_eq!(c5.complement().edge_count(), 5);
        assert!(c5.complement().is_well_formed());
    }

    #[test]
    fn lexicographic_product_sizes() {
        let c5 = SmallGraph::c5();
        let e2 = SmallGraph::empty(2).unwrap();
        let g = c5.lexicographic_product(&e2).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 20);
        assert!(g.is_well_formed());
        assert!(matches!(
            SmallGraph::complete(9)
                .unwrap()
                .lexicographic_product(&SmallGraph::c5().lexicographic_product(&e2).unwrap()),
            Err(Error::TooManyVertices(90))
        ));
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(SmallGraph::from_edges(3, &[(0, 3)]).is_err());
        assert!(SmallGraph::from_edges(3, &[(1, 1)]).is_err());
        assert!(SmallGraph::empty(65).is_err());
    }
}
