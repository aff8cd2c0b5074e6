//! Blow-up constructions, the balanced recursion `R(n)`, and detection of
//! pentagon-structured 5-partitions.

use std::collections::HashMap;
use std::ops::Range;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::counting::{c5_count, c5_matcher, Pentagon};
use crate::error::{Error, Result};
use crate::graph::{Bits, SmallGraph, MAX_VERTICES};
use crate::rational::{factorial, Rational};

/// Recursive description of a (possibly unbalanced, possibly iterated)
/// blow-up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlowupTree {
    /// A graph used as is.
    Leaf(SmallGraph),
    /// `base` with vertex `i` replaced by the realization of `children[i]`.
    Node {
        base: SmallGraph,
        children: Vec<BlowupTree>,
    },
}

impl BlowupTree {
    pub fn vertex() -> Self {
        BlowupTree::Leaf(SmallGraph::empty(1).expect("1 <= 64"))
    }

    pub fn node(base: SmallGraph, children: Vec<BlowupTree>) -> Result<Self> {
        if children.len() != base.n() {
            return Err(Error::Precondition(format!(
                "blow-up of a {}-vertex base needs {} children, got {}",
                base.n(),
                base.n(),
                children.len()
            )));
        }
        Ok(BlowupTree::Node { base, children })
    }

    /// `base` blown up `k - 1` times into itself; `k = 1` is `base`.
    pub fn iterated(base: &SmallGraph, k: usize) -> Self {
        assert!(k >= 1, "iteration depth starts at 1");
        if k == 1 {
            BlowupTree::Leaf(base.clone())
        } else {
            BlowupTree::Node {
                base: base.clone(),
                children: vec![Self::iterated(base, k - 1); base.n()],
            }
        }
    }

    /// `C5^{kx}`, on `5^k` vertices.
    pub fn c5_iterated(k: usize) -> Self {
        Self::iterated(&SmallGraph::c5(), k)
    }

    /// Pentagon blow-up with independent parts of the given sizes.
    pub fn pentagon_parts(parts: &[usize]) -> Result<Self> {
        let inner = parts
            .iter()
            .map(|&p| SmallGraph::empty(p))
            .collect::<Result<Vec<_>>>()?;
        Self::pentagon_with_inner(inner)
    }

    /// Pentagon blow-up whose parts induce the given graphs.
    pub fn pentagon_with_inner(inner: Vec<SmallGraph>) -> Result<Self> {
        Self::node(
            SmallGraph::c5(),
            inner.into_iter().map(BlowupTree::Leaf).collect(),
        )
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            BlowupTree::Leaf(g) => g.n(),
            BlowupTree::Node { children, .. } => children.iter().map(Self::vertex_count).sum(),
        }
    }

    /// Vertex ranges of the top-level parts in the realization.
    pub fn top_classes(&self) -> Vec<Range<usize>> {
        match self {
            BlowupTree::Leaf(g) => (0..g.n()).map(|v| v..v + 1).collect(),
            BlowupTree::Node { children, .. } => {
                let mut start = 0;
                children
                    .iter()
                    .map(|c| {
                        let r = start..start + c.vertex_count();
                        start = r.end;
                        r
                    })
                    .collect()
            }
        }
    }

    pub fn realize(&self) -> Result<SmallGraph> {
        let n = self.vertex_count();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut g = SmallGraph::empty(n)?;
        self.fill(&mut g, 0);
        Ok(g)
    }

    fn fill(&self, g: &mut SmallGraph, offset: usize) -> usize {
        match self {
            BlowupTree::Leaf(h) => {
                for (u, v) in h.edges() {
                    g.add_edge(offset + u, offset + v);
                }
                h.n()
            }
            BlowupTree::Node { base, children } => {
                let mut ranges = Vec::with_capacity(children.len());
                let mut at = offset;
                for c in children {
                    let size = c.fill(g, at);
                    ranges.push(at..at + size);
                    at += size;
                }
                for (x, y) in base.edges() {
                    for u in ranges[x].clone() {
                        for v in ranges[y].clone() {
                            g.add_edge(u, v);
                        }
                    }
                }
                at - offset
            }
        }
    }

    /// Parses the textual tree syntax used by the command line:
    ///
    /// ```text
    /// tree  := graph [ "^" INT ] | graph "(" tree { "," tree } ")"
    /// graph := "c5" | "k" INT | "e" INT | INT | "g6:" GRAPH6
    /// ```
    ///
    /// A bare integer `m` is an independent set on `m` vertices; `g^k` is the
    /// `(k-1)`-fold iterated blow-up of `g`. Examples: `c5^2`,
    /// `c5(2,2,1,1,1)`, `c5(k3,e2,c5,1,1)`.
    pub fn parse(spec: &str) -> Result<Self> {
        let mut p = TreeParser {
            s: spec.as_bytes(),
            pos: 0,
        };
        let t = p.tree()?;
        if p.pos != p.s.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(t)
    }
}

struct TreeParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl TreeParser<'_> {
    fn err(&self, reason: &str) -> Error {
        Error::TreeSpec {
            offset: self.pos,
            reason: reason.to_string(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn int(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| Error::TreeSpec {
                offset: start,
                reason: "integer too large".into(),
            })
    }

    fn graph(&mut self) -> Result<(SmallGraph, bool)> {
        let start = self.pos;
        let rest = &self.s[self.pos..];
        let sized = |p: &mut Self, make: fn(usize) -> Result<SmallGraph>| -> Result<SmallGraph> {
            let n = p.int()?;
            make(n).map_err(|_| Error::TreeSpec {
                offset: start,
                reason: format!("{n} vertices exceeds the limit of 64"),
            })
        };
        if rest.starts_with(b"c5") {
            self.pos += 2;
            Ok((SmallGraph::c5(), true))
        } else if rest.starts_with(b"g6:") {
            self.pos += 3;
            let from = self.pos;
            while self
                .peek()
                .is_some_and(|b| !matches!(b, b',' | b'(' | b')'))
            {
                self.pos += 1;
            }
            let text = std::str::from_utf8(&self.s[from..self.pos])
                .map_err(|_| self.err("non-ASCII graph6"))?;
            let g = SmallGraph::from_graph6(text).map_err(|e| Error::TreeSpec {
                offset: from,
                reason: e.to_string(),
            })?;
            Ok((g, false))
        } else if rest.first() == Some(&b'k') {
            self.pos += 1;
            Ok((sized(self, SmallGraph::complete)?, true))
        } else if rest.first() == Some(&b'e') {
            self.pos += 1;
            Ok((sized(self, SmallGraph::empty)?, true))
        } else if rest.first().is_some_and(u8::is_ascii_digit) {
            Ok((sized(self, SmallGraph::empty)?, true))
        } else {
            Err(self.err("expected c5, k<n>, e<n>, <n> or g6:<graph6>"))
        }
    }

    fn tree(&mut self) -> Result<BlowupTree> {
        let (g, may_iterate) = self.graph()?;
        match self.peek() {
            Some(b'^') if may_iterate => {
                self.pos += 1;
                let at = self.pos;
                let k = self.int()?;
                if k == 0 {
                    return Err(Error::TreeSpec {
                        offset: at,
                        reason: "iteration depth starts at 1".into(),
                    });
                }
                Ok(BlowupTree::iterated(&g, k))
            }
            Some(b'(') => {
                let open = self.pos;
                self.pos += 1;
                let mut children = vec![self.tree()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    children.push(self.tree()?);
                }
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ',' or ')'"));
                }
                self.pos += 1;
                BlowupTree::node(g, children).map_err(|e| Error::TreeSpec {
                    offset: open,
                    reason: e.to_string(),
                })
            }
            _ => Ok(BlowupTree::Leaf(g)),
        }
    }
}

/// Part sizes "as equal as possible", largest first.
pub fn balanced_parts(n: u64) -> [u64; 5] {
    let (q, r) = (n / 5, n % 5);
    let mut parts = [q; 5];
    for p in parts.iter_mut().take(r as usize) {
        *p += 1;
    }
    parts
}

fn recursion_memo() -> &'static RwLock<HashMap<u64, BigUint>> {
    static MEMO: OnceLock<RwLock<HashMap<u64, BigUint>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Induced 5-cycle count of the balanced recursive construction on `n`
/// vertices: `R(n) = abcde + R(a) + ... + R(e)` with balanced parts, and
/// `R(n) = 0` for `n < 5`.
pub fn recursion_value(n: u64) -> BigUint {
    if n < 5 {
        return BigUint::zero();
    }
    if let Some(v) = recursion_memo().read().expect("memo lock").get(&n) {
        return v.clone();
    }
    let parts = balanced_parts(n);
    let mut value: BigUint = parts.iter().map(|&p| BigUint::from(p)).product();
    for &p in &parts {
        value += recursion_value(p);
    }
    recursion_memo()
        .write()
        .expect("memo lock")
        .insert(n, value.clone());
    value
}

/// Five classes with pentagon cross-adjacency: `x_i x_j` is an edge iff
/// `j - i` is `1` or `4` mod 5.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FivePartition {
    pub classes: [Vec<usize>; 5],
}

impl FivePartition {
    pub fn sizes(&self) -> [usize; 5] {
        std::array::from_fn(|i| self.classes[i].len())
    }

    /// Checks the pentagon rule exactly for the class labels `label[v]` in
    /// `0..5`. On failure returns a violating pair, or `None` when a class
    /// is empty.
    pub fn verify(
        g: &SmallGraph,
        label: &[u8],
    ) -> std::result::Result<Self, Option<(usize, usize)>> {
        let mut masks = [0u64; 5];
        for (v, &c) in label.iter().enumerate() {
            masks[c as usize] |= 1 << v;
        }
        if masks.contains(&0) {
            return Err(None);
        }
        for (v, &c) in label.iter().enumerate() {
            let c = c as usize;
            let expected = masks[(c + 1) % 5] | masks[(c + 4) % 5];
            let actual = g.neighbors(v) & !masks[c];
            let diff = expected ^ actual;
            if diff != 0 {
                let w = diff.trailing_zeros() as usize;
                return Err(Some((v.min(w), v.max(w))));
            }
        }
        Ok(FivePartition {
            classes: std::array::from_fn(|i| Bits(masks[i]).collect()),
        })
    }
}

/// Why no 5-partition was found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionFailure {
    /// A vertex pair violating the pentagon rule in the best candidate.
    pub pair: Option<(usize, usize)>,
    pub reason: String,
}

/// Groups vertices whose adjacency agrees on more than half of the other
/// vertices, greedily against the first member of each group.
fn majority_clusters(g: &SmallGraph) -> Vec<u64> {
    let n = g.n();
    let all = g.vertex_mask();
    let mut reps: Vec<(usize, u64)> = Vec::new();
    for v in 0..n {
        let found = reps.iter_mut().find(|(r, _)| {
            let others = all & !(1u64 << v) & !(1u64 << *r);
            let agree = (!(g.neighbors(v) ^ g.neighbors(*r)) & others).count_ones() as usize;
            2 * agree > n - 2
        });
        match found {
            Some((_, m)) => *m |= 1 << v,
            None => reps.push((v, 1 << v)),
        }
    }
    reps.into_iter().map(|(_, m)| m).collect()
}

/// Cyclic orders of four items after a fixed first one, up to reflection.
fn pentagon_orders() -> Vec<[usize; 5]> {
    let mut out = Vec::new();
    for a in 1..5 {
        for b in 1..5 {
            for c in 1..5 {
                for d in 1..5 {
                    let o = [0, a, b, c, d];
                    let distinct = (1..5).all(|i| (1..5).filter(|&j| o[j] == o[i]).count() == 1);
                    // keep one of each mirror pair
                    if distinct && a < d {
                        out.push(o);
                    }
                }
            }
        }
    }
    out
}

fn labels_from_masks(n: usize, order: &[usize; 5], clusters: &[u64]) -> Vec<u8> {
    let mut label = vec![0u8; n];
    for (pos, &ci) in order.iter().enumerate() {
        for v in Bits(clusters[ci]) {
            label[v] = pos as u8;
        }
    }
    label
}

/// Finds a 5-partition if one exists (all five classes non-empty).
///
/// Majority clustering proposes candidates first; the exact fallback tries
/// every induced pentagon through vertex 0 as a transversal, which forces
/// every other vertex into the class it can substitute for. Every returned
/// partition is verified exactly.
pub fn detect_5_partition(g: &SmallGraph) -> std::result::Result<FivePartition, PartitionFailure> {
    let n = g.n();
    if n < 5 {
        return Err(PartitionFailure {
            pair: None,
            reason: format!("{n} vertices cannot fill five classes"),
        });
    }
    let mut first_violation: Option<(usize, usize)> = None;
    fn note(
        first: &mut Option<(usize, usize)>,
        r: std::result::Result<FivePartition, Option<(usize, usize)>>,
    ) -> Option<FivePartition> {
        match r {
            Ok(p) => Some(p),
            Err(pair) => {
                if first.is_none() {
                    *first = pair;
                }
                None
            }
        }
    }

    let clusters = majority_clusters(g);
    if clusters.len() == 5 {
        for order in pentagon_orders() {
            if let Some(p) = note(
                &mut first_violation,
                FivePartition::verify(g, &labels_from_masks(n, &order, &clusters)),
            ) {
                return Ok(p);
            }
        }
    }

    let m = c5_matcher();
    let mut found = None;
    m.for_each(g, |mask| {
        if found.is_some() || mask & 1 == 0 {
            return;
        }
        let z = Pentagon::from_mask(g, mask)
            .expect("matcher yields pentagons")
            .vertices();
        let mut label = vec![u8::MAX; n];
        for (v, lv) in label.iter_mut().enumerate() {
            for (i, &zi) in z.iter().enumerate() {
                let probe = (mask & !(1u64 << zi)) | 1 << v;
                if probe.count_ones() == 5 && m.matches_mask(g, probe) {
                    *lv = i as u8;
                }
            }
        }
        if label.iter().all(|&l| l != u8::MAX) {
            found = note(&mut first_violation, FivePartition::verify(g, &label));
        }
    });
    if let Some(p) = found {
        return Ok(p);
    }

    if first_violation.is_none() {
        let round_robin: Vec<u8> = (0..n).map(|v| (v % 5) as u8).collect();
        if let Some(p) = note(&mut first_violation, FivePartition::verify(g, &round_robin)) {
            return Ok(p);
        }
    }
    Err(PartitionFailure {
        pair: first_violation,
        reason: if clusters.len() == 5 {
            "majority clusters violate the pentagon rule and no pentagon transversal works".into()
        } else {
            format!(
                "majority clustering found {} groups and no pentagon transversal works",
                clusters.len()
            )
        },
    })
}

/// Both sides of `C(G[H]) = |G| C(H) + C(G) |H|^5`, where `G[H]` replaces
/// every vertex of `G` by a copy of `H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionCheck {
    pub lhs: u64,
    pub rhs: u64,
    /// Whether the outer graph itself admits a 5-partition.
    pub outer_partitioned: bool,
}

pub fn compose_identity_check(outer: &SmallGraph, h: &SmallGraph) -> Result<CompositionCheck> {
    let composed = outer.lexicographic_product(h)?;
    let lhs = c5_count(&composed);
    let rhs = outer.n() as u64 * c5_count(h) + c5_count(outer) * (h.n() as u64).pow(5);
    Ok(CompositionCheck {
        lhs,
        rhs,
        outer_partitioned: detect_5_partition(outer).is_ok(),
    })
}

/// Leading coefficient of the class-balance estimate: with limit density
/// `ell`, moving one vertex between parts that differ by two changes the
/// count by at most `(2 ell / 5!) (4/125) - 1/125` times `n^3`.
pub fn balance_leading_coefficient(ell: &Rational) -> Rational {
    let fact5 = Rational::from_integer(factorial(5).into());
    let inv125 = Rational::new(1.into(), 125.into());
    Rational::from_integer(2.into()) * ell / fact5 * Rational::from_integer(4.into()) * &inv125
        - inv125
}

/// `R(n) / C(n, 5)` as an exact rational.
pub fn recursion_density(n: u64) -> Rational {
    let den = crate::rational::binomial(n, 5);
    if den.is_zero() {
        return Rational::zero();
    }
    Rational::new(recursion_value(n).into(), den.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::is_isomorphic;
    use crate::rational::ratio;

    #[test]
    fn unit_blowup_is_the_base() {
        let t = BlowupTree::pentagon_parts(&[1, 1, 1, 1, 1]).unwrap();
        assert!(is_isomorphic(&t.realize().unwrap(), &SmallGraph::c5()));
    }

    #[test]
    fn doubled_pentagon_edges() {
        let g = BlowupTree::pentagon_parts(&[2; 5])
            .unwrap()
            .realize()
            .unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 20);
    }

    #[test]
    fn second_iterate_has_3130_pentagons() {
        let g = BlowupTree::c5_iterated(2).realize().unwrap();
        assert_eq!(g.n(), 25);
        assert_eq!(c5_count(&g), 3130);
        assert_eq!(recursion_value(25), BigUint::from(3130u32));
    }

    #[test]
    fn oversized_trees_are_rejected() {
        assert_eq!(
            BlowupTree::c5_iterated(3).realize(),
            Err(Error::TooManyVertices(125))
        );
        assert!(BlowupTree::node(SmallGraph::c5(), vec![BlowupTree::vertex()]).is_err());
    }

    #[test]
    fn recursion_small_values() {
        assert_eq!(recursion_value(4), BigUint::zero());
        assert_eq!(recursion_value(5), BigUint::from(1u32));
        assert_eq!(recursion_value(6), BigUint::from(2u32));
        assert_eq!(recursion_value(10), BigUint::from(32u32));
        assert_eq!(recursion_value(26), BigUint::from(3756u32));
        assert_eq!(balanced_parts(13), [3, 3, 3, 2, 2]);
    }

    #[test]
    fn tree_syntax() {
        let t = BlowupTree::parse("c5^2").unwrap();
        assert_eq!(t, BlowupTree::c5_iterated(2));
        let t = BlowupTree::parse("c5(2,2,1,1,1)").unwrap();
        assert_eq!(t.vertex_count(), 7);
        let t = BlowupTree::parse("c5(k3,e2,c5,g6:Dhc,1)").unwrap();
        assert_eq!(t.vertex_count(), 16);
        let g = t.realize().unwrap();
        assert!(g.has_edge(0, 1) && !g.has_edge(3, 4));
        assert!(matches!(
            BlowupTree::parse("c5(1,1)"),
            Err(Error::TreeSpec { offset: 2, .. })
        ));
        assert!(matches!(
            BlowupTree::parse("c5(1,1"),
            Err(Error::TreeSpec { offset: 6, .. })
        ));
        assert!(matches!(
            BlowupTree::parse("x"),
            Err(Error::TreeSpec { offset: 0, .. })
        ));
        assert!(matches!(
            BlowupTree::parse("c5^0"),
            Err(Error::TreeSpec { offset: 3, .. })
        ));
        assert!(matches!(
            BlowupTree::parse("k99"),
            Err(Error::TreeSpec { offset: 0, .. })
        ));
        assert!(matches!(
            BlowupTree::parse("c5 "),
            Err(Error::TreeSpec { offset: 2, .. })
        ));
    }

    #[test]
    fn detects_balanced_second_iterate() {
        let g = BlowupTree::c5_iterated(2).realize().unwrap();
        let p = detect_5_partition(&g).unwrap();
        assert_eq!(p.sizes(), [5; 5]);
    }

    #[test]
    fn complete_graph_has_no_partition() {
        let f = detect_5_partition(&SmallGraph::complete(5).unwrap()).unwrap_err();
        let (u, v) = f.pair.expect("violating pair");
        assert!(u < v && v < 5);
        assert!(detect_5_partition(&SmallGraph::c5().complement()).is_ok());
    }

    #[test]
    fn recovers_planted_unbalanced_partition() {
        let inner = vec![
            SmallGraph::complete(3).unwrap(),
            SmallGraph::from_edges(2, &[(0, 1)]).unwrap(),
            SmallGraph::empty(2).unwrap(),
            SmallGraph::from_edges(2, &[(0, 1)]).unwrap(),
            SmallGraph::empty(1).unwrap(),
        ];
        let t = BlowupTree::pentagon_with_inner(inner).unwrap();
        let g = t.realize().unwrap();
        let p = detect_5_partition(&g).unwrap();
        let mut got: Vec<Vec<usize>> = p.classes.to_vec();
        got.sort();
        let mut want: Vec<Vec<usize>> = t.top_classes().into_iter().map(|r| r.collect()).collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn composition_identity_small_cases() {
        let k1 = SmallGraph::empty(1).unwrap();
        let c = compose_identity_check(&SmallGraph::c5(), &k1).unwrap();
        assert_eq!((c.lhs, c.rhs), (1, 1));
        let c = compose_identity_check(&SmallGraph::c5(), &SmallGraph::c5()).unwrap();
        assert_eq!((c.lhs, c.rhs), (3130, 3130));
        assert!(c.outer_partitioned);
    }

    #[test]
    fn balance_coefficient_is_negative() {
        let c = balance_leading_coefficient(&ratio(1, 26));
        assert_eq!(c, ratio(8, 3120 * 125) - ratio(1, 125));
        assert!(c < Rational::zero());
    }
}
