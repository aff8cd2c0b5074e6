//! Induced-pattern counting.
//!
//! Subsets are enumerated in increasing vertex order. A subset's induced
//! graph, read in that order, is packed into a code (pair `(i, j)`, `i < j`,
//! at bit `j(j-1)/2 + i`), so the code of the first `j` chosen vertices is a
//! prefix of the full code. Every labeled copy of every target pattern is
//! tabulated up front together with all of its prefixes, and a branch is cut
//! as soon as its prefix code appears in no table.

mod local;

use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canonical::{canonical_key, CanonKey};
use crate::error::{Error, Result};
use crate::graph::{Bits, SmallGraph};

pub use local::{
    best_pentagon, funky_analysis, local_counts, local_density_7, PartitionAnalysis, Pentagon,
    VertexFunkyDegree,
};

/// Largest pattern size handled by [`InducedMatcher`].
pub const MAX_PATTERN: usize = 7;

#[inline]
fn pair_offset(j: usize) -> usize {
    j * j.saturating_sub(1) / 2
}

/// Prefix tables for recognizing induced copies of a set of equal-sized
/// patterns.
#[derive(Clone, Debug)]
pub struct InducedMatcher {
    k: usize,
    tables: Vec<Vec<u64>>,
}

impl InducedMatcher {
    pub fn new(patterns: &[SmallGraph]) -> Self {
        let k = patterns.first().map_or(0, SmallGraph::n);
        assert!(
            k <= MAX_PATTERN,
            "patterns of at most {MAX_PATTERN} vertices"
        );
        assert!(
            patterns.iter().all(|p| p.n() == k),
            "patterns must share a vertex count"
        );
        let mut tables: Vec<Vec<u64>> = (0..=k)
            .map(|j| vec![0u64; (1usize << pair_offset(j)).div_ceil(64)])
            .collect();
        let mut perm: Vec<usize> = (0..k).collect();
        for p in patterns {
            permutations(&mut perm, 0, &mut |sigma| {
                let mut code = 0usize;
                for j in 0..k {
                    for i in 0..j {
                        if p.has_edge(sigma[i], sigma[j]) {
                            code |= 1 << (pair_offset(j) + i);
                        }
                    }
                }
                for (j, table) in tables.iter_mut().enumerate() {
                    let c = code & ((1usize << pair_offset(j)) - 1);
                    table[c / 64] |= 1 << (c % 64);
                }
            });
        }
        if patterns.is_empty() {
            // nothing can match
            for t in &mut tables {
                t.iter_mut().for_each(|w| *w = 0);
            }
        }
        InducedMatcher { k, tables }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    fn accepts(&self, depth: usize, code: usize) -> bool {
        self.tables[depth][code / 64] >> (code % 64) & 1 == 1
    }

    /// Whether the vertices of `mask` induce one of the patterns.
    pub fn matches_mask(&self, g: &SmallGraph, mask: u64) -> bool {
        if mask.count_ones() as usize != self.k {
            return false;
        }
        let mut chosen = [0usize; MAX_PATTERN];
        let mut code = 0usize;
        for (j, v) in Bits(mask).enumerate() {
            let row = g.neighbors(v);
            for (i, &c) in chosen[..j].iter().enumerate() {
                code |= ((row >> c & 1) as usize) << (pair_offset(j) + i);
            }
            chosen[j] = v;
        }
        self.accepts(self.k, code)
    }

    #[allow(clippy::too_many_arguments)]
    fn walk<F: FnMut(u64)>(
        &self,
        g: &SmallGraph,
        chosen: &mut [usize; MAX_PATTERN],
        depth: usize,
        code: usize,
        start: usize,
        mask: u64,
        visit: &mut F,
    ) {
        if depth == self.k {
            visit(mask);
            return;
        }
        let n = g.n();
        let last = n - (self.k - depth);
        let off = pair_offset(depth);
        for v in start..=last {
            let row = g.neighbors(v);
            let mut c = code;
            for (i, &u) in chosen[..depth].iter().enumerate() {
                c |= ((row >> u & 1) as usize) << (off + i);
            }
            if self.accepts(depth + 1, c) {
                chosen[depth] = v;
                self.walk(g, chosen, depth + 1, c, v + 1, mask | 1 << v, visit);
            }
        }
    }

    /// Calls `visit` with the vertex mask of every induced copy, in
    /// lexicographic order of the sorted vertex tuples.
    pub fn for_each<F: FnMut(u64)>(&self, g: &SmallGraph, mut visit: F) {
        if self.k == 0 {
            visit(0);
            return;
        }
        if g.n() < self.k {
            return;
        }
        let mut chosen = [0usize; MAX_PATTERN];
        self.walk(g, &mut chosen, 0, 0, 0, 0, &mut visit);
    }

    /// Like [`for_each`](Self::for_each) but restricted to copies whose
    /// smallest vertex is `first`.
    fn for_each_from<F: FnMut(u64)>(&self, g: &SmallGraph, first: usize, visit: &mut F) {
        if g.n() < self.k || first > g.n() - self.k {
            return;
        }
        let mut chosen = [0usize; MAX_PATTERN];
        chosen[0] = first;
        self.walk(g, &mut chosen, 1, 0, first + 1, 1 << first, visit);
    }

    /// Number of induced copies, split over the first vertex in parallel.
    pub fn count(&self, g: &SmallGraph) -> u64 {
        if self.k == 0 {
            return 1;
        }
        (0..g.n())
            .into_par_iter()
            .map(|first| {
                let mut c = 0u64;
                self.for_each_from(g, first, &mut |_| c += 1);
                c
            })
            .sum()
    }

    /// Masks of all induced copies, in lexicographic order.
    pub fn collect(&self, g: &SmallGraph) -> Vec<u64> {
        if self.k == 0 {
            return vec![0];
        }
        let stripes: Vec<Vec<u64>> = (0..g.n())
            .into_par_iter()
            .map(|first| {
                let mut out = Vec::new();
                self.for_each_from(g, first, &mut |m| out.push(m));
                out
            })
            .collect();
        stripes.concat()
    }
}

fn permutations<F: FnMut(&[usize])>(perm: &mut Vec<usize>, i: usize, f: &mut F) {
    if i == perm.len() {
        f(perm);
        return;
    }
    for j in i..perm.len() {
        perm.swap(i, j);
        permutations(perm, i + 1, f);
        perm.swap(i, j);
    }
}

/// Shared matcher for the 5-cycle.
pub fn c5_matcher() -> &'static InducedMatcher {
    static M: OnceLock<InducedMatcher> = OnceLock::new();
    M.get_or_init(|| InducedMatcher::new(&[SmallGraph::c5()]))
}

/// Number of vertex subsets of `g` inducing a copy of `pattern`.
pub fn count_induced(g: &SmallGraph, pattern: &SmallGraph) -> u64 {
    if pattern.n() > g.n() {
        return 0;
    }
    if pattern.n() == 5 && *pattern == SmallGraph::c5() {
        return c5_matcher().count(g);
    }
    InducedMatcher::new(std::slice::from_ref(pattern)).count(g)
}

/// Induced 5-cycle count, written `C(G)`.
pub fn c5_count(g: &SmallGraph) -> u64 {
    c5_matcher().count(g)
}

/// A named set of pairwise non-isomorphic graphs on a common vertex count.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PatternFamily {
    pub label: String,
    #[serde(with = "graph6_list")]
    pub members: Vec<SmallGraph>,
}

impl PatternFamily {
    /// Deduplicates `members` by isomorphism class and orders them by
    /// canonical key, so equal families compare equal.
    pub fn new(label: impl Into<String>, members: impl IntoIterator<Item = SmallGraph>) -> Self {
        let mut keyed: Vec<(CanonKey, SmallGraph)> = Vec::new();
        for m in members {
            let key = canonical_key(&m);
            if !keyed.iter().any(|(k, _)| *k == key) {
                keyed.push((key, key.graph()));
            }
        }
        keyed.sort_by_key(|(k, _)| *k);
        let members: Vec<SmallGraph> = keyed.into_iter().map(|(_, g)| g).collect();
        assert!(
            members.windows(2).all(|w| w[0].n() == w[1].n()),
            "family members must share a vertex count"
        );
        PatternFamily {
            label: label.into(),
            members,
        }
    }

    pub fn single(label: impl Into<String>, g: &SmallGraph) -> Self {
        Self::new(label, [g.clone()])
    }

    pub fn order(&self) -> usize {
        self.members.first().map_or(0, SmallGraph::n)
    }

    pub fn matcher(&self) -> InducedMatcher {
        InducedMatcher::new(&self.members)
    }

    pub fn keys(&self) -> Vec<CanonKey> {
        self.members.iter().map(canonical_key).collect()
    }

    pub fn c5() -> &'static PatternFamily {
        static F: OnceLock<PatternFamily> = OnceLock::new();
        F.get_or_init(|| PatternFamily::single("C5", &SmallGraph::c5()))
    }

    /// 5-cycle with two vertices doubled, inner edges arbitrary.
    pub fn c22111() -> &'static PatternFamily {
        static F: OnceLock<PatternFamily> = OnceLock::new();
        F.get_or_init(|| {
            crate::limit::pattern_family("C22111", &SmallGraph::c5(), &[2, 2, 1, 1, 1])
                .expect("five multiplicities for five base vertices")
        })
    }

    /// 5-cycle with one vertex tripled, inner edges arbitrary.
    pub fn c31111() -> &'static PatternFamily {
        static F: OnceLock<PatternFamily> = OnceLock::new();
        F.get_or_init(|| {
            crate::limit::pattern_family("C31111", &SmallGraph::c5(), &[3, 1, 1, 1, 1])
                .expect("five multiplicities for five base vertices")
        })
    }

    /// Looks up `c5`, `c22111` or `c31111` (case-insensitive).
    pub fn by_name(name: &str) -> Option<&'static PatternFamily> {
        match name.to_ascii_lowercase().as_str() {
            "c5" => Some(Self::c5()),
            "c22111" => Some(Self::c22111()),
            "c31111" => Some(Self::c31111()),
            _ => None,
        }
    }
}

mod graph6_list {
    use super::SmallGraph;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[SmallGraph], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(SmallGraph::to_graph6)
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<SmallGraph>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|t| SmallGraph::from_graph6(t).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Sum of induced counts over the family's members. Members are distinct
/// isomorphism classes, so one combined table counts each subset at most once.
pub fn count_family(g: &SmallGraph, fam: &PatternFamily) -> u64 {
    if fam.members.is_empty() || fam.order() > g.n() {
        return 0;
    }
    fam.matcher().count(g)
}

/// Per-vertex pentagon density floor `ell / 4!` implied by a global
/// density `ell`: a vertex lies in about `ell C(n,4)` copies.
pub fn per_vertex_floor(ell: &crate::rational::Rational) -> crate::rational::Rational {
    ell / crate::rational::int(24)
}

/// Per-vertex induced 5-cycle counts `C5^u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexCounts {
    pub per_vertex: Vec<u64>,
    pub total: u64,
}

pub fn vertex_c5_counts(g: &SmallGraph) -> VertexCounts {
    let mut per_vertex = vec![0u64; g.n()];
    let mut total = 0;
    c5_matcher().for_each(g, |mask| {
        total += 1;
        for v in Bits(mask) {
            per_vertex[v] += 1;
        }
    });
    VertexCounts { per_vertex, total }
}

/// Number of induced 5-cycles containing both `u` and `v`, written `C5^{uv}`.
pub fn pair_c5_count(g: &SmallGraph, u: usize, v: usize) -> Result<u64> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::RepeatedVertex(u));
    }
    Ok(pair_c5_count_unchecked(g, u, v))
}

pub(crate) fn pair_c5_count_unchecked(g: &SmallGraph, u: usize, v: usize) -> u64 {
    let m = c5_matcher();
    let base = (1u64 << u) | (1u64 << v);
    let rest: Vec<usize> = Bits(g.vertex_mask() & !base).collect();
    let mut count = 0;
    for (a, &x) in rest.iter().enumerate() {
        for (b, &y) in rest.iter().enumerate().skip(a + 1) {
            for &z in &rest[b + 1..] {
                if m.matches_mask(g, base | 1 << x | 1 << y | 1 << z) {
                    count += 1;
                }
            }
        }
    }
    count
}
