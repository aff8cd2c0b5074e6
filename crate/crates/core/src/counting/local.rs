//! Quantities local to one induced pentagon `Z`: extension densities,
//! pentagon scoring and the funky-pair partition.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{c5_matcher, InducedMatcher, PatternFamily};
use crate::error::{Error, Result};
use crate::graph::{Bits, SmallGraph};
use crate::rational::{binomial, serde_rational, serde_rational_vec, Rational};

/// An induced 5-cycle with a fixed cyclic order: `z[i] z[i+1]` are edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Pentagon([usize; 5]);

impl Pentagon {
    /// Validates that `order` walks an induced 5-cycle of `g`.
    pub fn new(g: &SmallGraph, order: [usize; 5]) -> Result<Self> {
        let mut mask = 0u64;
        for &v in &order {
            g.check_vertex(v)?;
            if mask >> v & 1 == 1 {
                return Err(Error::RepeatedVertex(v));
            }
            mask |= 1 << v;
        }
        let cyclic = (0..5).all(|i| {
            g.has_edge(order[i], order[(i + 1) % 5]) && !g.has_edge(order[i], order[(i + 2) % 5])
        });
        if cyclic {
            Ok(Pentagon(order))
        } else {
            Err(Error::NotPentagon(order.to_vec()))
        }
    }

    /// Orients the induced 5-cycle on `mask`: starts at the smallest vertex
    /// and steps to its smaller neighbor first.
    pub fn from_mask(g: &SmallGraph, mask: u64) -> Result<Self> {
        let vs: Vec<usize> = Bits(mask).collect();
        if vs.len() != 5 || vs.iter().any(|&v| v >= g.n()) || !c5_matcher().matches_mask(g, mask) {
            return Err(Error::NotPentagon(vs));
        }
        let mut order = [vs[0]; 5];
        let mut prev_mask = 1u64 << vs[0];
        for i in 1..5 {
            let next = (g.neighbors(order[i - 1]) & mask & !prev_mask).trailing_zeros() as usize;
            order[i] = next;
            prev_mask |= 1 << next;
        }
        Pentagon::new(g, order)
    }

    pub fn from_set(g: &SmallGraph, set: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &v in set {
            g.check_vertex(v)?;
            if mask >> v & 1 == 1 {
                return Err(Error::RepeatedVertex(v));
            }
            mask |= 1 << v;
        }
        Self::from_mask(g, mask)
    }

    pub fn vertices(&self) -> [usize; 5] {
        self.0
    }

    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | 1 << v)
    }

    pub fn sorted(&self) -> [usize; 5] {
        let mut s = self.0;
        s.sort_unstable();
        s
    }
}

fn c22111_matcher() -> &'static InducedMatcher {
    static M: OnceLock<InducedMatcher> = OnceLock::new();
    M.get_or_init(|| PatternFamily::c22111().matcher())
}

fn c31111_matcher() -> &'static InducedMatcher {
    static M: OnceLock<InducedMatcher> = OnceLock::new();
    M.get_or_init(|| PatternFamily::c31111().matcher())
}

/// For each matcher, the number of pairs `{p, q}` outside `zmask` such that
/// `zmask + p + q` induces one of its patterns.
pub fn local_counts(g: &SmallGraph, zmask: u64, matchers: &[&InducedMatcher]) -> Vec<u64> {
    let rest: Vec<usize> = Bits(g.vertex_mask() & !zmask).collect();
    let mut counts = vec![0u64; matchers.len()];
    for (a, &p) in rest.iter().enumerate() {
        for &q in &rest[a + 1..] {
            let m = zmask | 1 << p | 1 << q;
            for (c, matcher) in counts.iter_mut().zip(matchers) {
                if matcher.matches_mask(g, m) {
                    *c += 1;
                }
            }
        }
    }
    counts
}

fn extension_pairs(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(binomial(n.saturating_sub(5) as u64, 2)))
}

/// Number of 7-sets containing `z` that induce a member of `fam`, divided by
/// `C(n-5, 2)`; zero when there are no two-vertex extensions.
pub fn local_density_7(g: &SmallGraph, z: &[usize], fam: &PatternFamily) -> Result<Rational> {
    let pentagon = Pentagon::from_set(g, z)?;
    if fam.order() != 7 {
        return Err(Error::Precondition(format!(
            "family {} has {}-vertex members, expected 7",
            fam.label,
            fam.order()
        )));
    }
    let den = extension_pairs(g.n());
    if den.is_zero() {
        return Ok(Rational::zero());
    }
    let owned;
    let m: &InducedMatcher = if std::ptr::eq(fam, PatternFamily::c22111()) {
        c22111_matcher()
    } else if std::ptr::eq(fam, PatternFamily::c31111()) {
        c31111_matcher()
    } else {
        owned = fam.matcher();
        &owned
    };
    let count = local_counts(g, pentagon.mask(), &[m])[0];
    Ok(Rational::from_integer(BigInt::from(count)) / den)
}

/// The induced pentagon maximizing `C22111(Z) - a * C31111(Z)`, ties broken
/// toward the lexicographically least vertex set, with its score.
pub fn best_pentagon(g: &SmallGraph, a: &Rational) -> Result<(Pentagon, Rational)> {
    let pentagons = c5_matcher().collect(g);
    if pentagons.is_empty() {
        return Err(Error::NoInducedC5);
    }
    let matchers = [c22111_matcher(), c31111_matcher()];
    let counts: Vec<(u64, u64)> = pentagons
        .par_iter()
        .map(|&z| {
            let c = local_counts(g, z, &matchers);
            (c[0], c[1])
        })
        .collect();
    let mut best: Option<(u64, Rational)> = None;
    for (&z, &(c22, c31)) in pentagons.iter().zip(&counts) {
        let score = Rational::from_integer(BigInt::from(c22))
            - a * Rational::from_integer(BigInt::from(c31));
        if best.as_ref().is_none_or(|(_, s)| score > *s) {
            best = Some((z, score));
        }
    }
    let (z, numer) = best.expect("non-empty");
    let den = extension_pairs(g.n());
    let score = if den.is_zero() {
        Rational::zero()
    } else {
        numer / den
    };
    Ok((Pentagon::from_mask(g, z)?, score))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VertexFunkyDegree {
    pub vertex: usize,
    pub class: usize,
    /// Funky pairs at `vertex`, divided by `n`.
    #[serde(with = "serde_rational")]
    pub value: Rational,
}

/// Profile of a graph relative to a reference pentagon `Z`.
///
/// `classes[i]` for `i` in `1..=5` holds the vertices that can replace
/// `z_i` in `Z`; `classes[0]` holds everything else.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartitionAnalysis {
    pub n: usize,
    pub pentagon: [usize; 5],
    pub classes: Vec<Vec<usize>>,
    /// Class sizes divided by `n`, `x[0]` first.
    #[serde(with = "serde_rational_vec")]
    pub x: Vec<Rational>,
    /// Funky pairs divided by `n^2`.
    #[serde(with = "serde_rational")]
    pub f: Rational,
    pub df_per_vertex: Vec<VertexFunkyDegree>,
    pub funky_pairs: Vec<(usize, usize)>,
}

pub fn funky_analysis(g: &SmallGraph, z: &Pentagon) -> Result<PartitionAnalysis> {
    let z = Pentagon::new(g, z.vertices())?;
    let zs = z.vertices();
    let zmask = z.mask();
    let n = g.n();
    let m = c5_matcher();

    let mut class_mask = [0u64; 6];
    for v in 0..n {
        let mut class = 0;
        for (i, &zi) in zs.iter().enumerate() {
            let probe = (zmask & !(1u64 << zi)) | 1 << v;
            if probe.count_ones() == 5 && m.matches_mask(g, probe) {
                debug_assert_eq!(class, 0, "replacement classes are disjoint");
                class = i + 1;
            }
        }
        class_mask[class] |= 1 << v;
    }

    let mut funky_pairs = Vec::new();
    let mut funky_degree = vec![0u64; n];
    for i in 1..=5 {
        for j in i + 1..=5 {
            let expected = g.has_edge(zs[i - 1], zs[j - 1]);
            for v in Bits(class_mask[i]) {
                let actual = g.neighbors(v) & class_mask[j];
                let wrong = if expected {
                    class_mask[j] & !actual
                } else {
                    actual
                };
                for w in Bits(wrong) {
                    funky_pairs.push((v.min(w), v.max(w)));
                    funky_degree[v] += 1;
                    funky_degree[w] += 1;
                }
            }
        }
    }
    funky_pairs.sort_unstable();

    let nr = Rational::from_integer(BigInt::from(n));
    let x = class_mask
        .iter()
        .map(|m| Rational::from_integer(BigInt::from(m.count_ones())) / &nr)
        .collect();
    let f = Rational::from_integer(BigInt::from(funky_pairs.len())) / (&nr * &nr);
    let mut df_per_vertex = Vec::new();
    for (v, &deg) in funky_degree.iter().enumerate().take(n) {
        if let Some(class) = (1..=5).find(|&c| class_mask[c] >> v & 1 == 1) {
            df_per_vertex.push(VertexFunkyDegree {
                vertex: v,
                class,
                value: Rational::from_integer(BigInt::from(deg)) / &nr,
            });
        }
    }
    Ok(PartitionAnalysis {
        n,
        pentagon: zs,
        classes: class_mask.iter().map(|&m| Bits(m).collect()).collect(),
        x,
        f,
        df_per_vertex,
        funky_pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blowup::BlowupTree;
    use crate::rational::{int, ratio};

    fn pentagon_blowup(parts: [usize; 5]) -> SmallGraph {
        BlowupTree::pentagon_parts(&parts)
            .unwrap()
            .realize()
            .unwrap()
    }

    /// One vertex from each class of a pentagon blow-up, in cyclic order.
    fn transversal(parts: [usize; 5]) -> [usize; 5] {
        let mut start = 0;
        let mut out = [0; 5];
        for (i, p) in parts.iter().enumerate() {
            out[i] = start;
            start += p;
        }
        out
    }

    #[test]
    fn pentagon_orientation() {
        let c5 = SmallGraph::c5();
        let p = Pentagon::from_mask(&c5, 0b11111).unwrap();
        assert_eq!(p.vertices(), [0, 1, 2, 3, 4]);
        assert!(Pentagon::new(&c5, [0, 2, 4, 1, 3]).is_err());
        assert!(Pentagon::new(&c5, [0, 1, 2, 3, 3]).is_err());
        assert!(Pentagon::from_mask(&SmallGraph::complete(5).unwrap(), 0b11111).is_err());
    }

    #[test]
    fn single_extension_of_22111_blowup() {
        let g = pentagon_blowup([2, 2, 1, 1, 1]);
        let z = transversal([2, 2, 1, 1, 1]);
        let d = local_density_7(&g, &z, PatternFamily::c22111()).unwrap();
        assert_eq!(d, int(1));
        let d = local_density_7(&g, &z, PatternFamily::c31111()).unwrap();
        assert_eq!(d, int(0));
    }

    #[test]
    fn six_vertices_have_no_extensions() {
        let g = pentagon_blowup([2, 1, 1, 1, 1]);
        let d = local_density_7(&g, &[0, 2, 3, 4, 5], PatternFamily::c22111()).unwrap();
        assert_eq!(d, int(0));
    }

    #[test]
    fn local_density_rejects_non_pentagons() {
        let g = SmallGraph::complete(8).unwrap();
        assert!(local_density_7(&g, &[0, 1, 2, 3, 4], PatternFamily::c22111()).is_err());
    }

    #[test]
    fn best_pentagon_on_c5() {
        let (z, score) = best_pentagon(&SmallGraph::c5(), &ratio(398, 100)).unwrap();
        assert_eq!(z.vertices(), [0, 1, 2, 3, 4]);
        assert_eq!(score, int(0));
        assert_eq!(
            best_pentagon(&SmallGraph::complete(6).unwrap(), &int(1)),
            Err(Error::NoInducedC5)
        );
    }

    #[test]
    fn funky_analysis_of_clean_blowup() {
        let parts = [3, 2, 2, 2, 1];
        let g = pentagon_blowup(parts);
        let z = Pentagon::new(&g, transversal(parts)).unwrap();
        let pa = funky_analysis(&g, &z).unwrap();
        assert!(pa.classes[0].is_empty());
        assert_eq!(pa.f, int(0));
        assert_eq!(pa.x[1], ratio(3, 10));
        assert_eq!(pa.x.iter().sum::<Rational>(), int(1));
        assert!(pa.df_per_vertex.iter().all(|d| d.value == int(0)));
    }

    #[test]
    fn funky_analysis_finds_planted_defect() {
        let parts = [3, 2, 2, 2, 1];
        let mut g = pentagon_blowup(parts);
        // vertices 1 (class 1) and 4 (class 2) are joined in the blow-up
        assert!(g.has_edge(1, 4));
        g.remove_edge(1, 4);
        let z = Pentagon::new(&g, transversal(parts)).unwrap();
        let pa = funky_analysis(&g, &z).unwrap();
        assert_eq!(pa.funky_pairs, vec![(1, 4)]);
        assert_eq!(pa.f, ratio(1, 100));
        let d1 = pa.df_per_vertex.iter().find(|d| d.vertex == 1).unwrap();
        assert_eq!(d1.value, ratio(1, 10));
    }

    #[test]
    fn unmatched_vertex_lands_in_x0() {
        // C5 plus a vertex joined to everything
        let mut g = SmallGraph::c5()
            .disjoint_union(&SmallGraph::empty(1).unwrap())
            .unwrap();
        for v in 0..5 {
            g.add_edge(5, v);
        }
        let z = Pentagon::new(&g, [0, 1, 2, 3, 4]).unwrap();
        let pa = funky_analysis(&g, &z).unwrap();
        assert_eq!(pa.classes[0], vec![5]);
        assert_eq!(pa.x[0], ratio(1, 6));
    }
}
