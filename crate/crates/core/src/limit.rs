//! Exact pattern densities in iterated balanced blow-ups, both in the limit
//! and at finite depth.
//!
//! A vertex of the limit object sits in one of the `b` top-level parts with
//! equal probability and recursively inside a copy of the whole object, so
//! `k` independent samples either share a part (probability `b^{1-k}`, same
//! question again) or split across parts, where cross adjacency is forced by
//! the base. This gives one linear equation per pattern.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canonical::{automorphism_count, canonical_key, CanonKey, MAX_CANON};
use crate::counting::{count_family, PatternFamily, MAX_PATTERN};
use crate::error::{Error, Result};
use crate::graph::SmallGraph;
use crate::rational::{big, binomial, factorial, serde_rational, Rational};

/// All isomorphism classes obtained by blowing vertex `i` of `base` up into
/// `m_i` vertices (over every arrangement of the multiplicities on the base
/// vertices), with cross edges following the base and inner edges
/// arbitrary.
pub fn pattern_family(
    label: &str,
    base: &SmallGraph,
    multiplicities: &[usize],
) -> Result<PatternFamily> {
    if multiplicities.len() != base.n() {
        return Err(Error::MultiplicityLength {
            expected: base.n(),
            got: multiplicities.len(),
        });
    }
    let total: usize = multiplicities.iter().sum();
    if total > MAX_PATTERN {
        return Err(Error::Precondition(format!(
            "blown-up pattern has {total} vertices, at most {MAX_PATTERN} supported"
        )));
    }
    let mut arrangements: Vec<Vec<usize>> = Vec::new();
    let mut m = multiplicities.to_vec();
    m.sort_unstable();
    loop {
        arrangements.push(m.clone());
        if !next_permutation(&mut m) {
            break;
        }
    }
    let mut members = Vec::new();
    for arr in &arrangements {
        let mut owner = Vec::with_capacity(total);
        for (i, &mi) in arr.iter().enumerate() {
            owner.extend(std::iter::repeat_n(i, mi));
        }
        let inner: Vec<(usize, usize)> = (0..total)
            .flat_map(|u| (u + 1..total).map(move |v| (u, v)))
            .filter(|&(u, v)| owner[u] == owner[v])
            .collect();
        for choice in 0u64..1 << inner.len() {
            let mut g = SmallGraph::empty(total)?;
            for u in 0..total {
                for v in u + 1..total {
                    if owner[u] != owner[v] && base.has_edge(owner[u], owner[v]) {
                        g.add_edge(u, v);
                    }
                }
            }
            for (bit, &(u, v)) in inner.iter().enumerate() {
                if choice >> bit & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            members.push(g);
        }
    }
    Ok(PatternFamily::new(label, members))
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Calls `visit` with the per-part vertex masks of every map from the
/// pattern's vertices to base vertices whose cross-part adjacency agrees with
/// the base.
fn class_assignments<F: FnMut(&[u64])>(p: &SmallGraph, base: &SmallGraph, visit: &mut F) {
    fn go<F: FnMut(&[u64])>(
        p: &SmallGraph,
        base: &SmallGraph,
        v: usize,
        parts: &mut Vec<u64>,
        visit: &mut F,
    ) {
        if v == p.n() {
            visit(parts);
            return;
        }
        let row = p.neighbors(v);
        for c in 0..base.n() {
            let ok = (0..base.n()).all(|d| {
                let placed = parts[d];
                if d == c || placed == 0 {
                    return true;
                }
                let want = if base.has_edge(c, d) { placed } else { 0 };
                row & placed == want
            });
            if ok {
                parts[c] |= 1 << v;
                go(p, base, v + 1, parts, visit);
                parts[c] &= !(1 << v);
            }
        }
    }
    let mut parts = vec![0u64; base.n()];
    go(p, base, 0, &mut parts, visit);
}

type Memo = Arc<RwLock<HashMap<CanonKey, Rational>>>;

fn memo_for(base_key: CanonKey) -> Memo {
    static TABLE: OnceLock<Mutex<HashMap<CanonKey, Memo>>> = OnceLock::new();
    TABLE
        .get_or_init(|| Mutex::new(HashMap::new()))
        .lock()
        .expect("memo table lock")
        .entry(base_key)
        .or_default()
        .clone()
}

struct LimitEngine {
    base: SmallGraph,
    b: Rational,
    memo: Memo,
}

impl LimitEngine {
    fn new(base: &SmallGraph) -> Self {
        let key = canonical_key(base);
        LimitEngine {
            base: key.graph(),
            b: Rational::from_integer(base.n().into()),
            memo: memo_for(key),
        }
    }

    /// Probability that a fixed labeling of `p` is induced by `|p|`
    /// independent samples, listed in order.
    fn labeled(&self, p: &SmallGraph) -> Rational {
        let k = p.n();
        if k <= 1 {
            return Rational::one();
        }
        let key = canonical_key(p);
        if let Some(d) = self.memo.read().expect("memo lock").get(&key) {
            return d.clone();
        }
        let q = key.graph();
        let mut sub: HashMap<u64, Rational> = HashMap::new();
        let mut acc = Rational::zero();
        let full = q.vertex_mask();
        class_assignments(&q, &self.base, &mut |parts| {
            if parts.contains(&full) {
                return;
            }
            let mut prod = Rational::one();
            for &m in parts.iter().filter(|&&m| m.count_ones() > 1) {
                let d = sub
                    .entry(m)
                    .or_insert_with(|| self.labeled(&q.induced_mask(m)))
                    .clone();
                if d.is_zero() {
                    return;
                }
                prod *= d;
            }
            acc += prod;
        });
        let bk = num_traits::pow(self.b.clone(), k);
        let denom = &bk - &self.b;
        let d = acc / denom;
        self.memo.write().expect("memo lock").insert(key, d.clone());
        d
    }

    /// Probability that `|p|` random vertices induce a copy of `p`.
    fn unlabeled(&self, p: &SmallGraph) -> Rational {
        let labelings =
            big(&factorial(p.n() as u64)) / Rational::from_integer(automorphism_count(p).into());
        self.labeled(p) * labelings
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberDensity {
    pub graph6: String,
    #[serde(with = "serde_rational")]
    pub density: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitDensityResult {
    pub pattern: String,
    #[serde(with = "serde_rational")]
    pub density: Rational,
    pub per_member: Vec<MemberDensity>,
}

fn check_base(base: &SmallGraph) -> Result<()> {
    if base.n() < 2 || base.n() > MAX_CANON {
        return Err(Error::Precondition(format!(
            "base graph needs 2 to {MAX_CANON} vertices, got {}",
            base.n()
        )));
    }
    Ok(())
}

/// Exact density of `target` in the limit of the iterated balanced blow-up
/// of `base`.
pub fn limit_density(base: &SmallGraph, target: &PatternFamily) -> Result<LimitDensityResult> {
    check_base(base)?;
    let k = target.order();
    if k < 1 {
        return Err(Error::Precondition(
            "pattern needs at least one vertex".into(),
        ));
    }
    if k > MAX_PATTERN {
        return Err(Error::Precondition(format!(
            "pattern has {k} vertices, at most {MAX_PATTERN} supported"
        )));
    }
    let engine = LimitEngine::new(base);
    let per_member: Vec<MemberDensity> = target
        .members
        .par_iter()
        .map(|m| MemberDensity {
            graph6: m.to_graph6(),
            density: engine.unlabeled(m),
        })
        .collect();
    Ok(LimitDensityResult {
        pattern: target.label.clone(),
        density: per_member.iter().map(|m| &m.density).sum(),
        per_member,
    })
}

/// Every isomorphism class on `k` vertices, by canonical key.
pub fn all_graphs(k: usize) -> Vec<SmallGraph> {
    assert!(k <= MAX_PATTERN, "at most {MAX_PATTERN} vertices");
    let pairs = k * k.saturating_sub(1) / 2;
    let mut keys: Vec<CanonKey> = (0u64..1 << pairs)
        .into_par_iter()
        .fold(Vec::new, |mut acc, bits| {
            let mut g = SmallGraph::empty(k).expect("k <= 7");
            let mut at = 0;
            for j in 1..k {
                for i in 0..j {
                    if bits >> at & 1 == 1 {
                        g.add_edge(i, j);
                    }
                    at += 1;
                }
            }
            acc.push(canonical_key(&g));
            acc
        })
        .flatten()
        .collect();
    keys.sort_unstable();
    keys.dedup();
    keys.iter().map(CanonKey::graph).collect()
}

/// Number of induced embeddings of `p` into the depth-`depth` iterated
/// blow-up of `base` (depth 0 is a single vertex).
fn embeddings(
    base: &SmallGraph,
    p: &SmallGraph,
    depth: usize,
    memo: &mut HashMap<(usize, CanonKey), BigUint>,
) -> BigUint {
    if p.n() == 0 {
        return BigUint::one();
    }
    if depth == 0 {
        return if p.n() == 1 {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    let key = canonical_key(p);
    if let Some(e) = memo.get(&(depth, key)) {
        return e.clone();
    }
    let q = key.graph();
    let mut total = BigUint::zero();
    let mut sub: HashMap<u64, BigUint> = HashMap::new();
    class_assignments(&q, base, &mut |parts| {
        let mut prod = BigUint::one();
        for &m in parts.iter().filter(|&&m| m != 0) {
            let e = match sub.get(&m) {
                Some(e) => e.clone(),
                None => {
                    let e = embeddings(base, &q.induced_mask(m), depth - 1, memo);
                    sub.insert(m, e.clone());
                    e
                }
            };
            if e.is_zero() {
                return;
            }
            prod *= e;
        }
        total += prod;
    });
    memo.insert((depth, key), total.clone());
    total
}

/// Exact density of `target` in the `(depth - 1)`-times iterated blow-up of
/// `C5` on `5^depth` vertices. Depths up to 2 are realized and counted
/// directly; deeper ones use the embedding recursion.
pub fn finite_density(depth: usize, target: &PatternFamily) -> Result<Rational> {
    if depth == 0 {
        return Err(Error::Precondition("depth starts at 1".into()));
    }
    let n = 5u64.pow(depth as u32);
    let total = binomial(n, target.order() as u64);
    if total.is_zero() {
        return Ok(Rational::zero());
    }
    if depth <= 2 {
        let g = crate::blowup::BlowupTree::c5_iterated(depth).realize()?;
        let c = count_family(&g, target);
        return Ok(Rational::new(c.into(), big(&total).to_integer()));
    }
    Ok(finite_density_by_recursion(depth, target))
}

pub(crate) fn finite_density_by_recursion(depth: usize, target: &PatternFamily) -> Rational {
    let base = SmallGraph::c5();
    let n = 5u64.pow(depth as u32);
    let total = binomial(n, target.order() as u64);
    if total.is_zero() {
        return Rational::zero();
    }
    let mut memo = HashMap::new();
    let copies: Rational = target
        .members
        .iter()
        .map(|m| {
            big(&embeddings(&base, m, depth, &mut memo))
                / Rational::from_integer(automorphism_count(m).into())
        })
        .sum();
    copies / big(&total)
}

/// Masks of the parts of `p` under every consistent assignment, exposed for
/// tests of the recursion.
#[cfg(test)]
fn assignments(p: &SmallGraph, base: &SmallGraph) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    class_assignments(p, base, &mut |parts| out.push(parts.to_vec()));
    out
}

#[cfg(test)]
fn members_of(masks: &[u64]) -> usize {
    masks.iter().map(|&m| m.count_ones() as usize).sum()
}
