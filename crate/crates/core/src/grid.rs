//! Certified grid maximization of the pentagon-count bound for a vertex
//! outside the five parts.
//!
//! Coordinates are lattice integers `u_i` in `[0, s]` with `a_i = u_i cap/s`
//! and `b_i = cap - a_i`. The objective
//!
//! ```text
//! sum_i a_i b_{i+1} b_{i+2} a_{i+3} + 1/4 sum_i a_i^2 b_i^2
//! ```
//!
//! equals `F (cap/s)^4 / 4` for the integer
//! `F = 4 sum_i u_i v_{i+1} v_{i+2} u_{i+3} + sum_i u_i^2 v_i^2`, `v_i = s - u_i`.
//! With `u_0..u_3` fixed, `F` is `const + gamma u_4 + w(u_4)` where
//! `w(u) = u^2 (s-u)^2`, and the feasible `u_4` form an interval, so the
//! innermost coordinate is maximized from a few candidates instead of a scan.

use std::cmp::Ordering;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{int, ratio, serde_rational, Rational};

/// Largest step count accepted by [`grid_max`].
pub const MAX_STEPS: u32 = 400;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    pub s: u32,
    #[serde(with = "serde_rational")]
    pub cap: Rational,
}

impl GridSpec {
    pub fn new(s: u32) -> Result<Self> {
        Self::with_cap(s, ratio(21, 100))
    }

    pub fn with_cap(s: u32, cap: Rational) -> Result<Self> {
        if s == 0 || s > MAX_STEPS {
            return Err(Error::OutOfRange {
                what: "grid steps",
                value: s as i64,
                range: "1..=400",
            });
        }
        Ok(GridSpec { s, cap })
    }

    /// Box side `cap / s`.
    pub fn t(&self) -> Rational {
        &self.cap / int(self.s as i64)
    }

    /// Rescales an integer `F` to the objective value.
    pub fn scale(&self, f: i64) -> Rational {
        let t = self.t();
        Rational::from_integer(f.into()) * &t * &t * &t * &t / int(4)
    }
}

/// Lattice coordinates of `a_1..a_5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NeighborProfile {
    pub u: [u32; 5],
}

impl NeighborProfile {
    pub fn a(&self, spec: &GridSpec) -> [Rational; 5] {
        self.u.map(|u| int(u as i64) * spec.t())
    }

    pub fn b(&self, spec: &GridSpec) -> [Rational; 5] {
        self.u.map(|u| int((spec.s - u) as i64) * spec.t())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum GridMode {
    /// Constraints at `0.081`.
    Strict,
    /// Constraints at `0.081 - 2t`, covering every box that meets the
    /// feasible region.
    Relaxed,
    Unconstrained,
}

impl GridMode {
    pub fn relax(self, spec: &GridSpec) -> Option<Rational> {
        match self {
            GridMode::Strict => Some(Rational::zero()),
            GridMode::Relaxed => Some(int(2) * spec.t()),
            GridMode::Unconstrained => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridResult {
    pub s: u32,
    pub mode: GridMode,
    #[serde(with = "serde_rational")]
    pub max_value: Rational,
    /// The integer `F` at the argmax.
    pub max_scaled: i64,
    /// Lexicographically least maximizer.
    pub argmax: NeighborProfile,
    /// Feasible lattice points covered by the search (after symmetry
    /// reduction when enabled).
    pub evaluated: u64,
    pub symmetry: bool,
}

/// Integer form of the objective, evaluated term by term.
pub fn objective_scaled(p: &NeighborProfile, s: u32) -> i64 {
    let u = p.u.map(i64::from);
    let v = u.map(|x| s as i64 - x);
    let mut cross = 0;
    let mut square = 0;
    for i in 0..5 {
        cross += u[i] * v[(i + 1) % 5] * v[(i + 2) % 5] * u[(i + 3) % 5];
        square += u[i] * u[i] * v[i] * v[i];
    }
    4 * cross + square
}

pub fn objective_exact(p: &NeighborProfile, spec: &GridSpec) -> Rational {
    spec.scale(objective_scaled(p, spec.s))
}

/// The lattice sums `v_{i+1} + v_{i+4} + u_{i+2} + u_{i+3}` of the five
/// constraints.
fn constraint_sums(u: &[u32; 5], s: u32) -> [i64; 5] {
    let u = u.map(i64::from);
    let v = u.map(|x| s as i64 - x);
    std::array::from_fn(|i| v[(i + 1) % 5] + v[(i + 4) % 5] + u[(i + 2) % 5] + u[(i + 3) % 5])
}

/// Whether all five constraints hold at threshold `0.081 - relax`.
pub fn feasible(p: &NeighborProfile, spec: &GridSpec, relax: &Rational) -> bool {
    let threshold = ratio(81, 1000) - relax;
    constraint_sums(&p.u, spec.s)
        .iter()
        .all(|&sum| int(sum) * &spec.cap >= &threshold * int(spec.s as i64))
}

/// Smallest integer constraint sum meeting the threshold.
fn min_lattice_sum(spec: &GridSpec, relax: Option<&Rational>) -> i64 {
    let Some(relax) = relax else {
        return 0;
    };
    let need = (ratio(81, 1000) - relax) * int(spec.s as i64) / &spec.cap;
    if need <= Rational::zero() {
        0
    } else {
        let c = need.ceil().to_integer();
        i64::try_from(c).expect("bounded by 4s")
    }
}

/// `w(u) = u^2 (s-u)^2` with its forward differences, and the block on
/// which the differences strictly decrease.
struct InnerTable {
    w: Vec<i64>,
    d: Vec<i64>,
    block: (usize, usize),
}

impl InnerTable {
    fn new(s: u32) -> Self {
        let s = s as i64;
        let w: Vec<i64> = (0..=s).map(|u| u * u * (s - u) * (s - u)).collect();
        let d: Vec<i64> = w.windows(2).map(|p| p[1] - p[0]).collect();
        let falls: Vec<usize> = (0..d.len().saturating_sub(1))
            .filter(|&j| d[j] > d[j + 1])
            .collect();
        let block = match (falls.first(), falls.last()) {
            (Some(&p), Some(&q)) => {
                assert_eq!(falls.len(), q - p + 1, "differences fall on one block");
                (p, q + 1)
            }
            _ => (0, 0),
        };
        InnerTable { w, d, block }
    }

    /// Least maximizer of `gamma u + w(u)` over integers `lo..=hi`.
    ///
    /// An interior least maximizer `u` has `d[u-1] > -gamma >= d[u]`, a
    /// strict fall of the differences, which only happens inside the block,
    /// and there it is the first index with `d[k] <= -gamma`.
    #[inline]
    fn best(&self, gamma: i64, lo: usize, hi: usize) -> (i64, usize) {
        let val = |u: usize| gamma * u as i64 + self.w[u];
        let mut best = (val(lo), lo);
        let (p, q) = self.block;
        if q > p {
            let k = p + self.d[p..=q.min(self.d.len() - 1)].partition_point(|&x| x > -gamma);
            if k > lo && k < hi {
                let v = val(k);
                if v > best.0 {
                    best = (v, k);
                }
            }
        }
        if hi > lo {
            let v = val(hi);
            if v > best.0 {
                best = (v, hi);
            }
        }
        best
    }

    /// Reference scan over every candidate.
    #[allow(dead_code)]
    fn scan(&self, gamma: i64, lo: usize, hi: usize) -> (i64, usize) {
        let mut best = (i64::MIN, 0);
        for u in lo..=hi {
            let v = gamma * u as i64 + self.w[u];
            if v > best.0 {
                best = (v, u);
            }
        }
        best
    }
}

#[derive(Clone, Copy, Debug)]
struct Best {
    f: i64,
    u: [u32; 5],
    evaluated: u64,
}

impl Best {
    fn none() -> Self {
        Best {
            f: i64::MIN,
            u: [u32::MAX; 5],
            evaluated: 0,
        }
    }

    fn offer(&mut self, f: i64, u: [u32; 5]) {
        if f > self.f || (f == self.f && u < self.u) {
            self.f = f;
            self.u = u;
        }
    }

    /// Associative and commutative, so the result ignores scheduling.
    fn merge(mut self, other: Best) -> Best {
        self.offer(other.f, other.u);
        self.evaluated += other.evaluated;
        self
    }
}

/// Best point with the first two coordinates fixed.
fn slab<I>(
    s: u32,
    u0: u32,
    u1: u32,
    lmin: i64,
    symmetry: bool,
    table: &InnerTable,
    inner: &I,
) -> Best
where
    I: Fn(&InnerTable, i64, usize, usize) -> (i64, usize),
{
    let si = s as i64;
    let mut best = Best::none();
    let start = if symmetry { u0 } else { 0 };
    let (a0, a1) = (u0 as i64, u1 as i64);
    let (b0, b1) = (si - a0, si - a1);
    for u2 in start..=s {
        let (a2, b2) = (u2 as i64, si - u2 as i64);
        for u3 in start..=s {
            let (a3, b3) = (u3 as i64, si - u3 as i64);
            // the one constraint not involving u4
            if b0 + b3 + a1 + a2 < lmin {
                continue;
            }
            let mut lo = (lmin - (b2 + b0 + a3)).max(lmin - (b3 + b1 + a0)).max(0);
            let hi = (si - lmin + b1 + a2 + a3)
                .min(si - lmin + b2 + a0 + a1)
                .min(si);
            if symmetry {
                lo = lo.max(a0).max(a1);
            }
            if lo > hi {
                continue;
            }
            let base = 4 * (a0 * b1 * b2 * a3 + (a2 * b3 * a0 + a3 * b0 * a1) * si)
                + a0 * a0 * b0 * b0
                + a1 * a1 * b1 * b1
                + a2 * a2 * b2 * b2
                + a3 * a3 * b3 * b3;
            let gamma = 4 * (a1 * b2 * b3 + b0 * b1 * a2 - a2 * b3 * a0 - a3 * b0 * a1);
            let (lo, hi) = (lo as usize, hi as usize);
            let (v, u4) = inner(table, gamma, lo, hi);
            best.evaluated += (hi - lo + 1) as u64;
            best.offer(base + v, [u0, u1, u2, u3, u4 as u32]);
        }
    }
    best
}

fn run<I>(spec: &GridSpec, mode: GridMode, symmetry: bool, inner: I) -> GridResult
where
    I: Fn(&InnerTable, i64, usize, usize) -> (i64, usize) + Sync,
{
    let s = spec.s;
    let lmin = min_lattice_sum(spec, mode.relax(spec).as_ref());
    let table = InnerTable::new(s);
    let pairs: Vec<(u32, u32)> = (0..=s)
        .flat_map(|u0| {
            let from = if symmetry { u0 } else { 0 };
            (from..=s).map(move |u1| (u0, u1))
        })
        .collect();
    let best = pairs
        .par_iter()
        .map(|&(u0, u1)| slab(s, u0, u1, lmin, symmetry, &table, &inner))
        .reduce(Best::none, Best::merge);
    let argmax = NeighborProfile { u: best.u };
    debug_assert_eq!(objective_scaled(&argmax, s), best.f);
    GridResult {
        s,
        mode,
        max_value: spec.scale(best.f),
        max_scaled: best.f,
        argmax,
        evaluated: best.evaluated,
        symmetry,
    }
}

/// Exact maximum of the objective over lattice points admitted by `mode`.
///
/// With `symmetry` on, only points whose first coordinate is minimal and
/// whose second does not exceed the fifth are visited. Every orbit of the
/// dihedral group acting on the indices has its lexicographically least
/// point among them, so both the maximum and the least maximizer are
/// unchanged. `threads` selects a dedicated worker pool.
pub fn grid_max(
    spec: &GridSpec,
    mode: GridMode,
    symmetry: bool,
    threads: Option<usize>,
) -> Result<GridResult> {
    match threads {
        None => Ok(run(spec, mode, symmetry, InnerTable::best)),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
            Ok(pool.install(|| run(spec, mode, symmetry, InnerTable::best)))
        }
    }
}

/// `cap^3 + 2 cap^3 / 27`: a bound on every partial derivative of the
/// objective along a lattice axis.
pub fn gradient_bound(spec: &GridSpec) -> Rational {
    let c3 = &spec.cap * &spec.cap * &spec.cap;
    &c3 + int(2) * &c3 / int(27)
}

/// Grid maximum plus the covering correction `5 (t/2) L`, compared with a
/// per-vertex threshold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerBound {
    #[serde(with = "serde_rational")]
    pub lipschitz: Rational,
    #[serde(with = "serde_rational")]
    pub correction: Rational,
    #[serde(with = "serde_rational")]
    pub total: Rational,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct X0Report {
    pub s: u32,
    pub mode: GridMode,
    #[serde(with = "serde_rational")]
    pub grid_max: Rational,
    #[serde(with = "serde_rational")]
    pub threshold: Rational,
    pub bound: CornerBound,
}

pub fn certify_x0_claim(
    spec: &GridSpec,
    grid: &GridResult,
    lipschitz: &Rational,
    threshold: &Rational,
) -> X0Report {
    let correction = int(5) * spec.t() / int(2) * lipschitz;
    let total = &grid.max_value + &correction;
    X0Report {
        s: spec.s,
        mode: grid.mode,
        grid_max: grid.max_value.clone(),
        threshold: threshold.clone(),
        bound: CornerBound {
            lipschitz: lipschitz.clone(),
            pass: total.cmp(threshold) == Ordering::Less,
            correction,
            total,
        },
    }
}
