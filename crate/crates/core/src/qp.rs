//! The small quadratic programs bounding the part sizes `x_0..x_5` and the
//! normalized funky-pair count `f`, solved exactly.
//!
//! All four programs share the constraint
//!
//! ```text
//! 2 sum_{1<=i<j<=5} x_i x_j - 2f - a sum_{i=1..5} x_i^2 >= rhs,   sum_{i=0..5} x_i = 1
//! ```
//!
//! For each objective the free variables other than the objective variable
//! `t` are maximized out analytically. The maximizer is one of a few cases
//! (stationary point or a bound), each giving a quadratic `q(t)`, so the
//! feasible `t` are the union over cases of `{ t : q(t) >= rhs }`. Roots are
//! enclosed by rational bisection.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{decimal, int, ratio, serde_rational, serde_rational_vec, Rational};

/// Width below which root enclosures stop shrinking.
fn target_width() -> Rational {
    ratio(1, 1_000_000_000_000)
}

/// Density inequalities taken as given.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagConstants {
    /// Upper bound on the induced pentagon density of an extremal graph.
    #[serde(with = "serde_rational")]
    pub c5_upper: Rational,
    /// Lower bound on `4 C22111 - 3a C31111`.
    #[serde(with = "serde_rational")]
    pub diff_lower: Rational,
    #[serde(with = "serde_rational")]
    pub a: Rational,
}

impl FlagConstants {
    pub fn published() -> Self {
        FlagConstants {
            c5_upper: decimal("0.03846157"),
            diff_lower: "1349894760355389179787709186391/420000000000000000000000000000000"
                .parse()
                .expect("valid fraction"),
            a: decimal("3.98"),
        }
    }
}

/// `(diff_lower / 21) / c5_upper`: the averaged lower bound on
/// `C22111(Z) - a C31111(Z)` for the best pentagon `Z`.
pub fn derive_main_threshold(fc: &FlagConstants) -> Rational {
    &fc.diff_lower / int(21) / &fc.c5_upper
}

/// Which right-hand side feeds the programs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum RhsMode {
    /// The rounded value `0.003979`.
    Printed,
    /// The exact value of [`derive_main_threshold`].
    Derived,
}

impl RhsMode {
    pub fn rhs(self, fc: &FlagConstants) -> Rational {
        match self {
            RhsMode::Printed => decimal("0.003979"),
            RhsMode::Derived => derive_main_threshold(fc),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    MinX1,
    MaxX1,
    MaxX0,
    MaxF,
}

impl Objective {
    pub const ALL: [Objective; 4] = [
        Objective::MinX1,
        Objective::MaxX1,
        Objective::MaxX0,
        Objective::MaxF,
    ];

    fn minimize(self) -> bool {
        self == Objective::MinX1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedProgram {
    pub objective: Objective,
    #[serde(with = "serde_rational")]
    pub rhs: Rational,
    #[serde(with = "serde_rational")]
    pub a: Rational,
}

/// The optimum lies in `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifiedInterval {
    #[serde(with = "serde_rational")]
    pub lo: Rational,
    #[serde(with = "serde_rational")]
    pub hi: Rational,
}

impl CertifiedInterval {
    pub fn exact(v: Rational) -> Self {
        CertifiedInterval {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, v: &Rational) -> bool {
        &self.lo <= v && v <= &self.hi
    }
}

/// A point satisfying all constraints, checked exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(with = "serde_rational_vec")]
    pub x: Vec<Rational>,
    #[serde(with = "serde_rational")]
    pub f: Rational,
    /// Left-hand side of the shared constraint at this point.
    #[serde(with = "serde_rational")]
    pub lhs: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QpSolution {
    pub objective: Objective,
    #[serde(with = "serde_rational")]
    pub rhs: Rational,
    pub bound: CertifiedInterval,
    /// The reduction case attaining the optimum.
    pub case: String,
    pub witness: Witness,
}

/// Left-hand side of the shared constraint.
pub fn constraint_lhs(x: &[Rational], f: &Rational, a: &Rational) -> Rational {
    let parts = &x[1..6];
    let s: Rational = parts.iter().sum();
    let sq: Rational = parts.iter().map(|v| v * v).sum();
    // 2 sum_{i<j} x_i x_j = s^2 - sum x_i^2
    &s * &s - (int(1) + a) * sq - int(2) * f
}

fn check_point(x: &[Rational], f: &Rational) -> Result<()> {
    if x.len() != 6 {
        return Err(Error::Precondition(format!(
            "expected x_0..x_5, got {} values",
            x.len()
        )));
    }
    if x.iter().any(Signed::is_negative) || f.is_negative() {
        return Err(Error::Precondition("negative coordinate".into()));
    }
    if x.iter().sum::<Rational>() != int(1) {
        return Err(Error::Precondition("x_0 + ... + x_5 must equal 1".into()));
    }
    Ok(())
}

/// Quadratic `a2 t^2 + a1 t + a0` on a closed domain of `t`.
#[derive(Clone, Debug)]
struct Piece {
    name: &'static str,
    a2: Rational,
    a1: Rational,
    a0: Rational,
    dom: (Rational, Rational),
}

impl Piece {
    fn eval(&self, t: &Rational) -> Rational {
        (&self.a2 * t + &self.a1) * t + &self.a0
    }
}

/// A boundary point of a feasible set: the true point lies in `[lo, hi]`,
/// and `inside` is whichever end is known to be feasible.
#[derive(Clone, Debug)]
struct Endpoint {
    lo: Rational,
    hi: Rational,
    inside: Rational,
}

impl Endpoint {
    fn exact(v: Rational) -> Self {
        Endpoint {
            lo: v.clone(),
            hi: v.clone(),
            inside: v,
        }
    }
}

/// Encloses the unique sign change of `g = q - rhs` on `[u, w]`, where `g`
/// is monotone and `g(u) >= 0 > g(w)` or the reverse. Linear pieces are
/// solved exactly.
fn bisect(p: &Piece, rhs: &Rational, mut u: Rational, mut w: Rational) -> Endpoint {
    if p.a2.is_zero() {
        return Endpoint::exact((rhs - &p.a0) / &p.a1);
    }
    let u_ok = p.eval(&u) >= *rhs;
    let eps = target_width();
    while &w - &u > eps {
        let mid = (&u + &w) / int(2);
        if (p.eval(&mid) >= *rhs) == u_ok {
            u = mid;
        } else {
            w = mid;
        }
    }
    let inside = if u_ok { u.clone() } else { w.clone() };
    Endpoint {
        lo: u,
        hi: w,
        inside,
    }
}

/// Feasible sub-intervals of one piece, as (left, right) endpoint pairs.
fn feasible_runs(p: &Piece, rhs: &Rational) -> Vec<(Endpoint, Endpoint)> {
    let (lo, hi) = p.dom.clone();
    let mut cuts = vec![lo.clone()];
    if !p.a2.is_zero() {
        let v = -&p.a1 / (int(2) * &p.a2);
        if v > lo && v < hi {
            cuts.push(v);
        }
    }
    cuts.push(hi);
    let mut runs: Vec<(Endpoint, Endpoint)> = Vec::new();
    for seg in cuts.windows(2) {
        let (u, w) = (&seg[0], &seg[1]);
        let (fu, fw) = (p.eval(u) >= *rhs, p.eval(w) >= *rhs);
        let run = match (fu, fw) {
            (true, true) => Some((Endpoint::exact(u.clone()), Endpoint::exact(w.clone()))),
            (false, false) => None,
            (true, false) => Some((
                Endpoint::exact(u.clone()),
                bisect(p, rhs, u.clone(), w.clone()),
            )),
            (false, true) => Some((
                bisect(p, rhs, u.clone(), w.clone()),
                Endpoint::exact(w.clone()),
            )),
        };
        if let Some((l, r)) = run {
            match runs.last_mut() {
                Some(last) if last.1.hi == l.lo && last.1.lo == l.hi => last.1 = r,
                _ => runs.push((l, r)),
            }
        }
    }
    runs
}

fn pieces(prog: &ReducedProgram) -> Result<Vec<Piece>> {
    let a = &prog.a;
    let one = int(1);
    if *a <= int(3) || *a >= int(4) {
        return Err(Error::Precondition(format!(
            "reduction needs 3 < a < 4, got {a}"
        )));
    }
    // with x_1..x_5 equal and summing to s, the left side is c0 s^2 - 2f
    let c0 = (int(4) - a) / int(5);
    Ok(match prog.objective {
        Objective::MinX1 | Objective::MaxX1 => {
            // x_2..x_5 = y and x_0 = 1 - t - 4y; maximizing over y in
            // [0, (1-t)/4] lands on y = 0, the cap, or y = t/(a-3)
            let split = (a - int(3)) / (a + &one);
            vec![
                Piece {
                    name: "y = 0",
                    a2: -a.clone(),
                    a1: Rational::zero(),
                    a0: Rational::zero(),
                    dom: (Rational::zero(), one.clone()),
                },
                Piece {
                    name: "x_0 = 0, y = (1 - x_1)/4",
                    a2: -int(5) * (a + &one) / int(4),
                    a1: (a + &one) / int(2),
                    a0: &one - (a + &one) / int(4),
                    dom: (Rational::zero(), one.clone()),
                },
                Piece {
                    name: "y = x_1/(a - 3) stationary",
                    a2: int(4) / (a - int(3)) - a,
                    a1: Rational::zero(),
                    a0: Rational::zero(),
                    dom: (Rational::zero(), split),
                },
            ]
        }
        Objective::MaxX0 => vec![Piece {
            name: "f = 0, x_1 = ... = x_5 = (1 - x_0)/5",
            a2: c0.clone(),
            a1: -int(2) * &c0,
            a0: c0,
            dom: (Rational::zero(), one),
        }],
        Objective::MaxF => vec![Piece {
            name: "x_0 = 0, x_1 = ... = x_5 = 1/5",
            a2: Rational::zero(),
            a1: int(-2),
            a0: c0,
            dom: (Rational::zero(), ratio(1, 2)),
        }],
    })
}

fn witness_point(prog: &ReducedProgram, piece: &Piece, t: &Rational) -> (Vec<Rational>, Rational) {
    let one = int(1);
    match prog.objective {
        Objective::MinX1 | Objective::MaxX1 => {
            let y = match piece.name {
                "y = 0" => Rational::zero(),
                "x_0 = 0, y = (1 - x_1)/4" => (&one - t) / int(4),
                _ => t / (&prog.a - int(3)),
            };
            let x0 = &one - t - int(4) * &y;
            (
                vec![x0, t.clone(), y.clone(), y.clone(), y.clone(), y],
                Rational::zero(),
            )
        }
        Objective::MaxX0 => {
            let w = (&one - t) / int(5);
            (
                vec![t.clone(), w.clone(), w.clone(), w.clone(), w.clone(), w],
                Rational::zero(),
            )
        }
        Objective::MaxF => {
            let w = ratio(1, 5);
            (
                vec![
                    Rational::zero(),
                    w.clone(),
                    w.clone(),
                    w.clone(),
                    w.clone(),
                    w,
                ],
                t.clone(),
            )
        }
    }
}

/// Optimum of the program as a certified enclosure together with an
/// exactly verified feasible point at the feasible end of the enclosure.
pub fn solve_reduced(prog: &ReducedProgram) -> Result<QpSolution> {
    if !prog.rhs.is_positive() {
        return Err(Error::Precondition(
            "right-hand side must be positive".into(),
        ));
    }
    let mut best: Option<(Endpoint, &Piece)> = None;
    let all = pieces(prog)?;
    for piece in &all {
        for (l, r) in feasible_runs(piece, &prog.rhs) {
            let (cand, better) = if prog.objective.minimize() {
                let better = best.as_ref().is_none_or(|(b, _)| l.lo < b.lo);
                (l, better)
            } else {
                let better = best.as_ref().is_none_or(|(b, _)| r.hi > b.hi);
                (r, better)
            };
            if better {
                best = Some((cand, piece));
            }
        }
    }
    let Some((end, piece)) = best else {
        return Err(Error::Infeasible(format!(
            "no point satisfies the constraint with rhs {}",
            crate::rational::to_decimal(&prog.rhs, 12)
        )));
    };
    let (x, f) = witness_point(prog, piece, &end.inside);
    check_point(&x, &f)?;
    let lhs = constraint_lhs(&x, &f, &prog.a);
    if lhs < prog.rhs {
        return Err(Error::Infeasible(format!(
            "witness for {:?} violates the constraint",
            prog.objective
        )));
    }
    Ok(QpSolution {
        objective: prog.objective,
        rhs: prog.rhs.clone(),
        bound: CertifiedInterval {
            lo: end.lo,
            hi: end.hi,
        },
        case: piece.name.to_string(),
        witness: Witness { x, f, lhs },
    })
}

/// All four programs for one right-hand side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QpBounds {
    pub mode: RhsMode,
    #[serde(with = "serde_rational")]
    pub rhs: Rational,
    pub min_x1: QpSolution,
    pub max_x1: QpSolution,
    pub max_x0: QpSolution,
    pub max_f: QpSolution,
}

pub fn qp_bounds(fc: &FlagConstants, mode: RhsMode) -> Result<QpBounds> {
    let rhs = mode.rhs(fc);
    let solve = |objective| {
        solve_reduced(&ReducedProgram {
            objective,
            rhs: rhs.clone(),
            a: fc.a.clone(),
        })
    };
    Ok(QpBounds {
        mode,
        rhs: rhs.clone(),
        min_x1: solve(Objective::MinX1)?,
        max_x1: solve(Objective::MaxX1)?,
        max_x0: solve(Objective::MaxX0)?,
        max_f: solve(Objective::MaxF)?,
    })
}

/// Whether equalizing `x_2..x_5` and zeroing `f` keeps a feasible point
/// feasible. Errors if the input point itself is infeasible.
pub fn symmetrization_check(
    x: &[Rational],
    f: &Rational,
    rhs: &Rational,
    a: &Rational,
) -> Result<bool> {
    check_point(x, f)?;
    if constraint_lhs(x, f, a) <= *rhs {
        return Err(Error::Precondition("sample violates the constraint".into()));
    }
    let rest: Rational = x[2..6].iter().sum::<Rational>() / int(4);
    let sym = vec![
        x[0].clone(),
        x[1].clone(),
        rest.clone(),
        rest.clone(),
        rest.clone(),
        rest,
    ];
    Ok(check_point(&sym, &Rational::zero()).is_ok()
        && constraint_lhs(&sym, &Rational::zero(), a) > *rhs)
}

/// `1 - (1 + a) x1min`: the largest normalized funky degree a vertex of a
/// part can have.
pub fn max_funky_degree_bound(fc: &FlagConstants, x1min: &Rational) -> Result<Rational> {
    if x1min.is_negative() || *x1min > ratio(1, 5) {
        return Err(Error::Precondition(format!(
            "part size lower bound must lie in [0, 1/5], got {x1min}"
        )));
    }
    Ok(int(1) - (int(1) + &fc.a) * x1min)
}

/// Upper bound on pentagons through a funky pair `uv`, over `n^3`:
/// `x_0/2 + f + 2 d_f^2 + 9 d_f x_max^2`.
pub fn funky_pair_upper(x0: &Rational, f: &Rational, df: &Rational, xmax: &Rational) -> Rational {
    x0 / int(2) + f + int(2) * df * df + int(9) * df * xmax * xmax
}

/// Lower bound on pentagons through `uv` once the pair is repaired, over
/// `n^3`: `(x_min - 2 d_f) x_min^2 - f x_max`.
pub fn repaired_pair_lower(
    xmin: &Rational,
    df: &Rational,
    f: &Rational,
    xmax: &Rational,
) -> Rational {
    (xmin - int(2) * df) * xmin * xmin - f * xmax
}

/// Least funky degree of an outside vertex placed into a part:
/// `(x_min^3 - x_0/2) / (x_max^2 + x_min^2)`.
pub fn outside_funky_degree_floor(xmin: &Rational, xmax: &Rational, x0: &Rational) -> Rational {
    (xmin * xmin * xmin - x0 / int(2)) / (xmax * xmax + xmin * xmin)
}

/// Closed-form roots of `q_cap(t) = rhs` on the cap case:
/// `c - sqrt((peak - rhs)/k)` and `c + ...` as f64, for reporting.
pub fn cap_roots_f64(a: &Rational, rhs: &Rational) -> (f64, f64) {
    let one = int(1);
    let k = crate::rational::to_f64(&(int(5) * (a + &one) / int(4)));
    let center = 1.0 / 5.0;
    let peak = crate::rational::to_f64(&((int(4) - a) / int(5)));
    let d = ((peak - crate::rational::to_f64(rhs)) / k).sqrt();
    (center - d, center + d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::to_f64;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn solve(objective: Objective, rhs: &Rational) -> QpSolution {
        solve_reduced(&ReducedProgram {
            objective,
            rhs: rhs.clone(),
            a: decimal("3.98"),
        })
        .unwrap()
    }

    #[test]
    fn threshold_from_constants() {
        let fc = FlagConstants::published();
        let t = derive_main_threshold(&fc);
        assert!(t > decimal("0.003979"));
        assert_eq!(crate::rational::to_decimal(&t, 10), "0.0039792783");
        let zero = FlagConstants {
            diff_lower: Rational::zero(),
            ..fc.clone()
        };
        assert_eq!(derive_main_threshold(&zero), Rational::zero());
        assert!(fc.diff_lower > decimal("0.003214"));
        assert!(fc.c5_upper > ratio(1, 26));
    }

    #[test]
    fn part_size_bounds() {
        let fc = FlagConstants::published();
        for mode in [RhsMode::Printed, RhsMode::Derived] {
            let rhs = mode.rhs(&fc);
            let lo = solve(Objective::MinX1, &rhs);
            let hi = solve(Objective::MaxX1, &rhs);
            assert!(lo.bound.lo > decimal("0.19816") && hi.bound.hi < decimal("0.20184"));
            assert!(lo.bound.width() <= target_width() && hi.bound.width() <= target_width());
            let (r0, r1) = cap_roots_f64(&fc.a, &rhs);
            assert!((to_f64(&lo.bound.lo) - r0).abs() < 1e-9);
            assert!((to_f64(&hi.bound.hi) - r1).abs() < 1e-9);
            assert_eq!(lo.case, "x_0 = 0, y = (1 - x_1)/4");
        }
    }

    #[test]
    fn funky_and_outside_bounds() {
        let fc = FlagConstants::published();
        let derived = RhsMode::Derived.rhs(&fc);
        let printed = RhsMode::Printed.rhs(&fc);
        assert!(solve(Objective::MaxF, &derived).bound.hi < decimal("0.000011"));
        assert!(solve(Objective::MaxF, &printed).bound.hi < decimal("0.000011"));
        let d = solve(Objective::MaxX0, &derived).bound;
        let p = solve(Objective::MaxX0, &printed).bound;
        assert!(d.hi < decimal("0.0026"));
        assert!(p.lo > decimal("0.0026"));
        let closed = 1.0 - (to_f64(&printed) / 0.004).sqrt();
        assert!((to_f64(&p.hi) - closed).abs() < 1e-9);
        // max f is linear: exact
        assert_eq!(
            solve(Objective::MaxF, &printed).bound,
            CertifiedInterval::exact(ratio(21, 2_000_000))
        );
    }

    #[test]
    fn cap_case_matches_closed_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let prog = ReducedProgram {
            objective: Objective::MinX1,
            rhs: decimal("0.003979"),
            a: decimal("3.98"),
        };
        let cap = pieces(&prog).unwrap().remove(1);
        for _ in 0..20 {
            let t = ratio(rng.gen_range(0..10_000), 10_000);
            let closed =
                decimal("0.004") - decimal("6.225") * (&t - ratio(1, 5)) * (&t - ratio(1, 5));
            assert_eq!(cap.eval(&t), closed);
            let (x, f) = witness_point(&prog, &cap, &t);
            assert_eq!(constraint_lhs(&x, &f, &prog.a), closed);
        }
    }

    #[test]
    fn bounds_tighten_as_rhs_grows() {
        let mut prev: Option<(Rational, Rational, Rational, Rational)> = None;
        for r in ["0.0030", "0.0035", "0.003979", "0.00399"] {
            let rhs = decimal(r);
            let cur = (
                solve(Objective::MinX1, &rhs).bound.lo,
                solve(Objective::MaxX1, &rhs).bound.hi,
                solve(Objective::MaxX0, &rhs).bound.hi,
                solve(Objective::MaxF, &rhs).bound.hi,
            );
            if let Some(p) = prev {
                assert!(cur.0 > p.0 && cur.1 < p.1 && cur.2 < p.2 && cur.3 < p.3);
            }
            prev = Some(cur);
        }
        let too_big = ReducedProgram {
            objective: Objective::MaxX1,
            rhs: decimal("0.0041"),
            a: decimal("3.98"),
        };
        assert!(matches!(solve_reduced(&too_big), Err(Error::Infeasible(_))));
    }

    #[test]
    fn witnesses_are_close_to_the_bound() {
        let rhs = decimal("0.003979");
        for o in Objective::ALL {
            let s = solve(o, &rhs);
            let edge = if o.minimize() {
                &s.bound.lo
            } else {
                &s.bound.hi
            };
            let coord = match o {
                Objective::MaxF => s.witness.f.clone(),
                Objective::MaxX0 => s.witness.x[0].clone(),
                _ => s.witness.x[1].clone(),
            };
            assert!((edge - coord).abs() <= ratio(1, 1_000_000_000));
            assert!(s.witness.lhs >= rhs);
        }
    }

    #[test]
    fn symmetrization_samples() {
        let fc = FlagConstants::published();
        let rhs = decimal("0.003979");
        let sym = vec![
            Rational::zero(),
            ratio(1, 5),
            ratio(1, 5),
            ratio(1, 5),
            ratio(1, 5),
            ratio(1, 5),
        ];
        assert!(symmetrization_check(&sym, &Rational::zero(), &rhs, &fc.a).unwrap());
        let bad = vec![
            int(1),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ];
        assert!(symmetrization_check(&bad, &Rational::zero(), &rhs, &fc.a).is_err());
    }

    #[test]
    fn pair_chains() {
        let (x0, f, df) = (decimal("0.0026"), decimal("0.000011"), decimal("0.0132"));
        let (xmin, xmax) = (decimal("0.19816"), decimal("0.20184"));
        let g = funky_pair_upper(&x0, &f, &df, &xmax);
        assert_eq!(crate::rational::to_decimal(&g, 8), "0.00649932");
        assert!(g <= decimal("0.0065"));
        assert!(repaired_pair_lower(&xmin, &df, &f, &xmax) >= decimal("0.0067"));
        assert!(outside_funky_degree_floor(&xmin, &xmax, &x0) >= decimal("0.081"));
    }

    #[test]
    fn funky_degree_bound() {
        let fc = FlagConstants::published();
        assert_eq!(
            max_funky_degree_bound(&fc, &decimal("0.19816")).unwrap(),
            decimal("0.0131632")
        );
        assert_eq!(
            max_funky_degree_bound(&fc, &ratio(1, 5)).unwrap(),
            decimal("0.004")
        );
        assert_eq!(
            max_funky_degree_bound(&fc, &Rational::zero()).unwrap(),
            int(1)
        );
        assert!(max_funky_degree_bound(&fc, &ratio(1, 4)).is_err());
    }
}
