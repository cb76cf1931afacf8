//! Rational solutions of autonomous first-order equations `F(y(x), y(x+1)) = 0`.
//!
//! The curve `F = 0` is parametrized by `(p1, p2)`; a rational solution is
//! `y = p1(u)` for a rational solution `u` of `p1(u(x+1)) = p2(u(x))`. The
//! degree of `u` is bounded by `N`, so `deg y <= M = N deg p1`.

use num_traits::{One, Zero};

use crate::curve::{
    degree_symmetry_check, genus, parametrize, Genus, ParamSource, Parametrization, Parametrized, PlaneCurve,
};
use crate::degree_bound::{separable_degree_bound, CandidateTrace};
use crate::error::{Error, Result};
use crate::gcd::content_in;
use crate::poly::{MultiPoly, RatFunc, UniPoly};
use crate::roots::{exact_roots, ExactValue};
use crate::scalar::Rational;
use crate::separable::{CandidateSet, SeparableEq};
use crate::zerodim::solve_system;

type P = MultiPoly<Rational>;
type Poly = UniPoly<Rational>;
type Rf = RatFunc<Rational>;

/// Default cap on the degree of the solution ansatz.
pub const DEFAULT_MAX_DEGREE: u64 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Solved,
    Null,
    ConstantsOnly,
    UnsupportedParametrization,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Solved => "Solved",
            Status::Null => "Null",
            Status::ConstantsOnly => "ConstantsOnly",
            Status::UnsupportedParametrization => "UnsupportedParametrization",
        }
    }
}

/// Constant solutions: the roots of `F(u, u)`.
#[derive(Clone, Debug, PartialEq)]
pub enum ConstantSolutions {
    /// `F(u, u)` vanishes identically.
    All,
    Values(Vec<ExactValue>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Solution {
    pub y: Rf,
    /// The matching solution of the separable equation.
    pub u: Rf,
    pub verified: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub n: u64,
    pub m: u64,
}

#[derive(Clone, Debug)]
pub struct Options {
    pub max_degree: u64,
    /// Use this parametrization instead of computing one.
    pub parametrization: Option<Parametrization<Rational>>,
    /// Stop after computing `N` and `M`.
    pub bound_only: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { max_degree: DEFAULT_MAX_DEGREE, parametrization: None, bound_only: false }
    }
}

#[derive(Clone, Debug)]
pub struct SolutionReport {
    pub status: Status,
    pub reason: Option<String>,
    pub solutions: Vec<Solution>,
    pub bounds: Option<Bounds>,
    pub candidates: Option<CandidateSet>,
    pub traces: Vec<CandidateTrace>,
    pub genus: Option<Genus>,
    pub parametrization: Option<(Parametrization<Rational>, ParamSource)>,
    pub constants: ConstantSolutions,
    /// The search stopped below `M` because of the degree cap.
    pub capped: bool,
}

impl SolutionReport {
    fn new(constants: ConstantSolutions) -> Self {
        SolutionReport {
            status: Status::Null,
            reason: None,
            solutions: Vec::new(),
            bounds: None,
            candidates: None,
            traces: Vec::new(),
            genus: None,
            parametrization: None,
            constants,
            capped: false,
        }
    }

    fn finish(mut self, status: Status, reason: impl Into<String>) -> Self {
        self.status = status;
        self.reason = Some(reason.into());
        self
    }
}

pub fn constant_solutions(f: &P) -> ConstantSolutions {
    let diag = f.eval_uni(&[Poly::x(), Poly::x()]);
    if diag.is_zero() {
        ConstantSolutions::All
    } else {
        ConstantSolutions::Values(exact_roots(&diag))
    }
}

/// Whether `F(y(x), y(x+1))` vanishes identically.
pub fn verify_solution(f: &P, y: &Rf) -> bool {
    f.substitute_numerator(&[y.clone(), y.shift_int(1)]).is_zero()
}

/// `c0` with `y1(x + c0) = y2(x)`, if one exists.
pub fn shift_equivalent(y1: &Rf, y2: &Rf) -> Option<Rational> {
    if y1.num().degree() != y2.num().degree() || y1.den().degree() != y2.den().degree() {
        return None;
    }
    // shifting moves the subleading coefficient of a monic part by deg * c0
    let (p1, p2) = if y1.den().deg0() >= 1 { (y1.den(), y2.den()) } else { (y1.num(), y2.num()) };
    let e = p1.deg0();
    if e == 0 {
        return (y1 == y2).then(Rational::zero);
    }
    let sub = |p: &Poly| p.coeff(e - 1) / p.lc();
    let c0 = (sub(p2) - sub(p1)) / Rational::from_integer((e as i64).into());
    (y1.shift(&c0) == *y2).then_some(c0)
}

/// Rejects inputs with an obvious factorization.
fn sanity_check(f: &P) -> Result<()> {
    if !f.involves(1) {
        return Err(Error::InvalidInput("equation does not involve y(x+1)".into()));
    }
    for v in [0, 1] {
        if f.involves(v) && !content_in(f, v).is_constant() {
            return Err(Error::Reducible(format!("factor free of {}", ["y", "z"][v])));
        }
    }
    Ok(())
}

/// Full pipeline: symmetry and genus checks, parametrization, degree bound,
/// bounded search, verification.
pub fn solve_autonomous(f: &P, opts: &Options) -> Result<SolutionReport> {
    sanity_check(f)?;
    let curve = PlaneCurve::new(f.clone())?;
    let f = curve.poly();
    let mut report = SolutionReport::new(constant_solutions(f));

    if !degree_symmetry_check(&curve) {
        let reason = format!("degree asymmetry: deg_y F = {}, deg_z F = {}", curve.deg_y(), curve.deg_z());
        return Ok(report.finish(Status::Null, reason));
    }

    let (param, source) = match &opts.parametrization {
        Some(p) => {
            if !crate::curve::verify_parametrization(&curve, p) {
                return Err(Error::NotProper("imported parametrization does not verify".into()));
            }
            report.genus = Some(Genus::Known(0));
            (p.clone(), ParamSource::Imported)
        }
        None => {
            let g = genus(&curve)?;
            report.genus = Some(g.clone());
            match g {
                Genus::Known(0) => {}
                Genus::Known(g) => return Ok(report.finish(Status::Null, format!("genus {g}"))),
                Genus::Unsupported(why) => {
                    return Ok(report.finish(Status::UnsupportedParametrization, format!("genus unknown: {why}")))
                }
            }
            match parametrize(&curve)? {
                Parametrized::Rational(p, s) => (p, s),
                Parametrized::Quadratic(_, s) => {
                    return Ok(report.finish(
                        Status::UnsupportedParametrization,
                        format!("only a parametrization with irrational coefficients was found ({s})"),
                    ))
                }
                Parametrized::Unsupported(why) => return Ok(report.finish(Status::UnsupportedParametrization, why)),
            }
        }
    };
    report.parametrization = Some((param.clone(), source));

    let eq = SeparableEq::from_parametrization(&param)?;
    let deg_p1 = param.p1.degree() as u64;
    if eq.equal_sides() {
        report.bounds = Some(Bounds { n: 0, m: 0 });
        report.candidates = Some(crate::separable::constant_candidates(&eq));
        return Ok(report.finish(Status::ConstantsOnly, "both sides agree: only constant solutions"));
    }

    let bound = separable_degree_bound(&eq)?;
    let (n, m) = (bound.n, bound.n * deg_p1);
    report.bounds = Some(Bounds { n, m });
    report.traces = bound.traces;
    let candidates = bound.candidates;
    report.candidates = Some(candidates.clone());
    if opts.bound_only {
        report.status = Status::Solved;
        return Ok(report);
    }

    let mut search = n;
    if m > opts.max_degree {
        search = opts.max_degree / deg_p1;
        report.capped = true;
    }
    for u in separable_search(&eq, &candidates, search)? {
        let y = param.p1.compose(&u);
        if y.is_constant() {
            continue;
        }
        let verified = verify_solution(f, &y);
        if verified && !report.solutions.iter().any(|s| shift_equivalent(&s.y, &y).is_some()) {
            report.solutions.push(Solution { y, u, verified });
        }
    }
    if !report.solutions.is_empty() {
        report.status = Status::Solved;
        return Ok(report);
    }
    let reason = if report.capped {
        format!("no solution up to degree {} (capped below M = {m})", search * deg_p1)
    } else {
        format!("no non-constant solution of degree at most M = {m}")
    };
    Ok(report.finish(Status::Null, reason))
}

/// Non-constant rational solutions `u = A/B` of the separable equation with
/// `max(deg A, deg B) <= n`, one per shift family. Only rational candidates
/// can relate the sides along a solution with rational coefficients.
pub fn separable_search(eq: &SeparableEq, candidates: &CandidateSet, n: u64) -> Result<Vec<Rf>> {
    let mut out: Vec<Rf> = Vec::new();
    for c in candidates.rational().filter(|c| !c.is_zero()) {
        for d in 1..=n as usize {
            for (da, db) in (0..=d).map(|k| (d, k)).chain((0..d).map(|k| (k, d))) {
                for u in ansatz_search(eq, c, da, db)? {
                    if !out.iter().any(|v| shift_equivalent(v, &u).is_some()) {
                        out.push(u);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Solutions `u = A/B` of `tP1(A(x+1), B(x+1)) = c tP2(A(x), B(x))`,
/// `tQ1(A(x+1), B(x+1)) = c tQ2(A(x), B(x))` with `deg A = da`,
/// `deg B = db`, `B` monic and the shift fixed by a vanishing subleading
/// coefficient.
pub fn ansatz_search(eq: &SeparableEq, c: &Rational, da: usize, db: usize) -> Result<Vec<Rf>> {
    if da == 0 && db == 0 {
        return Ok(Vec::new());
    }
    // unknown slots: a_0..a_da, b_0..b_(db-1); one is pinned by the shift
    let pinned = if db >= 1 { ("b", db - 1) } else { ("a", da - 1) };
    let mut slots: Vec<(&str, usize)> = Vec::new();
    for i in 0..=da {
        slots.push(("a", i));
    }
    for i in 0..db {
        slots.push(("b", i));
    }
    slots.retain(|s| *s != pinned);
    let k = slots.len();
    // variables: x, unknowns, inverse of the leading coefficient of A
    let nv = k + 2;
    let x = P::var(nv, 0);
    let unknown = |name: &str, i: usize| slots.iter().position(|s| *s == (name, i)).map(|j| P::var(nv, j + 1));
    let build = |name: &str, deg: usize, monic: bool| {
        let mut p = P::zero(nv);
        for i in 0..=deg {
            let coeff = if monic && i == deg { Some(P::one(nv)) } else { unknown(name, i) };
            if let Some(cf) = coeff {
                p = &p + &(&cf * &x.pow(i as u32));
            }
        }
        p
    };
    let a = build("a", da, false);
    let b = build("b", db, true);
    let shift = |p: &P| {
        let mut images: Vec<P> = (0..nv).map(|i| P::var(nv, i)).collect();
        images[0] = &x + &P::one(nv);
        p.compose(&images)
    };
    let (a1, b1) = (shift(&a), shift(&b));
    let [tp1, tq1, tp2, tq2] = eq.homogenize_pair();
    let lift = |h: &P, u: &P, v: &P| h.map_coeffs(|x| x.clone()).compose(&[u.clone(), v.clone()]);
    let e1 = &lift(&tp1, &a1, &b1) - &lift(&tp2, &a, &b).scale(c);
    let e2 = &lift(&tq1, &a1, &b1) - &lift(&tq2, &a, &b).scale(c);

    let strip = |p: &P| P::from_terms(nv - 1, p.terms().map(|(m, c)| (m[1..].to_vec(), c.clone())));
    let mut gens: Vec<P> = Vec::new();
    for e in [e1, e2] {
        for coeff in e.coeffs_in(0) {
            if !coeff.is_zero() {
                gens.push(strip(&coeff));
            }
        }
    }
    let lead = strip(&unknown("a", da).expect("leading coefficient of A is free"));
    let s = P::var(nv - 1, k);
    gens.push(&(&lead * &s) - &P::one(nv - 1));

    let points = match solve_system(&gens) {
        Ok(p) => p,
        Err(Error::PositiveDimensional) => {
            return Err(Error::Internal(format!("ansatz system of shape ({da}, {db}) is not zero-dimensional")))
        }
        Err(e) => return Err(e),
    };
    let mut out = Vec::new();
    for pt in points {
        let Some(vals) = pt.rational_coords() else { continue };
        let value = |name: &str, i: usize| -> Rational {
            match slots.iter().position(|s| *s == (name, i)) {
                Some(j) => vals[j].clone(),
                None => Rational::zero(),
            }
        };
        let ac: Vec<Rational> = (0..=da).map(|i| value("a", i)).collect();
        let mut bc: Vec<Rational> = (0..db).map(|i| value("b", i)).collect();
        bc.push(Rational::one());
        out.push(RatFunc::new(Poly::from_coeffs(ac), Poly::from_coeffs(bc)));
    }
    Ok(out)
}
