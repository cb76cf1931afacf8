//! Indicial polynomials of homogeneous second-order autonomous equations and
//! the degree bound for rational solutions of a separable equation.

use std::collections::BTreeSet;

use crate::alg::{dynamic_eval, AlgNum, Modulus};
use crate::elimination::{derive_second_order, EliminationRoute, SecondOrderAODE};
use crate::error::{Error, Result};
use crate::poly::{MultiPoly, UniPoly};
use crate::roots::{nonnegative_integer_roots, nonnegative_integer_roots_alg, ExactValue, RootPiece};
use crate::scalar::{Field, Rational};
use crate::separable::{build_system, constant_candidates, CandidateSet, SeparableEq};

/// `F(y, y + z, y + 2z + w)`, in variables `(y, z, w)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TildeForm<F> {
    pub f: MultiPoly<F>,
}

impl<F: Field> TildeForm<F> {
    pub fn support(&self) -> BTreeSet<[u32; 3]> {
        self.f.terms().map(|(m, _)| [m[0], m[1], m[2]]).collect()
    }
}

/// `sum c_I t^i2 (t(t-1))^i3` over the exponents `I` minimizing
/// `i2 + 2 i3`.
#[derive(Clone, Debug, PartialEq)]
pub struct IndicialPolynomial<F> {
    pub m: u32,
    pub mset: Vec<[u32; 3]>,
    pub p: UniPoly<F>,
}

pub fn tilde_transform<F: Field>(eq: &SecondOrderAODE<F>) -> TildeForm<F> {
    let y = MultiPoly::var(3, 0);
    let z = MultiPoly::var(3, 1);
    let w = MultiPoly::var(3, 2);
    let v1 = &y + &z;
    let v2 = &(&v1 + &z) + &w;
    TildeForm { f: eq.f.compose(&[y, v1, v2]) }
}

pub fn indicial_polynomial<F: Field>(t: &TildeForm<F>) -> Result<IndicialPolynomial<F>> {
    let weight = |m: &[u32]| m[1] + 2 * m[2];
    let m = t.f.terms().map(|(e, _)| weight(e)).min().ok_or_else(|| Error::Internal("zero equation".into()))?;
    let tt = UniPoly::<F>::x();
    let tt1 = UniPoly::from_coeffs(vec![-F::one(), F::one()]);
    let falling = &tt * &tt1;
    let mut p = UniPoly::zero();
    let mut mset = Vec::new();
    for (e, c) in t.f.terms() {
        if weight(e) == m {
            mset.push([e[0], e[1], e[2]]);
            p = &p + &(&tt.pow(e[1]) * &falling.pow(e[2])).scale(c);
        }
    }
    if p.is_zero() {
        return Err(Error::Internal("indicial polynomial vanished".into()));
    }
    Ok(IndicialPolynomial { m, mset, p })
}

/// Non-negative integer roots, over the rationals or an extension.
pub trait IntegerRoots: Field {
    fn nonnegative_integer_roots(p: &UniPoly<Self>) -> Vec<u64>;
}

impl IntegerRoots for Rational {
    fn nonnegative_integer_roots(p: &UniPoly<Self>) -> Vec<u64> {
        nonnegative_integer_roots(p)
    }
}

impl IntegerRoots for AlgNum {
    fn nonnegative_integer_roots(p: &UniPoly<Self>) -> Vec<u64> {
        nonnegative_integer_roots_alg(p)
    }
}

/// Every degree a nonzero polynomial solution can have.
pub fn poly_degree_bound<F: IntegerRoots>(eq: &SecondOrderAODE<F>) -> Result<Vec<u64>> {
    let ind = indicial_polynomial(&tilde_transform(eq))?;
    Ok(F::nonnegative_integer_roots(&ind.p))
}

/// Degree data for one candidate constant (or one conjugate class).
#[derive(Clone, Debug, PartialEq)]
pub struct CandidateTrace {
    pub candidate: String,
    pub numerator_degrees: Vec<u64>,
    pub denominator_degrees: Vec<u64>,
    pub routes: Vec<EliminationRoute>,
}

/// `N` together with the data it was computed from.
#[derive(Clone, Debug, PartialEq)]
pub struct DegreeBound {
    pub n: u64,
    pub candidates: CandidateSet,
    pub traces: Vec<CandidateTrace>,
}

fn branch_degrees<F: IntegerRoots>(eq: &SeparableEq, c: &F) -> Result<(Vec<u64>, Vec<u64>, Vec<EliminationRoute>)> {
    let sys = build_system(eq, c)?;
    let (fa, fb) = derive_second_order(&sys)?;
    Ok((poly_degree_bound(&fa)?, poly_degree_bound(&fb)?, vec![fa.route, fb.route]))
}

fn merge(into: &mut Vec<u64>, from: Vec<u64>) {
    into.extend(from);
    into.sort_unstable();
    into.dedup();
}

/// Bound `N` on the degrees of numerator and denominator of every rational
/// solution: `0` when both sides agree, otherwise the largest non-negative
/// integer indicial root over all nonzero candidates.
pub fn separable_degree_bound(eq: &SeparableEq) -> Result<DegreeBound> {
    let candidates = constant_candidates(eq);
    if !candidates.finite {
        return Ok(DegreeBound { n: 0, candidates, traces: Vec::new() });
    }
    let mut traces = Vec::new();
    for piece in &candidates.pieces {
        let trace = match piece {
            RootPiece::Rational(c) if num_traits::Zero::is_zero(c) => continue,
            RootPiece::Rational(c) => {
                let (a, b, routes) = branch_degrees(eq, c)?;
                CandidateTrace {
                    candidate: ExactValue::Rational(c.clone()).to_string(),
                    numerator_degrees: a,
                    denominator_degrees: b,
                    routes,
                }
            }
            RootPiece::Algebraic(m) => {
                // conjugate candidates give conjugate equations with the
                // same integer roots, so one generic branch covers them all
                let modulus = Modulus::new(m.clone(), "c");
                let mut trace = CandidateTrace {
                    candidate: format!("roots of {}", m.fmt_var("c")),
                    numerator_degrees: Vec::new(),
                    denominator_degrees: Vec::new(),
                    routes: Vec::new(),
                };
                for (_, r) in dynamic_eval(&modulus, |branch| branch_degrees::<AlgNum>(eq, &branch.generator())) {
                    let (a, b, routes) = r?;
                    merge(&mut trace.numerator_degrees, a);
                    merge(&mut trace.denominator_degrees, b);
                    trace.routes.extend(routes);
                }
                trace
            }
        };
        traces.push(trace);
    }
    let n = traces
        .iter()
        .flat_map(|t| t.numerator_degrees.iter().chain(&t.denominator_degrees))
        .copied()
        .max()
        .unwrap_or(0);
    Ok(DegreeBound { n, candidates, traces })
}
