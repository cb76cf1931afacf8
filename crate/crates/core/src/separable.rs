//! Autonomous separable equations `P1(u(x+1)) / Q1(u(x+1)) = P2(u(x)) / Q2(u(x))`
//! and their finite sets of constant candidates.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::alg::{dynamic_eval, AlgNum, Modulus};
use crate::curve::Parametrization;
use crate::elimination::DifferenceSystem;
use crate::error::{Error, Result};
use crate::poly::{MultiPoly, UniPoly};
use crate::resultant::resultant;
use crate::roots::{root_pieces, ExactValue, RootPiece};
use crate::scalar::{Field, Rational};

type Poly = UniPoly<Rational>;

/// `P1(u(x+1)) / Q1(u(x+1)) = P2(u(x)) / Q2(u(x))` with coprime pairs of
/// common degree `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeparableEq {
    pub p1: Poly,
    pub q1: Poly,
    pub p2: Poly,
    pub q2: Poly,
    pub n: u32,
}

impl SeparableEq {
    pub fn new(p1: Poly, q1: Poly, p2: Poly, q2: Poly) -> Result<Self> {
        if p1.is_zero() || q1.is_zero() || p2.is_zero() || q2.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if !p1.gcd(&q1).is_constant() || !p2.gcd(&q2).is_constant() {
            return Err(Error::InvalidInput("numerator and denominator share a factor".into()));
        }
        let n = p1.deg0().max(q1.deg0());
        if n == 0 || n != p2.deg0().max(q2.deg0()) {
            return Err(Error::InvalidInput("both sides need the same positive degree".into()));
        }
        Ok(SeparableEq { p1, q1, p2, q2, n: n as u32 })
    }

    /// `p1(u(x+1)) = p2(u(x))` for a proper parametrization `(p1, p2)`.
    pub fn from_parametrization(p: &Parametrization<Rational>) -> Result<Self> {
        if p.p1.degree() != p.p2.degree() || p.p1.degree() == 0 {
            return Err(Error::NotProper("p1 and p2 must have the same positive degree".into()));
        }
        Self::new(p.p1.num().clone(), p.p1.den().clone(), p.p2.num().clone(), p.p2.den().clone())
    }

    /// `w^n P(z/w)` for `P1, Q1, P2, Q2`, in variables `(z, w)`.
    pub fn homogenize_pair(&self) -> [MultiPoly<Rational>; 4] {
        [&self.p1, &self.q1, &self.p2, &self.q2].map(|p| homogenize(p, self.n))
    }

    /// `P1 / Q1 = P2 / Q2` as rational functions.
    pub fn equal_sides(&self) -> bool {
        (&(&self.p1 * &self.q2) - &(&self.p2 * &self.q1)).is_zero()
    }
}

/// `w^n p(z/w)` in variables `(z, w)`.
pub fn homogenize<F: Field>(p: &UniPoly<F>, n: u32) -> MultiPoly<F> {
    MultiPoly::from_terms(
        2,
        p.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (vec![k as u32, n - k as u32], c.clone())),
    )
}

/// The constant candidates: the roots of `R(c)` that have a common root
/// witness, plus the head and tail coefficient ratios. Infinite exactly when
/// both sides agree.
#[derive(Clone, Debug, PartialEq)]
pub struct CandidateSet {
    pub finite: bool,
    /// Rational values and defining polynomials of conjugate algebraic
    /// values; empty when infinite.
    pub pieces: Vec<RootPiece>,
}

impl CandidateSet {
    pub fn values(&self) -> Vec<ExactValue> {
        let mut out = Vec::new();
        for piece in &self.pieces {
            match piece {
                RootPiece::Rational(r) => out.push(ExactValue::Rational(r.clone())),
                RootPiece::Algebraic(m) => out.extend(crate::roots::exact_roots(m)),
            }
        }
        out
    }

    pub fn rational(&self) -> impl Iterator<Item = &Rational> {
        self.pieces.iter().filter_map(|p| match p {
            RootPiece::Rational(r) => Some(r),
            RootPiece::Algebraic(_) => None,
        })
    }

    pub fn len(&self) -> usize {
        self.pieces.iter().map(|p| if let RootPiece::Algebraic(m) = p { m.deg0() } else { 1 }).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }
}

/// `(exponent, coefficient)` of the highest and lowest terms.
fn head_tail(p: &Poly) -> ((usize, Rational), (usize, Rational)) {
    let hi = (p.deg0(), p.lc());
    let lo = p.trailing_term().expect("nonzero");
    (hi, lo)
}

/// `R(c) = Res_z(P1 - c P2, Q1 - c Q2)`.
pub fn candidate_resultant(eq: &SeparableEq) -> Poly {
    // variables (z, c)
    let lift = |p: &Poly| MultiPoly::from_uni(p, 2, 0);
    let c = MultiPoly::var(2, 1);
    let a = &lift(&eq.p1) - &(&c * &lift(&eq.p2));
    let b = &lift(&eq.q1) - &(&c * &lift(&eq.q2));
    let r = resultant(&a, &b, 0).expect("resultant of bivariate polynomials");
    r.to_uni(1).expect("free of z")
}

fn has_witness<F: Field>(eq: &SeparableEq, c: &F) -> bool {
    let lift = |p: &Poly| p.map(|x| F::from_rational(x.clone()));
    let a = &lift(&eq.p1) - &lift(&eq.p2).scale(c);
    let b = &lift(&eq.q1) - &lift(&eq.q2).scale(c);
    !a.gcd(&b).is_constant() || (a.is_zero() && b.is_zero())
}

/// Algebraic candidate pieces that pass the witness test, split further
/// when the defining polynomial factors along the way.
fn witnessed_algebraic(eq: &SeparableEq, m: &Poly) -> Vec<Poly> {
    let modulus: Arc<Modulus> = Modulus::new(m.clone(), "c");
    dynamic_eval(&modulus, |branch| has_witness::<AlgNum>(eq, &branch.generator()))
        .into_iter()
        .filter(|(_, ok)| *ok)
        .map(|(branch, _)| branch.poly().clone())
        .collect()
}

/// The set of constant candidates.
pub fn constant_candidates(eq: &SeparableEq) -> CandidateSet {
    if eq.equal_sides() {
        return CandidateSet { finite: false, pieces: Vec::new() };
    }
    let mut rational: Vec<Rational> = Vec::new();
    let mut algebraic: Vec<Poly> = Vec::new();

    for piece in root_pieces(&candidate_resultant(eq)) {
        match piece {
            RootPiece::Rational(c) => {
                if has_witness(eq, &c) {
                    rational.push(c);
                }
            }
            RootPiece::Algebraic(m) => {
                for f in witnessed_algebraic(eq, &m) {
                    if f.degree() == Some(1) {
                        rational.push(-f.coeff(0) / f.coeff(1));
                    } else {
                        algebraic.push(f);
                    }
                }
            }
        }
    }

    let (hp1, lp1) = head_tail(&eq.p1);
    let (hq1, lq1) = head_tail(&eq.q1);
    let (hp2, lp2) = head_tail(&eq.p2);
    let (hq2, lq2) = head_tail(&eq.q2);
    for (a, b) in [(hp1, hp2), (hq1, hq2), (lp1, lp2), (lq1, lq2)] {
        if a.0 == b.0 {
            rational.push(&a.1 / &b.1);
            rational.push(Rational::zero());
        }
    }
    rational.sort();
    rational.dedup();
    let mut pieces: Vec<RootPiece> = rational.into_iter().map(RootPiece::Rational).collect();
    pieces.extend(algebraic.into_iter().map(|m| RootPiece::Algebraic(m.monic())));
    CandidateSet { finite: true, pieces }
}

/// The homogeneous system for candidate `c`, with `c` folded into the
/// right-hand pair.
pub fn build_system<F: Field>(eq: &SeparableEq, c: &F) -> Result<DifferenceSystem<F>> {
    if c.is_zero() {
        return Err(Error::InvalidInput("the constant must be nonzero".into()));
    }
    let [tp1, tq1, tp2, tq2] = eq.homogenize_pair().map(|p| p.map_coeffs(|x| F::from_rational(x.clone())));
    DifferenceSystem::new(tp1, tq1, tp2.scale(c), tq2.scale(c))
}

/// Every constant where the equation is defined is a solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstantsOnly {
    pub bound: u64,
}

/// The answer when both sides agree: only constant solutions, bound 0.
pub fn constants_only_answer(eq: &SeparableEq) -> Option<ConstantsOnly> {
    eq.equal_sides().then_some(ConstantsOnly { bound: 0 })
}

impl SeparableEq {
    /// Whether `u` solves the equation.
    pub fn is_solution(&self, u: &crate::poly::RatFunc<Rational>) -> bool {
        let [tp1, tq1, tp2, tq2] = self.homogenize_pair();
        let (a, b) = (u.num(), u.den());
        let one = Rational::one();
        let (a1, b1) = (a.shift(&one), b.shift(&one));
        let lhs = &tp1.eval_uni(&[a1.clone(), b1.clone()]) * &tq2.eval_uni(&[a.clone(), b.clone()]);
        let rhs = &tp2.eval_uni(&[a.clone(), b.clone()]) * &tq1.eval_uni(&[a1, b1]);
        (&lhs - &rhs).is_zero()
    }
}
