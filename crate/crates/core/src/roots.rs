//! Roots of univariate polynomials over Q.
//!
//! Factorization stays deliberately shallow: squarefree decomposition,
//! rational roots, and irreducible quadratics. What remains is kept as a
//! squarefree defining polynomial and handled through [`crate::alg`].

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::alg::{AlgNum, Modulus};
use crate::poly::UniPoly;
use crate::scalar::{squarefree_decompose, Field, Rational};

type Poly = UniPoly<Rational>;

/// A root class of a rational polynomial.
#[derive(Clone, Debug, PartialEq)]
pub enum RootPiece {
    Rational(Rational),
    /// All roots of a monic squarefree polynomial of degree ≥ 2 without
    /// rational roots. Degree-2 pieces are irreducible.
    Algebraic(Poly),
}

/// An exact scalar: rational, an element `a + b·√d` of a quadratic field,
/// or a root of a higher-degree defining polynomial.
#[derive(Clone, Debug, PartialEq)]
pub enum ExactValue {
    Rational(Rational),
    Quadratic { a: Rational, b: Rational, d: BigInt },
    RootOf { poly: Poly, index: usize },
}

impl ExactValue {
    pub fn is_zero(&self) -> bool {
        matches!(self, ExactValue::Rational(r) if r.is_zero())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            ExactValue::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// Monic polynomial over Q vanishing at the value (minimal for rational
    /// and quadratic values; the defining squarefree polynomial otherwise).
    pub fn minimal_polynomial(&self) -> Poly {
        match self {
            ExactValue::Rational(r) => Poly::linear_root(r.clone()),
            ExactValue::Quadratic { a, b, d } => {
                // (x - a)^2 - b^2 d
                let d = Rational::from_integer(d.clone());
                Poly::from_coeffs(vec![a * a - b * b * d, -(a + a), Rational::one()])
            }
            ExactValue::RootOf { poly, .. } => poly.clone(),
        }
    }

    /// The value as an element of an explicit extension.
    pub fn to_algnum(&self) -> AlgNum {
        match self {
            ExactValue::Rational(r) => AlgNum::rational(r.clone()),
            ExactValue::Quadratic { a, b, d } => {
                let m = quadratic_modulus(d);
                AlgNum::from_poly(Poly::from_coeffs(vec![a.clone(), b.clone()]), &m)
            }
            ExactValue::RootOf { poly, .. } => Modulus::new(poly.clone(), "a").generator(),
        }
    }

    /// Numerical approximation (real part, imaginary part).
    pub fn approx(&self) -> (f64, f64) {
        match self {
            ExactValue::Rational(r) => (crate::alg::rational_to_f64(r), 0.0),
            ExactValue::Quadratic { a, b, d } => {
                let a = crate::alg::rational_to_f64(a);
                let b = crate::alg::rational_to_f64(b);
                let d = d.to_f64().unwrap_or(f64::NAN);
                if d >= 0.0 {
                    (a + b * d.sqrt(), 0.0)
                } else {
                    (a, b * (-d).sqrt())
                }
            }
            ExactValue::RootOf { poly, index } => {
                crate::alg::complex_roots(poly).get(*index).copied().unwrap_or((f64::NAN, f64::NAN))
            }
        }
    }
}

/// `Q(√d)` as `Q[θ]/(θ² − d)`.
pub fn quadratic_modulus(d: &BigInt) -> Arc<Modulus> {
    let poly = Poly::from_coeffs(vec![-Rational::from_integer(d.clone()), Rational::zero(), Rational::one()]);
    Modulus::new(poly, format!("sqrt({d})"))
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactValue::Rational(r) => write!(f, "{}", crate::scalar::fmt_rational(r)),
            ExactValue::Quadratic { a, b, d } => {
                let root = format!("sqrt({d})");
                let bpart = if b.is_one() {
                    root
                } else if (-b).is_one() {
                    format!("-{root}")
                } else {
                    format!("{}*{root}", crate::scalar::fmt_rational(b))
                };
                if a.is_zero() {
                    write!(f, "{bpart}")
                } else if let Some(rest) = bpart.strip_prefix('-') {
                    write!(f, "{} - {rest}", crate::scalar::fmt_rational(a))
                } else {
                    write!(f, "{} + {bpart}", crate::scalar::fmt_rational(a))
                }
            }
            ExactValue::RootOf { poly, index } => write!(f, "RootOf({}, {index})", poly.fmt_var("a")),
        }
    }
}

impl Serialize for ExactValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let irrational = !matches!(self, ExactValue::Rational(_));
        let mut st = s.serialize_struct("ExactValue", if irrational { 2 } else { 1 })?;
        st.serialize_field("value", &self.to_string())?;
        if irrational {
            st.serialize_field("minimal_polynomial", &self.minimal_polynomial().fmt_var("a"))?;
        }
        st.end()
    }
}

/// Splits the roots of `p` into rational roots, irreducible quadratics and
/// leftover squarefree pieces. Multiplicities are dropped.
pub fn root_pieces(p: &Poly) -> Vec<RootPiece> {
    let mut out = Vec::new();
    if p.is_constant() {
        return out;
    }
    let mut rest = p.squarefree_part();
    for r in rational_roots(&rest) {
        rest = rest.div_exact(&Poly::linear_root(r.clone())).expect("root divides");
        out.push(RootPiece::Rational(r));
    }
    if !rest.is_constant() {
        out.push(RootPiece::Algebraic(rest.monic()));
    }
    out
}

/// Expands root pieces into individual exact values. Quadratic pieces become
/// two conjugates in `Q(√d)`; higher pieces become `RootOf` entries.
pub fn exact_roots(p: &Poly) -> Vec<ExactValue> {
    let mut out = Vec::new();
    for piece in root_pieces(p) {
        match piece {
            RootPiece::Rational(r) => out.push(ExactValue::Rational(r)),
            RootPiece::Algebraic(m) if m.degree() == Some(2) => {
                let (plus, minus) = quadratic_roots(&m);
                out.push(plus);
                out.push(minus);
            }
            RootPiece::Algebraic(m) => {
                for index in 0..m.deg0() {
                    out.push(ExactValue::RootOf { poly: m.clone(), index });
                }
            }
        }
    }
    out
}

/// Both roots of a monic irreducible quadratic `x² + b x + c`.
pub fn quadratic_roots(m: &Poly) -> (ExactValue, ExactValue) {
    let m = m.monic();
    let b = m.coeff(1);
    let c = m.coeff(0);
    let disc = &b * &b - Rational::from_integer(BigInt::from(4)) * &c;
    let (s, d) = squarefree_decompose(&disc);
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let a = -&b * &half;
    let bb = s * half;
    (ExactValue::Quadratic { a: a.clone(), b: bb.clone(), d: d.clone() }, ExactValue::Quadratic { a, b: -bb, d })
}

/// Scales to a primitive integer polynomial.
fn integer_coeffs(p: &Poly) -> Vec<BigInt> {
    p.primitive().coeffs().iter().map(|c| c.numer().clone()).collect()
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|n| (3..).step_by(2).take_while(|d| d * d <= *n).all(|d| n % d != 0))
}

fn mod_eval(c: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for a in c.iter().rev() {
        acc = (acc * x + a).mod_floor(m);
    }
    acc
}

fn mod_inv(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Rational number with |num| ≤ n, 0 < den ≤ d congruent to `a` mod `m`.
fn rational_reconstruct(a: &BigInt, m: &BigInt, n: &BigInt, d: &BigInt) -> Option<Rational> {
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > n {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let t2 = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > *d {
        return None;
    }
    if !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Rational::new(r1, t1))
}

/// All rational roots of `p`, found by lifting roots modulo a small prime
/// and reconstructing them; each candidate is verified exactly.
pub fn rational_roots(p: &Poly) -> Vec<Rational> {
    let mut out = Vec::new();
    if p.is_constant() {
        return out;
    }
    let mut f = p.squarefree_part();
    if f.coeff(0).is_zero() {
        out.push(Rational::zero());
        f = f.div_exact(&Poly::x()).unwrap();
    }
    if f.is_constant() {
        return out;
    }
    if f.degree() == Some(1) {
        out.push(-f.coeff(0) / f.coeff(1));
        return out;
    }
    let c = integer_coeffs(&f);
    let lc = c.last().unwrap().abs();
    let a0 = c[0].abs();
    let dc: Vec<BigInt> = c.iter().enumerate().skip(1).map(|(k, a)| a * BigInt::from(k)).collect();
    for prime in small_primes() {
        let pb = BigInt::from(prime);
        if (&lc % &pb).is_zero() {
            continue;
        }
        // squarefree modulo p: gcd(f, f') = 1 mod p
        let fp: UniPoly<Rational> =
            Poly::from_coeffs(c.iter().map(|a| Rational::from_integer(a.mod_floor(&pb))).collect());
        let roots_mod: Vec<u64> = (0..prime).filter(|x| mod_eval(&c, &BigInt::from(*x), &pb).is_zero()).collect();
        if fp.degree() != f.degree() {
            continue;
        }
        let separable = roots_mod.iter().all(|x| !mod_eval(&dc, &BigInt::from(*x), &pb).is_zero());
        if !separable {
            continue;
        }
        // need p^k > 2 · |a0| · lc
        let bound = BigInt::from(2) * &a0 * &lc + BigInt::one();
        for r in roots_mod {
            let mut modulus = pb.clone();
            let mut root = BigInt::from(r);
            while modulus <= bound {
                modulus = &modulus * &modulus;
                let fv = mod_eval(&c, &root, &modulus);
                let dv = mod_eval(&dc, &root, &modulus);
                let Some(inv) = mod_inv(&dv, &modulus) else { break };
                root = (&root - fv * inv).mod_floor(&modulus);
            }
            let candidate = rational_reconstruct(&root, &modulus, &a0, &lc)
                .or_else(|| rational_reconstruct(&(&modulus - &root), &modulus, &a0, &lc).map(|v| -v));
            if let Some(v) = candidate {
                if f.eval(&v).is_zero() && !out.contains(&v) {
                    out.push(v);
                }
            }
        }
        break;
    }
    out.sort();
    out
}

/// Non-negative integer roots of a rational polynomial.
pub fn nonnegative_integer_roots(p: &Poly) -> Vec<u64> {
    rational_roots(p)
        .into_iter()
        .filter(|r| r.is_integer() && !r.is_negative())
        .filter_map(|r| r.to_integer().to_u64())
        .collect()
}

/// Cauchy bound: every complex root has modulus below the returned value.
pub fn cauchy_bound(p: &Poly) -> Rational {
    let lc = p.lc();
    let m = p.coeffs().iter().take(p.deg0()).map(|c| (c / &lc).abs()).max().unwrap_or_else(Rational::zero);
    m + Rational::one()
}

/// Non-negative integers `k` at which `p` vanishes in at least one branch of
/// its coefficient extension. Candidates come from the norm over Q.
pub fn nonnegative_integer_roots_alg(p: &UniPoly<AlgNum>) -> Vec<u64> {
    let Some(m) = p.coeffs().iter().find_map(|c| c.modulus().cloned()) else {
        let rp = p.map(|c| c.to_rational().expect("rational"));
        return nonnegative_integer_roots(&rp);
    };
    let norm = norm_over_q(p, &m);
    nonnegative_integer_roots(&norm)
        .into_iter()
        .filter(|k| p.eval(&AlgNum::from_int(*k as i64)).vanishes_somewhere())
        .collect()
}

/// `Res_θ(p(t, θ), m(θ))`, a rational polynomial whose roots are all roots of
/// `p` in every branch.
pub fn norm_over_q(p: &UniPoly<AlgNum>, m: &Arc<Modulus>) -> Poly {
    use crate::poly::MultiPoly;
    // variables: 0 = t, 1 = θ
    let mut lifted = MultiPoly::<Rational>::zero(2);
    for (k, c) in p.coeffs().iter().enumerate() {
        for (j, a) in c.value().coeffs().iter().enumerate() {
            lifted.add_term(vec![k as u32, j as u32], a.clone());
        }
    }
    let mp = MultiPoly::from_uni(m.poly(), 2, 1);
    let r = crate::resultant::resultant(&lifted, &mp, 1).expect("modulus is non-constant");
    r.to_uni(0).expect("resultant free of θ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qf};

    #[test]
    fn rational_roots_basic() {
        // (2x - 3)(x + 5)(x^2 + 1)
        let p = &(&Poly::from_ints(&[-3, 2]) * &Poly::from_ints(&[5, 1])) * &Poly::from_ints(&[1, 0, 1]);
        assert_eq!(rational_roots(&p), vec![q(-5), qf(3, 2)]);
        assert_eq!(rational_roots(&Poly::from_ints(&[0, 0, 1])), vec![q(0)]);
    }

    #[test]
    fn rational_roots_large_coefficients() {
        let r1 = Rational::new(BigInt::from(123456789u64), BigInt::from(1000003u64));
        let p = &Poly::linear_root(r1.clone()) * &Poly::from_ints(&[-7, 0, 0, 1]);
        assert_eq!(rational_roots(&p), vec![r1]);
    }

    #[test]
    fn quadratic_piece_of_candidate_resultant() {
        let p = &Poly::from_ints(&[1, -14, 1]) * &Poly::from_ints(&[-1, 1]);
        let roots = exact_roots(&p);
        let shown: Vec<String> = roots.iter().map(|r| r.to_string()).collect();
        assert_eq!(shown, vec!["1", "7 + 4*sqrt(3)", "7 - 4*sqrt(3)"]);
        assert_eq!(roots[1].minimal_polynomial(), Poly::from_ints(&[1, -14, 1]));
    }

    #[test]
    fn algebraic_norm_roots() {
        // p(t) = t - 2 - θ (θ^2 = 1 split later) vanishes at t = 3 in branch θ = 1
        let m = Modulus::new(Poly::from_ints(&[-1, 0, 1]), "a");
        let th = m.generator();
        let p = UniPoly::from_coeffs(vec![-(AlgNum::from_int(2) + th), AlgNum::one()]);
        assert_eq!(nonnegative_integer_roots_alg(&p), vec![1, 3]);
    }

    #[test]
    fn cauchy_bound_dominates() {
        let p = Poly::from_ints(&[-6, 11, -6, 1]);
        assert!(cauchy_bound(&p) > q(3));
    }
}
