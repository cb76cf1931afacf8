use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::UniPoly;
use crate::error::{Error, Result};
use crate::scalar::Field;

/// Univariate rational function in canonical form: numerator and
/// denominator coprime, denominator monic.
#[derive(Clone, PartialEq, Debug)]
pub struct RatFunc<F> {
    num: UniPoly<F>,
    den: UniPoly<F>,
}

impl<F: Field> RatFunc<F> {
    /// Brings `num / den` into canonical form. Inputs equal up to a common
    /// nonzero scalar produce identical results.
    pub fn normalize(num: UniPoly<F>, den: UniPoly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides");
        let den = den.div_exact(&g).expect("gcd divides");
        let inv = den.lc().inv();
        Ok(RatFunc { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn new(num: UniPoly<F>, den: UniPoly<F>) -> Self {
        Self::normalize(num, den).expect("nonzero denominator")
    }

    pub fn from_poly(p: UniPoly<F>) -> Self {
        RatFunc { num: p, den: UniPoly::one() }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(UniPoly::zero())
    }

    pub fn x() -> Self {
        Self::from_poly(UniPoly::x())
    }

    pub fn num(&self) -> &UniPoly<F> {
        &self.num
    }

    pub fn den(&self) -> &UniPoly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// `max(deg num, deg den)`, the degree of the induced map.
    pub fn degree(&self) -> usize {
        self.num.deg0().max(self.den.deg0())
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> RatFunc<G> {
        RatFunc::new(self.num.map(&f), self.den.map(&f))
    }

    /// `self(x + k)`
    pub fn shift(&self, k: &F) -> Self {
        // shifting preserves coprimality and monic denominators
        RatFunc { num: self.num.shift(k), den: self.den.shift(k) }
    }

    pub fn shift_int(&self, k: i64) -> Self {
        self.shift(&F::from_int(k))
    }

    pub fn eval(&self, x: &F) -> Option<F> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    pub fn inv(&self) -> Result<Self> {
        Self::normalize(self.den.clone(), self.num.clone())
    }

    /// `self(other(x))`
    pub fn compose(&self, other: &Self) -> Self {
        // homogenized evaluation: P(a/b) · b^d
        let d = self.degree();
        let a = &other.num;
        let b = &other.den;
        let hom = |p: &UniPoly<F>| {
            let mut acc = UniPoly::zero();
            let mut apow = UniPoly::one();
            let bpows: Vec<UniPoly<F>> = {
                let mut v = vec![UniPoly::one()];
                for i in 1..=d {
                    v.push(&v[i - 1] * b);
                }
                v
            };
            for k in 0..=d {
                let c = p.coeff(k);
                if !c.is_zero() {
                    acc = &acc + &(&apow * &bpows[d - k]).scale(&c);
                }
                apow = &apow * a;
            }
            acc
        };
        Self::new(hom(&self.num), hom(&self.den))
    }

    pub fn fmt_var(&self, var: &str) -> String {
        if self.den.is_constant() {
            return self.num.fmt_var(var);
        }
        let n = self.num.fmt_var(var);
        let d = self.den.fmt_var(var);
        let wrap = |s: String, p: &UniPoly<F>| {
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        format!("{}/{}", wrap(n, &self.num), wrap(d, &self.den))
    }
}

impl<F: Field> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("x"))
    }
}

impl<'a, F: Field> Add<&'a RatFunc<F>> for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn add(self, rhs: &'a RatFunc<F>) -> RatFunc<F> {
        RatFunc::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl<'a, F: Field> Sub<&'a RatFunc<F>> for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn sub(self, rhs: &'a RatFunc<F>) -> RatFunc<F> {
        RatFunc::new(&(&self.num * &rhs.den) - &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl<'a, F: Field> Mul<&'a RatFunc<F>> for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn mul(self, rhs: &'a RatFunc<F>) -> RatFunc<F> {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a, F: Field> Div<&'a RatFunc<F>> for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn div(self, rhs: &'a RatFunc<F>) -> RatFunc<F> {
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl<F: Field> Neg for &RatFunc<F> {
    type Output = RatFunc<F>;
    fn neg(self) -> RatFunc<F> {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qf, Rational};

    type P = UniPoly<Rational>;
    type R = RatFunc<Rational>;

    #[test]
    fn normalize_examples() {
        let r = R::normalize(P::from_ints(&[2, 2]), P::from_ints(&[0, 4])).unwrap();
        assert_eq!(r.num(), &P::from_coeffs(vec![qf(1, 2), qf(1, 2)]));
        assert_eq!(r.den(), &P::x());

        let r = R::normalize(P::from_ints(&[-1, 0, 1]), P::from_ints(&[-1, 1])).unwrap();
        assert_eq!(r.num(), &P::from_ints(&[1, 1]));
        assert_eq!(r.den(), &P::one());

        let r = R::normalize(P::zero(), P::x()).unwrap();
        assert!(r.is_zero());
        assert_eq!(r.den(), &P::one());

        assert!(matches!(R::normalize(P::x(), P::zero()), Err(Error::ZeroDenominator)));
    }

    #[test]
    fn shift_of_reciprocal() {
        // 1/(x + 3) shifted by one is 1/(x + 4)
        let r = R::new(P::one(), P::from_ints(&[3, 1]));
        assert_eq!(r.shift(&q(1)), R::new(P::one(), P::from_ints(&[4, 1])));
    }

    #[test]
    fn compose_with_moebius() {
        // (x^2) ∘ (1/x) = 1/x^2
        let sq = R::from_poly(P::from_ints(&[0, 0, 1]));
        let inv = R::new(P::one(), P::x());
        assert_eq!(sq.compose(&inv), R::new(P::one(), P::from_ints(&[0, 0, 1])));
        assert_eq!(inv.compose(&inv), R::x());
    }
}
