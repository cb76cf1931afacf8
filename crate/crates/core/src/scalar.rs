//! Coefficient fields.
//!
//! Every polynomial type in this crate is generic over [`Field`]. Two
//! implementations ship with the crate: [`Rational`] (arbitrary precision
//! rationals) and [`crate::alg::AlgNum`] (elements of `Q[θ]/(m)` for a
//! squarefree modulus `m`).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// An exact field of characteristic zero.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Multiplicative inverse. Panics on zero; [`crate::alg::AlgNum`] raises a
    /// zero-divisor signal instead (see [`crate::alg::dynamic_eval`]).
    fn inv(&self) -> Self;

    fn from_rational(q: Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// The value as a rational, when it is one.
    fn to_rational(&self) -> Option<Rational>;

    /// Whether the element should be printed with surrounding parentheses
    /// when it appears as a coefficient.
    fn needs_parens(&self) -> bool {
        false
    }

    /// `self * other` by reference; implementations may skip normalization.
    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    /// `self + other` by reference; implementations may skip normalization.
    fn add_ref(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }

    /// Scalar dividing out of a coefficient list to reach a canonical
    /// representative up to units; `lead` is the leading coefficient.
    fn content_of(coeffs: &[&Self], lead: &Self) -> Self {
        let _ = coeffs;
        lead.clone()
    }
}

impl Field for Rational {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        self.recip()
    }

    fn from_rational(q: Rational) -> Self {
        q
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn needs_parens(&self) -> bool {
        !self.is_integer()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_integer() && other.is_integer() {
            Rational::from_integer(self.numer() * other.numer())
        } else {
            self * other
        }
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.is_integer() && other.is_integer() {
            Rational::from_integer(self.numer() + other.numer())
        } else {
            self + other
        }
    }

    fn content_of(coeffs: &[&Self], lead: &Self) -> Self {
        let den = denominator_lcm(coeffs.iter().copied());
        let num =
            numerator_gcd(coeffs.iter().map(|c| *c * &Rational::from_integer(den.clone())).collect::<Vec<_>>().iter());
        let c = Rational::new(num, den);
        if lead.is_negative() {
            -c
        } else {
            c
        }
    }
}

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Least common multiple of the denominators of `values`.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Greatest common divisor of the numerators of `values` (zero if all are zero).
pub fn numerator_gcd<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::zero(), |acc, v| acc.gcd(v.numer()))
}

/// Exact integer square root, if `n` is a perfect square.
pub fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Exact rational square root, if `v` is the square of a rational.
pub fn exact_qsqrt(v: &Rational) -> Option<Rational> {
    let n = exact_isqrt(v.numer())?;
    let d = exact_isqrt(v.denom())?;
    Some(Rational::new(n, d))
}

/// Writes `v = s² · d` with `d` a squarefree integer and `s` rational.
/// Trial division is enough for the discriminants that occur here; a
/// cofactor that is not fully factored is kept inside `d`.
pub fn squarefree_decompose(v: &Rational) -> (Rational, BigInt) {
    // v = n / m = n m / m²
    let num = v.numer() * v.denom();
    let denom = v.denom().clone();
    let sign = if num.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut rest = num.abs();
    let mut outside = BigInt::one();
    let mut inside = BigInt::one();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(1_000_000u32);
    while &p * &p <= rest && p < limit {
        let mut count = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            count += 1;
        }
        for _ in 0..count / 2 {
            outside *= &p;
        }
        if count % 2 == 1 {
            inside *= &p;
        }
        p += 1;
    }
    if let Some(r) = exact_isqrt(&rest) {
        outside *= r;
    } else {
        inside *= rest;
    }
    (Rational::new(outside, denom), sign * inside)
}

pub(crate) fn fmt_rational(v: &Rational) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}
