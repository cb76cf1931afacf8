//! Arithmetic in `Q[θ]/(m(θ))` for a squarefree modulus `m`, with dynamic
//! evaluation: when an inversion hits a zero divisor the modulus is split
//! along the offending gcd and the computation is rerun on each factor.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::panic::{self, AssertUnwindSafe};
use std::sync::{Arc, Once};

use num_traits::{One, Zero};

use crate::poly::UniPoly;
use crate::scalar::{Field, Rational};

/// A monic squarefree modulus together with the symbol used when printing
/// elements of the extension.
#[derive(Clone, Debug, PartialEq)]
pub struct Modulus {
    poly: UniPoly<Rational>,
    symbol: String,
}

impl Modulus {
    pub fn new(poly: UniPoly<Rational>, symbol: impl Into<String>) -> Arc<Self> {
        assert!(poly.degree().unwrap_or(0) >= 1, "modulus must be non-constant");
        Arc::new(Modulus { poly: poly.monic(), symbol: symbol.into() })
    }

    pub fn poly(&self) -> &UniPoly<Rational> {
        &self.poly
    }

    pub fn symbol(&self) -> &str {
        &self.symbol
    }

    pub fn degree(&self) -> usize {
        self.poly.deg0()
    }

    /// The generator θ of the extension.
    pub fn generator(self: &Arc<Self>) -> AlgNum {
        AlgNum::from_poly(UniPoly::x(), self)
    }
}

/// Raised (as a panic payload) when inverting an element that shares a
/// proper factor with the modulus.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroDivisor {
    pub factor: UniPoly<Rational>,
    pub modulus: UniPoly<Rational>,
}

/// Element of `Q[θ]/(m)`. Elements without a modulus are plain rationals
/// and combine with elements of any extension.
#[derive(Clone, Debug)]
pub struct AlgNum {
    value: UniPoly<Rational>,
    modulus: Option<Arc<Modulus>>,
}

impl AlgNum {
    pub fn from_poly(p: UniPoly<Rational>, modulus: &Arc<Modulus>) -> Self {
        AlgNum { value: p.rem(&modulus.poly), modulus: Some(modulus.clone()) }
    }

    pub fn rational(q: Rational) -> Self {
        AlgNum { value: UniPoly::constant(q), modulus: None }
    }

    pub fn value(&self) -> &UniPoly<Rational> {
        &self.value
    }

    pub fn modulus(&self) -> Option<&Arc<Modulus>> {
        self.modulus.as_ref()
    }

    /// Re-reduces the element modulo a factor of its modulus.
    pub fn reduce_to(&self, modulus: &Arc<Modulus>) -> Self {
        AlgNum::from_poly(self.value.clone(), modulus)
    }

    fn join(a: &Option<Arc<Modulus>>, b: &Option<Arc<Modulus>>) -> Option<Arc<Modulus>> {
        match (a, b) {
            (None, m) | (m, None) => m.clone(),
            (Some(x), Some(y)) => {
                assert!(
                    Arc::ptr_eq(x, y) || x.poly == y.poly,
                    "mixing elements of different extensions: {} vs {}",
                    x.poly,
                    y.poly
                );
                Some(x.clone())
            }
        }
    }

    fn build(value: UniPoly<Rational>, modulus: Option<Arc<Modulus>>) -> Self {
        match &modulus {
            Some(m) => AlgNum { value: value.rem(&m.poly), modulus },
            None => AlgNum { value, modulus },
        }
    }

    /// Inverse, or the zero divisor that prevents it.
    pub fn try_inv(&self) -> Result<Self, ZeroDivisor> {
        assert!(!self.value.is_zero(), "division by zero");
        let Some(m) = &self.modulus else {
            return Ok(AlgNum::rational(self.value.lc().recip()));
        };
        let (g, s, _) = self.value.ext_gcd(&m.poly);
        if g.is_constant() {
            Ok(AlgNum::from_poly(s, m))
        } else {
            Err(ZeroDivisor { factor: g, modulus: m.poly.clone() })
        }
    }

    /// Whether the element vanishes at some (not necessarily every) root of
    /// the modulus.
    pub fn vanishes_somewhere(&self) -> bool {
        match &self.modulus {
            None => self.value.is_zero(),
            Some(m) => !self.value.gcd(&m.poly).is_constant(),
        }
    }

    /// Numerical value at a complex root of the modulus, as `(re, im)`.
    pub fn eval_at(&self, root: (f64, f64)) -> (f64, f64) {
        let mut acc = (0.0, 0.0);
        for c in self.value.coeffs().iter().rev() {
            let c = rational_to_f64(c);
            acc = (acc.0 * root.0 - acc.1 * root.1 + c, acc.0 * root.1 + acc.1 * root.0);
        }
        acc
    }
}

pub(crate) fn rational_to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Splits a modulus along a zero divisor: returns `[m]` when `e` is
/// invertible, otherwise the two coprime cofactors `gcd(e, m)` and
/// `m / gcd(e, m)`.
pub fn split_on_zero_divisor(e: &AlgNum) -> Vec<Arc<Modulus>> {
    let m = e.modulus.clone().expect("element of an extension");
    if e.value.is_zero() {
        return vec![m];
    }
    match e.try_inv() {
        Ok(_) => vec![m],
        Err(zd) => {
            let other = zd.modulus.div_exact(&zd.factor).expect("factor divides modulus");
            vec![Modulus::new(zd.factor, m.symbol.clone()), Modulus::new(other, m.symbol.clone())]
        }
    }
}

fn install_quiet_hook() {
    static ONCE: Once = Once::new();
    ONCE.call_once(|| {
        let prev = panic::take_hook();
        panic::set_hook(Box::new(move |info| {
            if info.payload().downcast_ref::<ZeroDivisor>().is_none() {
                prev(info);
            }
        }));
    });
}

/// Runs `f` over `Q[θ]/(modulus)`, splitting the modulus whenever `f`
/// inverts a zero divisor, until every branch completes. Returns one result
/// per final factor of the modulus; the factors multiply back to `modulus`.
pub fn dynamic_eval<T>(modulus: &Arc<Modulus>, f: impl Fn(&Arc<Modulus>) -> T) -> Vec<(Arc<Modulus>, T)> {
    install_quiet_hook();
    let mut pending = vec![modulus.clone()];
    let mut done = Vec::new();
    while let Some(m) = pending.pop() {
        if m.degree() == 1 {
            // a linear modulus is a field
            done.push((m.clone(), f(&m)));
            continue;
        }
        match panic::catch_unwind(AssertUnwindSafe(|| f(&m))) {
            Ok(v) => done.push((m, v)),
            Err(payload) => match payload.downcast::<ZeroDivisor>() {
                Ok(zd) if zd.modulus == m.poly => {
                    let a = zd.factor.monic();
                    let b = m.poly.div_exact(&a).expect("factor divides modulus");
                    pending.push(Modulus::new(b, m.symbol.clone()));
                    pending.push(Modulus::new(a, m.symbol.clone()));
                }
                Ok(zd) => panic::resume_unwind(zd),
                Err(other) => panic::resume_unwind(other),
            },
        }
    }
    done.reverse();
    done
}

impl PartialEq for AlgNum {
    fn eq(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).value.is_zero()
    }
}

impl fmt::Display for AlgNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = self.modulus.as_ref().map(|m| m.symbol.as_str()).unwrap_or("θ");
        f.write_str(&self.value.fmt_var(sym))
    }
}

impl Zero for AlgNum {
    fn zero() -> Self {
        AlgNum::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

impl One for AlgNum {
    fn one() -> Self {
        AlgNum::rational(Rational::one())
    }
}

impl Add for AlgNum {
    type Output = AlgNum;
    fn add(self, rhs: AlgNum) -> AlgNum {
        let m = AlgNum::join(&self.modulus, &rhs.modulus);
        AlgNum { value: &self.value + &rhs.value, modulus: m }
    }
}

impl Sub for AlgNum {
    type Output = AlgNum;
    fn sub(self, rhs: AlgNum) -> AlgNum {
        let m = AlgNum::join(&self.modulus, &rhs.modulus);
        AlgNum { value: &self.value - &rhs.value, modulus: m }
    }
}

impl Mul for AlgNum {
    type Output = AlgNum;
    fn mul(self, rhs: AlgNum) -> AlgNum {
        let m = AlgNum::join(&self.modulus, &rhs.modulus);
        AlgNum::build(&self.value * &rhs.value, m)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for AlgNum {
    type Output = AlgNum;
    fn div(self, rhs: AlgNum) -> AlgNum {
        self * rhs.inv()
    }
}

impl Neg for AlgNum {
    type Output = AlgNum;
    fn neg(self) -> AlgNum {
        AlgNum { value: -&self.value, modulus: self.modulus }
    }
}

impl Field for AlgNum {
    fn inv(&self) -> Self {
        match self.try_inv() {
            Ok(v) => v,
            Err(zd) => panic::panic_any(zd),
        }
    }

    fn from_rational(q: Rational) -> Self {
        AlgNum::rational(q)
    }

    fn to_rational(&self) -> Option<Rational> {
        self.value.is_constant().then(|| self.value.coeff(0))
    }

    fn needs_parens(&self) -> bool {
        self.value.coeffs().iter().filter(|c| !c.is_zero()).count() > 1
    }
}

/// Numerical roots of a rational univariate polynomial (Durand–Kerner).
/// Test and diagnostics helper; exact code never depends on it.
pub fn complex_roots(p: &UniPoly<Rational>) -> Vec<(f64, f64)> {
    let n = p.deg0();
    if n == 0 {
        return Vec::new();
    }
    let lc = rational_to_f64(&p.lc());
    let c: Vec<f64> = p.coeffs().iter().map(|x| rational_to_f64(x) / lc).collect();
    let eval = |z: (f64, f64)| {
        let mut acc = (0.0, 0.0);
        for a in c.iter().rev() {
            acc = (acc.0 * z.0 - acc.1 * z.1 + a, acc.0 * z.1 + acc.1 * z.0);
        }
        acc
    };
    let mut roots: Vec<(f64, f64)> = (0..n)
        .map(|k| {
            let r = 0.4_f64.powi(k as i32);
            let a = 0.9_f64 * k as f64 + 0.3;
            (r * a.cos() + 0.1, r * a.sin())
        })
        .collect();
    for _ in 0..2000 {
        let mut delta = 0.0_f64;
        for i in 0..n {
            let z = roots[i];
            let mut den = (1.0, 0.0);
            for (j, w) in roots.iter().enumerate() {
                if i != j {
                    let d = (z.0 - w.0, z.1 - w.1);
                    den = (den.0 * d.0 - den.1 * d.1, den.0 * d.1 + den.1 * d.0);
                }
            }
            let num = eval(z);
            let dd = den.0 * den.0 + den.1 * den.1;
            if dd == 0.0 {
                continue;
            }
            let q = ((num.0 * den.0 + num.1 * den.1) / dd, (num.1 * den.0 - num.0 * den.1) / dd);
            roots[i] = (z.0 - q.0, z.1 - q.1);
            delta = delta.max(q.0.abs() + q.1.abs());
        }
        if delta < 1e-15 {
            break;
        }
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    type P = UniPoly<Rational>;

    #[test]
    fn inverse_in_quadratic_field() {
        let m = Modulus::new(P::from_ints(&[-3, 0, 1]), "s");
        let s = m.generator();
        // (s + 1)^{-1} = (s - 1)/2
        let e = s.clone() + AlgNum::one();
        let inv = e.inv();
        assert_eq!(inv.clone() * e, AlgNum::one());
        assert_eq!(inv, (s - AlgNum::one()) * AlgNum::rational(crate::scalar::qf(1, 2)));
        assert_eq!(split_on_zero_divisor(&(m.generator() - AlgNum::rational(q(5)))).len(), 1);
    }

    #[test]
    fn split_factored_modulus() {
        let m = Modulus::new(P::from_ints(&[2, -3, 1]), "c");
        let e = m.generator() - AlgNum::one();
        let parts = split_on_zero_divisor(&e);
        let polys: Vec<P> = parts.iter().map(|p| p.poly().clone()).collect();
        assert_eq!(polys, vec![P::from_ints(&[-1, 1]), P::from_ints(&[-2, 1])]);
    }

    #[test]
    fn dynamic_eval_splits_on_demand() {
        // (c^2 - 2)(c^2 - 3): inverting c^2 - 2 splits the modulus.
        let m = Modulus::new(&P::from_ints(&[-2, 0, 1]) * &P::from_ints(&[-3, 0, 1]), "c");
        let results = dynamic_eval(&m, |m| {
            let c = m.generator();
            let e = c.clone() * c - AlgNum::rational(q(2));
            if e.is_zero() {
                0
            } else {
                let _ = e.inv();
                1
            }
        });
        let mut got: Vec<(P, i32)> = results.into_iter().map(|(m, v)| (m.poly().clone(), v)).collect();
        got.sort_by_key(|(_, v)| *v);
        assert_eq!(got, vec![(P::from_ints(&[-2, 0, 1]), 0), (P::from_ints(&[-3, 0, 1]), 1)]);
    }

    #[test]
    fn numeric_roots() {
        let r = complex_roots(&P::from_ints(&[1, -14, 1]));
        let mut re: Vec<f64> = r.iter().map(|z| z.0).collect();
        re.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((re[0] - (7.0 - 48f64.sqrt())).abs() < 1e-9);
        assert!((re[1] - (7.0 + 48f64.sqrt())).abs() < 1e-9);
    }
}
