use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::{RatFunc, UniPoly};
use crate::scalar::{Field, Rational};

/// Exponent vector, one entry per variable.
pub type Monomial = Vec<u32>;

/// Sparse multivariate polynomial over `F` in a fixed number of variables.
///
/// Terms live in a `BTreeMap` keyed by exponent vectors, so iteration is in
/// lexicographic order with variable 0 the most significant.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly<F> {
    nvars: usize,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, F::one())
    }

    pub fn monomial(nvars: usize, exps: Monomial, c: F) -> Self {
        assert_eq!(exps.len(), nvars, "exponent arity mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MultiPoly { nvars, terms }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, F)> {
        self.terms.into_iter()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &[u32]) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: F) {
        debug_assert_eq!(m.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add_ref(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all(|&e| e == 0))
    }

    pub fn constant_value(&self) -> Option<F> {
        if self.is_zero() {
            return Some(F::zero());
        }
        self.is_constant().then(|| self.terms.values().next().unwrap().clone())
    }

    /// Largest term in lexicographic order.
    pub fn lex_leading(&self) -> Option<(&Monomial, &F)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m[i]).max()
    }

    pub fn min_degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m[i]).min()
    }

    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m[i] > 0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, deg: u32) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().filter(|(m, _)| m.iter().sum::<u32>() == deg).map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Homogenizes with variable `h` to total degree `deg`; `None` when some
    /// term already exceeds `deg`.
    pub fn homogenize(&self, h: usize, deg: u32) -> Option<Self> {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let d: u32 = m.iter().sum();
            if d > deg {
                return None;
            }
            let mut e = m.clone();
            e[h] += deg - d;
            out.add_term(e, c.clone());
        }
        Some(out)
    }

    /// Smallest total degree among the terms (the order at the origin).
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).min()
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &[u32], c: &F) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().map(|(e, a)| (e.iter().zip(m).map(|(x, y)| x + y).collect(), a.clone() * c.clone())),
        )
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> MultiPoly<G> {
        MultiPoly::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().filter(|(m, _)| m[i] > 0).map(|(m, c)| {
                let mut e = m.clone();
                e[i] -= 1;
                (e, c.clone() * F::from_int(m[i] as i64))
            }),
        )
    }

    /// Substitutes the value `v` for variable `i` (the variable stays in the
    /// ring with exponent zero).
    pub fn eval_var(&self, i: usize, v: &F) -> Self {
        let mut out = Self::zero(self.nvars);
        let maxd = self.degree_in(i).unwrap_or(0) as usize;
        let mut powers = vec![F::one()];
        for k in 1..=maxd {
            powers.push(powers[k - 1].clone() * v.clone());
        }
        for (m, c) in &self.terms {
            let mut e = m.clone();
            let k = e[i] as usize;
            e[i] = 0;
            out.add_term(e, c.clone() * powers[k].clone());
        }
        out
    }

    /// Evaluates at a full point.
    pub fn eval(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.nvars);
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m) {
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Replaces every variable `i` by `images[i]`, all of which live in a
    /// common target ring.
    pub fn compose(&self, images: &[MultiPoly<F>]) -> MultiPoly<F> {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut cache: Vec<Vec<MultiPoly<F>>> =
            images.iter().map(|p| vec![MultiPoly::one(target), p.clone()]).collect();
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(target, c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while cache[i].len() <= e as usize {
                    let next = cache[i].last().unwrap() * &images[i];
                    cache[i].push(next);
                }
                t = &t * &cache[i][e as usize];
            }
            out = &out + &t;
        }
        out
    }

    /// Evaluates with univariate polynomials substituted for every variable.
    pub fn eval_uni(&self, images: &[UniPoly<F>]) -> UniPoly<F> {
        assert_eq!(images.len(), self.nvars);
        let mut cache: Vec<Vec<UniPoly<F>>> = images.iter().map(|p| vec![UniPoly::one(), p.clone()]).collect();
        let mut out = UniPoly::zero();
        for (m, c) in &self.terms {
            let mut t = UniPoly::constant(c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while cache[i].len() <= e as usize {
                    let next = cache[i].last().unwrap() * &images[i];
                    cache[i].push(next);
                }
                t = &t * &cache[i][e as usize];
            }
            out = &out + &t;
        }
        out
    }

    /// Moves variable `i` of `self` to position `map[i]` of a ring with
    /// `nvars` variables.
    /// Numerator of `self(r_0, ..., r_{n-1})` over the common denominator
    /// `prod_i den(r_i)^deg_i(self)`. Zero exactly when the substitution
    /// vanishes identically.
    pub fn substitute_numerator(&self, rs: &[RatFunc<F>]) -> UniPoly<F> {
        assert_eq!(rs.len(), self.nvars);
        let degs: Vec<usize> = (0..self.nvars).map(|i| self.degree_in(i).unwrap_or(0) as usize).collect();
        let powers = |p: &UniPoly<F>, d: usize| {
            let mut v = vec![UniPoly::one()];
            for k in 1..=d {
                v.push(&v[k - 1] * p);
            }
            v
        };
        let nums: Vec<Vec<UniPoly<F>>> = rs.iter().zip(&degs).map(|(r, &d)| powers(r.num(), d)).collect();
        let dens: Vec<Vec<UniPoly<F>>> = rs.iter().zip(&degs).map(|(r, &d)| powers(r.den(), d)).collect();
        let mut out = UniPoly::zero();
        for (m, c) in &self.terms {
            let mut t = UniPoly::constant(c.clone());
            for (i, &e) in m.iter().enumerate() {
                let e = e as usize;
                t = &(&t * &nums[i][e]) * &dens[i][degs[i] - e];
            }
            out = &out + &t;
        }
        out
    }

    pub fn remap(&self, map: &[usize], nvars: usize) -> Self {
        assert_eq!(map.len(), self.nvars);
        Self::from_terms(
            nvars,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0; nvars];
                for (i, &x) in m.iter().enumerate() {
                    e[map[i]] += x;
                }
                (e, c.clone())
            }),
        )
    }

    /// Coefficients with respect to variable `i`: `self = Σ_k out[k] · x_i^k`.
    /// Each coefficient stays in the same ring with `x_i` absent.
    pub fn coeffs_in(&self, i: usize) -> Vec<MultiPoly<F>> {
        let d = self.degree_in(i).map(|d| d as usize + 1).unwrap_or(0);
        let mut out = vec![Self::zero(self.nvars); d];
        for (m, c) in &self.terms {
            let mut e = m.clone();
            let k = e[i] as usize;
            e[i] = 0;
            out[k].terms.insert(e, c.clone());
        }
        out
    }

    pub fn from_coeffs_in(nvars: usize, i: usize, coeffs: &[MultiPoly<F>]) -> Self {
        let mut out = Self::zero(nvars);
        for (k, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut e = m.clone();
                e[i] += k as u32;
                out.add_term(e, a.clone());
            }
        }
        out
    }

    /// Leading coefficient with respect to variable `i`.
    pub fn lc_in(&self, i: usize) -> Self {
        self.coeffs_in(i).pop().unwrap_or_else(|| Self::zero(self.nvars))
    }

    /// Embeds a univariate polynomial as variable `i`.
    pub fn from_uni(p: &UniPoly<F>, nvars: usize, i: usize) -> Self {
        Self::from_terms(
            nvars,
            p.coeffs().iter().enumerate().map(|(k, c)| {
                let mut e = vec![0; nvars];
                e[i] = k as u32;
                (e, c.clone())
            }),
        )
    }

    /// Converts to a univariate polynomial in variable `i`; `None` if any
    /// other variable occurs.
    pub fn to_uni(&self, i: usize) -> Option<UniPoly<F>> {
        let mut coeffs = vec![F::zero(); self.degree_in(i).map(|d| d as usize + 1).unwrap_or(0)];
        for (m, c) in &self.terms {
            if m.iter().enumerate().any(|(j, &e)| j != i && e > 0) {
                return None;
            }
            coeffs[m[i] as usize] = c.clone();
        }
        Some(UniPoly::from_coeffs(coeffs))
    }

    /// Multiplies by the inverse of the lexicographic leading coefficient.
    pub fn monic_lex(&self) -> Self {
        match self.lex_leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.inv();
                self.scale(&inv)
            }
        }
    }

    /// Divides by the content of the coefficients: integer content 1 over Q,
    /// monic otherwise. The lexicographic leading coefficient is positive.
    pub fn normalized(&self) -> Self {
        match self.lex_leading() {
            None => self.clone(),
            Some((_, lead)) => {
                let coeffs: Vec<&F> = self.terms.values().collect();
                let c = F::content_of(&coeffs, lead);
                self.scale(&c.inv())
            }
        }
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (dm, dc) = d.lex_leading().expect("division by zero polynomial");
        let dinv = dc.inv();
        let tail: Vec<(&Monomial, &F)> = d.terms.iter().rev().skip(1).collect();
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((m, c)) = rem.pop_last() {
            if m.iter().zip(dm).any(|(a, b)| a < b) {
                return None;
            }
            let e: Monomial = m.iter().zip(dm).map(|(a, b)| a - b).collect();
            let k = c * dinv.clone();
            for (tm, tc) in &tail {
                let key: Monomial = tm.iter().zip(&e).map(|(a, b)| a + b).collect();
                let delta = -k.mul_ref(tc);
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(delta);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        let s = o.get().add_ref(&delta);
                        if s.is_zero() {
                            o.remove();
                        } else {
                            *o.get_mut() = s;
                        }
                    }
                }
            }
            quot.insert(e, k);
        }
        Some(MultiPoly { nvars: self.nvars, terms: quot })
    }

    /// Pseudo-remainder of `self` by `d` with respect to variable `i`.
    pub fn prem(&self, d: &Self, i: usize) -> Self {
        let dd = d.degree_in(i).expect("zero divisor") as usize;
        let dc = d.coeffs_in(i);
        let lc = &dc[dd];
        let mut r = self.coeffs_in(i);
        if r.len() <= dd {
            return self.clone();
        }
        let mut e = r.len() - dd;
        while r.len() > dd {
            let lr = r.pop().unwrap();
            let shift = r.len() - dd;
            for (k, rk) in r.iter_mut().enumerate() {
                let mut v = &*rk * lc;
                if k >= shift && !dc[k - shift].is_zero() {
                    v = &v - &(&lr * &dc[k - shift]);
                }
                *rk = v;
            }
            e -= 1;
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        let out = Self::from_coeffs_in(self.nvars, i, &r);
        if e > 0 {
            &out * &lc.pow(e as u32)
        } else {
            out
        }
    }
}

impl MultiPoly<Rational> {
    /// Integer coefficients with content 1 and positive lexicographic leading
    /// coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = Rational::from_integer(crate::scalar::denominator_lcm(self.terms.values()));
        let scaled = self.scale(&l);
        let mut g = Rational::from_integer(crate::scalar::numerator_gcd(scaled.terms.values()));
        if scaled.lex_leading().unwrap().1 < &Rational::zero() {
            g = -g;
        }
        scaled.scale(&g.inv())
    }

    pub fn from_int_terms(nvars: usize, terms: &[(&[u32], i64)]) -> Self {
        Self::from_terms(nvars, terms.iter().map(|(m, c)| (m.to_vec(), crate::scalar::q(*c))))
    }
}

impl<'a, F: Field> Add<&'a MultiPoly<F>> for &'a MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn add(self, rhs: &'a MultiPoly<F>) -> MultiPoly<F> {
        assert_eq!(self.nvars, rhs.nvars, "ring mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a, F: Field> Sub<&'a MultiPoly<F>> for &'a MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn sub(self, rhs: &'a MultiPoly<F>) -> MultiPoly<F> {
        assert_eq!(self.nvars, rhs.nvars, "ring mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a, F: Field> Mul<&'a MultiPoly<F>> for &'a MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn mul(self, rhs: &'a MultiPoly<F>) -> MultiPoly<F> {
        assert_eq!(self.nvars, rhs.nvars, "ring mismatch");
        let mut out = MultiPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let e: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.mul_ref(c2));
            }
        }
        out
    }
}

impl<F: Field> Neg for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn neg(self) -> MultiPoly<F> {
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr<MultiPoly<F>> for MultiPoly<F> {
            type Output = MultiPoly<F>;
            fn $m(self, rhs: MultiPoly<F>) -> MultiPoly<F> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<F: Field> Neg for MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn neg(self) -> MultiPoly<F> {
        -&self
    }
}

/// Renders a polynomial with the given variable names.
pub fn fmt_multi<F: Field>(p: &MultiPoly<F>, names: &[&str]) -> String {
    assert_eq!(names.len(), p.nvars());
    let mut terms: Vec<(&Monomial, &F)> = p.terms().collect();
    // graded, then lexicographic, descending
    terms.sort_by(|a, b| {
        let da: u32 = a.0.iter().sum();
        let db: u32 = b.0.iter().sum();
        db.cmp(&da).then_with(|| b.0.cmp(a.0))
    });
    let mut s = String::new();
    for (m, c) in terms {
        let mono: Vec<String> = m
            .iter()
            .zip(names)
            .filter(|(e, _)| **e > 0)
            .map(|(e, n)| if *e == 1 { n.to_string() } else { format!("{n}^{e}") })
            .collect();
        let mono = mono.join("*");
        let body = if mono.is_empty() {
            let cs = c.to_string();
            if c.to_rational().is_none() {
                format!("({cs})")
            } else {
                cs
            }
        } else if c.is_one() {
            mono
        } else if (-c.clone()).is_one() {
            format!("-{mono}")
        } else if c.to_rational().is_none() {
            format!("({c})*{mono}")
        } else {
            format!("{c}*{mono}")
        };
        if s.is_empty() {
            s = body;
        } else if let Some(rest) = body.strip_prefix('-') {
            s.push_str(" - ");
            s.push_str(rest);
        } else {
            s.push_str(" + ");
            s.push_str(&body);
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    type P = MultiPoly<Rational>;

    fn xy() -> (P, P) {
        (P::var(2, 0), P::var(2, 1))
    }

    #[test]
    fn arithmetic_and_degrees() {
        let (x, y) = xy();
        let p = &(&x * &y) + &x.pow(3);
        assert_eq!(p.total_degree(), Some(3));
        assert_eq!(p.degree_in(1), Some(1));
        assert!(!p.is_homogeneous());
        assert!((&x * &y).is_homogeneous());
        assert_eq!(fmt_multi(&p, &["y", "z"]), "y^3 + y*z");
    }

    #[test]
    fn exact_division() {
        let (x, y) = xy();
        let a = &x - &y;
        let b = &x + &(&y * &y);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!((&prod + &P::one(2)).div_exact(&a), None);
    }

    #[test]
    fn pseudo_remainder_matches_definition() {
        let (x, y) = xy();
        // f = y x^2 + 1, g = 2y x + 3  (in x = var 0)
        let f = &(&y * &x.pow(2)) + &P::one(2);
        let g = &(&y.scale(&q(2)) * &x) + &P::constant(2, q(3));
        let r = f.prem(&g, 0);
        // lc(g)^2 f = Q g + r with deg_x r < 1
        assert!(r.degree_in(0).unwrap_or(0) == 0);
        let lc2 = g.lc_in(0).pow(2);
        let diff = &(&lc2 * &f) - &r;
        assert!(diff.div_exact(&g).is_some());
    }

    #[test]
    fn compose_and_eval() {
        let (x, y) = xy();
        let p = &x.pow(2) - &y;
        let t = MultiPoly::<Rational>::var(1, 0);
        let img = vec![t.clone(), &t * &t];
        assert!(p.compose(&img).is_zero());
        assert_eq!(p.eval(&[q(3), q(4)]), q(5));
    }
}
