//! Solving zero-dimensional polynomial systems over Q.
//!
//! Points are obtained from a separating linear form `l`: the radical is
//! `I + <sqfree(mu_l)(l)>`, and every coordinate is a polynomial in `l`
//! modulo it. Rational roots of `mu_l` give rational points; the remaining
//! squarefree factor becomes an algebraic extension.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::alg::{AlgNum, Modulus};
use crate::error::{Error, Result};
use crate::groebner::{groebner_bounded, GroebnerBasis, MonomialOrder};
use crate::poly::{Monomial, MultiPoly, UniPoly};
use crate::roots::{root_pieces, RootPiece};
use crate::scalar::{q, Rational};

type P = MultiPoly<Rational>;
type Poly = UniPoly<Rational>;

/// A solution whose coordinates live in `Q` or in `Q[a]/(modulus)`.
///
/// With a modulus, the point stands for all of its conjugates: one per root
/// of the modulus.
#[derive(Clone, Debug)]
pub struct AlgPoint {
    pub modulus: Option<Arc<Modulus>>,
    pub coords: Vec<AlgNum>,
}

impl AlgPoint {
    pub fn is_rational(&self) -> bool {
        self.modulus.is_none()
    }

    pub fn rational_coords(&self) -> Option<Vec<Rational>> {
        self.coords.iter().map(|c| c.to_rational_value()).collect()
    }
}

/// Budget on S-pair reductions for one Groebner basis computation.
const PAIR_BUDGET: usize = 20_000;

fn gb(gens: &[P], order: MonomialOrder) -> Result<GroebnerBasis<Rational>> {
    groebner_bounded(gens, order, Some(PAIR_BUDGET)).ok_or_else(|| Error::Internal("groebner budget exhausted".into()))
}

fn is_zero_dimensional(basis: &GroebnerBasis<Rational>) -> bool {
    let lms = basis.leading_monomials();
    (0..basis.nvars()).all(|i| lms.iter().any(|m| m[i] > 0 && m.iter().enumerate().all(|(j, &e)| j == i || e == 0)))
}

/// Monomials not divisible by any leading monomial.
fn standard_monomials(basis: &GroebnerBasis<Rational>) -> Vec<Monomial> {
    let lms = basis.leading_monomials();
    let n = basis.nvars();
    let divisible = |m: &Monomial| lms.iter().any(|l| l.iter().zip(m).all(|(a, b)| a <= b));
    let mut seen = BTreeSet::new();
    let mut stack = vec![vec![0u32; n]];
    while let Some(m) = stack.pop() {
        if divisible(&m) || !seen.insert(m.clone()) {
            continue;
        }
        for i in 0..n {
            let mut next = m.clone();
            next[i] += 1;
            stack.push(next);
        }
    }
    seen.into_iter().collect()
}

fn coords(p: &P, index: &BTreeMap<Monomial, usize>) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); index.len()];
    for (m, c) in p.terms() {
        v[index[m]] = c.clone();
    }
    v
}

/// Incremental row echelon form used to detect linear dependencies.
struct Echelon {
    rows: Vec<(usize, Vec<Rational>, Vec<Rational>)>,
    width: usize,
}

impl Echelon {
    fn new() -> Self {
        Echelon { rows: Vec::new(), width: 0 }
    }

    /// Reduces `v`; returns the combination of earlier inserted vectors equal
    /// to `v` when it is dependent, otherwise stores it.
    fn insert(&mut self, mut v: Vec<Rational>) -> Option<Vec<Rational>> {
        let k = self.width;
        self.width += 1;
        let mut tag = vec![Rational::zero(); k + 1];
        tag[k] = Rational::one();
        for (piv, row, rtag) in &self.rows {
            let c = v[*piv].clone();
            if c.is_zero() {
                continue;
            }
            for (a, b) in v.iter_mut().zip(row) {
                *a -= &c * b;
            }
            for (i, b) in rtag.iter().enumerate() {
                tag[i] -= &c * b;
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => {
                // tag . inserted = 0, with tag[k] = 1
                Some(tag[..k].iter().map(|t| -t).collect())
            }
            Some(piv) => {
                let inv = v[piv].clone().recip();
                for a in v.iter_mut() {
                    *a *= &inv;
                }
                for a in tag.iter_mut() {
                    *a *= &inv;
                }
                // keep rows fully reduced at earlier pivots
                for (_, row, rtag) in self.rows.iter_mut() {
                    let c = row[piv].clone();
                    if c.is_zero() {
                        continue;
                    }
                    for (a, b) in row.iter_mut().zip(&v) {
                        *a -= &c * b;
                    }
                    rtag.resize(k + 1, Rational::zero());
                    for (a, b) in rtag.iter_mut().zip(&tag) {
                        *a -= &c * b;
                    }
                }
                self.rows.push((piv, v, tag));
                None
            }
        }
    }
}

/// Minimal polynomial of the class of `l` in `Q[x]/I`.
fn minimal_polynomial(basis: &GroebnerBasis<Rational>, l: &P, index: &BTreeMap<Monomial, usize>) -> Poly {
    let mut ech = Echelon::new();
    let mut power = P::one(basis.nvars());
    loop {
        let v = coords(&power, index);
        if let Some(comb) = ech.insert(v) {
            let mut c = comb.into_iter().map(|x| -x).collect::<Vec<_>>();
            c.push(Rational::one());
            return Poly::from_coeffs(c);
        }
        power = basis.normal_form(&(&power * l));
    }
}

fn linear_form(n: usize, k: i64) -> P {
    let mut l = P::zero(n);
    let mut c = 1i64;
    for i in (0..n).rev() {
        l = &l + &P::var(n, i).scale(&q(c));
        c *= k;
    }
    l
}

/// All solutions of a zero-dimensional system. Fails with
/// [`Error::PositiveDimensional`] when the solution set is infinite.
pub fn solve_system(gens: &[P]) -> Result<Vec<AlgPoint>> {
    let Some(n) = gens.first().map(|g| g.nvars()) else { return Err(Error::PositiveDimensional) };
    let basis = gb(gens, MonomialOrder::GRevLex)?;
    if basis.is_unit() {
        return Ok(Vec::new());
    }
    if !is_zero_dimensional(&basis) {
        return Err(Error::PositiveDimensional);
    }
    if n == 0 {
        return Ok(vec![AlgPoint { modulus: None, coords: Vec::new() }]);
    }
    for k in [2i64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let l = linear_form(n, k);
        if let Some(points) = try_separating(&basis, &l)? {
            return Ok(points);
        }
    }
    Err(Error::Internal("no separating linear form found".into()))
}

fn try_separating(basis: &GroebnerBasis<Rational>, l: &P) -> Result<Option<Vec<AlgPoint>>> {
    let n = basis.nvars();
    let std = standard_monomials(basis);
    let index: BTreeMap<Monomial, usize> = std.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let mu = minimal_polynomial(basis, l, &index);
    let mu_r = mu.squarefree_part();
    let d = mu_r.deg0();

    // radical of I in generic position
    let mu_l = mu_r.coeffs().iter().enumerate().fold(P::zero(n), |acc, (i, c)| &acc + &l.pow(i as u32).scale(c));
    let mut rgens = basis.polys().to_vec();
    rgens.push(mu_l);
    let rbasis = gb(&rgens, MonomialOrder::GRevLex)?;
    let rstd = standard_monomials(&rbasis);
    if rstd.len() != d {
        return Ok(None);
    }
    let rindex: BTreeMap<Monomial, usize> = rstd.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();

    // express each coordinate in the basis 1, l, ..., l^(d-1)
    let mut columns = Vec::with_capacity(d);
    let mut power = P::one(n);
    for _ in 0..d {
        columns.push(coords(&power, &rindex));
        power = rbasis.normal_form(&(&power * l));
    }
    let mut shapes = Vec::with_capacity(n);
    for i in 0..n {
        let target = coords(&rbasis.normal_form(&P::var(n, i)), &rindex);
        let Some(sol) = solve_linear(&columns, &target) else { return Ok(None) };
        shapes.push(Poly::from_coeffs(sol));
    }

    let mut points = Vec::new();
    for piece in root_pieces(&mu_r) {
        match piece {
            RootPiece::Rational(r) => points.push(AlgPoint {
                modulus: None,
                coords: shapes.iter().map(|g| AlgNum::rational(g.eval(&r))).collect(),
            }),
            RootPiece::Algebraic(m) => {
                let modulus = Modulus::new(m, "a");
                let coords = shapes.iter().map(|g| AlgNum::from_poly(g.clone(), &modulus)).collect();
                points.push(AlgPoint { modulus: Some(modulus), coords });
            }
        }
    }
    Ok(Some(points))
}

/// Solves `sum x_j columns[j] = target`, if possible.
pub fn solve_linear(columns: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let rows = target.len();
    let cols = columns.len();
    // augmented matrix, row major
    let mut a: Vec<Vec<Rational>> = (0..rows)
        .map(|r| columns.iter().map(|c| c[r].clone()).chain(std::iter::once(target[r].clone())).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].clone().recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if a[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = a[i][cols].clone();
    }
    Some(x)
}

/// Solutions of a possibly positive-dimensional system: free variables are
/// fixed to small integers until the system becomes zero-dimensional. The
/// result is a (nonempty when possible) subset of the solutions.
pub fn solve_some(gens: &[P]) -> Result<Vec<AlgPoint>> {
    let Some(n) = gens.first().map(|g| g.nvars()) else { return Ok(Vec::new()) };
    let mut extra: Vec<P> = Vec::new();
    let mut attempts = 0;
    loop {
        let mut all = gens.to_vec();
        all.extend(extra.iter().cloned());
        match solve_system(&all) {
            Ok(pts) if !pts.is_empty() || extra.is_empty() => return Ok(pts),
            Ok(_) => {
                // unlucky specialization: move the last one
                attempts += 1;
                if attempts > 8 {
                    return Ok(Vec::new());
                }
                let last = extra.pop().unwrap();
                let (v, val) = specialized_var(&last);
                extra.push(&P::var(n, v) - &P::constant(n, q(val + 1)));
            }
            Err(Error::PositiveDimensional) => {
                let basis = gb(&all, MonomialOrder::GRevLex)?;
                let lms = basis.leading_monomials();
                let free = (0..n)
                    .rev()
                    .find(|&i| !lms.iter().any(|m| m[i] > 0 && m.iter().enumerate().all(|(j, &e)| j == i || e == 0)))
                    .expect("positive-dimensional ideal has a free variable");
                extra.push(&P::var(n, free) - &P::constant(n, q(1)));
            }
            Err(e) => return Err(e),
        }
    }
}

fn specialized_var(p: &P) -> (usize, i64) {
    let n = p.nvars();
    for (m, _) in p.terms() {
        if let Some(i) = (0..n).find(|&i| m[i] == 1) {
            let val = -p.coeff(&vec![0; n]);
            let v = val.to_integer().try_into().unwrap_or(0i64);
            return (i, v);
        }
    }
    (0, 0)
}

impl AlgNum {
    /// The value as a rational number, when it lies in Q.
    pub fn to_rational_value(&self) -> Option<Rational> {
        let v = self.value();
        if v.is_constant() {
            Some(v.coeff(0))
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_points(gens: &[P], pts: &[AlgPoint]) {
        for pt in pts {
            for g in gens {
                let lifted = g.map_coeffs(|c| AlgNum::rational(c.clone()));
                let v = lifted.eval(&pt.coords);
                assert!(v.is_zero(), "{g:?} does not vanish");
            }
        }
    }

    #[test]
    fn rational_points() {
        let x = P::var(2, 0);
        let y = P::var(2, 1);
        // x^2 = 1, y = x + 1
        let gens = vec![&x.pow(2) - &P::one(2), &(&y - &x) - &P::one(2)];
        let pts = solve_system(&gens).unwrap();
        assert_eq!(pts.len(), 2);
        assert!(pts.iter().all(|p| p.is_rational()));
        check_points(&gens, &pts);
    }

    #[test]
    fn algebraic_points_with_multiplicity() {
        let x = P::var(2, 0);
        let y = P::var(2, 1);
        // (x^2 - 3)^2 = 0, y^2 = x: nonreduced in x
        let gens = vec![(&x.pow(2) - &P::constant(2, q(3))).pow(2), &y.pow(2) - &x];
        let pts = solve_system(&gens).unwrap();
        let total: usize = pts.iter().map(|p| p.modulus.as_ref().map_or(1, |m| m.degree())).sum();
        assert_eq!(total, 4);
        check_points(&gens, &pts);
    }

    #[test]
    fn positive_dimensional_detected() {
        let x = P::var(2, 0);
        let y = P::var(2, 1);
        let gens = vec![&(&x * &y) - &P::one(2)];
        assert_eq!(solve_system(&gens).unwrap_err(), Error::PositiveDimensional);
        let pts = solve_some(&gens).unwrap();
        assert!(!pts.is_empty());
        check_points(&gens, &pts);
    }

    #[test]
    fn inconsistent_has_no_points() {
        let x = P::var(1, 0);
        let gens = vec![x.clone(), &x - &P::one(1)];
        assert!(solve_system(&gens).unwrap().is_empty());
    }

    #[test]
    fn linear_solver() {
        let cols = vec![vec![q(1), q(0), q(1)], vec![q(0), q(1), q(1)]];
        let sol = solve_linear(&cols, &[q(2), q(3), q(5)]).unwrap();
        assert_eq!(sol, vec![q(2), q(3)]);
        assert!(solve_linear(&cols, &[q(2), q(3), q(4)]).is_none());
    }
}
