//! Second-order equations for the numerator and denominator of a solution of
//! a homogeneous difference system, by elimination in the prolonged ideal.

use crate::error::{Error, Result};
use crate::gcd::squarefree_part;
use crate::groebner::{eliminate, groebner, GroebnerBasis, MonomialOrder};
use crate::poly::MultiPoly;
use crate::resultant::resultant;
use crate::scalar::Field;

/// Variable indices of the six-variable prolonged ring.
pub const W0: usize = 0;
pub const W1: usize = 1;
pub const W2: usize = 2;
pub const Z0: usize = 3;
pub const Z1: usize = 4;
pub const Z2: usize = 5;

/// `tP1(A(x+1), B(x+1)) = tP2(A(x), B(x))`, `tQ1(...) = tQ2(...)` with the
/// constant already folded into the right-hand pair. Polynomials are in
/// `(z, w)`, homogeneous of common degree `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct DifferenceSystem<F> {
    pub tp1: MultiPoly<F>,
    pub tq1: MultiPoly<F>,
    pub tp2: MultiPoly<F>,
    pub tq2: MultiPoly<F>,
    pub n: u32,
}

impl<F: Field> DifferenceSystem<F> {
    pub fn new(tp1: MultiPoly<F>, tq1: MultiPoly<F>, tp2: MultiPoly<F>, tq2: MultiPoly<F>) -> Result<Self> {
        let all = [&tp1, &tq1, &tp2, &tq2];
        if all.iter().any(|p| p.nvars() != 2 || p.is_zero() || !p.is_homogeneous()) {
            return Err(Error::InvalidInput("system polynomials must be nonzero homogeneous in (z, w)".into()));
        }
        let n = tp1.total_degree().unwrap();
        if n == 0 || all.iter().any(|p| p.total_degree() != Some(n)) {
            return Err(Error::InvalidInput("system polynomials must share a positive degree".into()));
        }
        Ok(DifferenceSystem { tp1, tq1, tp2, tq2, n })
    }

    /// The same system with the roles of `z` and `w` exchanged, i.e. with
    /// reversed coefficient lists. Its `w`-eliminant is the `z`-eliminant of
    /// the original.
    pub fn swapped(&self) -> Self {
        let sw = |p: &MultiPoly<F>| p.remap(&[1, 0], 2);
        DifferenceSystem { tp1: sw(&self.tp1), tq1: sw(&self.tq1), tp2: sw(&self.tp2), tq2: sw(&self.tq2), n: self.n }
    }
}

/// `p(z, w)` placed at the prolonged variables `(z, w)`.
fn embed<F: Field>(p: &MultiPoly<F>, z: usize, w: usize) -> MultiPoly<F> {
    p.remap(&[z, w], 6)
}

/// The four generators of the prolonged ideal in `F[w0,w1,w2,z0,z1,z2]`.
#[derive(Clone, Debug)]
pub struct ProlongedIdeal<F> {
    generators: Vec<MultiPoly<F>>,
}

impl<F: Field> ProlongedIdeal<F> {
    pub fn new(sys: &DifferenceSystem<F>) -> Self {
        let f1 = &embed(&sys.tp1, Z1, W1) - &embed(&sys.tp2, Z0, W0);
        let g1 = &embed(&sys.tq1, Z1, W1) - &embed(&sys.tq2, Z0, W0);
        let f2 = &embed(&sys.tp1, Z2, W2) - &embed(&sys.tp2, Z1, W1);
        let g2 = &embed(&sys.tq1, Z2, W2) - &embed(&sys.tq2, Z1, W1);
        ProlongedIdeal { generators: vec![f1, g1, f2, g2] }
    }

    pub fn generators(&self) -> &[MultiPoly<F>] {
        &self.generators
    }

    pub fn groebner_basis(&self) -> GroebnerBasis<F> {
        groebner(&self.generators, MonomialOrder::GRevLex)
    }

    /// Whether `eq`, placed at `(w0, w1, w2)` (`first = W0`) or
    /// `(z0, z1, z2)` (`first = Z0`), lies in the ideal. The reduction runs
    /// modulo a degree reverse lexicographic basis that ranks that block
    /// lowest, which keeps normal forms short.
    pub fn contains(&self, eq: &SecondOrderAODE<F>, first: usize) -> bool {
        let other = if first == W0 { Z0 } else { W0 };
        let mut map = [0usize; 6];
        for k in 0..3 {
            map[other + k] = k;
            map[first + k] = 3 + k;
        }
        let gens: Vec<MultiPoly<F>> = self.generators.iter().map(|g| g.remap(&map, 6)).collect();
        let gb = groebner(&gens, MonomialOrder::GRevLex);
        gb.contains(&eq.lift(first).remap(&map, 6))
    }
}

/// Which elimination produced an eliminant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EliminationRoute {
    Resultant,
    Groebner,
}

/// A homogeneous `F(v0, v1, v2)`, read as `F(u(x), u(x+1), u(x+2)) = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct SecondOrderAODE<F> {
    pub f: MultiPoly<F>,
    pub route: EliminationRoute,
}

impl<F: Field> SecondOrderAODE<F> {
    /// The same polynomial in the six prolonged variables, placed at
    /// `(w0, w1, w2)` or `(z0, z1, z2)`.
    pub fn lift(&self, first: usize) -> MultiPoly<F> {
        self.f.remap(&[first, first + 1, first + 2], 6)
    }
}

/// Degree of `Res_x(f, g)` for `f`, `g` homogeneous of total degrees `df`,
/// `dg` and degrees `m`, `k` in `x`.
fn resultant_degree(df: u32, dg: u32, m: u32, k: u32) -> u32 {
    df * k + dg * m - m * k
}

/// Nonzero element of the ideal in the `w` variables, computed with nested
/// resultants after setting `w1 = 1`; `None` when the resultant vanishes.
fn w_eliminant_by_resultants<F: Field>(sys: &DifferenceSystem<F>) -> Result<Option<MultiPoly<F>>> {
    let ideal = ProlongedIdeal::new(sys);
    let n = sys.n;
    let one = F::one();
    let gens: Vec<MultiPoly<F>> = ideal.generators.iter().map(|g| g.eval_var(W1, &one)).collect();
    let degree = |p: &MultiPoly<F>, v: usize| p.degree_in(v).unwrap_or(0);
    let full = ideal.generators();

    let s0 = resultant(&gens[0], &gens[1], Z0)?;
    let d0 = resultant_degree(n, n, degree(&full[0], Z0), degree(&full[1], Z0));
    let s2 = resultant(&gens[2], &gens[3], Z2)?;
    let d2 = resultant_degree(n, n, degree(&full[2], Z2), degree(&full[3], Z2));
    if s0.is_zero() || s2.is_zero() {
        return Ok(None);
    }
    if !s0.involves(Z1) && !s2.involves(Z1) {
        return Ok(None);
    }
    let s = resultant(&s0, &s2, Z1)?;
    if s.is_zero() {
        return Ok(None);
    }
    let d = resultant_degree(d0, d2, degree(&s0, Z1), degree(&s2, Z1));

    // squarefree part of the dehomogenized eliminant, then homogenize; a
    // power of w1 lost by dehomogenizing is restored once
    let sq = squarefree_part(&s);
    let top = s.total_degree().unwrap();
    let sq_deg = sq.total_degree().unwrap();
    let mut out = sq.homogenize(W1, sq_deg).expect("degree is the maximum");
    if d > top {
        out = &out * &MultiPoly::var(6, W1);
    }
    if d < top {
        return Err(Error::Internal("resultant degree below its dehomogenization".into()));
    }
    Ok(Some(out))
}

fn w_eliminant_by_groebner<F: Field>(sys: &DifferenceSystem<F>) -> Result<MultiPoly<F>> {
    let ideal = ProlongedIdeal::new(sys);
    let elim = eliminate(ideal.generators(), &[W0, W1, W2]);
    let first = elim
        .into_iter()
        .min_by_key(|p| p.total_degree())
        .ok_or_else(|| Error::Internal("prolonged ideal has no eliminant".into()))?;
    Ok(squarefree_part(&first))
}

fn w_eliminant<F: Field>(sys: &DifferenceSystem<F>) -> Result<SecondOrderAODE<F>> {
    let (p, route) = match w_eliminant_by_resultants(sys)? {
        Some(p) => (p, EliminationRoute::Resultant),
        None => (w_eliminant_by_groebner(sys)?, EliminationRoute::Groebner),
    };
    if p.is_zero() {
        return Err(Error::Internal("eliminant vanished".into()));
    }
    // keep only w0, w1, w2
    let f = MultiPoly::from_terms(3, p.into_terms().map(|(m, c)| (m[..3].to_vec(), c)));
    Ok(SecondOrderAODE { f, route })
}

/// Second-order equations `(F_A, F_B)` satisfied by the numerator `A` and
/// the denominator `B` of every coprime solution pair of `sys`.
pub fn derive_second_order<F: Field>(sys: &DifferenceSystem<F>) -> Result<(SecondOrderAODE<F>, SecondOrderAODE<F>)> {
    let fb = w_eliminant(sys)?;
    let fa = w_eliminant(&sys.swapped())?;
    Ok((fa, fb))
}

/// Whether `F(u(x), u(x+1), u(x+2))` vanishes identically.
pub fn annihilates<F: Field>(eq: &SecondOrderAODE<F>, u: &crate::poly::UniPoly<F>) -> bool {
    let images = [u.clone(), u.shift(&F::one()), u.shift(&F::from_int(2))];
    eq.f.eval_uni(&images).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::UniPoly;
    use crate::scalar::{q, Rational};

    type P = MultiPoly<Rational>;

    fn hom(coeffs: &[i64], n: u32) -> P {
        // w^n p(z/w) with p = sum coeffs[k] z^k
        P::from_terms(2, coeffs.iter().enumerate().map(|(k, &c)| (vec![k as u32, n - k as u32], q(c))))
    }

    #[test]
    fn squares_give_w1_squared_minus_w0_squared() {
        let sys = DifferenceSystem::new(hom(&[0, 0, 1], 2), hom(&[1], 2), hom(&[0, 0, 1], 2), hom(&[1], 2)).unwrap();
        let (_, fb) = derive_second_order(&sys).unwrap();
        let w0 = P::var(3, 0);
        let w1 = P::var(3, 1);
        // every factor of F_B must divide a power of w1^2 - w0^2 related eliminant;
        // B(x+1)^2 = B(x)^2 forces B constant up to sign: check F_B(b, b, b) = 0
        let constant_b = UniPoly::constant(q(3));
        assert!(annihilates(&fb, &constant_b));
        let g = &w1.pow(2) - &w0.pow(2);
        let ideal = ProlongedIdeal::new(&sys);
        let gb = ideal.groebner_basis();
        assert!(gb.contains(&g.remap(&[W0, W1, W2], 6)));
    }

    #[test]
    fn golden_system_eliminants() {
        // 9z^2 - 12z + 4 over z, against 9z^2 + 36z + 4 over z + 4, c = 1
        let sys =
            DifferenceSystem::new(hom(&[4, -12, 9], 2), hom(&[0, 1], 2), hom(&[4, 36, 9], 2), hom(&[4, 1], 2)).unwrap();
        let (fa, fb) = derive_second_order(&sys).unwrap();
        assert!(!fa.f.is_zero() && !fb.f.is_zero());
        assert!(fa.f.is_homogeneous() && fb.f.is_homogeneous());
        let ideal = ProlongedIdeal::new(&sys);
        assert!(ideal.contains(&fa, Z0));
        assert!(ideal.contains(&fb, W0));
        let gb = ideal.groebner_basis();
        assert!(gb.contains(&fa.lift(Z0)) && gb.contains(&fb.lift(W0)));
    }

    #[test]
    fn planted_pair_is_annihilated() {
        // u = x: A = x, B = 1 solves P1 = z + 1 against P2 = z + 2 (shift by one)
        // tP1(A(x+1), B) = x + 2 = tP2(A(x), B)
        let sys = DifferenceSystem::new(hom(&[1, 1], 1), hom(&[1], 1), hom(&[2, 1], 1), hom(&[1], 1)).unwrap();
        let (fa, fb) = derive_second_order(&sys).unwrap();
        assert!(annihilates(&fa, &UniPoly::x()));
        assert!(annihilates(&fb, &UniPoly::one()));
    }
}
