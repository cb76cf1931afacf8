//! Multivariate gcd by recursive content extraction and primitive remainder
//! sequences. Results are normalized with [`MultiPoly::normalized`].

use crate::poly::{MultiPoly, UniPoly};
use crate::scalar::Field;

type P<F> = MultiPoly<F>;

fn main_var<F: Field>(a: &P<F>, b: &P<F>) -> Option<usize> {
    (0..a.nvars()).rev().find(|&i| a.involves(i) || b.involves(i))
}

/// Gcd of the coefficients of `p` with respect to variable `v`.
pub fn content_in<F: Field>(p: &P<F>, v: usize) -> P<F> {
    let mut acc = P::zero(p.nvars());
    for c in p.coeffs_in(v) {
        if c.is_zero() {
            continue;
        }
        acc = gcd(&acc, &c);
        if acc.is_constant() {
            break;
        }
    }
    acc
}

/// Primitive part with respect to `v`, normalized.
pub fn primitive_part_in<F: Field>(p: &P<F>, v: usize) -> P<F> {
    if p.is_zero() {
        return p.clone();
    }
    let c = content_in(p, v);
    p.div_exact(&c).expect("content divides").normalized()
}

/// Last nonzero element of the primitive remainder sequence of `a`, `b` in
/// variable `v` (both of positive degree in `v`).
fn prs_last<F: Field>(a: &P<F>, b: &P<F>, v: usize) -> P<F> {
    let (mut a, mut b) = if a.degree_in(v) >= b.degree_in(v) { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
    loop {
        let r = a.prem(&b, v);
        if r.is_zero() {
            return b;
        }
        if !r.involves(v) {
            return r;
        }
        a = b;
        b = primitive_part_in(&r, v);
    }
}

/// Greatest common divisor, normalized.
/// `gcd(0, 0) = 0`.
pub fn gcd<F: Field>(a: &P<F>, b: &P<F>) -> P<F> {
    if a.is_zero() {
        return b.normalized();
    }
    if b.is_zero() {
        return a.normalized();
    }
    if a.is_constant() || b.is_constant() {
        return P::one(a.nvars());
    }
    let v = main_var(a, b).unwrap();
    if !a.involves(v) {
        return gcd(a, &content_in(b, v));
    }
    if !b.involves(v) {
        return gcd(&content_in(a, v), b);
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = gcd(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let g = match bivariate_gcd(&pa, &pb, v) {
        Some(g) => g,
        None => {
            let last = prs_last(&pa, &pb, v);
            if last.degree_in(v) == Some(0) {
                P::one(a.nvars())
            } else {
                primitive_part_in(&last, v)
            }
        }
    };
    (&c * &g).normalized()
}

/// Newton interpolation through `(xs[i], ys[i])`.
fn interpolate<F: Field>(xs: &[F], ys: &[F]) -> UniPoly<F> {
    let mut dd = ys.to_vec();
    for j in 1..xs.len() {
        for i in (j..xs.len()).rev() {
            dd[i] = (dd[i].clone() - dd[i - 1].clone()) / (xs[i].clone() - xs[i - j].clone());
        }
    }
    let mut p = UniPoly::zero();
    for i in (0..xs.len()).rev() {
        p = &(&p * &UniPoly::from_coeffs(vec![-xs[i].clone(), F::one()])) + &UniPoly::constant(dd[i].clone());
    }
    p
}

/// Gcd of `a`, `b`, primitive in `v` and involving one other variable `y`,
/// from univariate gcds at points `y = 1, 2, ...`, interpolated and checked
/// by division. `None` when the inputs have another shape or the check fails.
fn bivariate_gcd<F: Field>(a: &P<F>, b: &P<F>, v: usize) -> Option<P<F>> {
    let others: Vec<usize> = (0..a.nvars()).filter(|&i| i != v && (a.involves(i) || b.involves(i))).collect();
    let [y] = others[..] else { return None };
    let lca = a.lc_in(v).to_uni(y)?;
    let lcb = b.lc_in(v).to_uni(y)?;
    let gamma = lca.gcd(&lcb);
    let need = a.degree_in(y).unwrap_or(0).min(b.degree_in(y).unwrap_or(0)) as usize + gamma.deg0() + 1;
    let mut xs: Vec<F> = Vec::new();
    let mut images: Vec<UniPoly<F>> = Vec::new();
    let mut dmin = usize::MAX;
    for k in 1..=(4 * need as i64 + 20) {
        let x = F::from_int(k);
        if lca.eval(&x).is_zero() || lcb.eval(&x).is_zero() {
            continue;
        }
        let g = a.eval_var(y, &x).to_uni(v)?.gcd(&b.eval_var(y, &x).to_uni(v)?);
        let d = g.deg0();
        if d == 0 {
            return Some(P::one(a.nvars()));
        }
        if d > dmin {
            continue;
        }
        if d < dmin {
            dmin = d;
            xs.clear();
            images.clear();
        }
        images.push(g.scale(&gamma.eval(&x)));
        xs.push(x);
        if xs.len() == need {
            let coeffs: Vec<P<F>> = (0..=dmin)
                .map(|j| {
                    let vals: Vec<F> = images.iter().map(|g| g.coeff(j)).collect();
                    P::from_uni(&interpolate(&xs, &vals), a.nvars(), y)
                })
                .collect();
            let g = primitive_part_in(&P::from_coeffs_in(a.nvars(), v, &coeffs), v);
            return (a.div_exact(&g).is_some() && b.div_exact(&g).is_some()).then_some(g);
        }
    }
    None
}

/// Product of the distinct irreducible factors of `p`, normalized.
pub fn squarefree_part<F: Field>(p: &P<F>) -> P<F> {
    if p.is_constant() {
        return p.normalized();
    }
    let v = (0..p.nvars()).max_by_key(|&i| p.degree_in(i).unwrap_or(0)).unwrap();
    let content = content_in(p, v);
    let prim = p.div_exact(&content).expect("content divides");
    let prim_sq =
        if squarefree_by_specialization(&prim, v) { prim.normalized() } else { squarefree_part_by_gcd(&prim) };
    (&squarefree_part(&content) * &prim_sq).normalized()
}

fn squarefree_part_by_gcd<F: Field>(p: &P<F>) -> P<F> {
    let mut g = p.clone();
    for v in 0..p.nvars() {
        if p.involves(v) {
            g = gcd(&g, &p.derivative(v));
            if g.is_constant() {
                break;
            }
        }
    }
    p.div_exact(&g).expect("gcd divides").normalized()
}

/// Sufficient test for squarefreeness of a polynomial primitive in `v`:
/// a specialization of the other variables keeping the degree in `v` is
/// squarefree.
fn squarefree_by_specialization<F: Field>(p: &P<F>, v: usize) -> bool {
    let lc = p.lc_in(v);
    let others: Vec<usize> = (0..p.nvars()).filter(|&i| i != v && p.involves(i)).collect();
    for attempt in 0..4i64 {
        let point: Vec<F> =
            others.iter().enumerate().map(|(k, _)| F::from_int(3 + 7 * attempt + 13 * k as i64)).collect();
        let at_point = |q: &P<F>| others.iter().zip(&point).fold(q.clone(), |acc, (&i, val)| acc.eval_var(i, val));
        if at_point(&lc).is_zero() {
            continue;
        }
        let u = at_point(p).to_uni(v).expect("univariate after specialization");
        return u.gcd(&u.derivative()).is_constant();
    }
    false
}

/// Removes every factor that is free of at least one of `vars`.
pub fn remove_factors_missing_any<F: Field>(p: &P<F>, vars: &[usize]) -> P<F> {
    let mut out = p.clone();
    for &v in vars {
        if out.involves(v) {
            out = primitive_part_in(&out, v);
        }
    }
    out
}
