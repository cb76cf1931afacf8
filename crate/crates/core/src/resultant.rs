//! Resultants via the subresultant pseudo-remainder sequence, with the
//! Sylvester determinant kept as an independent reference.

use crate::error::{Error, Result};
use crate::poly::{MultiPoly, UniPoly};
use crate::scalar::Field;

/// `Res_{x_var}(f, g)` computed with the subresultant PRS. Coefficients stay
/// in the polynomial ring of the remaining variables.
pub fn resultant<F: Field>(f: &MultiPoly<F>, g: &MultiPoly<F>, var: usize) -> Result<MultiPoly<F>> {
    let n = f.nvars();
    if f.is_zero() || g.is_zero() {
        return Ok(MultiPoly::zero(n));
    }
    let da = f.degree_in(var).unwrap();
    let db = g.degree_in(var).unwrap();
    if da == 0 && db == 0 {
        return Err(Error::ConstantInVariable);
    }
    if da == 0 {
        return Ok(f.pow(db));
    }
    if db == 0 {
        return Ok(g.pow(da));
    }
    let (mut a, mut b, mut sign_neg) =
        if da >= db { (f.clone(), g.clone(), false) } else { (g.clone(), f.clone(), (da * db) % 2 == 1) };
    let one = MultiPoly::one(n);
    let mut gg = one.clone();
    let mut h = one;
    loop {
        let dega = a.degree_in(var).unwrap();
        let degb = b.degree_in(var).unwrap();
        let delta = dega - degb;
        if dega % 2 == 1 && degb % 2 == 1 {
            sign_neg = !sign_neg;
        }
        let r = a.prem(&b, var);
        a = b;
        if r.is_zero() {
            return Ok(MultiPoly::zero(n));
        }
        let divisor = &gg * &h.pow(delta);
        b = r.div_exact(&divisor).ok_or_else(|| Error::Internal("subresultant division".into()))?;
        gg = a.lc_in(var);
        if delta >= 1 {
            let num = gg.pow(delta);
            h = num.div_exact(&h.pow(delta - 1)).ok_or_else(|| Error::Internal("subresultant h update".into()))?;
        }
        if b.degree_in(var).unwrap() == 0 {
            break;
        }
    }
    let dega = a.degree_in(var).unwrap();
    let lcb = b.lc_in(var);
    let res =
        lcb.pow(dega).div_exact(&h.pow(dega - 1)).ok_or_else(|| Error::Internal("subresultant final step".into()))?;
    Ok(if sign_neg { -res } else { res })
}

/// Univariate resultant over a field.
pub fn resultant_uni<F: Field>(f: &UniPoly<F>, g: &UniPoly<F>) -> Result<F> {
    let r = resultant(&MultiPoly::from_uni(f, 1, 0), &MultiPoly::from_uni(g, 1, 0), 0)?;
    Ok(r.constant_value().expect("univariate resultant is a scalar"))
}

/// Sylvester matrix of `f` and `g` with respect to `var`.
pub fn sylvester_matrix<F: Field>(f: &MultiPoly<F>, g: &MultiPoly<F>, var: usize) -> Vec<Vec<MultiPoly<F>>> {
    let n = f.nvars();
    let fc = f.coeffs_in(var);
    let gc = g.coeffs_in(var);
    let m = fc.len() - 1;
    let k = gc.len() - 1;
    let size = m + k;
    let zero = MultiPoly::zero(n);
    let mut rows = Vec::with_capacity(size);
    for i in 0..k {
        let mut row = vec![zero.clone(); size];
        for (j, c) in fc.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![zero.clone(); size];
        for (j, c) in gc.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant<F: Field>(mut m: Vec<Vec<MultiPoly<F>>>, nvars: usize) -> MultiPoly<F> {
    let size = m.len();
    if size == 0 {
        return MultiPoly::one(nvars);
    }
    let mut sign = F::one();
    let mut prev = MultiPoly::one(nvars);
    for k in 0..size - 1 {
        if m[k][k].is_zero() {
            match (k + 1..size).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return MultiPoly::zero(nvars),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    m[size - 1][size - 1].scale(&sign)
}

/// Reference resultant: the Sylvester determinant.
pub fn sylvester_resultant<F: Field>(f: &MultiPoly<F>, g: &MultiPoly<F>, var: usize) -> MultiPoly<F> {
    determinant(sylvester_matrix(f, g, var), f.nvars())
}

/// Whether taking the resultant commutes with substituting `point` for every
/// variable except `var`. Exercises the specialization property of
/// resultants; used as a test oracle.
pub fn resultant_commutes_check<F: Field>(f: &MultiPoly<F>, g: &MultiPoly<F>, var: usize, point: &[Option<F>]) -> bool {
    assert_eq!(point.len(), f.nvars());
    let specialize = |p: &MultiPoly<F>| {
        point.iter().enumerate().filter(|(i, _)| *i != var).fold(p.clone(), |acc, (i, v)| match v {
            Some(v) => acc.eval_var(i, v),
            None => acc,
        })
    };
    let Ok(r) = resultant(f, g, var) else { return false };
    let lhs = specialize(&r);
    let Ok(rhs) = resultant(&specialize(f), &specialize(g), var) else { return false };
    lhs == rhs
}
