//! Buchberger's algorithm with the Gebauer-Moeller pair criteria.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::poly::{Monomial, MultiPoly};
use crate::scalar::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    GrLex,
    GRevLex,
    /// The first `k` variables form a block that dominates the rest;
    /// graded reverse lexicographic inside each block.
    Block(usize),
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match *self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrLex => {
                let da: u32 = a.iter().sum();
                let db: u32 = b.iter().sum();
                da.cmp(&db).then_with(|| a.cmp(b))
            }
            MonomialOrder::GRevLex => grevlex(a, b),
            MonomialOrder::Block(k) => grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..])),
        }
    }
}

/// Polynomial as a list of terms sorted decreasingly for a fixed order.
#[derive(Clone, Debug)]
struct Sorted<F> {
    terms: Vec<(Monomial, F)>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

fn sub_exp(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

impl<F: Field> Sorted<F> {
    fn from_poly(p: &MultiPoly<F>, ord: MonomialOrder) -> Self {
        let mut terms: Vec<_> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        Sorted { terms }
    }

    fn to_poly(&self, nvars: usize) -> MultiPoly<F> {
        MultiPoly::from_terms(nvars, self.terms.iter().cloned())
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn make_monic(&mut self) {
        if let Some((_, c)) = self.terms.first() {
            if !c.is_one() {
                let inv = c.inv();
                for t in &mut self.terms {
                    t.1 = t.1.clone() * inv.clone();
                }
            }
        }
    }

    /// `self - c * x^e * g`, skipping the leading term of `g` when
    /// `skip_lead` (it is known to cancel).
    fn sub_scaled(&self, c: &F, e: &[u32], g: &Sorted<F>, ord: MonomialOrder, from: usize, skip_lead: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = from;
        let mut j = usize::from(skip_lead);
        let shifted = |j: usize| -> Monomial { g.terms[j].0.iter().zip(e).map(|(a, b)| a + b).collect() };
        let mut gm = if j < g.terms.len() { Some(shifted(j)) } else { None };
        while i < self.terms.len() || gm.is_some() {
            let take = match (&gm, self.terms.get(i)) {
                (None, _) => Ordering::Greater,
                (Some(_), None) => Ordering::Less,
                (Some(m), Some((sm, _))) => ord.cmp(sm, m),
            };
            match take {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let m = gm.take().unwrap();
                    out.push((m, -(c.clone() * g.terms[j].1.clone())));
                    j += 1;
                    gm = if j < g.terms.len() { Some(shifted(j)) } else { None };
                }
                Ordering::Equal => {
                    let m = gm.take().unwrap();
                    let v = self.terms[i].1.clone() - c.clone() * g.terms[j].1.clone();
                    if !v.is_zero() {
                        out.push((m, v));
                    }
                    i += 1;
                    j += 1;
                    gm = if j < g.terms.len() { Some(shifted(j)) } else { None };
                }
            }
        }
        Sorted { terms: out }
    }
}

/// Monomial ordered by a runtime monomial order, for use as a map key.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Key {
    m: Monomial,
    ord: MonomialOrder,
}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ord.cmp(&self.m, &other.m)
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Full reduction of `p` modulo the monic polynomials `basis`.
fn reduce<F: Field>(p: &Sorted<F>, basis: &[&Sorted<F>], ord: MonomialOrder) -> Sorted<F> {
    let mut rem: Vec<(Monomial, F)> = Vec::new();
    let mut cur: BTreeMap<Key, F> = p.terms.iter().map(|(m, c)| (Key { m: m.clone(), ord }, c.clone())).collect();
    while let Some((key, c)) = cur.pop_last() {
        let m = key.m;
        match basis.iter().find(|g| divides(g.lm(), &m)) {
            Some(g) => {
                let e = sub_exp(&m, g.lm());
                for (gm, gc) in &g.terms[1..] {
                    let k = Key { m: gm.iter().zip(&e).map(|(a, b)| a + b).collect(), ord };
                    let delta = -c.mul_ref(gc);
                    match cur.entry(k) {
                        Entry::Vacant(v) => {
                            v.insert(delta);
                        }
                        Entry::Occupied(mut o) => {
                            let s = o.get().add_ref(&delta);
                            if s.is_zero() {
                                o.remove();
                            } else {
                                *o.get_mut() = s;
                            }
                        }
                    }
                }
            }
            None => rem.push((m, c)),
        }
    }
    Sorted { terms: rem }
}

/// Reduced Groebner basis of an ideal for a fixed monomial order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F> {
    order: MonomialOrder,
    nvars: usize,
    polys: Vec<MultiPoly<F>>,
    sorted: Vec<Sorted<F>>,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn polys(&self) -> &[MultiPoly<F>] {
        &self.polys
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sorted.iter().map(|s| s.lm().clone()).collect()
    }

    /// Whether the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.sorted.iter().any(|s| s.lm().iter().all(|&e| e == 0))
    }

    pub fn normal_form(&self, p: &MultiPoly<F>) -> MultiPoly<F> {
        let refs: Vec<&Sorted<F>> = self.sorted.iter().collect();
        reduce(&Sorted::from_poly(p, self.order), &refs, self.order).to_poly(self.nvars)
    }

    pub fn contains(&self, p: &MultiPoly<F>) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn leading_monomial_of(&self, p: &MultiPoly<F>) -> Option<Monomial> {
        let s = Sorted::from_poly(p, self.order);
        s.terms.first().map(|t| t.0.clone())
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Groebner basis, or `None` when more than `max_pairs` S-polynomials would
/// have to be reduced.
pub fn groebner_bounded<F: Field>(
    gens: &[MultiPoly<F>],
    order: MonomialOrder,
    max_pairs: Option<usize>,
) -> Option<GroebnerBasis<F>> {
    let nvars = gens.first().map(|g| g.nvars()).unwrap_or(0);
    let mut g: Vec<Sorted<F>> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut input: Vec<Sorted<F>> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let mut s = Sorted::from_poly(p, order);
            s.make_monic();
            s
        })
        .collect();
    input.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    for mut h in input {
        let refs: Vec<&Sorted<F>> = g.iter().zip(&active).filter(|(_, a)| **a).map(|(p, _)| p).collect();
        h = reduce(&h, &refs, order);
        if h.terms.is_empty() {
            continue;
        }
        h.make_monic();
        update(&mut g, &mut active, &mut pairs, h);
    }

    let mut processed = 0usize;
    while !pairs.is_empty() {
        let best = (0..pairs.len()).min_by(|&a, &b| order.cmp(&pairs[a].lcm, &pairs[b].lcm)).unwrap();
        let p = pairs.swap_remove(best);
        processed += 1;
        if let Some(limit) = max_pairs {
            if processed > limit {
                return None;
            }
        }
        let (a, b) = (&g[p.i], &g[p.j]);
        let ea = sub_exp(&p.lcm, a.lm());
        let eb = sub_exp(&p.lcm, b.lm());
        let a_shift = Sorted {
            terms: a.terms.iter().map(|(m, c)| (m.iter().zip(&ea).map(|(x, y)| x + y).collect(), c.clone())).collect(),
        };
        let s = a_shift.sub_scaled(&F::one(), &eb, b, order, 1, true);
        let refs: Vec<&Sorted<F>> = g.iter().zip(&active).filter(|(_, a)| **a).map(|(p, _)| p).collect();
        let mut h = reduce(&s, &refs, order);
        if h.terms.is_empty() {
            continue;
        }
        h.make_monic();
        if h.lm().iter().all(|&e| e == 0) {
            let one = Sorted { terms: vec![(vec![0; nvars], F::one())] };
            return Some(GroebnerBasis { order, nvars, polys: vec![MultiPoly::one(nvars)], sorted: vec![one] });
        }
        update(&mut g, &mut active, &mut pairs, h);
    }

    // minimal and then reduced basis
    let mut keep: Vec<Sorted<F>> = Vec::new();
    let cand: Vec<&Sorted<F>> = g.iter().zip(&active).filter(|(_, a)| **a).map(|(p, _)| p).collect();
    for (idx, p) in cand.iter().enumerate() {
        let redundant =
            cand.iter().enumerate().any(|(j, q)| j != idx && divides(q.lm(), p.lm()) && (q.lm() != p.lm() || j < idx));
        if !redundant {
            keep.push((*p).clone());
        }
    }
    let mut reduced = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<&Sorted<F>> = keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p).collect();
        let head = Sorted { terms: vec![keep[i].terms[0].clone()] };
        let tail = Sorted { terms: keep[i].terms[1..].to_vec() };
        let mut r = reduce(&tail, &others, order);
        r.terms.insert(0, head.terms[0].clone());
        reduced.push(r);
    }
    reduced.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    let polys = reduced.iter().map(|s| s.to_poly(nvars)).collect();
    Some(GroebnerBasis { order, nvars, polys, sorted: reduced })
}

fn update<F: Field>(g: &mut Vec<Sorted<F>>, active: &mut Vec<bool>, pairs: &mut Vec<Pair>, h: Sorted<F>) {
    let hi = g.len();
    let hm = h.lm().clone();
    let act: Vec<usize> = (0..g.len()).filter(|&i| active[i]).collect();
    let cands: Vec<(usize, Monomial, bool)> =
        act.iter().map(|&i| (i, lcm(g[i].lm(), &hm), coprime(g[i].lm(), &hm))).collect();

    // chain criterion among the new pairs
    let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
    for (k, (_, l, cp)) in cands.iter().enumerate() {
        let dominated =
            cands.iter().enumerate().any(|(k2, (_, l2, _))| k2 != k && divides(l2, l) && (l2 != l || k2 < k));
        if !dominated || *cp {
            kept.push((cands[k].0, l.clone(), *cp));
        }
    }
    // among pairs with equal lcm keep only one, drop coprime ones
    let mut fresh: Vec<Pair> = Vec::new();
    let mut seen_lcm: Vec<Monomial> = Vec::new();
    for (i, l, cp) in kept {
        if seen_lcm.contains(&l) {
            continue;
        }
        seen_lcm.push(l.clone());
        if !cp {
            fresh.push(Pair { i, j: hi, lcm: l });
        }
    }
    // old pairs made redundant by h
    pairs.retain(|p| !(divides(&hm, &p.lcm) && lcm(g[p.i].lm(), &hm) != p.lcm && lcm(g[p.j].lm(), &hm) != p.lcm));
    for i in act {
        if divides(&hm, g[i].lm()) {
            active[i] = false;
        }
    }
    pairs.extend(fresh);
    g.push(h);
    active.push(true);
}

pub fn groebner<F: Field>(gens: &[MultiPoly<F>], order: MonomialOrder) -> GroebnerBasis<F> {
    groebner_bounded(gens, order, None).expect("unbounded computation")
}

/// Generators of the elimination ideal `I ∩ F[keep]`, from a Groebner basis
/// for a block order ranking the other variables highest.
pub fn eliminate<F: Field>(gens: &[MultiPoly<F>], keep: &[usize]) -> Vec<MultiPoly<F>> {
    let Some(n) = gens.first().map(|g| g.nvars()) else { return Vec::new() };
    let elim: Vec<usize> = (0..n).filter(|i| !keep.contains(i)).collect();
    // new position of each old variable
    let mut map = vec![0; n];
    for (pos, &v) in elim.iter().chain(keep.iter()).enumerate() {
        map[v] = pos;
    }
    let mut inverse = vec![0; n];
    for (old, &new) in map.iter().enumerate() {
        inverse[new] = old;
    }
    let moved: Vec<_> = gens.iter().map(|g| g.remap(&map, n)).collect();
    let gb = groebner(&moved, MonomialOrder::Block(elim.len()));
    gb.polys().iter().filter(|p| (0..elim.len()).all(|i| !p.involves(i))).map(|p| p.remap(&inverse, n)).collect()
}
