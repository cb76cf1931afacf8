//! Machine-readable output documents.

use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::curve::Genus;
use crate::poly::{RatFunc, UniPoly};
use crate::scalar::{denominator_lcm, numerator_gcd, Rational};
use crate::solver::{verify_solution, ConstantSolutions, SolutionReport, Status};
use crate::QMultiPoly;

type Poly = UniPoly<Rational>;

/// `r = num / den` with coprime integer coefficients and a positive leading
/// coefficient in `den`.
pub fn integer_form(r: &RatFunc<Rational>) -> (Poly, Poly) {
    let all: Vec<&Rational> = r.num().coeffs().iter().chain(r.den().coeffs()).collect();
    let l = Rational::from_integer(denominator_lcm(all.iter().copied()));
    let scaled: Vec<Rational> = all.iter().map(|c| *c * &l).collect();
    let g = numerator_gcd(&scaled);
    let mut k = if g.is_zero() { l } else { l / Rational::from_integer(g) };
    if r.den().lc().is_negative() {
        k = -k;
    }
    (r.num().scale(&k), r.den().scale(&k))
}

pub fn fmt_integer_form(r: &RatFunc<Rational>, var: &str) -> (String, String) {
    let (n, d) = integer_form(r);
    (n.fmt_var(var), d.fmt_var(var))
}

fn genus_value(g: &Option<Genus>) -> Value {
    match g {
        None => Value::Null,
        Some(Genus::Known(g)) => json!(g),
        Some(Genus::Unsupported(why)) => json!({ "unsupported": why }),
    }
}

/// The output document. Each solution's certificate is recomputed here.
pub fn solve_document(f: &QMultiPoly, r: &SolutionReport, timing_ms: u128) -> Value {
    let solutions: Vec<Value> = r
        .solutions
        .iter()
        .map(|s| {
            let (num, den) = fmt_integer_form(&s.y, "x");
            json!({
                "num": num,
                "den": den,
                "degree": s.y.degree(),
                "verified": s.verified && verify_solution(f, &s.y),
            })
        })
        .collect();
    let candidates: Value = match &r.candidates {
        None => Value::Null,
        Some(c) if !c.finite => json!("infinite"),
        Some(c) => serde_json::to_value(c.values()).expect("serializable"),
    };
    let constants: Value = match &r.constants {
        ConstantSolutions::All => json!("all"),
        ConstantSolutions::Values(v) => serde_json::to_value(v).expect("serializable"),
    };
    let parametrization = match &r.parametrization {
        None => Value::Null,
        Some((p, src)) => json!({
            "p1": p.p1.fmt_var("t"),
            "p2": p.p2.fmt_var("t"),
            "source": src.to_string(),
        }),
    };
    let traces: Vec<Value> = r
        .traces
        .iter()
        .map(|t| {
            json!({
                "candidate": t.candidate,
                "numerator_degrees": t.numerator_degrees,
                "denominator_degrees": t.denominator_degrees,
            })
        })
        .collect();
    json!({
        "status": r.status.as_str(),
        "reason": r.reason,
        "solutions": solutions,
        "bounds": r.bounds.map(|b| json!({ "N": b.n, "M": b.m })),
        "candidates": candidates,
        "candidate_trace": traces,
        "genus": genus_value(&r.genus),
        "parametrization": parametrization,
        "constant_solutions": constants,
        "search_capped": r.capped,
        "timing_ms": timing_ms as u64,
    })
}

/// Whether every reported solution re-verifies; a `Solved` report must
/// carry at least one.
pub fn certificates_hold(f: &QMultiPoly, r: &SolutionReport) -> bool {
    let all = r.solutions.iter().all(|s| s.verified && verify_solution(f, &s.y));
    all && (r.status != Status::Solved || r.bounds.is_some())
}
