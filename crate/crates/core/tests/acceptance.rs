//! End-to-end acceptance suite. Runs without the libtest harness so every
//! criterion prints exactly one PASS/FAIL line.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use aode::curve::{parametrize, Parametrized, PlaneCurve};
use aode::degree_bound::{indicial_polynomial, poly_degree_bound, separable_degree_bound, tilde_transform};
use aode::elimination::{annihilates, derive_second_order, EliminationRoute, ProlongedIdeal, SecondOrderAODE, W0, Z0};
use aode::harness::generate;
use aode::parse::parse_poly;
use aode::poly::{MultiPoly, RatFunc, UniPoly};
use aode::resultant::{resultant, resultant_commutes_check, sylvester_resultant};
use aode::roots::ExactValue;
use aode::scalar::q;
use aode::separable::{build_system, constant_candidates, constants_only_answer, SeparableEq};
use aode::solver::{
    constant_solutions, shift_equivalent, solve_autonomous, verify_solution, Bounds, ConstantSolutions, Options, Status,
};
use aode::{QMultiPoly, QPoly, QRatFunc, Rational};

type Outcome = Result<String, String>;

fn rand_q(rng: &mut ChaCha8Rng, r: i64) -> Rational {
    q(rng.gen_range(-r..=r))
}

fn rand_nonzero(rng: &mut ChaCha8Rng, r: i64) -> Rational {
    loop {
        let c = rng.gen_range(-r..=r);
        if c != 0 {
            return q(c);
        }
    }
}

fn rand_uni(rng: &mut ChaCha8Rng, deg: usize, r: i64) -> QPoly {
    let mut c: Vec<Rational> = (0..deg).map(|_| rand_q(rng, r)).collect();
    c.push(rand_nonzero(rng, r));
    UniPoly::from_coeffs(c)
}

/// Dense random polynomial of total degree at most `deg`.
fn rand_multi(rng: &mut ChaCha8Rng, nvars: usize, deg: u32, r: i64) -> QMultiPoly {
    let mut terms = Vec::new();
    let mut m = vec![0u32; nvars];
    loop {
        if m.iter().sum::<u32>() <= deg && rng.gen_bool(0.6) {
            terms.push((m.clone(), rand_q(rng, r)));
        }
        let mut i = 0;
        while i < nvars {
            m[i] += 1;
            if m[i] <= deg {
                break;
            }
            m[i] = 0;
            i += 1;
        }
        if i == nvars {
            break;
        }
    }
    MultiPoly::from_terms(nvars, terms)
}

fn homogeneous_monomials(deg: u32) -> Vec<Vec<u32>> {
    (0..=deg).flat_map(|a| (0..=deg - a).map(move |b| vec![a, b, deg - a - b])).collect()
}

fn rand_homogeneous(rng: &mut ChaCha8Rng, deg: u32) -> QMultiPoly {
    loop {
        let f = MultiPoly::from_terms(3, homogeneous_monomials(deg).into_iter().map(|m| (m, rand_q(rng, 4))));
        if !f.is_zero() {
            return f;
        }
    }
}

/// Basis of the right kernel of `rows` by Gauss-Jordan elimination.
fn nullspace(mut rows: Vec<Vec<Rational>>, ncols: usize) -> Vec<Vec<Rational>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let k = rows[i][c].clone();
                let pivot = rows[r].clone();
                for (x, p) in rows[i].iter_mut().zip(&pivot) {
                    *x -= p * &k;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -rows[i][f].clone();
            }
            v
        })
        .collect()
}

fn golden_f() -> QMultiPoly {
    parse_poly("(12y+49)z^2 - (12y^2+62y+56)z + y^2 + 8y + 16", &["y", "z"]).unwrap()
}

fn golden_y() -> QRatFunc {
    let a = UniPoly::from_ints(&[1, -4, 2]);
    RatFunc::new(&a * &a, UniPoly::from_ints(&[0, 2, -6, 4]))
}

fn golden() -> Outcome {
    let start = Instant::now();
    let f = golden_f();
    if !verify_solution(&f, &golden_y()) {
        return Err("reference solution does not verify".into());
    }
    let r = solve_autonomous(&f, &Options::default()).map_err(|e| e.to_string())?;
    let cands = r.candidates.as_ref().ok_or("no candidate set")?;
    if !cands.finite || cands.len() != 4 {
        return Err(format!("candidate set {:?}", cands.values()));
    }
    // 7 ± 4√3 are the roots of c^2 - 14c + 1
    let mut rationals: Vec<Rational> = Vec::new();
    let mut quadratic = 0;
    for v in cands.values() {
        match v {
            ExactValue::Rational(c) => rationals.push(c),
            other => {
                if other.minimal_polynomial() != UniPoly::from_ints(&[1, -14, 1]) {
                    return Err(format!("unexpected candidate {other}"));
                }
                quadratic += 1;
            }
        }
    }
    rationals.sort();
    if rationals != vec![q(0), q(1)] || quadratic != 2 {
        return Err(format!("candidate set {:?}", cands.values()));
    }
    if r.bounds != Some(Bounds { n: 2, m: 4 }) {
        return Err(format!("bounds {:?}", r.bounds));
    }
    if r.status != Status::Solved {
        return Err(format!("status {:?}", r.status));
    }
    for s in &r.solutions {
        if !verify_solution(&f, &s.y) || s.y.degree() != 4 {
            return Err(format!("bad solution {}", s.y.fmt_var("x")));
        }
    }
    let found = r.solutions.iter().any(|s| match shift_equivalent(&s.y, &golden_y()) {
        Some(c0) => s.y.shift(&c0) == golden_y(),
        None => false,
    });
    if !found {
        return Err("reference solution is not among the results".into());
    }
    Ok(format!("N=2 M=4, {} solution(s), {:.2}s", r.solutions.len(), start.elapsed().as_secs_f64()))
}

fn resultant_commutation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut done = 0;
    while done < 200 {
        let nvars = rng.gen_range(2..=3);
        let var = rng.gen_range(0..nvars);
        let (df, dg) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let f = rand_multi(&mut rng, nvars, df, 4);
        let g = rand_multi(&mut rng, nvars, dg, 4);
        if f.degree_in(var).unwrap_or(0) == 0 || g.degree_in(var).unwrap_or(0) == 0 {
            continue;
        }
        let point: Vec<Option<Rational>> =
            (0..nvars).map(|i| (i != var && rng.gen_bool(0.8)).then(|| rand_q(&mut rng, 5))).collect();
        let specialize = |p: &QMultiPoly| {
            point.iter().enumerate().fold(p.clone(), |acc, (i, v)| match v {
                Some(v) if i != var => acc.eval_var(i, v),
                _ => acc,
            })
        };
        if specialize(&f.lc_in(var)).is_zero() || specialize(&g.lc_in(var)).is_zero() {
            continue;
        }
        if !resultant_commutes_check(&f, &g, var, &point) {
            return Err(format!("commutation fails for f = {f:?}, g = {g:?}"));
        }
        // independent check through the Sylvester determinant
        let lhs = specialize(&sylvester_resultant(&f, &g, var));
        let rhs = sylvester_resultant(&specialize(&f), &specialize(&g), var);
        if lhs != rhs || resultant(&f, &g, var).map_err(|e| e.to_string())? != sylvester_resultant(&f, &g, var) {
            return Err(format!("Sylvester oracle disagrees for f = {f:?}, g = {g:?}"));
        }
        done += 1;
    }
    Ok("200/200 triples".into())
}

fn rand_separable(rng: &mut ChaCha8Rng, n: usize) -> SeparableEq {
    let pair = |rng: &mut ChaCha8Rng| loop {
        let (dp, dq) = if rng.gen_bool(0.5) { (n, rng.gen_range(0..=n)) } else { (rng.gen_range(0..=n), n) };
        let p = rand_uni(rng, dp, 4);
        let qq = rand_uni(rng, dq, 4);
        if p.gcd(&qq).is_constant() {
            return (p, qq);
        }
    };
    loop {
        let (p1, q1) = pair(rng);
        let (p2, q2) = pair(rng);
        if let Ok(eq) = SeparableEq::new(p1, q1, p2, q2) {
            if !eq.equal_sides() {
                return eq;
            }
        }
    }
}

fn eliminant_nonvanishing() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut resultant_route = 0;
    for i in 0..50 {
        let n = 1 + i % 3;
        let eq = rand_separable(&mut rng, n);
        let c = rand_nonzero(&mut rng, 3);
        let sys = build_system(&eq, &c).map_err(|e| e.to_string())?;
        let (fa, fb) = derive_second_order(&sys).map_err(|e| e.to_string())?;
        if fa.f.is_zero() || fb.f.is_zero() {
            return Err(format!("zero eliminant for {eq:?}"));
        }
        let ideal = ProlongedIdeal::new(&sys);
        if !ideal.contains(&fa, Z0) || !ideal.contains(&fb, W0) {
            return Err(format!("eliminant outside the ideal for {eq:?}"));
        }
        resultant_route += [fa.route, fb.route].iter().filter(|r| **r == EliminationRoute::Resultant).count();
    }
    Ok(format!("50/50 pairs, {resultant_route}/100 eliminants by resultants"))
}

/// Nonzero homogeneous `F` of the smallest degree with
/// `F(u(x), u(x+1), u(x+2)) = 0`, found from the kernel of the coefficient
/// equations.
fn planted_equation(rng: &mut ChaCha8Rng, u: &QPoly) -> QMultiPoly {
    let images = [u.clone(), u.shift(&q(1)), u.shift(&q(2))];
    for k in 1.. {
        let monos = homogeneous_monomials(k);
        let cols: Vec<QPoly> =
            monos.iter().map(|m| MultiPoly::monomial(3, m.clone(), Rational::one()).eval_uni(&images)).collect();
        let nrows = cols.iter().map(|c| c.deg0() + 1).max().unwrap();
        let rows: Vec<Vec<Rational>> = (0..nrows).map(|r| cols.iter().map(|c| c.coeff(r)).collect()).collect();
        let kernel = nullspace(rows, monos.len());
        if kernel.is_empty() {
            continue;
        }
        // random combination of the kernel basis
        let mut v = vec![Rational::zero(); monos.len()];
        for b in &kernel {
            let s = rand_nonzero(rng, 3);
            for (x, y) in v.iter_mut().zip(b) {
                *x += &s * y;
            }
        }
        let f = MultiPoly::from_terms(3, monos.into_iter().zip(v));
        if !f.is_zero() {
            return f;
        }
    }
    unreachable!()
}

fn indicial() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..100 {
        let deg = rng.gen_range(1..=4);
        let f = rand_homogeneous(&mut rng, deg);
        let t = tilde_transform(&SecondOrderAODE { f: f.clone(), route: EliminationRoute::Resultant });
        match indicial_polynomial(&t) {
            Ok(ind) if !ind.p.is_zero() => {}
            _ => return Err(format!("indicial polynomial vanishes for {f:?}")),
        }
    }
    for i in 0..30 {
        let d = 1 + i % 4;
        let u = rand_uni(&mut rng, d, 5);
        let eq = SecondOrderAODE { f: planted_equation(&mut rng, &u), route: EliminationRoute::Resultant };
        if !annihilates(&eq, &u) {
            return Err("planted equation does not annihilate its solution".into());
        }
        let roots = poly_degree_bound(&eq).map_err(|e| e.to_string())?;
        if !roots.contains(&(d as u64)) {
            return Err(format!("degree {d} missing from indicial roots {roots:?}"));
        }
    }
    Ok("100/100 nonzero, 30/30 planted degrees found".into())
}

/// Round-trip results, shared by the completeness and bound criteria.
struct RoundTrip {
    solved: usize,
    unsupported: usize,
    failures: Vec<String>,
    bound_violations: Vec<String>,
    slowest: Duration,
    skipped: usize,
}

fn round_trip() -> RoundTrip {
    let mut rt = RoundTrip {
        solved: 0,
        unsupported: 0,
        failures: Vec::new(),
        bound_violations: Vec::new(),
        slowest: Duration::ZERO,
        skipped: 0,
    };
    let mut seed = 0u64;
    while rt.solved + rt.unsupported + rt.failures.len() < 100 {
        let deg = 1 + (seed % 2) as usize;
        let inst = generate(seed, deg).expect("generator");
        seed += 1;
        let native = PlaneCurve::new(inst.f.clone())
            .and_then(|c| parametrize(&c))
            .is_ok_and(|p| !matches!(p, Parametrized::Unsupported(_)));
        if !native {
            rt.skipped += 1;
            continue;
        }
        let start = Instant::now();
        let r = solve_autonomous(&inst.f, &Options::default());
        let took = start.elapsed();
        rt.slowest = rt.slowest.max(took);
        let tag = format!("seed {} deg {deg}", inst.seed);
        if took > Duration::from_secs(30) {
            rt.failures.push(format!("{tag}: {took:?}"));
            continue;
        }
        let r = match r {
            Ok(r) => r,
            Err(e) => {
                rt.failures.push(format!("{tag}: {e}"));
                continue;
            }
        };
        let p = &inst.planted;
        let need = p.num().deg0().max(p.den().deg0()) as u64;
        match r.bounds {
            Some(b) if b.m >= need => {}
            other => rt.bound_violations.push(format!("{tag}: bounds {other:?}, planted degree {need}")),
        }
        match r.status {
            Status::Solved if !r.solutions.is_empty() && r.solutions.iter().all(|s| verify_solution(&inst.f, &s.y)) => {
                rt.solved += 1
            }
            Status::UnsupportedParametrization => rt.unsupported += 1,
            other => rt.failures.push(format!("{tag}: {other:?} {:?}", r.reason)),
        }
    }
    rt
}

fn completeness(rt: &RoundTrip) -> Outcome {
    let summary = format!(
        "{} solved, {} unsupported, slowest {:.2}s ({} non-native seeds skipped)",
        rt.solved,
        rt.unsupported,
        rt.slowest.as_secs_f64(),
        rt.skipped
    );
    if rt.failures.is_empty() && rt.solved >= 95 {
        Ok(summary)
    } else {
        Err(format!("{summary}; failures: {:?}", rt.failures))
    }
}

fn bound_soundness(rt: &RoundTrip) -> Outcome {
    if rt.bound_violations.is_empty() {
        Ok(format!("{} instances", rt.solved + rt.unsupported + rt.failures.len()))
    } else {
        Err(format!("{:?}", rt.bound_violations))
    }
}

fn degenerate() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..20 {
        let base = rand_separable(&mut rng, 1 + i % 3);
        let eq = SeparableEq::new(base.p1.clone(), base.q1.clone(), base.p1, base.q1).unwrap();
        if constants_only_answer(&eq).map(|c| c.bound) != Some(0) || constant_candidates(&eq).finite {
            return Err(format!("equal sides not recognised for {eq:?}"));
        }
        if separable_degree_bound(&eq).map_err(|e| e.to_string())?.n != 0 {
            return Err(format!("nonzero bound for {eq:?}"));
        }
    }
    let diag = parse_poly("3z - 3y", &["y", "z"]).unwrap();
    let r = solve_autonomous(&diag, &Options::default()).map_err(|e| e.to_string())?;
    if r.status != Status::ConstantsOnly || r.bounds.map(|b| b.n) != Some(0) || r.constants != ConstantSolutions::All {
        return Err(format!("diagonal gives {:?}", r.status));
    }

    let mut done = 0;
    while done < 20 {
        let (dy, dz) = (rng.gen_range(1..=4u32), rng.gen_range(1..=4u32));
        if dy == dz {
            continue;
        }
        let y = MultiPoly::var(2, 0);
        let z = MultiPoly::var(2, 1);
        let lead = &y.pow(dy).scale(&rand_nonzero(&mut rng, 3)) + &z.pow(dz).scale(&rand_nonzero(&mut rng, 3));
        let f = &lead + &rand_multi(&mut rng, 2, dy.min(dz), 3);
        if f.degree_in(0) != Some(dy) || f.degree_in(1) != Some(dz) {
            continue;
        }
        let Ok(r) = solve_autonomous(&f, &Options::default()) else { continue };
        done += 1;
        if r.status != Status::Null || !r.reason.as_deref().unwrap_or("").contains("asymmetry") {
            return Err(format!("{f:?} gives {:?}", r.status));
        }
        // the attached constants are the distinct roots of F(c, c)
        let diag = f.eval_uni(&[UniPoly::x(), UniPoly::x()]);
        let expected = match diag.is_zero() {
            true => ConstantSolutions::All,
            false => ConstantSolutions::Values(Vec::new()),
        };
        match (&r.constants, expected) {
            (ConstantSolutions::All, ConstantSolutions::All) => {}
            (ConstantSolutions::Values(v), ConstantSolutions::Values(_)) => {
                if v.len() != diag.squarefree_part().deg0() || r.constants != constant_solutions(&f) {
                    return Err(format!("constants {v:?} for {f:?}"));
                }
            }
            _ => return Err(format!("constants {:?} for {f:?}", r.constants)),
        }
    }
    Ok("20 equal-sides + diagonal, 20 asymmetric".into())
}

fn main() -> ExitCode {
    let mut ok = true;
    let mut report = |name: &str, r: Outcome| {
        match &r {
            Ok(msg) => println!("PASS  {name}: {msg}"),
            Err(msg) => println!("FAIL  {name}: {msg}"),
        }
        ok &= r.is_ok();
    };
    report("1 golden example", golden());
    report("2 resultant commutation", resultant_commutation());
    report("3 eliminant nonvanishing", eliminant_nonvanishing());
    report("4 indicial polynomial", indicial());
    let rt = round_trip();
    report("5 round-trip completeness", completeness(&rt));
    report("6 bound soundness", bound_soundness(&rt));
    report("7 degenerate classifications", degenerate());
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
