//! Instances with a known solution: implicitize `(u(x), u(x+1))` for a
//! random rational `u`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gcd::{remove_factors_missing_any, squarefree_part};
use crate::poly::{MultiPoly, RatFunc, UniPoly};
use crate::resultant::resultant;
use crate::scalar::Rational;
use crate::solver::verify_solution;

type P = MultiPoly<Rational>;
type Poly = UniPoly<Rational>;

/// Coefficient range of generated numerators and denominators.
pub const COEFF_RANGE: i64 = 5;
/// Largest degree the generator accepts.
pub const MAX_GEN_DEGREE: usize = 3;

/// The curve `F(y, z) = 0` traced by `(u(t), u(t+1))`.
pub fn implicitize(u: &RatFunc<Rational>) -> Result<P> {
    if u.is_constant() {
        return Err(Error::ConstantInVariable);
    }
    let u1 = u.shift_int(1);
    // variables (y, z, t)
    let lift = |p: &Poly| MultiPoly::from_uni(p, 3, 2);
    let y = P::var(3, 0);
    let z = P::var(3, 1);
    let g1 = &(&y * &lift(u.den())) - &lift(u.num());
    let g2 = &(&z * &lift(u1.den())) - &lift(u1.num());
    let r = resultant(&g1, &g2, 2)?;
    let r = P::from_terms(2, r.into_terms().map(|(m, c)| (m[..2].to_vec(), c)));
    let f = remove_factors_missing_any(&squarefree_part(&r), &[0, 1]).primitive();
    if !verify_solution(&f, u) {
        return Err(Error::Internal("implicit equation does not vanish on the input".into()));
    }
    Ok(f)
}

/// A generated instance and the solution it was built from.
#[derive(Clone, Debug, PartialEq)]
pub struct HarnessInstance {
    pub seed: u64,
    pub planted: RatFunc<Rational>,
    pub f: P,
}

fn random_poly(rng: &mut ChaCha8Rng, deg: usize) -> Poly {
    let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-COEFF_RANGE..=COEFF_RANGE)).collect();
    while c[deg] == 0 {
        c[deg] = rng.gen_range(-COEFF_RANGE..=COEFF_RANGE);
    }
    Poly::from_ints(&c)
}

/// Random `u = num/den` with `max(deg num, deg den) = deg`, small integer
/// coefficients, coprime and non-constant.
pub fn random_solution(rng: &mut ChaCha8Rng, deg: usize) -> RatFunc<Rational> {
    assert!((1..=MAX_GEN_DEGREE).contains(&deg), "degree out of range");
    loop {
        let (dn, dd) = if rng.gen_bool(0.5) { (deg, rng.gen_range(0..=deg)) } else { (rng.gen_range(0..=deg), deg) };
        let num = random_poly(rng, dn);
        let den = random_poly(rng, dd);
        if num.is_zero() || !num.gcd(&den).is_constant() {
            continue;
        }
        let u = RatFunc::new(num, den);
        if !u.is_constant() {
            return u;
        }
    }
}

/// Deterministic instance for `seed`.
pub fn generate(seed: u64, deg: usize) -> Result<HarnessInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let planted = random_solution(&mut rng, deg);
    let f = implicitize(&planted)?;
    Ok(HarnessInstance { seed, planted, f })
}

impl HarnessInstance {
    /// Instance file text, with the planted solution as a comment.
    pub fn to_text(&self) -> String {
        format!(
            "# seed {}\n# planted y(x) = {}\n{}",
            self.seed,
            self.planted.fmt_var("x"),
            crate::parse::format_instance(&self.f)
        )
    }
}
