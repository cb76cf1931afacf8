//! Plane curves `F(y, z) = 0`: degree checks, singular points and genus for
//! curves whose singularities are ordinary, and proper rational
//! parametrizations for lines, conics and curves of degree `d` with a
//! rational point of multiplicity `d - 1`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::alg::{dynamic_eval, AlgNum, Modulus};
use crate::error::{Error, Result};
use crate::gcd::squarefree_part;
use crate::poly::{MultiPoly, RatFunc, UniPoly};
use crate::roots::{quadratic_modulus, rational_roots};
use crate::scalar::{exact_qsqrt, squarefree_decompose, Field, Rational};
use crate::zerodim::{solve_system, AlgPoint};

type P = MultiPoly<Rational>;

/// Search box for rational points on conics: numerators and denominators
/// up to this bound.
pub const CONIC_SEARCH_BOUND: i64 = 100;

/// The curve `F(y, z) = 0` with `y` as variable 0 and `z` as variable 1.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneCurve {
    f: P,
}

impl PlaneCurve {
    /// Rejects constant or non-squarefree input; stores the primitive form.
    pub fn new(f: P) -> Result<Self> {
        if f.nvars() != 2 {
            return Err(Error::InvalidInput("curve polynomial must be in (y, z)".into()));
        }
        if f.is_constant() {
            return Err(Error::InvalidInput("curve polynomial is constant".into()));
        }
        if squarefree_part(&f).total_degree() != f.total_degree() {
            return Err(Error::Reducible("polynomial has a repeated factor".into()));
        }
        Ok(PlaneCurve { f: f.primitive() })
    }

    pub fn poly(&self) -> &P {
        &self.f
    }

    pub fn degree(&self) -> u32 {
        self.f.total_degree().unwrap()
    }

    pub fn deg_y(&self) -> u32 {
        self.f.degree_in(0).unwrap_or(0)
    }

    pub fn deg_z(&self) -> u32 {
        self.f.degree_in(1).unwrap_or(0)
    }

    /// `H(Y, Z, W) = W^d F(Y/W, Z/W)`.
    pub fn projective(&self) -> P {
        let lifted = self.f.remap(&[0, 1], 3);
        lifted.homogenize(2, self.degree()).expect("total degree")
    }

    /// The same curve with `y` and `z` exchanged.
    pub fn swapped(&self) -> Self {
        PlaneCurve { f: self.f.remap(&[1, 0], 2).primitive() }
    }
}

/// `deg_y F = deg_z F`, necessary for a non-constant rational solution.
pub fn degree_symmetry_check(c: &PlaneCurve) -> bool {
    c.deg_y() == c.deg_z()
}

/// Projective point `[Y : Z : W]`; with a modulus it stands for all its
/// conjugates.
#[derive(Clone, Debug)]
pub struct ProjPoint {
    pub modulus: Option<Arc<Modulus>>,
    pub coords: [AlgNum; 3],
}

impl ProjPoint {
    pub fn rational(&self) -> Option<[Rational; 3]> {
        let c: Option<Vec<Rational>> = self.coords.iter().map(|x| x.to_rational_value()).collect();
        c.map(|v| [v[0].clone(), v[1].clone(), v[2].clone()])
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} : {} : {}]", self.coords[0], self.coords[1], self.coords[2])?;
        if let Some(m) = &self.modulus {
            write!(f, " with {}", m.poly().fmt_var(m.symbol()))?;
            f.write_str(" = 0")?;
        }
        Ok(())
    }
}

/// A singular point (or a set of conjugate ones) with its local data.
#[derive(Clone, Debug)]
pub struct SingularPoint {
    pub point: ProjPoint,
    pub multiplicity: u32,
    /// Distinct tangents.
    pub ordinary: bool,
    /// Number of conjugate points represented.
    pub count: usize,
}

/// Which affine chart a local computation runs in.
#[derive(Clone, Copy, Debug)]
enum Chart {
    /// `Y = 1`, coordinates `(z, w)`.
    YOne,
    /// `Z = 1`, coordinates `(y, w)`.
    ZOne,
}

fn chart_poly(h: &P, chart: Chart) -> P {
    let one = Rational::one();
    let var = match chart {
        Chart::YOne => 0,
        Chart::ZOne => 1,
    };
    let g = h.eval_var(var, &one);
    // drop the evaluated variable
    let keep: Vec<usize> = (0..3).filter(|&i| i != var).collect();
    MultiPoly::from_terms(2, g.into_terms().map(|(m, c)| (keep.iter().map(|&i| m[i]).collect(), c)))
}

/// Multiplicity and ordinariness of `g` at `(a, b)`.
fn local_data(g: &MultiPoly<AlgNum>, a: &AlgNum, b: &AlgNum) -> (u32, bool) {
    let x = MultiPoly::var(2, 0);
    let y = MultiPoly::var(2, 1);
    let shifted = g.compose(&[&x + &MultiPoly::constant(2, a.clone()), &y + &MultiPoly::constant(2, b.clone())]);
    let m = shifted.order().expect("nonzero");
    let cone = shifted.homogeneous_part(m);
    let c = cone.eval_var(0, &AlgNum::one()).to_uni(1).expect("univariate");
    let e = c.deg0() as u32;
    let ordinary = m - e <= 1 && c.gcd(&c.derivative()).is_constant();
    (m, ordinary)
}

fn analyze(g: &P, pt: &AlgPoint, proj: ProjPoint) -> Vec<SingularPoint> {
    let ga = g.map_coeffs(|c| AlgNum::rational(c.clone()));
    match &pt.modulus {
        None => {
            let (multiplicity, ordinary) = local_data(&ga, &pt.coords[0], &pt.coords[1]);
            vec![SingularPoint { point: proj, multiplicity, ordinary, count: 1 }]
        }
        Some(m) => dynamic_eval(m, |branch| {
            let a = pt.coords[0].reduce_to(branch);
            let b = pt.coords[1].reduce_to(branch);
            local_data(&ga, &a, &b)
        })
        .into_iter()
        .map(|(branch, (multiplicity, ordinary))| {
            let coords = proj.coords.clone().map(|c| if c.modulus().is_some() { c.reduce_to(&branch) } else { c });
            SingularPoint {
                point: ProjPoint { modulus: Some(branch.clone()), coords },
                multiplicity,
                ordinary,
                count: branch.degree(),
            }
        })
        .collect(),
    }
}

fn solve_singular(gens: &[P]) -> Result<Vec<AlgPoint>> {
    match solve_system(gens) {
        Err(Error::PositiveDimensional) => Err(Error::Reducible("singular locus is not finite".into())),
        other => other,
    }
}

/// All singular points of the projective closure.
pub fn singular_points(c: &PlaneCurve) -> Result<Vec<SingularPoint>> {
    let h = c.projective();
    let mut out = Vec::new();
    let q = |x: Rational| AlgNum::rational(x);

    // affine part
    let f = c.poly();
    for pt in solve_singular(&[f.clone(), f.derivative(0), f.derivative(1)])? {
        let proj = ProjPoint {
            modulus: pt.modulus.clone(),
            coords: [pt.coords[0].clone(), pt.coords[1].clone(), q(Rational::one())],
        };
        out.extend(analyze(f, &pt, proj));
    }

    // points [1 : m : 0]
    let g = chart_poly(&h, Chart::YOne);
    let w = P::var(2, 1);
    for pt in solve_singular(&[g.clone(), g.derivative(0), g.derivative(1), w])? {
        let proj = ProjPoint {
            modulus: pt.modulus.clone(),
            coords: [q(Rational::one()), pt.coords[0].clone(), q(Rational::zero())],
        };
        out.extend(analyze(&g, &pt, proj));
    }

    // the point [0 : 1 : 0]
    let k = chart_poly(&h, Chart::ZOne);
    let origin = [Rational::zero(), Rational::zero()];
    if k.eval(&origin).is_zero() && k.derivative(0).eval(&origin).is_zero() && k.derivative(1).eval(&origin).is_zero() {
        let pt = AlgPoint { modulus: None, coords: vec![q(Rational::zero()), q(Rational::zero())] };
        let proj = ProjPoint { modulus: None, coords: [q(Rational::zero()), q(Rational::one()), q(Rational::zero())] };
        out.extend(analyze(&k, &pt, proj));
    }
    Ok(out)
}

/// Genus of the projective closure, when computable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Genus {
    Known(u32),
    /// A singularity with a repeated tangent was found.
    Unsupported(String),
}

/// Genus by the ordinary-singularity formula
/// `(d-1)(d-2)/2 - sum m(m-1)/2`.
pub fn genus(c: &PlaneCurve) -> Result<Genus> {
    let d = c.degree() as i64;
    if d <= 2 {
        return Ok(Genus::Known(0));
    }
    let mut g = (d - 1) * (d - 2) / 2;
    for s in singular_points(c)? {
        if !s.ordinary {
            return Ok(Genus::Unsupported(format!("non-ordinary singular point {}", s.point)));
        }
        let m = s.multiplicity as i64;
        g -= s.count as i64 * m * (m - 1) / 2;
    }
    if g < 0 {
        return Err(Error::Reducible(format!("negative genus {g}")));
    }
    Ok(Genus::Known(g as u32))
}

/// A rational parametrization `y = p1(t)`, `z = p2(t)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Parametrization<F> {
    pub p1: RatFunc<F>,
    pub p2: RatFunc<F>,
}

/// How a parametrization was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamSource {
    Line,
    /// Pencil of lines through a rational point of multiplicity `d - 1`
    /// (a smooth point for conics).
    Pencil {
        point: String,
    },
    /// Conic without a small rational point: pencil through a point over a
    /// quadratic field.
    QuadraticPoint {
        point: String,
    },
    Imported,
}

impl fmt::Display for ParamSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamSource::Line => f.write_str("native:line"),
            ParamSource::Pencil { point } => write!(f, "native:pencil through {point}"),
            ParamSource::QuadraticPoint { point } => write!(f, "native:quadratic-point pencil through {point}"),
            ParamSource::Imported => f.write_str("imported"),
        }
    }
}

/// Outcome of [`parametrize`].
#[derive(Clone, Debug)]
pub enum Parametrized {
    Rational(Parametrization<Rational>, ParamSource),
    /// Coefficients in a quadratic field.
    Quadratic(Parametrization<AlgNum>, ParamSource),
    Unsupported(String),
}

/// Whether `F(p1, p2) = 0` identically and the degrees certify properness:
/// `deg p1 = deg_z F`, `deg p2 = deg_y F`.
pub fn verify_parametrization<F: Field>(c: &PlaneCurve, p: &Parametrization<F>) -> bool {
    let f = c.poly().map_coeffs(|x| F::from_rational(x.clone()));
    f.substitute_numerator(&[p.p1.clone(), p.p2.clone()]).is_zero()
        && p.p1.degree() == c.deg_z() as usize
        && p.p2.degree() == c.deg_y() as usize
}

/// Reads and verifies a user-supplied parametrization.
pub fn import_parametrization(c: &PlaneCurve, text: &str) -> Result<Parametrization<Rational>> {
    let (p1, p2) = crate::parse::parse_parametrization(text)?;
    let p = Parametrization { p1, p2 };
    let f = c.poly();
    if !f.substitute_numerator(&[p.p1.clone(), p.p2.clone()]).is_zero() {
        return Err(Error::NotProper("F(p1(t), p2(t)) does not vanish".into()));
    }
    if p.p1.degree() != c.deg_z() as usize || p.p2.degree() != c.deg_y() as usize {
        return Err(Error::NotProper(format!(
            "degrees ({}, {}) differ from (deg_z F, deg_y F) = ({}, {})",
            p.p1.degree(),
            p.p2.degree(),
            c.deg_z(),
            c.deg_y()
        )));
    }
    Ok(p)
}

/// Native parametrization of lines, conics and curves with a rational
/// point of multiplicity `d - 1`.
pub fn parametrize(c: &PlaneCurve) -> Result<Parametrized> {
    let d = c.degree();
    if d == 1 {
        return Ok(Parametrized::Rational(line(c), ParamSource::Line));
    }
    if d == 2 {
        if let Some(pt) = conic_rational_point(c) {
            let p = pencil(&c.projective(), &pt)?;
            return Ok(Parametrized::Rational(normalize_parameter(p), ParamSource::Pencil { point: fmt_point(&pt) }));
        }
        return conic_quadratic(c);
    }
    for s in singular_points(c)? {
        if s.multiplicity != d - 1 {
            continue;
        }
        if let Some(pt) = s.point.rational() {
            let p = pencil(&c.projective(), &pt)?;
            return Ok(Parametrized::Rational(normalize_parameter(p), ParamSource::Pencil { point: fmt_point(&pt) }));
        }
    }
    Ok(Parametrized::Unsupported(format!("degree {d} curve without a rational point of multiplicity {}", d - 1)))
}

fn fmt_point<F: Field>(p: &[F; 3]) -> String {
    format!("[{} : {} : {}]", p[0], p[1], p[2])
}

fn line(c: &PlaneCurve) -> Parametrization<Rational> {
    let f = c.poly();
    let a = f.coeff(&[1, 0]);
    let b = f.coeff(&[0, 1]);
    let k = f.coeff(&[0, 0]);
    let t = RatFunc::x();
    if !b.is_zero() {
        // z = -(a t + k) / b
        let p2 = RatFunc::from_poly(UniPoly::from_coeffs(vec![-&k / &b, -&a / &b]));
        Parametrization { p1: t, p2 }
    } else {
        Parametrization { p1: RatFunc::constant(-&k / &a), p2: t }
    }
}

fn pole_at_infinity(r: &RatFunc<Rational>) -> bool {
    r.num().deg0() > r.den().deg0()
}

/// Reparametrizes by a rational Moebius map so that `p1` and `p2` share
/// the pole `t = oo` and `p1` has a pole at `t = 0`, when such rational
/// poles exist. This leaves only `t -> k t`, which does not change the
/// head and tail ratios that seed the constant candidates.
pub fn normalize_parameter(p: Parametrization<Rational>) -> Parametrization<Rational> {
    let apply = |p: &Parametrization<Rational>, m: &RatFunc<Rational>| Parametrization {
        p1: p.p1.compose(m),
        p2: p.p2.compose(m),
    };
    let mut p = p;
    if !(pole_at_infinity(&p.p1) && pole_at_infinity(&p.p2)) {
        let common = p.p1.den().gcd(p.p2.den());
        if let Some(t0) = rational_roots(&common).into_iter().min() {
            // t -> t0 + 1/t
            let m = RatFunc::new(UniPoly::from_coeffs(vec![Rational::one(), t0]), UniPoly::x());
            p = apply(&p, &m);
        }
    }
    if !p.p1.den().coeff(0).is_zero() {
        if let Some(t1) = rational_roots(p.p1.den()).into_iter().min() {
            let m = RatFunc::from_poly(UniPoly::from_coeffs(vec![t1, Rational::one()]));
            p = apply(&p, &m);
        }
    }
    p
}

/// Points `[Y : Z : W]` reached by the pencil of lines through `pt`:
/// `μ pt + R(t)` with `H(μ pt + R(t)) = μ A(t) + B(t)`.
fn pencil<F: Field>(h: &MultiPoly<F>, pt: &[F; 3]) -> Result<Parametrization<F>> {
    let zero = || MultiPoly::<F>::zero(2);
    let mu = MultiPoly::<F>::var(2, 0);
    let t = MultiPoly::<F>::var(2, 1);
    let one = MultiPoly::<F>::one(2);
    // direction family R(t), independent of pt
    let r: [MultiPoly<F>; 3] = if !pt[2].is_zero() {
        [one.clone(), t.clone(), zero()]
    } else if !pt[0].is_zero() {
        [zero(), t.clone(), one.clone()]
    } else {
        [t.clone(), zero(), one.clone()]
    };
    let images: Vec<MultiPoly<F>> = (0..3).map(|i| &mu.scale(&pt[i]) + &r[i]).collect();
    let g = h.compose(&images);
    if g.degree_in(0).unwrap_or(0) > 1 {
        return Err(Error::Internal("pencil base point has too low multiplicity".into()));
    }
    let coeffs = g.coeffs_in(0);
    let a = coeffs.get(1).cloned().unwrap_or_else(zero).to_uni(1).expect("univariate in t");
    let b = coeffs[0].to_uni(1).expect("univariate in t");
    if a.is_zero() {
        return Err(Error::Internal("pencil degenerates".into()));
    }
    // μ = -B/A, so A·point = -B pt + A R(t)
    let ru: Vec<UniPoly<F>> = r.iter().map(|x| x.to_uni(1).expect("univariate in t")).collect();
    let comp: Vec<UniPoly<F>> = (0..3).map(|i| &(&a * &ru[i]) - &b.scale(&pt[i])).collect();
    if comp[2].is_zero() {
        return Err(Error::Internal("pencil maps into the line at infinity".into()));
    }
    Ok(Parametrization {
        p1: RatFunc::new(comp[0].clone(), comp[2].clone()),
        p2: RatFunc::new(comp[1].clone(), comp[2].clone()),
    })
}

/// Rationals `a/b` with `|a|, b <= bound`, by increasing height
/// `max(|a|, b)`.
fn small_rationals(bound: i64) -> impl Iterator<Item = Rational> {
    (1..=bound).flat_map(|h| {
        let mut v: Vec<Rational> = (1..=h)
            .flat_map(|b| (-h..=h).map(move |a| (a, b)))
            .filter(|&(a, b)| a.abs().max(b) == h && a.gcd(&b) == 1)
            .map(|(a, b)| Rational::new(a.into(), b.into()))
            .collect();
        v.sort_by_key(|r| r.abs());
        v
    })
}

/// A rational point of a conic: at infinity if possible, otherwise in the
/// search box.
fn conic_rational_point(c: &PlaneCurve) -> Option<[Rational; 3]> {
    let top = c.poly().homogeneous_part(2);
    // [0 : 1 : 0]
    if top.coeff(&[0, 2]).is_zero() {
        return Some([Rational::zero(), Rational::one(), Rational::zero()]);
    }
    // [1 : m : 0]
    let at_inf = top.eval_var(0, &Rational::one()).to_uni(1).expect("univariate");
    if let Some(m) = rational_roots(&at_inf).into_iter().next() {
        return Some([Rational::one(), m, Rational::zero()]);
    }
    let f = c.poly();
    for y in small_rationals(CONIC_SEARCH_BOUND) {
        let u = f.eval_var(0, &y).to_uni(1).expect("univariate");
        if let Some(z) = rational_root_of_low_degree(&u) {
            return Some([y, z, Rational::one()]);
        }
    }
    None
}

fn rational_root_of_low_degree(u: &UniPoly<Rational>) -> Option<Rational> {
    match u.degree() {
        Some(1) => Some(-u.coeff(0) / u.coeff(1)),
        Some(2) => {
            let (a, b, k) = (u.coeff(2), u.coeff(1), u.coeff(0));
            let disc = &b * &b - Rational::from_integer(BigInt::from(4)) * &a * &k;
            let s = exact_qsqrt(&disc)?;
            Some((-b + s) / (Rational::from_integer(BigInt::from(2)) * a))
        }
        _ => None,
    }
}

/// Pencil through a point of the conic over `Q(√D)`, found on a vertical
/// line `y = c`.
fn conic_quadratic(c: &PlaneCurve) -> Result<Parametrized> {
    let f = c.poly();
    for k in 0..50i64 {
        let y0 = Rational::from_integer(BigInt::from(if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 }));
        let u = f.eval_var(0, &y0).to_uni(1).expect("univariate");
        if u.degree() != Some(2) {
            continue;
        }
        let (a, b, k0) = (u.coeff(2), u.coeff(1), u.coeff(0));
        let disc = &b * &b - Rational::from_integer(BigInt::from(4)) * &a * &k0;
        if disc.is_zero() || exact_qsqrt(&disc).is_some() {
            continue;
        }
        let (s, d) = squarefree_decompose(&disc);
        let m = quadratic_modulus(&d);
        let root = AlgNum::from_poly(UniPoly::from_coeffs(vec![-b.clone(), s]), &m)
            / AlgNum::rational(Rational::from_integer(BigInt::from(2)) * &a);
        let pt = [AlgNum::rational(y0), root, AlgNum::one()];
        let h = c.projective().map_coeffs(|x| AlgNum::rational(x.clone()));
        let p = pencil(&h, &pt)?;
        let sign = if d.is_negative() { "imaginary " } else { "" };
        let point = format!("{} ({sign}quadratic field sqrt({d}))", fmt_point(&pt));
        return Ok(Parametrized::Quadratic(p, ParamSource::QuadraticPoint { point }));
    }
    Ok(Parametrized::Unsupported("no usable point on the conic".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::scalar::{q, qf};

    fn curve(s: &str) -> PlaneCurve {
        PlaneCurve::new(parse_poly(s, &["y", "z"]).unwrap()).unwrap()
    }

    fn golden() -> PlaneCurve {
        curve("(12y+49)z^2 - (12y^2+62y+56)z + y^2 + 8y + 16")
    }

    fn rat(num: &[i64], den: &[i64]) -> RatFunc<Rational> {
        RatFunc::new(UniPoly::from_ints(num), UniPoly::from_ints(den))
    }

    #[test]
    fn degree_symmetry() {
        assert!(degree_symmetry_check(&golden()));
        assert!(!degree_symmetry_check(&curve("z - y^2")));
        assert!(degree_symmetry_check(&curve("z*y - 1")));
    }

    #[test]
    fn genus_examples() {
        assert_eq!(genus(&curve("y^2 + z^2 - 1")).unwrap(), Genus::Known(0));
        assert_eq!(genus(&golden()).unwrap(), Genus::Known(0));
        assert_eq!(genus(&curve("z^2 - y^3 + y")).unwrap(), Genus::Known(1));
        // nodal cubic, node at the origin
        assert_eq!(genus(&curve("z^2 - y^2 - y^3")).unwrap(), Genus::Known(0));
        // cusp is not ordinary
        assert!(matches!(genus(&curve("z^2 - y^3")).unwrap(), Genus::Unsupported(_)));
        // smooth quartic
        assert_eq!(genus(&curve("y^4 + z^4 - 1")).unwrap(), Genus::Known(3));
    }

    #[test]
    fn golden_singularity_is_a_rational_node() {
        let sing = singular_points(&golden()).unwrap();
        assert_eq!(sing.len(), 1);
        assert_eq!(sing[0].multiplicity, 2);
        assert!(sing[0].ordinary);
        assert!(sing[0].point.rational().is_some());
    }

    #[test]
    fn golden_parametrization_verifies() {
        let c = golden();
        let p1 = rat(&[4, -12, 9], &[0, 12]);
        let p2 = rat(&[4, 36, 9], &[48, 12]);
        let p = Parametrization { p1: p1.clone(), p2: p2.clone() };
        assert!(verify_parametrization(&c, &p));
        assert!(!verify_parametrization(&c, &Parametrization { p1: p1.clone(), p2: p1.clone() }));
        let sq = RatFunc::from_poly(UniPoly::from_ints(&[0, 0, 1]));
        let doubled = Parametrization { p1: p1.compose(&sq), p2: p2.compose(&sq) };
        assert!(!verify_parametrization(&c, &doubled));
    }

    #[test]
    fn import_checks_identity_and_degrees() {
        let c = golden();
        let ok = import_parametrization(&c, "p1 = (9t^2-12t+4)/(12t)\np2 = (9t^2+36t+4)/(12(t+4))\n").unwrap();
        assert_eq!(ok.p1.den(), &UniPoly::from_ints(&[0, 1]));
        assert!(matches!(import_parametrization(&c, "p1 = t\np2 = t\n"), Err(Error::NotProper(_))));
    }

    #[test]
    fn line_parametrization() {
        let c = curve("y + z - 1");
        let Parametrized::Rational(p, src) = parametrize(&c).unwrap() else { panic!() };
        assert_eq!(src, ParamSource::Line);
        assert_eq!(p.p1, RatFunc::x());
        assert_eq!(p.p2, rat(&[1, -1], &[1]));
    }

    #[test]
    fn hyperbola_uses_point_at_infinity() {
        let c = curve("y*z - 1");
        let Parametrized::Rational(p, _) = parametrize(&c).unwrap() else { panic!() };
        assert!(verify_parametrization(&c, &p));
        assert_eq!(p.p1, RatFunc::x());
        assert_eq!(p.p2, rat(&[1], &[0, 1]));
    }

    #[test]
    fn conic_with_affine_point() {
        let c = curve("y^2 + z^2 - 25");
        let Parametrized::Rational(p, _) = parametrize(&c).unwrap() else { panic!() };
        assert!(verify_parametrization(&c, &p));
    }

    #[test]
    fn conic_without_rational_points_uses_quadratic_field() {
        let c = curve("y^2 + z^2 + 1");
        let Parametrized::Quadratic(p, _) = parametrize(&c).unwrap() else { panic!() };
        assert!(verify_parametrization(&c, &p));
    }

    #[test]
    fn golden_native_parametrization() {
        let c = golden();
        let Parametrized::Rational(p, _) = parametrize(&c).unwrap() else { panic!() };
        assert!(verify_parametrization(&c, &p));
        assert_eq!(p.p1.degree(), 2);
    }

    #[test]
    fn small_rationals_start_small() {
        let v: Vec<Rational> = small_rationals(2).collect();
        assert_eq!(v[0], q(0));
        assert!(v.contains(&qf(-1, 2)) && v.contains(&q(2)));
        assert_eq!(v.len(), v.iter().collect::<std::collections::BTreeSet<_>>().len());
    }

    #[test]
    fn genus_is_symmetric() {
        for s in ["z^2 - y^2 - y^3", "y^4 + z^4 - 1", "(12y+49)z^2 - (12y^2+62y+56)z + y^2 + 8y + 16"] {
            let c = curve(s);
            assert_eq!(genus(&c).unwrap(), genus(&c.swapped()).unwrap());
        }
    }
}
