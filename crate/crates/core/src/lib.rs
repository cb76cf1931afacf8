//! Rational solutions of autonomous first-order algebraic difference
//! equations `F(y(x), y(x+1)) = 0`.

pub mod alg;
pub mod curve;
pub mod degree_bound;
pub mod elimination;
pub mod error;
pub mod gcd;
pub mod groebner;
pub mod harness;
pub mod parse;
pub mod poly;
pub mod report;
pub mod resultant;
pub mod roots;
pub mod scalar;
pub mod separable;
pub mod solver;
pub mod zerodim;

pub use alg::AlgNum;
pub use error::{Error, Result};
pub use scalar::{Field, Rational};

pub type QPoly = poly::UniPoly<Rational>;
pub type QMultiPoly = poly::MultiPoly<Rational>;
pub type QRatFunc = poly::RatFunc<Rational>;
pub type AlgPoly = poly::UniPoly<AlgNum>;
pub type AlgMultiPoly = poly::MultiPoly<AlgNum>;
