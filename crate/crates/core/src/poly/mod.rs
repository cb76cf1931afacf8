//! Polynomial and rational-function carriers.

mod multi;
mod ratfunc;
mod uni;

pub use multi::{fmt_multi, Monomial, MultiPoly};
pub use ratfunc::RatFunc;
pub use uni::UniPoly;
