//! Exact arithmetic: Laurent polynomials in `t`, truncated auxiliary series,
//! rational functions of `t`, and the `q -> 1` limit of rational expressions.

mod aux;
mod laurent;
mod qexpr;
mod ratfun;

pub use aux::{coeff_at, geom_expand, series_mul, AuxSeries};
pub use laurent::LaurentPoly;
pub use qexpr::{q_limit, BiPoly, QExpr};
pub use ratfun::{poly_gcd, RatFun};
