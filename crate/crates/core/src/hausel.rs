//! Hausel's conjectural mixed Hodge polynomial of the rank-3 parabolic
//! character variety, and its specialization at `q = 1`.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactalg::{q_limit, BiPoly, LaurentPoly, QExpr};

fn bp(terms: &[(i64, usize, i64)]) -> BiPoly {
    BiPoly::from_terms(terms)
}

/// `q^a t^b + 1`.
fn plus_one(a: usize, b: i64) -> BiPoly {
    bp(&[(1, a, b), (1, 0, 0)])
}

/// `q^a t^b - 1`.
fn minus_one(a: usize, b: i64) -> BiPoly {
    bp(&[(1, a, b), (-1, 0, 0)])
}

fn product(factors: &[BiPoly]) -> BiPoly {
    factors.iter().fold(BiPoly::one(), |acc, f| acc.mul(f))
}

/// The six summands of `H_3^n(q, t)` for genus `g` and `n` marked points.
pub fn hausel_terms(g: u32, n: usize) -> Result<Vec<QExpr>> {
    let gi = i64::from(g);
    let n32 = n as u32;
    let gg = 2 * g;
    let t = |e: i64| LaurentPoly::t_pow(e);

    let num1 = product(&[
        plus_one(1, 2).mul(&bp(&[(1, 2, 4), (1, 1, 2), (1, 0, 0)])).pow(n32),
        plus_one(3, 5).pow(gg),
        plus_one(2, 3).pow(gg),
    ]);
    let den1 = product(&[minus_one(3, 6), minus_one(3, 4), minus_one(2, 4), minus_one(2, 2)]);

    let num2 = product(&[
        bp(&[(1, 3, 6)]).mul(&plus_one(1, 0)).mul(&bp(&[(1, 2, 0), (1, 1, 0), (1, 0, 0)])).pow(n32),
        plus_one(3, 1).pow(gg),
        plus_one(2, 1).pow(gg),
    ])
    .scale(&t(12 * gi - 12));
    let den2 = product(&[minus_one(3, 2), minus_one(3, 0), minus_one(2, 2), minus_one(2, 0)]);

    let num3 = product(&[
        bp(&[(1, 2, 4)]).mul(&bp(&[(2, 2, 2), (1, 1, 2), (1, 1, 0), (2, 0, 0)])).pow(n32),
        plus_one(3, 3).pow(gg),
        plus_one(1, 1).pow(gg),
    ])
    .scale(&t(8 * gi - 8));
    let den3 = product(&[minus_one(3, 4), minus_one(3, 2), minus_one(1, 2), minus_one(1, 0)]);

    let num4 = product(&[bp(&[(6, 3, 6)]).pow(n32), plus_one(1, 1).pow(2 * gg)]).scale(&t(12 * gi - 12));
    let den4 = product(&[minus_one(1, 2).pow(2), minus_one(1, 0).pow(2)]).scale(&LaurentPoly::constant(3));

    let num5 = product(&[
        bp(&[(3, 2, 4)]).mul(&plus_one(1, 2)).pow(n32),
        plus_one(2, 3).pow(gg),
        plus_one(1, 1).pow(gg),
    ])
    .scale(&t(8 * gi - 8))
    .neg();
    let den5 = product(&[minus_one(2, 4), minus_one(2, 2), minus_one(1, 2), minus_one(1, 0)]);

    let num6 = product(&[
        bp(&[(3, 3, 6)]).mul(&plus_one(1, 0)).pow(n32),
        plus_one(2, 1).pow(gg),
        plus_one(1, 1).pow(gg),
    ])
    .scale(&t(12 * gi - 12))
    .neg();
    let den6 = product(&[minus_one(2, 2), minus_one(2, 0), minus_one(1, 2), minus_one(1, 0)]);

    Ok(alloc::vec![
        QExpr::new(num1, den1)?,
        QExpr::with_q_power(num2, den2, 6 * gi - 6)?,
        QExpr::with_q_power(num3, den3, 4 * gi - 4)?,
        QExpr::with_q_power(num4, den4, 6 * gi - 6)?,
        QExpr::with_q_power(num5, den5, 4 * gi - 4)?,
        QExpr::with_q_power(num6, den6, 6 * gi - 6)?,
    ])
}

/// `H_3^n(1, t)`: the regular value of the sum at `q = 1`. Fails unless the
/// result has nonnegative integer coefficients.
pub fn hausel_at_q1(g: u32, n: usize) -> Result<LaurentPoly> {
    let p = q_limit(&hausel_terms(g, n)?)?;
    if !p.all_nonnegative() {
        return Err(Error::InvalidParams(format!("q = 1 specialization has a negative coefficient: {p}")));
    }
    Ok(p)
}
