use alloc::vec;

use num_bigint::BigInt;

use super::{Det, HiggsParams, Mode111};
use crate::error::Result;
use crate::exactalg::{geom_expand, AuxSeries, LaurentPoly};
use crate::symcurve::jac_poincare;

fn t(e: i64) -> LaurentPoly {
    LaurentPoly::t_pow(e)
}

/// Type `(1,1,1)` contribution as a two-variable coefficient extraction.
pub fn contribution_111(params: &HiggsParams, mode: Mode111) -> Result<LaurentPoly> {
    contribution_111_with_slack(params, mode, 0)
}

/// As [`contribution_111`] with the auxiliary truncation raised by `slack`.
pub fn contribution_111_with_slack(params: &HiggsParams, mode: Mode111, slack: i64) -> Result<LaurentPoly> {
    let g = i64::from(params.g);
    let n = params.n() as i64;
    if mode == Mode111::FixedVariant {
        if g == 0 {
            return Ok(LaurentPoly::zero());
        }
        let c = BigInt::from(2) * BigInt::from(6).pow((n - 1) as u32) * (BigInt::from(3).pow(2 * params.g) - 1);
        let p = LaurentPoly::from_i64s(0, &[1, 1]).pow(4 * params.g - 4);
        return Ok(p.scale(&c).shift(12 * g - 12 + 6 * n));
    }
    let d0 = params.delta0();
    let eu = 3 * n + 6 * g - 9 + d0;
    let ev = 3 * n + 6 * g - 6 - d0;
    if eu < 0 || ev < 0 {
        return Ok(LaurentPoly::zero());
    }
    let uv = ["u", "v"];
    let b = [eu + slack, ev + slack];
    let numer = AuxSeries::polynomial(
        &uv,
        [
            (vec![0, 0], LaurentPoly::one()),
            (vec![2, 1], LaurentPoly::monomial(2, 2)),
            (vec![1, 2], LaurentPoly::monomial(2, 2)),
            (vec![3, 3], t(4)),
        ],
    )
    .pow(params.n() as u32)?;
    let jac_u = AuxSeries::polynomial(&uv, [(vec![0, 0], LaurentPoly::one()), (vec![2, 1], t(1))]);
    let jac_v = AuxSeries::polynomial(&uv, [(vec![0, 0], LaurentPoly::one()), (vec![1, 2], t(1))]);
    let mut s = numer.mul(&jac_u.pow(2 * params.g)?)?.mul(&jac_v.pow(2 * params.g)?)?;
    for (m, c) in [
        ([2, 1], t(0)),
        ([1, 2], t(0)),
        ([2, 1], t(2)),
        ([1, 2], t(2)),
        ([0, 3], t(2)),
        ([3, 0], t(2)),
    ] {
        s = s.mul(&geom_expand(&uv, &m, &c, &b)?)?;
    }
    let mut out = s.coeff_at(&[eu, ev])?.shift(2 * (4 * g - 3 + n));
    if mode == Mode111::NonFixed {
        out = &out * &jac_poincare(params.g);
    }
    Ok(out)
}

/// Shared shape of the two-piece contributions: the coefficient of `x^e` in
///
/// `J (1+xt)^(2g) / ((1-t^2)(1-x)(1-xt^2))` times
/// `t^a1 (1+2t^2+2t^2x+t^4x)^n / ((1-t^-2 x)(1-t^2 x^2))
///  - t^a2 (1+2t^2+2t^4x+t^6x)^n / ((1-t^4 x)(1-t^8 x^2))`.
fn two_piece(params: &HiggsParams, det: Det, e: i64, a1: i64, a2: i64, slack: i64) -> Result<LaurentPoly> {
    if e < 0 {
        return Ok(LaurentPoly::zero());
    }
    let x = ["x"];
    let b = [e + slack];
    let n = params.n() as u32;
    let core = AuxSeries::polynomial(&x, [(vec![0], LaurentPoly::one()), (vec![1], t(1))])
        .pow(2 * params.g)?
        .mul(&geom_expand(&x, &[1], &LaurentPoly::one(), &b)?)?
        .mul(&geom_expand(&x, &[1], &t(2), &b)?)?;
    let first = AuxSeries::polynomial(
        &x,
        [(vec![0], LaurentPoly::from_i64s(0, &[1, 0, 2])), (vec![1], LaurentPoly::from_i64s(2, &[2, 0, 1]))],
    )
    .pow(n)?
    .mul(&geom_expand(&x, &[1], &t(-2), &b)?)?
    .mul(&geom_expand(&x, &[2], &t(2), &b)?)?;
    let second = AuxSeries::polynomial(
        &x,
        [(vec![0], LaurentPoly::from_i64s(0, &[1, 0, 2])), (vec![1], LaurentPoly::from_i64s(4, &[2, 0, 1]))],
    )
    .pow(n)?
    .mul(&geom_expand(&x, &[1], &t(4), &b)?)?
    .mul(&geom_expand(&x, &[2], &t(8), &b)?)?;
    let c1 = core.mul(&first)?.coeff_at(&[e])?;
    let c2 = core.mul(&second)?.coeff_at(&[e])?;
    let jac = jac_poincare(match det {
        Det::NonFixed => 2 * params.g,
        Det::Fixed => params.g,
    });
    let diff = c1.shift(a1) - c2.shift(a2);
    (&diff * &jac).div_exact(&LaurentPoly::from_i64s(0, &[1, 0, -1]))
}

/// Type `(1,2)` contribution.
pub fn contribution_12(params: &HiggsParams, det: Det) -> Result<LaurentPoly> {
    contribution_12_with_slack(params, det, 0)
}

pub fn contribution_12_with_slack(params: &HiggsParams, det: Det, slack: i64) -> Result<LaurentPoly> {
    let g = i64::from(params.g);
    let n = params.n() as i64;
    let d0 = params.delta0();
    two_piece(params, det, 2 * g + d0 + n - 5, 8 * g - 8 + 2 * n, 6 * g + 6 - 4 * d0, slack)
}

/// Type `(2,1)` contribution.
pub fn contribution_21(params: &HiggsParams, det: Det) -> Result<LaurentPoly> {
    contribution_21_with_slack(params, det, 0)
}

pub fn contribution_21_with_slack(params: &HiggsParams, det: Det, slack: i64) -> Result<LaurentPoly> {
    let g = i64::from(params.g);
    let n = params.n() as i64;
    let d0 = params.delta0();
    two_piece(params, det, 2 * g - 2 - d0 + n, 8 * g - 8 + 2 * n, 6 * g - 6 + 4 * d0, slack)
}
