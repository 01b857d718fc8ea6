use super::{Det, HiggsParams};
use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, RatFun};
use crate::symcurve::jac_poincare;

/// Per-point values of `sigma'_p(I)` over the intersection matrices of each
/// non-trivial Harder-Narasimhan type, in the order `(1,2)`, `(2,1)`,
/// `(1,1,1)`.
pub const SIGMA_PRIME_TABLES: [&[i64]; 3] = [&[0, 1, 2], &[0, 1, 2], &[0, 1, 1, 2, 2, 3]];

fn p(low: i64, c: &[i64]) -> LaurentPoly {
    LaurentPoly::from_i64s(low, c)
}

/// `(1 + t^k)^e`.
fn one_plus(k: i64, e: u32) -> LaurentPoly {
    (LaurentPoly::one() + LaurentPoly::t_pow(k)).pow(e)
}

/// Poincaré polynomial of the moduli of stable rank-3 parabolic bundles
/// with full flags and small generic weights. Fixed determinant divides out
/// one Jacobian.
pub fn bundles3_poincare(params: &HiggsParams, det: Det) -> Result<LaurentPoly> {
    let g = i64::from(params.g);
    let n = params.n() as u32;
    let gg = 2 * params.g;
    let bracket = &one_plus(3, gg) * &one_plus(5, gg)
        + (&one_plus(1, 2 * gg) * &p(0, &[1, 0, 1, 0, 1])).shift(6 * g - 2)
        - (&(&one_plus(1, gg) * &one_plus(3, gg)) * &one_plus(2, 2)).shift(4 * g - 2);
    let numer = &(&one_plus(1, gg) * &p(0, &[1, 0, 2, 0, 2, 0, 1]).pow(n - 1)) * &bracket;
    let denom = &p(0, &[1, 0, -1]).pow(3) * &p(0, &[1, 0, 0, 0, -1]);
    let full = numer.div_exact(&denom)?;
    match det {
        Det::NonFixed => Ok(full),
        Det::Fixed => full.div_exact(&jac_poincare(params.g)),
    }
}

fn ratfun(num: LaurentPoly, den: LaurentPoly) -> RatFun {
    RatFun::new(num, den).expect("nonzero denominator")
}

/// Oracle for [`bundles3_poincare`] (non-fixed): the Harder-Narasimhan
/// recursion summed type by type over intersection matrices, using the
/// tabulated `sigma'` values and the small-weight exponents.
pub fn bundles3_strata_assembly(params: &HiggsParams) -> Result<LaurentPoly> {
    let g = i64::from(params.g);
    let n = params.n();
    let gg = 2 * params.g;
    let delta = params.delta;
    let jac = one_plus(1, gg);
    let p1 = ratfun(jac.clone(), p(0, &[1, 0, -1]));
    let p2 = ratfun(
        &(&p(0, &[1, 0, 1]).pow(n as u32 - 1) * &jac) * &one_plus(3, gg),
        p(0, &[1, 0, -1]).pow(3),
    );
    let p3 = ratfun(
        &(&(&p(0, &[1, 0, 2, 0, 2, 0, 1]).pow(n as u32 - 1) * &jac) * &one_plus(3, gg)) * &one_plus(5, gg),
        &p(0, &[1, 0, -1]).pow(4) * &p(0, &[1, 0, 0, 0, -1]),
    );
    let table_sum = |table: &[i64]| -> LaurentPoly {
        let per_point: LaurentPoly = table.iter().map(|&s| LaurentPoly::t_pow(2 * s)).sum();
        per_point.pow(n as u32)
    };
    let floor3 = |x: i64| x.div_euclid(3);
    let e12 = 2 * (3 * floor3(delta) - delta + 2 * g + 1);
    let e21 = 2 * (3 * floor3(2 * delta) - 2 * delta + 2 * g + 1);
    let e111 = 2 * (3 * g - 1);
    let t6 = p(0, &[-1, 0, 0, 0, 0, 0, 1]);
    let t4 = p(0, &[-1, 0, 0, 0, 1]);
    let p1p2 = p1.mul(&p2);
    let c12 = ratfun(table_sum(SIGMA_PRIME_TABLES[0]).shift(e12), t6.clone()).mul(&p1p2);
    let c21 = ratfun(table_sum(SIGMA_PRIME_TABLES[1]).shift(e21), t6).mul(&p1p2);
    let c111 = ratfun(table_sum(SIGMA_PRIME_TABLES[2]).shift(e111), t4.pow(2)).mul(&p1.mul(&p1).mul(&p1));
    let sum = p3.add(&c12).add(&c21).add(&c111).mul_poly(&p(0, &[1, 0, -1]));
    sum.as_poly().cloned().ok_or(Error::InexactDivision)
}
