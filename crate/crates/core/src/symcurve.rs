//! Poincaré polynomials of Jacobians, projective spaces and symmetric
//! products of a genus-`g` curve.

use alloc::vec;

use crate::exactalg::{geom_expand, AuxSeries, LaurentPoly};

/// `(1 + t)^(2g)`.
pub fn jac_poincare(g: u32) -> LaurentPoly {
    LaurentPoly::from_i64s(0, &[1, 1]).pow(2 * g)
}

/// Poincaré polynomial of `P^(w-1)`: `1 + t^2 + ... + t^(2w-2)`, and `0`
/// when `w <= 0`.
pub fn proj_poincare(w: i64) -> LaurentPoly {
    LaurentPoly::from_terms((0..w.max(0)).map(|k| (2 * k, 1)))
}

/// MacDonald's formula: the coefficient of `x^N` in
/// `(1 + x t)^(2g) / ((1 - x)(1 - x t^2))`. Zero for `N < 0`.
pub fn sym_poincare(g: u32, n: i64) -> LaurentPoly {
    if n < 0 {
        return LaurentPoly::zero();
    }
    let x = ["x"];
    let numer = AuxSeries::polynomial(
        &x,
        [(vec![0], LaurentPoly::one()), (vec![1], LaurentPoly::t_pow(1))],
    )
    .pow(2 * g)
    .expect("same variables");
    let a = geom_expand(&x, &[1], &LaurentPoly::one(), &[n]).expect("degree one");
    let b = geom_expand(&x, &[1], &LaurentPoly::t_pow(2), &[n]).expect("degree one");
    numer
        .mul(&a)
        .and_then(|s| s.mul(&b))
        .and_then(|s| s.coeff_at(&[n]))
        .expect("bounds are chosen to cover the extracted exponent")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(jac_poincare(0), LaurentPoly::one());
        assert_eq!(jac_poincare(2), LaurentPoly::from_i64s(0, &[1, 4, 6, 4, 1]));
        assert_eq!(proj_poincare(0), LaurentPoly::zero());
        assert_eq!(proj_poincare(-3), LaurentPoly::zero());
        assert_eq!(proj_poincare(4), LaurentPoly::from_i64s(0, &[1, 0, 1, 0, 1, 0, 1]));
        assert_eq!(sym_poincare(2, 0), LaurentPoly::one());
        assert_eq!(sym_poincare(1, 1), LaurentPoly::from_i64s(0, &[1, 2, 1]));
        assert_eq!(sym_poincare(2, -1), LaurentPoly::zero());
    }
}
