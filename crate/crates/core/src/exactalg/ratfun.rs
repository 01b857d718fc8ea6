use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::LaurentPoly;
use crate::error::{Error, Result};

fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g == BigInt::from(1) {
            break;
        }
    }
    g
}

fn div_scalar(p: &[BigInt], c: &BigInt) -> Vec<BigInt> {
    p.iter().map(|x| x / c).collect()
}

fn trim_high(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Pseudo-remainder of `a` by `b` for dense polynomials (index = degree).
fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let lr = r.last().cloned().expect("nonempty");
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &lr * bc;
        }
        r.pop();
        trim_high(&mut r);
    }
    r
}

/// Greatest common divisor in `Z[t]` of two dense polynomials, normalized
/// to a positive leading coefficient. Uses the primitive remainder sequence.
fn dense_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let ca = content(a);
    let cb = content(b);
    if ca.is_zero() {
        return normalize_sign(b.to_vec());
    }
    if cb.is_zero() {
        return normalize_sign(a.to_vec());
    }
    let c = ca.gcd(&cb);
    let mut a = div_scalar(a, &ca);
    let mut b = div_scalar(b, &cb);
    if a.len() < b.len() {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            a = b;
            break;
        }
        let r = prem(&a, &b);
        a = b;
        b = if r.is_empty() {
            r
        } else {
            let cr = content(&r);
            div_scalar(&r, &cr)
        };
    }
    let ca = content(&a);
    let a: Vec<BigInt> = a.iter().map(|x| x / &ca * &c).collect();
    normalize_sign(a)
}

fn normalize_sign(mut p: Vec<BigInt>) -> Vec<BigInt> {
    if p.last().is_some_and(Signed::is_negative) {
        for c in &mut p {
            *c = -core::mem::take(c);
        }
    }
    p
}

/// Splits a nonzero Laurent polynomial as `t^k * P(t)` with `P(0) != 0`.
fn split_monomial(p: &LaurentPoly) -> (i64, Vec<BigInt>) {
    let (low, coeffs) = p.raw();
    (low, coeffs.to_vec())
}

/// Gcd of two Laurent polynomials, up to units `±t^k`: the returned
/// polynomial has nonzero constant term and positive leading coefficient.
pub fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let (_, da) = split_monomial(a);
    let (_, db) = split_monomial(b);
    LaurentPoly::from_coeffs(0, dense_gcd(&da, &db))
}

/// Element of `Q(t)` stored as a reduced quotient of integer Laurent
/// polynomials. The denominator has nonzero constant term, no common factor
/// with the numerator, and a positive leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFun {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (a, na) = split_monomial(&num);
        let (b, nb) = split_monomial(&den);
        let g = dense_gcd(&na, &nb);
        let gp = LaurentPoly::from_coeffs(0, g);
        let mut n = LaurentPoly::from_coeffs(0, na).div_exact(&gp)?;
        let mut d = LaurentPoly::from_coeffs(0, nb).div_exact(&gp)?;
        if d.max_exp().map(|e| d.coeff(e).is_negative()).unwrap_or(false) {
            n = -n;
            d = -d;
        }
        Ok(Self { num: n.shift(a - b), den: d })
    }

    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value as a Laurent polynomial, if the denominator is `1`.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(&self.num + &other.num);
        }
        if self.den == other.den {
            return Self::new(&self.num + &other.num, self.den.clone())
                .expect("nonzero denominator");
        }
        Self::new(
            &self.num * &other.den + &other.num * &self.den,
            &self.den * &other.den,
        )
        .expect("nonzero denominator")
    }

    pub fn neg(&self) -> Self {
        Self { num: -&self.num, den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(&self.num * &other.num);
        }
        Self::new(&self.num * &other.num, &self.den * &other.den).expect("nonzero denominator")
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        self.mul(&Self::from_poly(p.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64s(low, c)
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = p(0, &[1, 1]) * p(0, &[1, 0, 1]);
        let b = p(0, &[1, 1]) * p(0, &[-1, 1]);
        assert_eq!(poly_gcd(&a, &b), p(0, &[1, 1]));
        let a = p(0, &[2, 2]);
        let b = p(0, &[4, 4]);
        assert_eq!(poly_gcd(&a, &b), p(0, &[2, 2]));
    }

    #[test]
    fn reduces_to_lowest_terms() {
        let r = RatFun::new(p(0, &[-1, 0, 1]), p(2, &[-1, 1])).unwrap();
        assert_eq!(r.num(), &p(-2, &[1, 1]));
        assert!(r.den().is_one());
        let h = RatFun::new(p(0, &[1]), p(0, &[-2])).unwrap();
        assert_eq!(h.num(), &p(0, &[-1]));
        assert_eq!(h.den(), &p(0, &[2]));
    }

    #[test]
    fn field_operations() {
        let a = RatFun::new(p(0, &[1]), p(0, &[1, -1])).unwrap();
        let b = RatFun::new(p(0, &[1]), p(0, &[1, 1])).unwrap();
        let s = a.add(&b);
        assert_eq!(s, RatFun::new(p(0, &[2]), p(0, &[1, 0, -1])).unwrap());
        assert_eq!(s.div(&s).unwrap(), RatFun::one());
        assert!(a.sub(&a).is_zero());
    }
}
