use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{poly_gcd, LaurentPoly, RatFun};
use crate::error::{Error, Result};

/// Polynomial in `q` whose coefficients are integer Laurent polynomials in `t`.
/// `coeffs[i]` multiplies `q^i`; the top coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    coeffs: Vec<LaurentPoly>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_t(LaurentPoly::one())
    }

    /// A polynomial constant in `q`.
    pub fn from_t(c: LaurentPoly) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * q^i * t^j`.
    pub fn monomial(c: impl Into<BigInt>, qi: usize, tj: i64) -> Self {
        let mut v = vec![LaurentPoly::zero(); qi + 1];
        v[qi] = LaurentPoly::monomial(c, tj);
        Self::from_coeffs(v)
    }

    /// Builds a polynomial from `(c, q exponent, t exponent)` triples.
    pub fn from_terms(terms: &[(i64, usize, i64)]) -> Self {
        terms
            .iter()
            .fold(Self::zero(), |acc, &(c, qi, tj)| acc.add(&Self::monomial(c, qi, tj)))
    }

    pub fn from_coeffs(mut coeffs: Vec<LaurentPoly>) -> Self {
        while coeffs.last().is_some_and(LaurentPoly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `q`; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = self.coeffs.clone();
        v.resize(n, LaurentPoly::zero());
        for (i, c) in other.coeffs.iter().enumerate() {
            v[i] += c;
        }
        Self::from_coeffs(v)
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut v = vec![LaurentPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(v)
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Multiplies by `q^k`, `k >= 0`.
    pub fn shift_q(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![LaurentPoly::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self { coeffs: v }
    }

    /// Coefficient of `s^j` after substituting `q = 1 + s`.
    pub fn taylor_at_one(&self, j: usize) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        let mut binom = BigInt::one();
        // binom tracks C(i, j) as i runs upward from j.
        for i in j..self.coeffs.len() {
            if i > j {
                binom = binom * BigInt::from(i) / BigInt::from(i - j);
            }
            if !self.coeffs[i].is_zero() {
                acc += self.coeffs[i].scale(&binom);
            }
        }
        acc
    }

    /// Value at `q = 1`.
    pub fn at_q_one(&self) -> LaurentPoly {
        self.taylor_at_one(0)
    }

    fn lowest_q(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    fn drop_low_q(&self, k: usize) -> Self {
        Self::from_coeffs(self.coeffs[k..].to_vec())
    }

    fn min_t(&self) -> Option<i64> {
        self.coeffs.iter().filter_map(LaurentPoly::min_exp).min()
    }

    fn shift_t(&self, k: i64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c.shift(k)).collect() }
    }

    /// Gcd of all `t`-coefficients, up to units.
    fn t_content(&self) -> LaurentPoly {
        let mut g = LaurentPoly::zero();
        for c in self.coeffs.iter().filter(|c| !c.is_zero()) {
            g = if g.is_zero() { poly_gcd(c, c) } else { poly_gcd(&g, c) };
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn div_t(&self, c: &LaurentPoly) -> Result<Self> {
        Ok(Self {
            coeffs: self.coeffs.iter().map(|x| x.div_exact(c)).collect::<Result<_>>()?,
        })
    }

    fn primitive(&self) -> Self {
        let c = self.t_content();
        if c.is_one() || c.is_zero() {
            return self.clone();
        }
        self.div_t(&c).expect("content divides every coefficient")
    }

    /// Pseudo-remainder with respect to `q`.
    fn prem(&self, b: &Self) -> Self {
        let db = b.coeffs.len() - 1;
        let lb = &b.coeffs[db];
        let mut r = self.coeffs.clone();
        while r.len() > db && !r.is_empty() {
            let lr = r.last().cloned().expect("nonempty");
            let shift = r.len() - 1 - db;
            for c in r.iter_mut() {
                *c *= lb;
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[shift + j] -= &lr * bc;
            }
            r.pop();
            while r.last().is_some_and(LaurentPoly::is_zero) {
                r.pop();
            }
        }
        Self { coeffs: r }
    }

    /// Exact division in `Z[t^±][q]`.
    fn div_exact(&self, b: &Self) -> Result<Self> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let db = b.coeffs.len() - 1;
        let lb = &b.coeffs[db];
        let mut r = self.coeffs.clone();
        if r.len() < b.coeffs.len() {
            return if self.is_zero() { Ok(Self::zero()) } else { Err(Error::InexactDivision) };
        }
        let mut quot = vec![LaurentPoly::zero(); r.len() - db];
        for k in (0..quot.len()).rev() {
            let top = &r[k + db];
            if top.is_zero() {
                continue;
            }
            let qk = top.div_exact(lb)?;
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[k + j] -= &qk * bc;
            }
            quot[k] = qk;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(Self::from_coeffs(quot))
    }

    /// Reduces every coefficient at `t = t0` modulo `p`, after clearing
    /// negative powers of `t0` by the factor `t0^k` (a unit mod `p`).
    fn specialize_mod(&self, t0: u64, p: u64) -> Vec<u64> {
        let lo = self.min_t().unwrap_or(0).min(0);
        let pb = BigInt::from(p);
        self.coeffs
            .iter()
            .map(|c| {
                let mut acc = BigInt::zero();
                for (e, v) in c.terms() {
                    let w = BigInt::from(t0).modpow(&BigInt::from(e - lo), &pb);
                    acc += v * w;
                }
                acc.mod_floor(&pb).to_u64().expect("reduced mod p")
            })
            .collect()
    }
}

const MOD_P: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MOD_P as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

/// Degree of the gcd of two polynomials over `F_p`.
fn gcd_degree_mod(a: &[u64], b: &[u64]) -> usize {
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let inv = powmod(*b.last().expect("nonempty"), MOD_P - 2);
        while a.len() >= b.len() {
            let f = mulmod(*a.last().expect("nonempty"), inv);
            let shift = a.len() - b.len();
            for (j, bc) in b.iter().enumerate() {
                a[shift + j] = (a[shift + j] + MOD_P - mulmod(f, *bc)) % MOD_P;
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        core::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Gcd in `Z[t^±][q]` via the primitive remainder sequence, returned
/// primitive in `q`.
fn q_gcd(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let (mut a, mut b) = (a.primitive(), b.primitive());
    if a.coeffs.len() < b.coeffs.len() {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        if b.coeffs.len() == 1 {
            return BiPoly::one();
        }
        let r = a.prem(&b);
        a = b;
        b = r.primitive();
    }
    a
}

/// Quotient of two [`BiPoly`] values: an element of `Q(t)(q)`.
///
/// Rational-function coefficients are represented by clearing their
/// denominators into `den`, so both parts are integer polynomials in `q`
/// and `t`. After construction `num` and `den` have no common factor of
/// positive `q`-degree, share no `q`-power, and have coprime `t`-content.
#[derive(Clone)]
pub struct QExpr {
    num: BiPoly,
    den: BiPoly,
}

impl QExpr {
    pub fn new(num: BiPoly, den: BiPoly) -> Result<Self> {
        Self::with_q_power(num, den, 0)
    }

    /// `q^k * num / den`; a negative `k` moves the power into the denominator.
    pub fn with_q_power(num: BiPoly, den: BiPoly, k: i64) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (num, den) = if k >= 0 {
            (num.shift_q(k as usize), den)
        } else {
            (num, den.shift_q(k.unsigned_abs() as usize))
        };
        let mut e = Self { num, den };
        e.normalize()?;
        Ok(e)
    }

    pub fn from_poly(num: BiPoly) -> Self {
        Self { num, den: BiPoly::one() }
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normalize(&mut self) -> Result<()> {
        if self.num.is_zero() {
            self.den = BiPoly::one();
            return Ok(());
        }
        let k = self.num.lowest_q().min(self.den.lowest_q());
        if k > 0 {
            self.num = self.num.drop_low_q(k);
            self.den = self.den.drop_low_q(k);
        }
        let shift = -self.den.min_t().unwrap_or(0);
        self.num = self.num.shift_t(shift);
        self.den = self.den.shift_t(shift);
        let c = poly_gcd(&self.num.t_content(), &self.den.t_content());
        if !c.is_one() {
            self.num = self.num.div_t(&c)?;
            self.den = self.den.div_t(&c)?;
        }
        if self.den.degree() == Some(0) || self.num.degree() == Some(0) {
            return Ok(());
        }
        // A common factor of positive q-degree survives specialization at any
        // t0 where both leading coefficients stay nonzero, so a trivial gcd
        // mod p certifies coprimality without running the bivariate PRS.
        for t0 in 2..12u64 {
            let a = self.num.specialize_mod(t0, MOD_P);
            let b = self.den.specialize_mod(t0, MOD_P);
            if a.last() == Some(&0) || b.last() == Some(&0) {
                continue;
            }
            if gcd_degree_mod(&a, &b) == 0 {
                return Ok(());
            }
            break;
        }
        let g = q_gcd(&self.num, &self.den);
        if g.degree().unwrap_or(0) > 0 {
            self.num = self.num.div_exact(&g)?;
            self.den = self.den.div_exact(&g)?;
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Self::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> Self {
        Self { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    /// Order of vanishing of the denominator at `q = 1`.
    pub fn pole_order_at_one(&self) -> usize {
        (0..=self.den.degree().unwrap_or(0))
            .find(|&j| !self.den.taylor_at_one(j).is_zero())
            .unwrap_or(0)
    }
}

impl PartialEq for QExpr {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for QExpr {}

/// Sum of `terms` evaluated at `q = 1`.
///
/// Each term is expanded in `s = q - 1` up to `s^0` with coefficients in
/// `Q(t)`. Negative powers of `s` must cancel across the sum, and the
/// constant coefficient must be a polynomial in `t` with integer
/// coefficients and no negative exponents.
pub fn q_limit(terms: &[QExpr]) -> Result<LaurentPoly> {
    let mut orders: BTreeMap<i64, RatFun> = BTreeMap::new();
    for term in terms {
        if term.is_zero() {
            continue;
        }
        let v = term.pole_order_at_one();
        let d: Vec<LaurentPoly> = (v..=2 * v).map(|j| term.den.taylor_at_one(j)).collect();
        let lead = RatFun::from_poly(d[0].clone());
        let mut c: Vec<RatFun> = Vec::with_capacity(v + 1);
        for k in 0..=v {
            let mut acc = RatFun::from_poly(term.num.taylor_at_one(k));
            for i in 1..=k {
                if !d[i].is_zero() {
                    acc = acc.sub(&c[k - i].mul_poly(&d[i]));
                }
            }
            c.push(acc.div(&lead)?);
        }
        for (k, ck) in c.into_iter().enumerate() {
            let order = k as i64 - v as i64;
            let slot = orders.entry(order).or_insert_with(RatFun::zero);
            *slot = slot.add(&ck);
        }
    }
    for (&order, value) in &orders {
        if order < 0 && !value.is_zero() {
            return Err(Error::PoleNotCancelled { order });
        }
    }
    let value = orders.remove(&0).unwrap_or_else(RatFun::zero);
    let poly = value.as_poly().ok_or(Error::NotPolynomial)?;
    if poly.min_exp().is_some_and(|e| e < 0) {
        return Err(Error::NotPolynomial);
    }
    Ok(poly.clone())
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("BiPoly[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                write!(f, " q^{i}:({c})")?;
            }
        }
        f.write_str(" ]")
    }
}

impl fmt::Debug for QExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QExpr({:?} / {:?})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_minus_one() -> BiPoly {
        BiPoly::from_terms(&[(1, 1, 0), (-1, 0, 0)])
    }

    #[test]
    fn simple_cancellations() {
        let a = QExpr::new(BiPoly::one(), q_minus_one()).unwrap();
        assert_eq!(q_limit(&[a.clone(), a.neg()]).unwrap(), LaurentPoly::zero());
        let b = QExpr::new(BiPoly::monomial(1, 1, 0), q_minus_one()).unwrap();
        assert_eq!(q_limit(&[b, a.neg()]).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn uncancelled_pole() {
        let a = QExpr::new(BiPoly::one(), q_minus_one()).unwrap();
        assert_eq!(q_limit(&[a]), Err(Error::PoleNotCancelled { order: -1 }));
    }

    #[test]
    fn normalization_cancels_common_factor() {
        // (q^2 - t^2) / (q - t) reduces to q + t.
        let num = BiPoly::from_terms(&[(1, 2, 0), (-1, 0, 2)]);
        let den = BiPoly::from_terms(&[(1, 1, 0), (-1, 0, 1)]);
        let e = QExpr::new(num, den).unwrap();
        assert_eq!(e.den().degree(), Some(0));
        assert_eq!(e.num(), &BiPoly::from_terms(&[(1, 1, 0), (1, 0, 1)]));
    }

    #[test]
    fn non_polynomial_limit() {
        // 1 / (1 - t) has no pole in q but is not a polynomial in t.
        let den = BiPoly::from_t(LaurentPoly::from_i64s(0, &[1, -1]));
        let e = QExpr::new(BiPoly::one(), den).unwrap();
        assert_eq!(q_limit(&[e]), Err(Error::NotPolynomial));
    }
}
