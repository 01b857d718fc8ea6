use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use super::LaurentPoly;
use crate::error::{Error, Result};

/// Series in one or two auxiliary variables with [`LaurentPoly`] coefficients.
///
/// Each variable `i` carries a lower bound `floor[i]` on the exponents that
/// can occur in the true (untruncated) series, and an optional upper bound
/// `bounds[i]` up to which the stored terms are exact. A coefficient at `e` is
/// trustworthy when `e[i] <= bounds[i]` for every variable; above that the
/// stored data is incomplete and [`AuxSeries::coeff_at`] refuses to answer.
/// `None` means the series is an honest polynomial in that variable.
#[derive(Clone, PartialEq, Eq)]
pub struct AuxSeries {
    vars: Vec<String>,
    terms: BTreeMap<Vec<i64>, LaurentPoly>,
    floor: Vec<i64>,
    bounds: Vec<Option<i64>>,
}

impl AuxSeries {
    fn check_vars(vars: &[&str]) -> Vec<String> {
        assert!(
            !vars.is_empty() && vars.len() <= 2,
            "auxiliary series use one or two variables"
        );
        vars.iter().map(|v| v.to_string()).collect()
    }

    /// The zero series (exact).
    pub fn zero(vars: &[&str]) -> Self {
        let vars = Self::check_vars(vars);
        let k = vars.len();
        Self { vars, terms: BTreeMap::new(), floor: vec![0; k], bounds: vec![None; k] }
    }

    /// The constant series `1` (exact).
    pub fn one(vars: &[&str]) -> Self {
        Self::constant(vars, LaurentPoly::one())
    }

    pub fn constant(vars: &[&str], c: LaurentPoly) -> Self {
        let k = vars.len();
        Self::polynomial(vars, [(vec![0; k], c)])
    }

    /// An exact polynomial in the auxiliary variables. Negative exponents are
    /// allowed and lower the floor accordingly.
    pub fn polynomial<I>(vars: &[&str], terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i64>, LaurentPoly)>,
    {
        let mut s = Self::zero(vars);
        let k = s.vars.len();
        let mut floor: Option<Vec<i64>> = None;
        for (e, c) in terms {
            assert_eq!(e.len(), k, "exponent vector length must match the variable count");
            if c.is_zero() {
                continue;
            }
            let f = floor.get_or_insert_with(|| e.clone());
            for (fi, ei) in f.iter_mut().zip(&e) {
                *fi = (*fi).min(*ei);
            }
            let slot = s.terms.entry(e).or_default();
            *slot += c;
        }
        s.terms.retain(|_, c| !c.is_zero());
        s.floor = floor.unwrap_or_else(|| vec![0; k]);
        s
    }

    /// `c * m` for a single monomial.
    pub fn monomial(vars: &[&str], exps: &[i64], c: LaurentPoly) -> Self {
        Self::polynomial(vars, [(exps.to_vec(), c)])
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Per-variable exactness limit; `None` means no truncation.
    pub fn bounds(&self) -> &[Option<i64>] {
        &self.bounds
    }

    /// Per-variable lower bound on the support of the true series.
    pub fn floor(&self) -> &[i64] {
        &self.floor
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Stored nonzero terms, in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &LaurentPoly)> + '_ {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn within(&self, e: &[i64]) -> bool {
        self.bounds.iter().zip(e).all(|(b, x)| b.map_or(true, |b| *x <= b))
    }

    /// Lowers the truncation bounds to `bounds` (never raises them) and drops
    /// every stored term beyond the new limits.
    pub fn truncate(mut self, bounds: &[i64]) -> Self {
        assert_eq!(bounds.len(), self.vars.len());
        for (b, nb) in self.bounds.iter_mut().zip(bounds) {
            *b = Some(b.map_or(*nb, |b| b.min(*nb)));
        }
        let bounds = self.bounds.clone();
        self.terms
            .retain(|e, _| bounds.iter().zip(e).all(|(b, x)| b.map_or(true, |b| *x <= b)));
        self
    }

    fn same_vars(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch {
                left: self.vars.clone(),
                right: other.vars.clone(),
            });
        }
        Ok(())
    }

    fn combine(&self, other: &Self, negate: bool) -> Result<Self> {
        self.same_vars(other)?;
        let bounds: Vec<Option<i64>> = self
            .bounds
            .iter()
            .zip(&other.bounds)
            .map(|(a, b)| match (a, b) {
                (Some(a), Some(b)) => Some(*a.min(b)),
                (a, b) => a.or(*b),
            })
            .collect();
        let floor = self.floor.iter().zip(&other.floor).map(|(a, b)| *a.min(b)).collect();
        let mut out = Self { vars: self.vars.clone(), terms: BTreeMap::new(), floor, bounds };
        for (e, c) in &self.terms {
            if out.within(e) {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        for (e, c) in &other.terms {
            if out.within(e) {
                let slot = out.terms.entry(e.clone()).or_default();
                if negate {
                    *slot -= c;
                } else {
                    *slot += c;
                }
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, true)
    }

    /// Multiplies every coefficient by a polynomial in `t`.
    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = self.clone();
        out.terms = self
            .terms
            .iter()
            .map(|(e, p)| (e.clone(), p * c))
            .filter(|(_, p)| !p.is_zero())
            .collect();
        out
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        self.scale(&LaurentPoly::constant(c.clone()))
    }

    /// Truncated product. Exactness of the result in variable `i` extends to
    /// `min(ba + fb, bb + fa)` where `f`/`b` are the floors and bounds of the
    /// two factors.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_vars(other)?;
        let k = self.vars.len();
        let mut floor = Vec::with_capacity(k);
        let mut bounds = Vec::with_capacity(k);
        for i in 0..k {
            let (fa, fb) = (self.floor[i], other.floor[i]);
            floor.push(fa + fb);
            let ba = self.bounds[i].map(|b| b + fb);
            let bb = other.bounds[i].map(|b| b + fa);
            bounds.push(match (ba, bb) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            });
        }
        let mut out = Self { vars: self.vars.clone(), terms: BTreeMap::new(), floor, bounds };
        let mut e = vec![0i64; k];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                for i in 0..k {
                    e[i] = ea[i] + eb[i];
                }
                if !out.within(&e) {
                    continue;
                }
                let prod = ca * cb;
                match out.terms.get_mut(&e) {
                    Some(slot) => *slot += prod,
                    None => {
                        out.terms.insert(e.clone(), prod);
                    }
                }
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let vars: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        let mut result = Self::one(&vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Coefficient of the monomial with exponent vector `e`.
    ///
    /// Below the floor the answer is exactly zero. Beyond the truncation
    /// bound it is unknown and an [`Error::OutOfBounds`] is returned.
    pub fn coeff_at(&self, e: &[i64]) -> Result<LaurentPoly> {
        assert_eq!(e.len(), self.vars.len());
        if e.iter().zip(&self.floor).any(|(x, f)| x < f) {
            return Ok(LaurentPoly::zero());
        }
        for (i, (x, b)) in e.iter().zip(&self.bounds).enumerate() {
            if let Some(b) = b {
                if x > b {
                    return Err(Error::OutOfBounds {
                        var: self.vars[i].clone(),
                        exponent: *x,
                        bound: *b,
                    });
                }
            }
        }
        Ok(self.terms.get(e).cloned().unwrap_or_default())
    }
}

/// Expands `1 / (1 - c*m)` as `sum_k c^k m^k`, keeping every term whose
/// exponent stays within `bounds`.
pub fn geom_expand(
    vars: &[&str],
    monomial: &[i64],
    coeff: &LaurentPoly,
    bounds: &[i64],
) -> Result<AuxSeries> {
    assert_eq!(monomial.len(), vars.len());
    assert_eq!(bounds.len(), vars.len());
    if monomial.iter().any(|&m| m < 0) {
        return Err(Error::NegativeMonomial(monomial.to_vec()));
    }
    if monomial.iter().all(|&m| m == 0) {
        return Err(Error::AuxDegreeZero);
    }
    let mut s = AuxSeries::zero(vars);
    // Exponents in a variable the monomial does not involve never grow, so
    // the expansion is exact there.
    s.bounds = monomial
        .iter()
        .zip(bounds)
        .map(|(&m, &b)| (m > 0).then_some(b))
        .collect();
    let mut power = LaurentPoly::one();
    let mut k = 0i64;
    loop {
        let e: Vec<i64> = monomial.iter().map(|m| m * k).collect();
        if !s.within(&e) {
            break;
        }
        s.terms.insert(e, power.clone());
        power = &power * coeff;
        if power.is_zero() {
            break;
        }
        k += 1;
    }
    s.terms.retain(|_, c| !c.is_zero());
    Ok(s)
}

/// Truncated product of two series over the same variables.
pub fn series_mul(a: &AuxSeries, b: &AuxSeries) -> Result<AuxSeries> {
    a.mul(b)
}

/// Coefficient of the auxiliary monomial `e` in `s`.
pub fn coeff_at(s: &AuxSeries, e: &[i64]) -> Result<LaurentPoly> {
    s.coeff_at(e)
}

impl fmt::Debug for AuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AuxSeries")
            .field("vars", &self.vars)
            .field("floor", &self.floor)
            .field("bounds", &self.bounds)
            .field("terms", &self.terms)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(e: i64) -> LaurentPoly {
        LaurentPoly::t_pow(e)
    }

    #[test]
    fn geometric_examples() {
        let s = geom_expand(&["x"], &[1], &t(2), &[2]).unwrap();
        assert_eq!(s.coeff_at(&[0]).unwrap(), t(0));
        assert_eq!(s.coeff_at(&[1]).unwrap(), t(2));
        assert_eq!(s.coeff_at(&[2]).unwrap(), t(4));
        assert!(s.coeff_at(&[3]).is_err());
        let s = geom_expand(&["x"], &[1], &t(-2), &[2]).unwrap();
        assert_eq!(s.coeff_at(&[2]).unwrap(), t(-4));
    }

    #[test]
    fn rejects_degree_zero() {
        assert_eq!(geom_expand(&["x"], &[0], &t(1), &[3]), Err(Error::AuxDegreeZero));
        assert!(matches!(
            geom_expand(&["u", "v"], &[1, -1], &t(1), &[3, 3]),
            Err(Error::NegativeMonomial(_))
        ));
    }

    #[test]
    fn product_tracks_bounds() {
        let one_plus = AuxSeries::polynomial(&["x"], [(vec![0], t(0)), (vec![1], t(0))]);
        let geo = geom_expand(&["x"], &[1], &LaurentPoly::constant(-1), &[2]).unwrap();
        let p = one_plus.mul(&geo).unwrap();
        assert_eq!(p.bounds(), &[Some(2)]);
        assert_eq!(p.coeff_at(&[0]).unwrap(), t(0));
        assert!(p.coeff_at(&[1]).unwrap().is_zero());
        assert!(p.coeff_at(&[2]).unwrap().is_zero());
    }

    #[test]
    fn variable_mismatch() {
        let a = AuxSeries::one(&["x"]);
        let b = AuxSeries::one(&["y"]);
        assert!(matches!(a.mul(&b), Err(Error::VariableMismatch { .. })));
    }
}
