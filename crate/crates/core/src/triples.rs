//! Parabolic triples `(E1, E2, phi)` with `rk E1 = 2` and `E2 = L` a line
//! bundle: the range of the stability parameter, its critical values, the
//! flip data at each wall, and chamber-wise Poincaré polynomials.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{geom_expand, AuxSeries, LaurentPoly};
use crate::symcurve::{jac_poincare, proj_poincare, sym_poincare};
use crate::weights::{format_rational, WeightSystem};

/// Discrete and continuous data of a triple moduli problem.
///
/// Each point carries weights `[alpha, beta1, beta2]`: `alpha` on the line
/// bundle and `beta1 < beta2` on the rank-2 bundle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleSpec {
    pub g: u32,
    pub weights: WeightSystem,
    pub d1: i64,
    pub d2: i64,
    pub sigma: BigRational,
}

/// One critical value of the stability parameter together with its flip
/// data. `epsilon[p]` is 1 or 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallRecord {
    pub d_m: i64,
    pub epsilon: Vec<u8>,
    pub sigma_c: BigRational,
    pub s1: i64,
    pub s2: i64,
    pub s3: i64,
    pub w_plus: i64,
    pub w_minus: i64,
    pub n: i64,
    /// Change in the Poincaré polynomial across the wall.
    pub delta: LaurentPoly,
    /// Same with fixed determinant: one Jacobian factor instead of two.
    pub delta_fixed: LaurentPoly,
}

impl WallRecord {
    pub fn delta_for(&self, fixed_det: bool) -> &LaurentPoly {
        if fixed_det {
            &self.delta_fixed
        } else {
            &self.delta
        }
    }
}

fn rat(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

fn floor_i64(r: &BigRational) -> i64 {
    i64::try_from(r.floor().to_integer()).expect("degree bounds fit in i64")
}

impl TripleSpec {
    pub fn new(g: u32, weights: WeightSystem, d1: i64, d2: i64, sigma: BigRational) -> Result<Self> {
        if weights.arity() != 3 {
            return Err(Error::InvalidWeights(format!(
                "triples need [alpha, beta1, beta2] at each point, got {} weights",
                weights.arity()
            )));
        }
        for (p, w) in weights.points().iter().enumerate() {
            if w[1] >= w[2] {
                return Err(Error::InvalidWeights(format!(
                    "point {p}: beta1 = {} is not below beta2 = {}",
                    format_rational(&w[1]),
                    format_rational(&w[2])
                )));
            }
        }
        Ok(Self { g, weights, d1, d2, sigma })
    }

    pub fn with_sigma(&self, sigma: BigRational) -> Self {
        Self { sigma, ..self.clone() }
    }

    pub fn n(&self) -> usize {
        self.weights.n()
    }

    pub fn alpha(&self, p: usize) -> &BigRational {
        &self.weights.point(p)[0]
    }

    /// `beta_i(p)` for `i` in `{1, 2}`.
    pub fn beta(&self, p: usize, i: u8) -> &BigRational {
        &self.weights.point(p)[i as usize]
    }

    /// Parabolic slopes of the rank-2 bundle and of the line bundle.
    pub fn par_mu(&self) -> (BigRational, BigRational) {
        let mut b = rat(self.d1);
        let mut a = rat(self.d2);
        for p in 0..self.n() {
            b += self.beta(p, 1) + self.beta(p, 2);
            a += self.alpha(p);
        }
        (b / rat(2), a)
    }

    /// The `(s1, s2, s3)` counters for a choice of `epsilon`.
    pub fn counters(&self, epsilon: &[u8]) -> (i64, i64, i64) {
        let (mut s1, mut s2, mut s3) = (0, 0, 0);
        for (p, &e) in epsilon.iter().enumerate() {
            let a = self.alpha(p);
            let be = self.beta(p, e);
            let bs = self.beta(p, 3 - e);
            s1 += i64::from(a < bs);
            s2 += i64::from(a < be);
            s3 += i64::from(be < bs);
        }
        (s1, s2, s3)
    }

    /// `sum_p (2 beta_eps - alpha - beta_vareps)`.
    fn offset(&self, epsilon: &[u8]) -> BigRational {
        let mut o = BigRational::zero();
        for (p, &e) in epsilon.iter().enumerate() {
            o += self.beta(p, e) * rat(2) - self.alpha(p) - self.beta(p, 3 - e);
        }
        o
    }

    fn sigma_c(&self, d_m: i64, epsilon: &[u8]) -> BigRational {
        rat(3 * d_m - self.d1 - self.d2) + self.offset(epsilon)
    }
}

/// Every `epsilon` in `{1, 2}^n`, in lexicographic order.
pub fn epsilons(n: usize) -> impl Iterator<Item = Vec<u8>> {
    (0u64..1 << n).map(move |bits| (0..n).map(|p| 1 + ((bits >> (n - 1 - p)) & 1) as u8).collect())
}

/// `(sigma_m, sigma_M)`: the moduli space is empty outside this interval.
pub fn sigma_range(spec: &TripleSpec) -> (BigRational, BigRational) {
    let (b, a) = spec.par_mu();
    let m = b - a;
    let big = &m * rat(4) + rat(3 * spec.n() as i64);
    (m, big)
}

/// Flip data at the candidate wall `(d_M, epsilon)`; fails if `N < 0`.
pub fn flip_data(spec: &TripleSpec, d_m: i64, epsilon: &[u8]) -> Result<WallRecord> {
    let (s1, s2, s3) = spec.counters(epsilon);
    let g = i64::from(spec.g);
    let n_pts = spec.n() as i64;
    let n = spec.d1 - spec.d2 - d_m + s1;
    if n < 0 {
        return Err(Error::NonGenuineWall { d_m, n });
    }
    let w_plus = spec.d1 - spec.d2 - d_m + s2 + s3;
    let w_minus = 2 * d_m - spec.d1 + g - 1 + n_pts - s3;
    let jump = proj_poincare(w_minus) - proj_poincare(w_plus);
    let base = &jump * &sym_poincare(spec.g, n);
    let jac = jac_poincare(spec.g);
    let delta_fixed = &base * &jac;
    let delta = &delta_fixed * &jac;
    Ok(WallRecord {
        d_m,
        epsilon: epsilon.to_vec(),
        sigma_c: spec.sigma_c(d_m, epsilon),
        s1,
        s2,
        s3,
        w_plus,
        w_minus,
        n,
        delta,
        delta_fixed,
    })
}

/// All genuine walls (`N >= 0`, `sigma_c > sigma_m`) sorted by `sigma_c`.
pub fn critical_values(spec: &TripleSpec) -> Result<Vec<WallRecord>> {
    let (sigma_m, _) = sigma_range(spec);
    let mut walls = Vec::new();
    for eps in epsilons(spec.n()) {
        let (s1, _, _) = spec.counters(&eps);
        let offset = spec.offset(&eps);
        let top = spec.d1 - spec.d2 + s1;
        // sigma_c > sigma_m  <=>  3 d_M > sigma_m + d1 + d2 - offset
        let bound = (&sigma_m + rat(spec.d1 + spec.d2) - &offset) / rat(3);
        let first = floor_i64(&bound) + 1;
        if bound.is_integer() && bound.to_integer() <= BigInt::from(top) {
            return Err(Error::SigmaAtMinimum(format_rational(&sigma_m)));
        }
        for d_m in first..=top {
            walls.push(flip_data(spec, d_m, &eps)?);
        }
    }
    walls.sort_by(|a, b| a.sigma_c.cmp(&b.sigma_c));
    for pair in walls.windows(2) {
        if pair[0].sigma_c == pair[1].sigma_c {
            return Err(Error::CoincidentWalls(format_rational(&pair[0].sigma_c)));
        }
    }
    Ok(walls)
}

/// Largest genuine critical value, the operative upper bound for non-empty
/// moduli.
pub fn sigma_l(spec: &TripleSpec) -> Result<Option<BigRational>> {
    Ok(critical_values(spec)?.pop().map(|w| w.sigma_c))
}

/// `Ok(true)` when `sigma > sigma_m`, `Ok(false)` when below, error when the
/// parameter sits on `sigma_m` or on any candidate critical value.
fn classify_sigma(spec: &TripleSpec) -> Result<bool> {
    let (sigma_m, _) = sigma_range(spec);
    if spec.sigma < sigma_m {
        return Ok(false);
    }
    if spec.sigma == sigma_m {
        return Err(Error::SigmaAtMinimum(format_rational(&sigma_m)));
    }
    for eps in epsilons(spec.n()) {
        let x = (&spec.sigma + rat(spec.d1 + spec.d2) - spec.offset(&eps)) / rat(3);
        if x.is_integer() {
            return Err(Error::CriticalSigma(format_rational(&spec.sigma)));
        }
    }
    Ok(true)
}

/// Chamber Poincaré polynomial from the closed coefficient-extraction
/// formula, summed over `epsilon`.
pub fn triples_poincare(spec: &TripleSpec, fixed_det: bool) -> Result<LaurentPoly> {
    triples_poincare_with_slack(spec, fixed_det, 0)
}

/// As [`triples_poincare`], with the auxiliary truncation bound raised by
/// `slack`. The result must not depend on `slack`.
pub fn triples_poincare_with_slack(spec: &TripleSpec, fixed_det: bool, slack: i64) -> Result<LaurentPoly> {
    if !classify_sigma(spec)? {
        return Ok(LaurentPoly::zero());
    }
    let g = i64::from(spec.g);
    let n_pts = spec.n() as i64;
    let jac = jac_poincare(if fixed_det { spec.g } else { 2 * spec.g });
    let x = ["x"];
    let mut total = LaurentPoly::zero();
    for eps in epsilons(spec.n()) {
        let (s1, s2, s3) = spec.counters(&eps);
        let xval = (&spec.sigma + rat(spec.d1 + spec.d2) - spec.offset(&eps)) / rat(3);
        let d_bar = floor_i64(&xval) + 1;
        let e = spec.d1 - spec.d2 + s1 - d_bar;
        if e < 0 {
            continue;
        }
        let b = [e + slack];
        let core = AuxSeries::polynomial(
            &x,
            [(vec![0], LaurentPoly::one()), (vec![1], LaurentPoly::t_pow(1))],
        )
        .pow(2 * spec.g)?
        .mul(&geom_expand(&x, &[1], &LaurentPoly::one(), &b)?)?
        .mul(&geom_expand(&x, &[1], &LaurentPoly::t_pow(2), &b)?)?;
        let c1 = core.mul(&geom_expand(&x, &[1], &LaurentPoly::t_pow(-2), &b)?)?.coeff_at(&[e])?;
        let c2 = core.mul(&geom_expand(&x, &[1], &LaurentPoly::t_pow(4), &b)?)?.coeff_at(&[e])?;
        let a1 = 2 * spec.d1 - 2 * spec.d2 + 2 * s2 + 2 * s3 - 2 * d_bar;
        let a2 = -2 * spec.d1 + 2 * g - 2 + 2 * n_pts - 2 * s3 + 4 * d_bar;
        total += c1.shift(a1) - c2.shift(a2);
    }
    let total = &total * &jac;
    total.div_exact(&LaurentPoly::from_i64s(0, &[1, 0, -1]))
}

/// Chamber Poincaré polynomial as the sum of wall deltas above `sigma`.
pub fn triples_poincare_wallsum(spec: &TripleSpec, fixed_det: bool) -> Result<LaurentPoly> {
    if !classify_sigma(spec)? {
        return Ok(LaurentPoly::zero());
    }
    Ok(critical_values(spec)?
        .iter()
        .filter(|w| w.sigma_c > spec.sigma)
        .map(|w| w.delta_for(fixed_det).clone())
        .sum())
}

/// Complex dimension of the moduli space read off any flip,
/// `w+ + w- + (2g + N) - 1`; checked to agree across all genuine walls.
pub fn triples_dim(spec: &TripleSpec) -> Result<i64> {
    let walls = critical_values(spec)?;
    let g = i64::from(spec.g);
    let mut dims = walls.iter().map(|w| w.w_plus + w.w_minus + 2 * g + w.n - 1);
    let first = dims.next().ok_or(Error::NoWalls)?;
    for d in dims {
        if d != first {
            return Err(Error::DimensionMismatch(first, d));
        }
    }
    Ok(first)
}

/// Weights of the dual triple: `1 - alpha` on the line bundle and
/// `1 - beta2 < 1 - beta1` on the rank-2 bundle.
pub fn dual_weights(weights: &WeightSystem) -> Result<WeightSystem> {
    let one = BigRational::one();
    WeightSystem::new(
        weights
            .points()
            .iter()
            .map(|w| vec![&one - &w[0], &one - &w[2], &one - &w[1]])
            .collect(),
    )
}
