use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Det, HiggsParams, Mode111, StratumData, StratumRecord, StratumType};
use crate::error::Result;
use crate::exactalg::LaurentPoly;
use crate::symcurve::{jac_poincare, sym_poincare};
use crate::triples::{dual_weights, sigma_range, triples_poincare, TripleSpec};
use crate::weights::WeightSystem;

/// Which two-piece stratum family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwoPiece {
    /// Line bundle `L` mapping to a rank-2 bundle.
    OneTwo,
    /// Rank-2 bundle mapping to a line bundle.
    TwoOne,
}

fn rat(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

fn floor_i64(r: &BigRational) -> i64 {
    i64::try_from(r.floor().to_integer()).expect("degree bounds fit in i64")
}

/// The six elements of `S_3` as images `[w(1), w(2), w(3)]`, in
/// lexicographic order.
pub fn permutations3() -> [[u8; 3]; 6] {
    [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]]
}

/// Every element of `base^n` as a digit vector, lexicographic.
fn tuples(base: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = base.pow(n as u32);
    (0..total).map(move |mut k| {
        let mut digits = vec![0; n];
        for d in digits.iter_mut().rev() {
            *d = k % base;
            k /= base;
        }
        digits
    })
}

fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    c
}

/// All non-empty `(1,1,1)` critical submanifolds, found by walking the
/// lattice region cut out by the stability and effectivity inequalities for
/// each weight distribution.
pub fn enumerate_111(params: &HiggsParams) -> Vec<StratumRecord> {
    let n = params.n();
    let g = i64::from(params.g);
    let n_i = n as i64;
    let delta = params.delta;
    let perms = permutations3();
    let jac = jac_poincare(params.g);
    let mut out = Vec::new();
    for choice in tuples(6, n) {
        let perm: Vec<[u8; 3]> = choice.iter().map(|&k| perms[k]).collect();
        let (mut s1, mut s2) = (0, 0);
        let mut f = BigRational::zero();
        let mut gg = BigRational::zero();
        for (p, w) in perm.iter().enumerate() {
            let a = |i: u8| params.alpha(p, i);
            s1 += i64::from(a(w[0]) > a(w[1]));
            s2 += i64::from(a(w[1]) > a(w[2]));
            let sum = a(1) + a(2) + a(3);
            f += &sum - a(w[2]) * rat(3);
            gg += &sum * rat(2) - (a(w[1]) + a(w[2])) * rat(3);
        }
        // m1 >= 0: 2 d1 - m <= a;  m2 >= 0: 2 m - d1 <= b
        let a = n_i - s1 + 2 * g - 2;
        let b = delta + n_i - s2 + 2 * g - 2;
        let d1_lo = floor_i64(&((rat(delta) - &gg) / rat(3))) + 1;
        let d1_hi = (b + 2 * a).div_euclid(3);
        let m_stable = floor_i64(&((rat(2 * delta) - &f) / rat(3))) + 1;
        for d1 in d1_lo..=d1_hi {
            let m_lo = m_stable.max(2 * d1 - a);
            let m_hi = (b + d1).div_euclid(2);
            for m in m_lo..=m_hi {
                let m1 = m - 2 * d1 + n_i - s1 + 2 * g - 2;
                let m2 = delta - 2 * m + d1 + n_i - s2 + 2 * g - 2;
                let poincare = &(&jac * &sym_poincare(params.g, m1)) * &sym_poincare(params.g, m2);
                out.push(StratumRecord {
                    kind: StratumType::OneOneOne,
                    data: StratumData::OneOneOne {
                        d1,
                        m,
                        perm: perm.clone(),
                        m1,
                        m2,
                        s1,
                        s2,
                        f: f.clone(),
                        g: gg.clone(),
                    },
                    index: 2 * (4 * g - 4 + n_i + s1 + s2 - delta + d1 + m),
                    poincare,
                });
            }
        }
    }
    out
}

/// Sum of `t^index * P` over the `(1,1,1)` strata.
///
/// With fixed determinant the invariant part drops the Jacobian and keeps
/// only strata satisfying the congruence `m1 + 2 m2 + Delta + s1 + 2 s2 = 0
/// mod 3`; the variant part lives in degree `m1 + m2` with dimension
/// `(3^(2g) - 1) C(2g-2, m1) C(2g-2, m2)`.
pub fn stratum_sum_111(params: &HiggsParams, mode: Mode111) -> LaurentPoly {
    let g = i64::from(params.g);
    let n_i = params.n() as i64;
    let mut total = LaurentPoly::zero();
    for rec in enumerate_111(params) {
        let StratumData::OneOneOne { m1, m2, s1, s2, .. } = rec.data else {
            unreachable!("enumerate_111 only yields (1,1,1) strata");
        };
        let congruent = (m1 + 2 * m2 + params.delta + s1 + 2 * s2).rem_euclid(3) == 0;
        match mode {
            Mode111::NonFixed => total += rec.poincare.shift(rec.index),
            Mode111::FixedInvariant => {
                if congruent {
                    let p = &sym_poincare(params.g, m1) * &sym_poincare(params.g, m2);
                    total += p.shift(rec.index);
                }
            }
            Mode111::FixedVariant => {
                if congruent {
                    let lambda = 16 * g - 16 + 6 * n_i - 2 * m1 - 2 * m2;
                    let dim = (BigInt::from(3).pow(2 * params.g) - 1)
                        * binomial(2 * g - 2, m1)
                        * binomial(2 * g - 2, m2);
                    total += LaurentPoly::monomial(dim, lambda + m1 + m2);
                }
            }
        }
    }
    total
}

/// Triple weights `[alpha, beta1, beta2]` at each point when the line bundle
/// receives weight index `varpi[p]`.
fn split_weights(params: &HiggsParams, varpi: &[u8]) -> Result<WeightSystem> {
    WeightSystem::new(
        varpi
            .iter()
            .enumerate()
            .map(|(p, &v)| {
                let mut w = vec![params.alpha(p, v).clone()];
                w.extend((1..=3).filter(|&i| i != v).map(|i| params.alpha(p, i).clone()));
                w
            })
            .collect(),
    )
}

/// Triple degrees `d1'` (rank-2 bundle) for which the moduli at `sigma` can
/// be non-empty, given `d1' + d2' = c`: `sigma_m < sigma` bounds it above, and
/// the extraction exponent must be nonnegative for some `epsilon`.
fn triple_d1_range(template: &TripleSpec, c: i64) -> Result<(i64, i64)> {
    let n_i = template.n() as i64;
    let base = TripleSpec::new(template.g, template.weights.clone(), 0, c, template.sigma.clone())?;
    let (sigma_m0, _) = sigma_range(&base);
    // sigma_m(d1') = sigma_m0 + 3 d1' / 2
    let x = (&template.sigma - sigma_m0) * rat(2) / rat(3);
    let hi = i64::try_from(x.ceil().to_integer()).expect("fits") - 1;
    let lo_bound = (rat(c - n_i) + (&template.sigma + rat(c - 1)) / rat(3)) / rat(2);
    let lo = floor_i64(&lo_bound) - 1;
    Ok((lo, hi))
}

/// All non-empty critical submanifolds of type `(1,2)` or `(2,1)`, each a
/// moduli space of parabolic triples at `sigma = 2g - 2`.
pub fn enumerate_type12(params: &HiggsParams, which: TwoPiece, det: Det) -> Result<Vec<StratumRecord>> {
    let n = params.n();
    let g = i64::from(params.g);
    let n_i = n as i64;
    let sigma = rat(2 * g - 2);
    let fixed = det == Det::Fixed;
    let mut out = Vec::new();
    for choice in tuples(3, n) {
        let varpi: Vec<u8> = choice.iter().map(|&k| k as u8 + 1).collect();
        let weights = split_weights(params, &varpi)?;
        let mut s0 = 0;
        for w in weights.points() {
            for beta in &w[1..] {
                s0 += i64::from(match which {
                    TwoPiece::OneTwo => *beta > w[0],
                    TwoPiece::TwoOne => *beta < w[0],
                });
            }
        }
        // Triple degrees (d1, d2) with d1 + d2 = c; for (2,1) the triple is
        // the dual one, with d1' = -d2 - 2n, d2' = -d1 - n.
        let (c, triple_weights) = match which {
            TwoPiece::OneTwo => (params.delta + 4 * g - 4, weights),
            TwoPiece::TwoOne => (params.delta + 2 * g - 2, dual_weights(&weights)?),
        };
        let template = TripleSpec::new(params.g, triple_weights, 0, 0, sigma.clone())?;
        let c_triple = match which {
            TwoPiece::OneTwo => c,
            TwoPiece::TwoOne => -c - 3 * n_i,
        };
        let (lo, hi) = triple_d1_range(&template, c_triple)?;
        for d1t in lo..=hi {
            let d2t = c_triple - d1t;
            let spec = TripleSpec { d1: d1t, d2: d2t, ..template.clone() };
            let poincare = triples_poincare(&spec, fixed)?;
            if poincare.is_zero() {
                continue;
            }
            let (d1, d2, index) = match which {
                TwoPiece::OneTwo => (d1t, d2t, 12 * g - 12 + 4 * n_i - 2 * d1t + 4 * d2t - 2 * s0),
                TwoPiece::TwoOne => {
                    let d1 = -d2t - n_i;
                    let d2 = -d1t - 2 * n_i;
                    (d1, d2, 12 * g - 12 + 4 * n_i - 4 * d1 + 2 * d2 - 2 * s0)
                }
            };
            out.push(StratumRecord {
                kind: match which {
                    TwoPiece::OneTwo => StratumType::OneTwo,
                    TwoPiece::TwoOne => StratumType::TwoOne,
                },
                data: StratumData::TwoPiece { kind: which, d1, d2, varpi: varpi.clone(), s0 },
                index,
                poincare,
            });
        }
    }
    Ok(out)
}

/// Sum of `t^index * P` over the strata of one two-piece family.
pub fn stratum_sum_type12(params: &HiggsParams, which: TwoPiece, det: Det) -> Result<LaurentPoly> {
    Ok(enumerate_type12(params, which, det)?
        .into_iter()
        .map(|r| r.poincare.shift(r.index))
        .sum())
}
