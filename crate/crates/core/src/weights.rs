//! Parabolic weights: exact rationals in `[0, 1)` attached to each marked
//! point, with the genericity and smallness predicates.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest absolute coefficient allowed in the genericity test.
pub const GENERICITY_COEFF: i64 = 3;

/// Cap on the number of half-combinations explored by the exhaustive
/// genericity search (`7^7`).
pub const GENERICITY_BUDGET: u128 = 823_543;

/// Weights per marked point. Every point carries the same number of weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    points: Vec<Vec<BigRational>>,
}

impl WeightSystem {
    /// Checks range and per-point distinctness. Genericity and smallness are
    /// separate predicates.
    pub fn new(points: Vec<Vec<BigRational>>) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::InvalidWeights("at least one marked point is required".into()));
        };
        let arity = first.len();
        if arity == 0 {
            return Err(Error::InvalidWeights("each point needs at least one weight".into()));
        }
        for (p, ws) in points.iter().enumerate() {
            if ws.len() != arity {
                return Err(Error::InvalidWeights(format!(
                    "point {p} has {} weights, expected {arity}",
                    ws.len()
                )));
            }
            for w in ws {
                if w.is_negative() || *w >= BigRational::one() {
                    return Err(Error::InvalidWeights(format!("weight {w} at point {p} is not in [0, 1)")));
                }
            }
            for i in 0..ws.len() {
                for j in i + 1..ws.len() {
                    if ws[i] == ws[j] {
                        return Err(Error::InvalidWeights(format!(
                            "weights at point {p} are not distinct ({})",
                            ws[i]
                        )));
                    }
                }
            }
        }
        Ok(Self { points })
    }

    /// Parses `num/den` strings (or bare integers) into a weight system.
    pub fn parse(points: &[Vec<&str>]) -> Result<Self> {
        let parsed = points
            .iter()
            .map(|ws| ws.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(parsed)
    }

    /// Deterministic small generic weights, sorted ascending at every point.
    ///
    /// The weights are reciprocals of the first `n * arity` primes exceeding
    /// `12n`, with larger primes giving smaller weights. Distinct prime
    /// denominators make every bounded integer combination non-integral, and
    /// each weight is below `1/(12n)`.
    pub fn default_small(n: usize, arity: usize) -> Self {
        assert!(n >= 1 && arity >= 1);
        let primes = primes_above(12 * n as u64, n * arity);
        let points = (0..n)
            .map(|j| {
                (0..arity)
                    .map(|i| {
                        let p = primes[j * arity + (arity - 1 - i)];
                        BigRational::new(BigInt::one(), BigInt::from(p))
                    })
                    .collect()
            })
            .collect();
        Self { points }
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn arity(&self) -> usize {
        self.points[0].len()
    }

    pub fn point(&self, p: usize) -> &[BigRational] {
        &self.points[p]
    }

    pub fn points(&self) -> &[Vec<BigRational>] {
        &self.points
    }

    pub fn all(&self) -> impl Iterator<Item = &BigRational> + '_ {
        self.points.iter().flatten()
    }

    /// True when each point's weights are strictly increasing.
    pub fn is_sorted(&self) -> bool {
        self.points.iter().all(|ws| ws.windows(2).all(|w| w[0] < w[1]))
    }

    /// Every weight lies below `1/(12n)`.
    pub fn is_small(&self) -> bool {
        let limit = BigRational::new(BigInt::one(), BigInt::from(12 * self.n()));
        self.all().all(|w| *w < limit)
    }

    pub fn check_small(&self) -> Result<()> {
        if self.is_small() {
            return Ok(());
        }
        let w = self.all().max().expect("nonempty");
        Err(Error::NotSmall(format!(
            "weight {w} is not below 1/{}",
            12 * self.n()
        )))
    }

    /// No combination `sum c_i w_i` with integers `|c_i| <= 3`, not all zero,
    /// is an integer. Zero counts as an integer.
    pub fn is_generic(&self) -> Result<bool> {
        Ok(self.genericity_witness()?.is_none())
    }

    pub fn check_generic(&self) -> Result<()> {
        match self.genericity_witness()? {
            None => Ok(()),
            Some(c) => Err(Error::NonGeneric(format!(
                "the combination with coefficients {c:?} is an integer"
            ))),
        }
    }

    /// Both predicates.
    pub fn validate(&self) -> Result<()> {
        self.check_small()?;
        self.check_generic()
    }

    /// A nonzero coefficient vector whose combination is an integer, if any.
    pub fn genericity_witness(&self) -> Result<Option<Vec<i64>>> {
        let ws: Vec<&BigRational> = self.all().collect();
        let m = ws.len();
        for (i, w) in ws.iter().enumerate() {
            if w.is_integer() {
                let mut c = vec![0; m];
                c[i] = 1;
                return Ok(Some(c));
            }
        }
        // Reduced fractions with pairwise coprime denominators q_i >= 4:
        // an integral combination forces q_i | c_i, impossible for |c_i| <= 3.
        let dens: Vec<&BigInt> = ws.iter().map(|w| w.denom()).collect();
        let coprime = dens.iter().enumerate().all(|(i, a)| {
            **a >= BigInt::from(2 * GENERICITY_COEFF - 2)
                && dens[i + 1..].iter().all(|b| a.gcd(b).is_one())
        });
        if coprime {
            return Ok(None);
        }
        let base = (2 * GENERICITY_COEFF + 1) as u128;
        let half = m.div_ceil(2) as u32;
        let count = base.checked_pow(half).unwrap_or(u128::MAX);
        if count > GENERICITY_BUDGET {
            return Err(Error::GenericityCheckTooLarge(count));
        }
        let l = dens.iter().fold(BigInt::one(), |acc, d| acc.lcm(d));
        let ints: Vec<BigInt> = ws
            .iter()
            .map(|w| (w.numer() * (&l / w.denom())).mod_floor(&l))
            .collect();
        let (left, right) = ints.split_at(m / 2);
        let left_sums = combos(left, &l);
        let mut table: BTreeMap<BigInt, Vec<i64>> = BTreeMap::new();
        for (v, c) in left_sums {
            let nonzero = c.iter().any(|&x| x != 0);
            match table.get(&v) {
                Some(prev) if prev.iter().any(|&x| x != 0) || !nonzero => {}
                _ => {
                    table.insert(v, c);
                }
            }
        }
        for (v, c) in combos(right, &l) {
            let target = (-v).mod_floor(&l);
            if let Some(lc) = table.get(&target) {
                if lc.iter().any(|&x| x != 0) || c.iter().any(|&x| x != 0) {
                    let mut full = lc.clone();
                    full.extend(c);
                    return Ok(Some(full));
                }
            }
        }
        Ok(None)
    }
}

/// All combinations with coefficients in `[-3, 3]`, as residues mod `l`.
fn combos(xs: &[BigInt], l: &BigInt) -> Vec<(BigInt, Vec<i64>)> {
    let mut out = vec![(BigInt::zero(), Vec::new())];
    for x in xs {
        let mut next = Vec::with_capacity(out.len() * 7);
        for (v, c) in &out {
            for k in -GENERICITY_COEFF..=GENERICITY_COEFF {
                let mut c2 = c.clone();
                c2.push(k);
                next.push(((v + x * k).mod_floor(l), c2));
            }
        }
        out = next;
    }
    out
}

fn primes_above(lower: u64, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut k = lower + 1;
    while out.len() < count {
        if is_prime(k) {
            out.push(k);
        }
        k += 1;
    }
    out
}

fn is_prime(k: u64) -> bool {
    if k < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= k {
        if k % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Parses an exact rational written as `num/den` or as an integer.
/// Decimal and exponent notation are rejected.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::InvalidWeights(format!("`{s}` is not an exact rational of the form num/den"));
    let int = |x: &str| -> Result<BigInt> {
        let x = x.trim();
        if x.is_empty() || !x.trim_start_matches(['-', '+']).bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        BigInt::from_str(x).map_err(|_| bad())
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let d = int(d)?;
            if d.is_zero() {
                return Err(Error::InvalidWeights(format!("`{s}` has a zero denominator")));
            }
            Ok(BigRational::new(int(n)?, d))
        }
        None => Ok(BigRational::from_integer(int(s)?)),
    }
}

/// Formats a rational as `num/den`, or as an integer when the denominator is 1.
pub fn format_rational(r: &BigRational) -> alloc::string::String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
