//! Rank-3 parabolic Higgs moduli with full flags: critical strata of the
//! circle action, their Morse indices and Poincaré polynomials, and the
//! assembled totals for free and fixed determinant.

mod bundles;
mod closed;
mod index;
mod strata;

use alloc::format;
use alloc::vec::Vec;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactalg::LaurentPoly;
use crate::symcurve::jac_poincare;
use crate::weights::WeightSystem;

pub use bundles::{bundles3_poincare, bundles3_strata_assembly, SIGMA_PRIME_TABLES};
pub use closed::{
    contribution_111, contribution_111_with_slack, contribution_12, contribution_12_with_slack,
    contribution_21, contribution_21_with_slack,
};
pub use index::{moduli_dim, morse_index, Piece};
pub use strata::{
    enumerate_111, enumerate_type12, permutations3, stratum_sum_111, stratum_sum_type12, TwoPiece,
};

/// Degree, genus, marked points and weights of a rank-3 problem.
///
/// Weights are `alpha1 < alpha2 < alpha3` at every point. The closed
/// formulas only read `g`, `n` and `delta mod 3`; the stratum oracles use the
/// weights through honest comparisons.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HiggsParams {
    pub g: u32,
    pub delta: i64,
    pub weights: WeightSystem,
}

impl HiggsParams {
    /// Validates `delta` not divisible by 3 and small, generic, sorted
    /// full-flag weights.
    pub fn new(g: u32, delta: i64, weights: WeightSystem) -> Result<Self> {
        if delta.rem_euclid(3) == 0 {
            return Err(Error::InvalidParams(format!("degree {delta} is divisible by 3")));
        }
        if weights.arity() != 3 || !weights.is_sorted() {
            return Err(Error::InvalidWeights(
                "each point needs three strictly increasing weights".into(),
            ));
        }
        weights.validate()?;
        Ok(Self { g, delta, weights })
    }

    /// Parameters with the deterministic default weights.
    pub fn small(g: u32, n: usize, delta: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("at least one marked point is required".into()));
        }
        Self::new(g, delta, WeightSystem::default_small(n, 3))
    }

    pub fn n(&self) -> usize {
        self.weights.n()
    }

    /// `delta mod 3`, in `{1, 2}`.
    pub fn delta0(&self) -> i64 {
        self.delta.rem_euclid(3)
    }

    /// `alpha_i(p)` for `i` in `{1, 2, 3}`.
    pub fn alpha(&self, p: usize, i: u8) -> &BigRational {
        &self.weights.point(p)[usize::from(i) - 1]
    }

    /// Same curve and weights with another degree.
    pub fn with_delta(&self, delta: i64) -> Result<Self> {
        if delta.rem_euclid(3) == 0 {
            return Err(Error::InvalidParams(format!("degree {delta} is divisible by 3")));
        }
        Ok(Self { delta, ..self.clone() })
    }
}

/// Determinant convention for totals and two-piece contributions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Det {
    NonFixed,
    Fixed,
}

/// Contribution of the `(1,1,1)` strata: full cohomology, or with fixed
/// determinant its invariant or variant part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode111 {
    NonFixed,
    FixedInvariant,
    FixedVariant,
}

/// Hodge type of a critical stratum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StratumType {
    Three,
    OneOneOne,
    OneTwo,
    TwoOne,
}

impl StratumType {
    pub fn label(self) -> &'static str {
        match self {
            StratumType::Three => "(3)",
            StratumType::OneOneOne => "(1,1,1)",
            StratumType::OneTwo => "(1,2)",
            StratumType::TwoOne => "(2,1)",
        }
    }
}

/// Discrete invariants of a stratum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StratumData {
    /// The stable parabolic bundles themselves (Higgs field zero).
    Three,
    /// `E = L1 + L2 + L3`; `perm[p][l]` is the index of the weight carried
    /// by `L_{l+1}` at point `p`.
    OneOneOne {
        d1: i64,
        m: i64,
        perm: Vec<[u8; 3]>,
        m1: i64,
        m2: i64,
        s1: i64,
        s2: i64,
        f: BigRational,
        g: BigRational,
    },
    /// A line bundle and a rank-2 bundle; `varpi[p]` is the index of the
    /// weight carried by the line bundle. Degrees follow the triple
    /// convention of the respective type.
    TwoPiece {
        kind: TwoPiece,
        d1: i64,
        d2: i64,
        varpi: Vec<u8>,
        s0: i64,
    },
}

/// One critical submanifold with its Morse index and Poincaré polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumRecord {
    pub kind: StratumType,
    pub data: StratumData,
    pub index: i64,
    pub poincare: LaurentPoly,
}

/// The separate type contributions that add up to a total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Breakdown {
    pub det: Det,
    pub delta0: i64,
    /// Type `(1,1,1)`: full contribution, or the invariant part when fixed.
    pub c111: LaurentPoly,
    /// Variant part of type `(1,1,1)`; zero unless fixed.
    pub c111_variant: LaurentPoly,
    pub c12: LaurentPoly,
    pub c21: LaurentPoly,
    /// Type `(3)`: stable parabolic bundles.
    pub c3: LaurentPoly,
}

impl Breakdown {
    pub fn total(&self) -> LaurentPoly {
        &self.c111 + &self.c111_variant + &self.c12 + &self.c21 + &self.c3
    }
}

/// All type contributions at `delta mod 3 = params.delta0()`.
pub fn higgs3_breakdown(params: &HiggsParams, det: Det) -> Result<Breakdown> {
    higgs3_breakdown_with_slack(params, det, 0)
}

pub fn higgs3_breakdown_with_slack(params: &HiggsParams, det: Det, slack: i64) -> Result<Breakdown> {
    let (c111, c111_variant) = match det {
        Det::NonFixed => (
            contribution_111_with_slack(params, Mode111::NonFixed, slack)?,
            LaurentPoly::zero(),
        ),
        Det::Fixed => (
            contribution_111_with_slack(params, Mode111::FixedInvariant, slack)?,
            contribution_111(params, Mode111::FixedVariant)?,
        ),
    };
    Ok(Breakdown {
        det,
        delta0: params.delta0(),
        c111,
        c111_variant,
        c12: contribution_12_with_slack(params, det, slack)?,
        c21: contribution_21_with_slack(params, det, slack)?,
        c3: bundles3_poincare(params, det)?,
    })
}

/// Poincaré polynomial of the moduli space. Computed for both residues of
/// the degree mod 3, which must agree.
pub fn higgs3_total(params: &HiggsParams, det: Det) -> Result<LaurentPoly> {
    higgs3_total_with_slack(params, det, 0)
}

pub fn higgs3_total_with_slack(params: &HiggsParams, det: Det, slack: i64) -> Result<LaurentPoly> {
    let one = higgs3_breakdown_with_slack(&params.with_delta(1)?, det, slack)?.total();
    let two = higgs3_breakdown_with_slack(&params.with_delta(2)?, det, slack)?.total();
    if one != two {
        return Err(Error::Delta0Mismatch(format!(
            "g = {}, n = {}, {:?}: {one} vs {two}",
            params.g,
            params.n(),
            det
        )));
    }
    Ok(one)
}

/// Right-hand side of the variant identity:
/// `P(fixed) (1+t)^(2g) - P(free) = P_var (1+t)^(2g)`.
pub fn variant_identity_rhs(params: &HiggsParams) -> Result<LaurentPoly> {
    Ok(&contribution_111(params, Mode111::FixedVariant)? * &jac_poincare(params.g))
}
