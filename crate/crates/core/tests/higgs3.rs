use num_bigint::BigInt;
use num_rational::BigRational;
use parhiggs_core::higgs3::*;
use parhiggs_core::symcurve::jac_poincare;
use parhiggs_core::LaurentPoly;
use proptest::prelude::*;

/// Coefficients listed from the top degree down.
fn desc(c: &[i64]) -> LaurentPoly {
    let mut c = c.to_vec();
    c.reverse();
    LaurentPoly::from_i64s(0, &c)
}

fn asc(c: &[i64]) -> LaurentPoly {
    LaurentPoly::from_i64s(0, c)
}

fn params(g: u32, n: usize) -> HiggsParams {
    HiggsParams::small(g, n, 1).unwrap()
}

fn total(g: u32, n: usize, det: Det) -> LaurentPoly {
    higgs3_total(&params(g, n), det).unwrap()
}

const G2N1: [i64; 27] = [
    36, 324, 1368, 3620, 6810, 9860, 11670, 11876, 10860, 9224, 7408, 5688, 4216, 3036, 2134, 1464, 981, 640, 401,
    244, 144, 80, 42, 20, 9, 4, 1,
];

const G2N2: [i64; 33] = [
    252, 2416, 10848, 30540, 61178, 94368, 119187, 129952, 127737, 116656, 100849, 83564, 66925, 52100, 39605, 29504,
    21572, 15472, 10884, 7496, 5043, 3312, 2113, 1308, 782, 448, 247, 128, 62, 28, 11, 4, 1,
];

#[test]
fn published_totals() {
    assert_eq!(total(0, 3, Det::NonFixed), asc(&[1, 0, 7]));
    assert_eq!(total(0, 4, Det::NonFixed), desc(&[271, 0, 144, 0, 43, 0, 9, 0, 1]));
    assert_eq!(
        total(0, 5, Det::NonFixed),
        desc(&[4645, 0, 3791, 0, 1926, 0, 762, 0, 249, 0, 63, 0, 11, 0, 1])
    );
    assert_eq!(total(1, 1, Det::NonFixed), desc(&[6, 18, 24, 20, 13, 8, 4, 2, 1]));
    assert_eq!(total(2, 1, Det::NonFixed), desc(&G2N1));
    assert_eq!(total(2, 2, Det::NonFixed), desc(&G2N2));
}

#[test]
fn fixed_determinant_totals() {
    assert_eq!(total(0, 3, Det::Fixed), asc(&[1, 0, 7]));
    assert_eq!(total(1, 1, Det::Fixed), asc(&[1, 0, 3, 2, 6, 6, 22]));
    assert_eq!(
        total(2, 1, Det::Fixed),
        asc(&[
            1, 0, 3, 4, 7, 16, 19, 40, 56, 84, 130, 176, 258, 344, 458, 584, 690, 784, 950, 1308, 1392, 820, 196
        ])
    );
}

#[test]
fn genus_zero_attribution() {
    let b = higgs3_breakdown(&params(0, 3), Det::NonFixed).unwrap();
    assert_eq!(b.c111, asc(&[1, 0, 7]));
    assert!(b.c12.is_zero() && b.c21.is_zero() && b.c3.is_zero());

    let b = higgs3_breakdown(&params(0, 4), Det::NonFixed).unwrap();
    assert_eq!(b.c12, asc(&[1, 0, 8, 0, 24, 0, 32, 0, 16]));
    assert!(b.c21.is_zero());
    let b = higgs3_breakdown(&params(0, 5), Det::NonFixed).unwrap();
    assert!(!b.c12.is_zero() && !b.c21.is_zero());

    // Degree 2 mod 3 is the dual picture: the two-piece types trade places.
    for n in [3, 4, 5] {
        let one = higgs3_breakdown(&params(0, n), Det::NonFixed).unwrap();
        let two = higgs3_breakdown(&HiggsParams::small(0, n, 2).unwrap(), Det::NonFixed).unwrap();
        assert_eq!((one.c12, one.c21), (two.c21, two.c12), "n = {n}");
    }
}

#[test]
fn degree_laws() {
    for (g, n) in [(0, 3), (0, 4), (0, 5), (1, 1), (2, 1), (2, 2)] {
        let gi = i64::from(g);
        let ni = n as i64;
        assert_eq!(total(g, n, Det::NonFixed).degree(), Some(18 * gi - 16 + 6 * ni), "({g},{n})");
        if (g, n) != (2, 2) {
            assert_eq!(total(g, n, Det::Fixed).degree(), Some(16 * gi - 16 + 6 * ni), "({g},{n})");
        }
    }
}

/// `2 * 6^(n-1) * (3^(2g) - 1) * t^(12g - 12 + 6n) * (1+t)^(4g-4)`.
fn variant_closed(g: u32, n: usize) -> LaurentPoly {
    let c = BigInt::from(2) * BigInt::from(6).pow(n as u32 - 1) * (BigInt::from(3).pow(2 * g) - 1);
    let e = 12 * i64::from(g) - 12 + 6 * n as i64;
    let jac_sq = if g == 0 { LaurentPoly::zero() } else { jac_poincare(g - 1).pow(2) };
    &LaurentPoly::monomial(c, e) * &jac_sq
}

#[test]
fn fixed_and_free_differ_by_the_variant_part() {
    for (g, n) in [(1, 1), (2, 1), (2, 2)] {
        let p = params(g, n);
        let jac = jac_poincare(g);
        let lhs = &total(g, n, Det::Fixed) * &jac - total(g, n, Det::NonFixed);
        assert_eq!(lhs, &variant_closed(g, n) * &jac, "({g},{n})");
        assert_eq!(lhs, variant_identity_rhs(&p).unwrap());
    }
    assert_eq!(contribution_111(&params(1, 1), Mode111::FixedVariant).unwrap(), asc(&[0, 0, 0, 0, 0, 0, 16]));
    assert!(contribution_111(&params(0, 3), Mode111::FixedVariant).unwrap().is_zero());
}

#[test]
fn euler_characteristic_of_fixed_determinant() {
    for (g, n) in [(2, 1), (2, 2)] {
        assert_eq!(total(g, n, Det::Fixed).eval_at_minus_one(), BigInt::from(0), "({g},{n})");
    }
    // In genus 1 the binomials C(2g-2, m) no longer cancel and neither
    // the variant part nor the fixed-determinant bundles have zero Euler
    // characteristic: 2 + 16 + 6.
    let p = params(1, 1);
    assert_eq!(stratum_sum_111(&p, Mode111::FixedInvariant).eval_at_minus_one(), BigInt::from(2));
    assert_eq!(stratum_sum_111(&p, Mode111::FixedVariant).eval_at_minus_one(), BigInt::from(16));
    assert_eq!(bundles3_poincare(&p, Det::Fixed).unwrap().eval_at_minus_one(), BigInt::from(6));
    assert_eq!(total(1, 1, Det::Fixed).eval_at_minus_one(), BigInt::from(24));
    assert_eq!(total(0, 3, Det::Fixed).eval_at_minus_one(), BigInt::from(8));
}

#[test]
fn genus_zero_three_points_strata() {
    let strata = enumerate_111(&params(0, 3));
    assert_eq!(strata.len(), 7);
    let minimum: Vec<_> = strata.iter().filter(|s| s.index == 0).collect();
    assert_eq!(minimum.len(), 1);
    assert!(matches!(minimum[0].data, StratumData::OneOneOne { m1: 0, m2: 1, .. }));
    assert_eq!(minimum[0].poincare, asc(&[1, 0, 1]));
    for s in strata.iter().filter(|s| s.index != 0) {
        assert_eq!((s.index, s.poincare.clone()), (2, LaurentPoly::one()));
    }
}

fn rat_weights(params: &HiggsParams, pick: impl Fn(usize) -> Vec<u8>) -> Vec<Vec<BigRational>> {
    (0..params.n()).map(|p| pick(p).into_iter().map(|i| params.alpha(p, i).clone()).collect()).collect()
}

/// The decomposition of a critical point in Higgs-field order.
fn pieces(params: &HiggsParams, rec: &StratumRecord) -> Vec<Piece> {
    let g = i64::from(params.g);
    match &rec.data {
        StratumData::Three => unreachable!(),
        StratumData::OneOneOne { d1, m, perm, .. } => {
            let degrees = [*d1, m - d1, params.delta - m];
            (0..3)
                .map(|l| Piece {
                    rank: 1,
                    degree: degrees[l],
                    weights: rat_weights(params, |p| vec![perm[p][l]]),
                })
                .collect()
        }
        StratumData::TwoPiece { kind, d1, d2, varpi, .. } => {
            let line = |degree| Piece { rank: 1, degree, weights: rat_weights(params, |p| vec![varpi[p]]) };
            let plane = |degree| Piece {
                rank: 2,
                degree,
                weights: rat_weights(params, |p| (1..=3).filter(|&i| i != varpi[p]).collect()),
            };
            match kind {
                // (d1, d2) = (deg W + 4g - 4, deg L)
                TwoPiece::OneTwo => vec![line(*d2), plane(d1 - 4 * g + 4)],
                // (d1, d2) = (deg L + 2g - 2, deg W)
                TwoPiece::TwoOne => vec![plane(*d2), line(d1 - 2 * g + 2)],
            }
        }
    }
}

#[test]
fn general_index_matches_stratum_indices() {
    for (g, n) in [(0, 3), (0, 4), (0, 5), (1, 1), (1, 2), (2, 1)] {
        for delta in [1, 2] {
            let p = HiggsParams::small(g, n, delta).unwrap();
            let mut all = enumerate_111(&p);
            all.extend(enumerate_type12(&p, TwoPiece::OneTwo, Det::NonFixed).unwrap());
            all.extend(enumerate_type12(&p, TwoPiece::TwoOne, Det::NonFixed).unwrap());
            for rec in &all {
                let lambda = morse_index(&pieces(&p, rec), &p).unwrap();
                assert_eq!(lambda, rec.index, "({g},{n},{delta}) {:?}", rec.data);
                assert!(lambda >= 0 && lambda % 2 == 0);
            }
        }
    }
}

#[test]
fn oracles_agree() {
    for (g, n) in [(0, 3), (1, 1), (2, 1)] {
        for delta in [1, 2] {
            let p = HiggsParams::small(g, n, delta).unwrap();
            for mode in [Mode111::NonFixed, Mode111::FixedInvariant, Mode111::FixedVariant] {
                assert_eq!(stratum_sum_111(&p, mode), contribution_111(&p, mode).unwrap(), "({g},{n}) {mode:?}");
            }
        }
    }
    for (g, n) in [(0, 3), (0, 4), (1, 1)] {
        for delta in [1, 2] {
            let p = HiggsParams::small(g, n, delta).unwrap();
            for det in [Det::NonFixed, Det::Fixed] {
                assert_eq!(stratum_sum_type12(&p, TwoPiece::OneTwo, det).unwrap(), contribution_12(&p, det).unwrap());
                assert_eq!(stratum_sum_type12(&p, TwoPiece::TwoOne, det).unwrap(), contribution_21(&p, det).unwrap());
            }
        }
    }
    for (g, n) in [(1, 1), (2, 1), (2, 2)] {
        let p = params(g, n);
        assert_eq!(bundles3_strata_assembly(&p).unwrap(), bundles3_poincare(&p, Det::NonFixed).unwrap());
    }
}

#[test]
fn fixed_contributions_drop_one_jacobian() {
    for (g, n) in [(1, 1), (2, 1)] {
        let p = params(g, n);
        let jac = jac_poincare(g);
        let free = contribution_12(&p, Det::NonFixed).unwrap();
        assert_eq!(free.div_exact(&jac).unwrap(), contribution_12(&p, Det::Fixed).unwrap());
        let free = contribution_21(&p, Det::NonFixed).unwrap();
        assert_eq!(free.div_exact(&jac).unwrap(), contribution_21(&p, Det::Fixed).unwrap());
        let free = contribution_111(&p, Mode111::NonFixed).unwrap();
        assert_eq!(free.div_exact(&jac).unwrap(), contribution_111(&p, Mode111::FixedInvariant).unwrap());
    }
}

#[test]
fn rejects_bad_parameters() {
    assert!(HiggsParams::small(1, 0, 1).is_err());
    assert!(HiggsParams::small(1, 1, 3).is_err());
}

fn small_case() -> impl Strategy<Value = (u32, usize)> {
    prop_oneof![Just((0u32, 3usize)), Just((0, 4)), Just((1, 1)), Just((1, 2)), Just((2, 1))]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn totals_are_sane((g, n) in small_case(), fixed in any::<bool>()) {
        let det = if fixed { Det::Fixed } else { Det::NonFixed };
        let t = total(g, n, det);
        prop_assert_eq!(t.coeff(0), BigInt::from(1));
        prop_assert_eq!(t.min_exp(), Some(0));
        prop_assert!(t.all_nonnegative());
    }

    #[test]
    fn independent_of_degree_residue((g, n) in small_case(), fixed in any::<bool>(), shift in -3i64..3) {
        let det = if fixed { Det::Fixed } else { Det::NonFixed };
        let one = higgs3_breakdown(&HiggsParams::small(g, n, 1 + 3 * shift).unwrap(), det).unwrap().total();
        let two = higgs3_breakdown(&HiggsParams::small(g, n, 2 + 3 * shift).unwrap(), det).unwrap().total();
        prop_assert_eq!(one, two);
    }

    #[test]
    fn truncation_slack_is_inert((g, n) in small_case(), fixed in any::<bool>(), slack in 1i64..4) {
        let det = if fixed { Det::Fixed } else { Det::NonFixed };
        let p = params(g, n);
        prop_assert_eq!(higgs3_total_with_slack(&p, det, slack).unwrap(), higgs3_total(&p, det).unwrap());
    }
}
