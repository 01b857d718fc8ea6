use parhiggs_core::hausel::{hausel_at_q1, hausel_terms};
use parhiggs_core::higgs3::{higgs3_total, Det, HiggsParams};
use parhiggs_core::symcurve::jac_poincare;
use parhiggs_core::LaurentPoly;

fn total(g: u32, n: usize) -> LaurentPoly {
    higgs3_total(&HiggsParams::small(g, n, 1).unwrap(), Det::NonFixed).unwrap()
}

#[test]
fn six_summands() {
    assert_eq!(hausel_terms(1, 2).unwrap().len(), 6);
}

#[test]
fn agrees_in_genus_zero() {
    for n in [3, 4, 5] {
        assert_eq!(hausel_at_q1(0, n).unwrap(), total(0, n), "n = {n}");
    }
}

#[test]
fn genus_one_value() {
    let h = hausel_at_q1(1, 1).unwrap();
    assert_eq!(h, LaurentPoly::from_i64s(0, &[1, 0, 3, 2, 6, 6, 6]));
}

/// For g >= 1 the specialization misses one Jacobian factor `(1+t)^(2g)`
/// relative to the computed Poincaré polynomial.
#[test]
fn positive_genus_misses_a_jacobian() {
    for (g, n) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let h = hausel_at_q1(g, n).unwrap();
        let t = total(g, n);
        assert_ne!(h, t, "({g},{n})");
        assert_eq!(&h * &jac_poincare(g), t, "({g},{n})");
    }
}
