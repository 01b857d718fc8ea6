//! One PASS/FAIL line per acceptance criterion. Runs as a plain binary so
//! the report stays readable; the hard assertions for the same properties
//! live in the regular test suites.

use num_bigint::BigInt;
use num_rational::BigRational;
use parhiggs_core::hausel::hausel_at_q1;
use parhiggs_core::higgs3::*;
use parhiggs_core::symcurve::jac_poincare;
use parhiggs_core::triples::{
    critical_values, sigma_range, triples_dim, triples_poincare, triples_poincare_wallsum, TripleSpec,
};
use parhiggs_core::{Error, LaurentPoly, WeightSystem};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn desc(c: &[i64]) -> LaurentPoly {
    let mut c = c.to_vec();
    c.reverse();
    LaurentPoly::from_i64s(0, &c)
}

fn params(g: u32, n: usize) -> HiggsParams {
    HiggsParams::small(g, n, 1).expect("valid parameters")
}

fn total(g: u32, n: usize, det: Det) -> LaurentPoly {
    higgs3_total(&params(g, n), det).expect("total computes")
}

fn published() -> Vec<((u32, usize), LaurentPoly)> {
    vec![
        (
            (2, 1),
            desc(&[
                36, 324, 1368, 3620, 6810, 9860, 11670, 11876, 10860, 9224, 7408, 5688, 4216, 3036, 2134, 1464, 981,
                640, 401, 244, 144, 80, 42, 20, 9, 4, 1,
            ]),
        ),
        (
            (2, 2),
            desc(&[
                252, 2416, 10848, 30540, 61178, 94368, 119187, 129952, 127737, 116656, 100849, 83564, 66925, 52100,
                39605, 29504, 21572, 15472, 10884, 7496, 5043, 3312, 2113, 1308, 782, 448, 247, 128, 62, 28, 11, 4, 1,
            ]),
        ),
        ((1, 1), desc(&[6, 18, 24, 20, 13, 8, 4, 2, 1])),
        ((0, 3), desc(&[7, 0, 1])),
        ((0, 4), desc(&[271, 0, 144, 0, 43, 0, 9, 0, 1])),
        ((0, 5), desc(&[4645, 0, 3791, 0, 1926, 0, 762, 0, 249, 0, 63, 0, 11, 0, 1])),
    ]
}

type Check = fn() -> (bool, Vec<String>);

struct Report {
    passed: usize,
    failed: usize,
}

impl Report {
    fn line(&mut self, k: u32, ok: bool, what: &str, notes: &[String]) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        println!("criterion {k}: {} - {what}", if ok { "PASS" } else { "FAIL" });
        for n in notes {
            println!("    {n}");
        }
    }
}

fn criterion1() -> (bool, Vec<String>) {
    let mut notes = Vec::new();
    for ((g, n), want) in published() {
        let got = total(g, n, Det::NonFixed);
        if got != want {
            notes.push(format!("({g},{n}): got {got}"));
        }
    }
    (notes.is_empty(), notes)
}

fn criterion2() -> (bool, Vec<String>) {
    let b = |n| higgs3_breakdown(&params(0, n), Det::NonFixed).expect("breakdown");
    let (b3, b4, b5) = (b(3), b(4), b(5));
    let checks = [
        ("(0,3) only (1,1,1)", !b3.c111.is_zero() && b3.c12.is_zero() && b3.c21.is_zero() && b3.c3.is_zero()),
        ("(0,4) (1,2) nonzero, (2,1) zero", !b4.c12.is_zero() && b4.c21.is_zero()),
        ("(0,5) (1,2) and (2,1) nonzero", !b5.c12.is_zero() && !b5.c21.is_zero()),
    ];
    let notes: Vec<String> = checks.iter().filter(|c| !c.1).map(|c| format!("violated: {}", c.0)).collect();
    (notes.is_empty(), notes)
}

fn criterion3() -> (bool, Vec<String>) {
    let mut notes = Vec::new();
    for (g, n) in [(1u32, 1usize), (2, 1), (2, 2)] {
        let jac = jac_poincare(g);
        let fixed = total(g, n, Det::Fixed);
        let lhs = &(&fixed * &jac) - &total(g, n, Det::NonFixed);
        let c = BigInt::from(2) * BigInt::from(6).pow(n as u32 - 1) * (BigInt::from(3).pow(2 * g) - 1);
        let rhs = &(&LaurentPoly::monomial(c, 12 * i64::from(g) - 12 + 6 * n as i64) * &jac_poincare(g - 1).pow(2))
            * &jac;
        if lhs != rhs {
            notes.push(format!("({g},{n}) identity: {lhs} vs {rhs}"));
        }
        let chi = fixed.eval_at_minus_one();
        if chi != BigInt::from(0) {
            notes.push(format!("({g},{n}) euler characteristic of the fixed-determinant space is {chi}, not 0"));
        }
    }
    (notes.is_empty(), notes)
}

fn criterion4() -> (bool, Vec<String>) {
    let mut notes = Vec::new();
    for ((g, n), _) in published() {
        let (gi, ni) = (i64::from(g), n as i64);
        let free = total(g, n, Det::NonFixed).degree();
        let fixed = total(g, n, Det::Fixed).degree();
        if free != Some(18 * gi - 16 + 6 * ni) {
            notes.push(format!("({g},{n}) nonfixed degree {free:?}"));
        }
        if fixed != Some(16 * gi - 16 + 6 * ni) {
            notes.push(format!("({g},{n}) fixed degree {fixed:?}"));
        }
    }
    (notes.is_empty(), notes)
}

/// Generic weights with the line-bundle weight moved to a random slot.
fn random_triple(rng: &mut StdRng) -> TripleSpec {
    let g = rng.gen_range(0..=2u32);
    let n = rng.gen_range(1..=3usize);
    let base = WeightSystem::default_small(n, 3);
    let points = base
        .points()
        .iter()
        .map(|w| {
            let mut rest = w.clone();
            let a = rest.remove(rng.gen_range(0..3));
            let mut out = vec![a];
            out.extend(rest);
            out
        })
        .collect();
    let weights = WeightSystem::new(points).expect("distinct small weights");
    let (d1, d2) = (rng.gen_range(-4..=4), rng.gen_range(-4..=4));
    TripleSpec::new(g, weights, d1, d2, BigRational::from_integer(0.into())).expect("valid spec")
}

fn criterion5() -> (bool, Vec<String>) {
    let mut notes = Vec::new();
    for (g, n) in [(0u32, 3usize), (1, 1), (2, 1)] {
        let p = params(g, n);
        for mode in [Mode111::NonFixed, Mode111::FixedInvariant, Mode111::FixedVariant] {
            if Ok(stratum_sum_111(&p, mode)) != contribution_111(&p, mode) {
                notes.push(format!("(1,1,1) oracle differs at ({g},{n}) {mode:?}"));
            }
        }
    }
    for (g, n) in [(0u32, 3usize), (1, 1)] {
        let p = params(g, n);
        for det in [Det::NonFixed, Det::Fixed] {
            if stratum_sum_type12(&p, TwoPiece::OneTwo, det) != contribution_12(&p, det) {
                notes.push(format!("(1,2) oracle differs at ({g},{n}) {det:?}"));
            }
            if stratum_sum_type12(&p, TwoPiece::TwoOne, det) != contribution_21(&p, det) {
                notes.push(format!("(2,1) oracle differs at ({g},{n}) {det:?}"));
            }
        }
    }
    for (g, n) in [(1u32, 1usize), (2, 1), (2, 2)] {
        let p = params(g, n);
        if bundles3_strata_assembly(&p) != bundles3_poincare(&p, Det::NonFixed) {
            notes.push(format!("bundle assembly differs at ({g},{n})"));
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut compared = 0;
    for _ in 0..60 {
        let spec = random_triple(&mut rng);
        let (lo, hi) = sigma_range(&spec);
        let span = &hi - &lo + BigRational::from_integer(2.into());
        for _ in 0..3 {
            let k: i64 = rng.gen_range(1..997);
            let s = spec.with_sigma(&lo + &span * BigRational::new(k.into(), 997.into()));
            for fixed in [false, true] {
                match (triples_poincare(&s, fixed), triples_poincare_wallsum(&s, fixed)) {
                    (Err(Error::CriticalSigma(_)), Err(Error::CriticalSigma(_))) => {}
                    (a, b) if a == b && a.is_ok() => compared += 1,
                    (a, b) => notes.push(format!("triples paths differ: {a:?} vs {b:?}")),
                }
            }
        }
    }
    if compared < 100 {
        notes.push(format!("only {compared} triple comparisons ran"));
    }
    (notes.is_empty(), notes)
}

fn criterion6() -> (bool, Vec<String>) {
    let mut notes = Vec::new();
    for (g, n) in [(0u32, 3usize), (0, 4), (1, 1), (2, 1), (2, 2)] {
        let t = total(g, n, Det::NonFixed);
        match hausel_at_q1(g, n) {
            Ok(h) if h == t => {}
            Ok(h) => {
                let stable = higgs3_total_with_slack(&params(g, n), Det::NonFixed, 40).ok() == Some(t.clone());
                let jac = &h * &jac_poincare(g) == t;
                notes.push(format!(
                    "({g},{n}) CONJECTURE-REFUTED: H(1,t) = {h}; unchanged under larger truncation bounds: {stable}; \
                     H(1,t) * (1+t)^(2g) equals P_t: {jac}"
                ));
            }
            Err(e) => notes.push(format!("({g},{n}) specialization failed: {e}")),
        }
    }
    (notes.is_empty(), notes)
}

fn criterion7() -> (bool, Vec<String>) {
    let mut notes = Vec::new();
    for (g, n) in [(0u32, 3usize), (0, 4), (1, 1), (1, 2), (2, 1)] {
        for delta in [1, 2] {
            let p = HiggsParams::small(g, n, delta).expect("valid");
            let mut strata = enumerate_111(&p);
            strata.extend(enumerate_type12(&p, TwoPiece::OneTwo, Det::NonFixed).expect("enumerates"));
            strata.extend(enumerate_type12(&p, TwoPiece::TwoOne, Det::NonFixed).expect("enumerates"));
            if strata.iter().any(|s| s.index < 0 || s.index % 2 != 0) {
                notes.push(format!("({g},{n},{delta}) odd or negative index"));
            }
            let bundles_empty = bundles3_poincare(&p, Det::NonFixed).map(|b| b.is_zero()).unwrap_or(false);
            if bundles_empty && strata.iter().map(|s| s.index).min() != Some(0) {
                notes.push(format!("({g},{n},{delta}) minimum index is not 0"));
            }
        }
        for det in [Det::NonFixed, Det::Fixed] {
            let one = higgs3_breakdown(&HiggsParams::small(g, n, 1).expect("valid"), det).expect("computes").total();
            let two = higgs3_breakdown(&HiggsParams::small(g, n, 2).expect("valid"), det).expect("computes").total();
            if one != two {
                notes.push(format!("({g},{n}) {det:?} depends on the degree residue"));
            }
            if !one.all_nonnegative() || one.coeff(0) != BigInt::from(1) || one.min_exp() != Some(0) {
                notes.push(format!("({g},{n}) {det:?} has a negative or missing constant coefficient"));
            }
        }
    }

    let mut rng = StdRng::seed_from_u64(7);
    let (mut chambers, mut not_palindromic) = (0, 0);
    for _ in 0..40 {
        let spec = random_triple(&mut rng);
        let walls = critical_values(&spec).expect("walls");
        let mut edges = vec![sigma_range(&spec).0];
        edges.extend(walls.iter().map(|w| w.sigma_c.clone()));
        let dim = triples_dim(&spec).ok();
        for pair in edges.windows(2) {
            let width = &pair[1] - &pair[0];
            let a = spec.with_sigma(&pair[0] + &width * BigRational::new(1.into(), 3.into()));
            let b = spec.with_sigma(&pair[0] + &width * BigRational::new(2.into(), 3.into()));
            let (pa, pb) = (triples_poincare(&a, false), triples_poincare(&b, false));
            if pa != pb {
                notes.push("triples polynomial changes inside a chamber".into());
            }
            if let (Ok(p), Some(d)) = (pa, dim) {
                if !p.is_zero() {
                    chambers += 1;
                    not_palindromic += usize::from(!p.is_palindromic(2 * d));
                }
            }
        }
    }

    for _ in 0..200 {
        let mut poly = || {
            let low = rng.gen_range(-3..3);
            let c: Vec<i64> = (0..rng.gen_range(0..6)).map(|_| rng.gen_range(-20..20)).collect();
            LaurentPoly::from_i64s(low, &c)
        };
        let (a, b, c) = (poly(), poly(), poly());
        let laws = &(&a * &b) * &c == &a * &(&b * &c)
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && &a * &b == &b * &a
            && (b.is_zero() || (&a * &b).div_exact(&b) == Ok(a.clone()));
        if !laws {
            notes.push(format!("ring laws fail for {a}, {b}, {c}"));
            break;
        }
    }
    let ok = notes.is_empty();
    notes.push(format!("report only: {not_palindromic} of {chambers} nonempty triple chambers are not palindromic"));
    (ok, notes)
}

fn main() {
    let mut report = Report { passed: 0, failed: 0 };
    let criteria: [(&str, Check); 7] = [
        ("published Poincare polynomials", criterion1),
        ("stratum type attribution in genus 0", criterion2),
        ("fixed-determinant identities", criterion3),
        ("top degree laws", criterion4),
        ("closed forms agree with their oracles", criterion5),
        ("Hausel's formula at q = 1", criterion6),
        ("invariant suites", criterion7),
    ];
    for (k, (what, check)) in criteria.iter().enumerate() {
        let (ok, notes) = check();
        report.line(k as u32 + 1, ok, what, &notes);
    }
    println!("acceptance: {} passed, {} failed", report.passed, report.failed);
}
