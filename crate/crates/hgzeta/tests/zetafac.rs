mod common;

use common::{dwork, mixed_quartic};
use hgzeta::algval::AlgValue;
use hgzeta::chargauss::CharTower;
use hgzeta::count::brute_count;
use hgzeta::zetafac::{
    assemble_p, build_pieces, classify_weights, compute_u_terms, exp_weil_series,
    fit_exponentials, hg_argument, p_series_from_counts, predicted_count, predicted_star_count,
    zeta_series, WeilSeq,
};
use proptest::prelude::*;
use rug::Integer;

const PREC: u32 = 256;
const BUDGET: u64 = 1_000_000_000;

#[test]
fn hg_argument_golden() {
    let cubic = dwork(2, 7);
    // Cλ^{−3} at λ = 2: 6·2^{−3} = 6 (2³ = 1 in F_7).
    assert_eq!(
        hg_argument(&cubic, cubic.lambda_from_int(2)),
        cubic.field.from_int(6)
    );
}

#[test]
fn piece_structure() {
    let cubic = dwork(2, 7);
    let tower = CharTower::new(7, 1, 1, PREC);
    let tbl1 = tower.level(1).unwrap();
    let pieces = build_pieces(&cubic, cubic.lambda_from_int(1), &tbl1).unwrap();
    assert_eq!(pieces.len(), 3);
    assert_eq!(pieces[0].s, vec![0, 0, 0]);
    let mut weights: Vec<u32> = pieces.iter().map(|p| p.gamma_weight).collect();
    weights.sort();
    assert_eq!(weights, vec![0, 2, 2]);
    // Rejected when the stratified divisibility condition fails: the Fermat
    // quartic threefold needs 4 | q−1.
    let quartic = dwork(3, 7);
    assert!(build_pieces(&quartic, quartic.lambda_from_int(1), &tbl1).is_err());
}

#[test]
fn predictions_match_brute_force() {
    let cubic = dwork(2, 7);
    let tower = CharTower::new(7, 1, 2, PREC);
    let tbl1 = tower.level(1).unwrap();
    let lam = cubic.lambda_from_int(2);
    let pieces = build_pieces(&cubic, lam, &tbl1).unwrap();
    let u_terms = compute_u_terms(&cubic, lam, &pieces, &tbl1);
    for r in 1..=2 {
        let tbl_r = tower.level(r).unwrap();
        let b = brute_count(&cubic, lam, r, BUDGET).unwrap();
        let total = predicted_count(&cubic, lam, &pieces, &u_terms, &tbl_r).unwrap();
        let star = predicted_star_count(&cubic, lam, &pieces, &tbl_r).unwrap();
        assert_eq!(total, b.total, "r={r}");
        assert_eq!(star, b.star_part, "r={r}");
    }
}

#[test]
fn exponential_fit_roundtrip() {
    // f(r) = 3·2^r − 5·(−3)^r + 7^r.
    let vals: Vec<AlgValue> = (1..=8u32)
        .map(|r| {
            AlgValue::from_int(
                PREC,
                3 * 2i64.pow(r) - 5 * (-3i64).pow(r) + 7i64.pow(r),
            )
        })
        .collect();
    let mut pairs: Vec<(f64, f64, f64)> = fit_exponentials(&vals)
        .unwrap()
        .into_iter()
        .map(|(root, coef)| (root.re.to_f64(), root.im.to_f64(), coef.re.to_f64()))
        .collect();
    pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    assert_eq!(pairs.len(), 3);
    let want = [(-3.0, -5.0), (2.0, 3.0), (7.0, 1.0)];
    for ((re, im, coef), (wb, wc)) in pairs.iter().zip(want) {
        assert!((re - wb).abs() < 1e-30 && im.abs() < 1e-30);
        assert!((coef - wc).abs() < 1e-30);
    }
}

#[test]
fn zeta_series_recovers_factors() {
    // ζ of f(r) = 2·4^r − 3^r is (1−3T)/(1−4T)².
    let vals: Vec<AlgValue> = (1..=8u32)
        .map(|r| AlgValue::from_int(PREC, 2 * 4i64.pow(r) - 3i64.pow(r)))
        .collect();
    let poly = zeta_series(&WeilSeq { values: vals }).unwrap();
    let mut factors: Vec<(i64, i64)> = poly
        .factors
        .iter()
        .map(|(b, e)| (b.re.to_f64().round() as i64, *e))
        .collect();
    factors.sort();
    assert_eq!(factors, vec![(3, -1), (4, 2)]);
}

#[test]
fn exponential_of_weil_series() {
    // exp(−Σ (2^r + 3^r) T^r / r) = (1−2T)(1−3T) = 1 − 5T + 6T².
    let w: Vec<AlgValue> = (1..=6u32)
        .map(|r| AlgValue::from_int(PREC, 2i64.pow(r) + 3i64.pow(r)))
        .collect();
    let series = exp_weil_series(&w, -1, PREC);
    let want = [1i64, -5, 6, 0, 0, 0, 0];
    for (k, c) in series.iter().enumerate() {
        assert_eq!(c.round_checked(1e-20).unwrap(), want[k], "T^{k}");
    }
}

#[test]
fn assembled_polynomial_and_weights() {
    let cubic = dwork(2, 7);
    let tower = CharTower::new(7, 1, 6, PREC);
    let lam = cubic.lambda_from_int(1);
    let pf = assemble_p(&cubic, lam, &tower, 6).unwrap();
    // Genus-1 middle factor: deg 2, constant term 1, q at the top.
    assert_eq!(pf.coefficients.len(), 3);
    assert_eq!(pf.coefficients[0], 1);
    assert_eq!(pf.coefficients[2], 7);
    assert_eq!(classify_weights(&pf.factors, 7).unwrap(), vec![(1, 2)]);

    // Exp-series of P matches the series rebuilt from brute counts.
    let counts: Vec<Integer> = (1..=3u32)
        .map(|r| brute_count(&cubic, lam, r, BUDGET).unwrap().total)
        .collect();
    let series = p_series_from_counts(&counts, 2, 7, PREC);
    for (k, sk) in series.iter().enumerate() {
        let want = pf.coefficients.get(k).cloned().unwrap_or_default();
        assert_eq!(sk.round_checked(1e-10).unwrap(), want, "T^{k}");
    }
}

#[test]
fn mixed_quartic_pieces() {
    // The mixed quartic threefold at q=73, λ=5: four spectral pieces whose
    // kernel representatives have coordinates divisible by α = (2,4,3,3),
    // and whose level-1 predictions match brute force (the zeta assembly
    // itself would need tower levels beyond the 73^4-element table cap).
    let mixed = mixed_quartic(73);
    let tower = CharTower::new(73, 1, 1, PREC);
    let tbl1 = tower.level(1).unwrap();
    let lam = mixed.lambda_from_int(5);
    let pieces = build_pieces(&mixed, lam, &tbl1).unwrap();
    assert_eq!(pieces.len(), 4);
    for piece in &pieces {
        for (i, &sij) in piece.s.iter().enumerate() {
            assert_eq!(sij % mixed.alpha.alphas[i], 0);
        }
    }
    let u_terms = compute_u_terms(&mixed, lam, &pieces, &tbl1);
    let pred = predicted_count(&mixed, lam, &pieces, &u_terms, &tbl1).unwrap();
    let brute = brute_count(&mixed, lam, 1, BUDGET).unwrap().total;
    assert_eq!(pred, brute);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]
    #[test]
    fn fit_random_exponentials(b1 in 2i64..6, b2 in -6i64..-2, c1 in 1i64..5, c2 in 1i64..5) {
        let vals: Vec<AlgValue> = (1..=6u32)
            .map(|r| AlgValue::from_int(PREC, c1 * b1.pow(r) + c2 * b2.pow(r)))
            .collect();
        let pairs = fit_exponentials(&vals).unwrap();
        prop_assert_eq!(pairs.len(), 2);
        // Reconstruct f(5) from the fit.
        let mut acc = AlgValue::zero(PREC);
        for (root, coef) in &pairs {
            acc = acc + root.powi(5) * coef;
        }
        let want = c1 * b1.pow(5) + c2 * b2.pow(5);
        prop_assert!((acc.re.to_f64() - want as f64).abs() < 1e-20);
    }
}
