mod common;

use hgzeta::algval::AlgValue;
use hgzeta::chargauss::{dh_lift_check, eval_char, gauss_sum, CharIndex, CharTower};
use proptest::prelude::*;

const PREC: u32 = 256;
const TOL: f64 = 1e-40;

#[test]
fn character_multiplicativity_and_orthogonality() {
    let tower = CharTower::new(7, 1, 2, PREC);
    let tbl = tower.level(2).unwrap();
    let m = tbl.m(); // 48
    for k in [0i64, 1, 5, 13, 47] {
        // χ(xy) = χ(x)χ(y).
        for x in tbl.field.units().take(8) {
            for y in tbl.field.units().take(8) {
                let lhs = tbl.char_value(k, tbl.field.mul(x, y));
                let rhs = tbl.char_value(k, x) * tbl.char_value(k, y);
                assert!(lhs.dist(&rhs).to_f64() < TOL);
            }
        }
        // χ(0) = 0 for all characters in this convention.
        assert!(tbl.char_value(k, tbl.field.zero()).abs().to_f64() < TOL);
        // Σ_x χ(x) = 0 for nontrivial χ, q−1 for the trivial one.
        let mut sum = AlgValue::zero(PREC);
        for x in tbl.field.units() {
            sum = sum + tbl.char_value(k, x);
        }
        let want = if k % m as i64 == 0 {
            AlgValue::from_int(PREC, (m) as i64)
        } else {
            AlgValue::zero(PREC)
        };
        assert!(sum.dist(&want).to_f64() < 1e-30, "k={k}");
    }
}

#[test]
fn additive_character_is_a_homomorphism() {
    let tower = CharTower::new(5, 1, 2, PREC);
    let tbl = tower.level(2).unwrap();
    for a in tbl.field.elements() {
        for b in tbl.field.elements() {
            let lhs = tbl.theta(tbl.field.add(a, b));
            let rhs = tbl.theta(a) * tbl.theta(b);
            assert!(lhs.dist(&rhs).to_f64() < TOL);
        }
    }
}

#[test]
fn gauss_sum_magnitude_and_inversion() {
    for p in [5u64, 11, 13] {
        let tower = CharTower::new(p, 1, 1, PREC);
        let tbl = tower.level(1).unwrap();
        let m = (p - 1) as i64;
        // G(ε) = −1.
        assert!(tbl.gauss(0).dist(&-AlgValue::one(PREC)).to_f64() < TOL);
        for k in 1..m {
            assert!((tbl.gauss(k).norm_sqr().to_f64() - p as f64).abs() < 1e-30);
            // G(χ)G(χ⁻¹) = χ(−1)·q.
            let lhs = tbl.gauss(k) * tbl.gauss(-k);
            let rhs = tbl.char_value(k, tbl.field.from_int(-1)).scale_int(p as i64);
            assert!(lhs.dist(&rhs).to_f64() < TOL);
            // Index arithmetic is mod q−1.
            assert!(tbl.gauss(k).dist(tbl.gauss(k + m)).to_f64() < TOL);
            // The cached and freshly computed values agree.
            assert!(tbl.gauss(k).dist(&tbl.gauss_fresh(k)).to_f64() < TOL);
        }
    }
}

#[test]
fn level_checked_wrappers() {
    let tower = CharTower::new(7, 1, 2, PREC);
    let tbl1 = tower.level(1).unwrap();
    let tbl2 = tower.level(2).unwrap();
    let chi = CharIndex { k: 2, level: 1 };
    assert!(gauss_sum(&tbl1, chi).is_ok());
    assert!(gauss_sum(&tbl2, chi).is_err());
    assert!(eval_char(&tbl1, chi, tbl1.field.one()).is_ok());
    assert!(eval_char(&tbl2, chi, tbl2.field.one()).is_err());
    assert!(chi.is_trivial(2));
    assert!(!chi.is_trivial(6));
}

#[test]
fn tower_lift_coherence() {
    // (−G)(lifted χ) at level r equals (−G(χ))^r: norm-compatible towers.
    for p in [5u64, 7] {
        let tower = CharTower::new(p, 1, 3, PREC);
        let tbl1 = tower.level(1).unwrap();
        for r in 2..=3 {
            let tblr = tower.level(r).unwrap();
            for k in 0..tbl1.m() {
                let (lhs, rhs) = dh_lift_check(&tbl1, &tblr, k);
                assert!(lhs.dist(&rhs).to_f64() < 1e-30, "p={p} r={r} k={k}");
            }
        }
    }
}

proptest! {
    #[test]
    fn product_relation_random(k in 0i64..12, bi in 0usize..4) {
        // G(χ^β) in terms of the β-orbit of χ, for each β | 12 at q = 13.
        let beta = [2u64, 3, 4, 6][bi];
        let tower = CharTower::new(13, 1, 1, PREC);
        let tbl = tower.level(1).unwrap();
        let (lhs, rhs) = hgzeta::chargauss::dh_multiplication(&tbl, k, beta);
        prop_assert!(lhs.dist(&rhs).to_f64() < 1e-30);
    }
}
